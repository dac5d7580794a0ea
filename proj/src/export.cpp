#include "ahn/export.hpp"

#include "ahn/summary.hpp"

#include <sstream>

namespace ahn {

namespace {

std::string carbon_id(std::size_t j) { return "C" + std::to_string(j + 1); }

std::string hydrogen_id(std::size_t j, int i) {
  return "H" + std::to_string(j + 1) + "_" + std::to_string(i + 1);
}

}  // namespace

std::string export_dot(const CompoundModel& model) {
  std::ostringstream out;
  out << "graph ahn {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (std::size_t j = 0; j < model.size(); ++j) {
    const auto& mol = model.molecules[j];
    out << "  " << carbon_id(j) << " [label=\"C" << j + 1 << "\\n"
        << format_fixed(mol.carbon_value, 3) << "\", fontcolor=red];\n";
    for (int i = 0; i < mol.hydrogen_count; ++i) {
      out << "  " << hydrogen_id(j, i) << " [label=\"H" << j + 1 << i + 1;
      for (Eigen::Index r = 0; r < mol.hydrogen_coeffs.cols(); ++r) {
        out << "\\n" << format_fixed(mol.hydrogen_coeffs(i, r), 3);
      }
      out << "\"];\n";
    }
  }
  for (std::size_t j = 0; j + 1 < model.size(); ++j) {
    out << "  " << carbon_id(j) << " -- " << carbon_id(j + 1) << ";\n";
  }
  for (std::size_t j = 0; j < model.size(); ++j) {
    for (int i = 0; i < model.molecules[j].hydrogen_count; ++i) {
      out << "  " << carbon_id(j) << " -- " << hydrogen_id(j, i) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::json export_structure(const CompoundModel& model) {
  using nlohmann::json;
  json nodes = json::array();
  json edges = json::array();
  for (std::size_t j = 0; j < model.size(); ++j) {
    const auto& mol = model.molecules[j];
    nodes.push_back({{"id", carbon_id(j)},
                     {"type", "carbon"},
                     {"molecule", j + 1},
                     {"value", mol.carbon_value},
                     {"center", std::vector<double>(mol.center.data(),
                                                    mol.center.data() + mol.center.size())}});
    for (int i = 0; i < mol.hydrogen_count; ++i) {
      std::vector<double> coeffs;
      for (Eigen::Index r = 0; r < mol.hydrogen_coeffs.cols(); ++r) {
        coeffs.push_back(mol.hydrogen_coeffs(i, r));
      }
      nodes.push_back({{"id", hydrogen_id(j, i)},
                       {"type", "hydrogen"},
                       {"molecule", j + 1},
                       {"power", i + 1},
                       {"coefficients", coeffs}});
      edges.push_back({{"source", carbon_id(j)}, {"target", hydrogen_id(j, i)}, {"bond", "C-H"}});
    }
    if (j + 1 < model.size()) {
      edges.push_back({{"source", carbon_id(j)}, {"target", carbon_id(j + 1)}, {"bond", "C-C"}});
    }
  }
  return {{"feature_names", model.feature_names}, {"nodes", nodes}, {"edges", edges}};
}

}  // namespace ahn

#include "ahn/export.hpp"
#include "dot_checker.hpp"

#include "doctest.h"

using namespace ahn;

namespace {

CompoundModel chain_model(std::size_t m, std::size_t n) {
  CompoundModel model;
  model.feature_names = default_feature_names(n);
  model.learning_rate = 0.1;
  for (int k : saturated_chain(m)) {
    auto mol = Molecule::zeros(k, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n)));
    mol.hydrogen_coeffs.setConstant(-1.25);
    model.molecules.push_back(mol);
  }
  return model;
}

std::size_t carbons(const dot::GraphSummary& g) {
  std::size_t n = 0;
  for (const auto& id : g.nodes) {
    n += id.front() == 'C' ? 1 : 0;
  }
  return n;
}

}  // namespace

TEST_CASE("DOT export of a 2-molecule compound") {
  const auto g = dot::parse(export_dot(chain_model(2, 2)));
  CHECK_FALSE(g.directed);
  CHECK(carbons(g) == 2);
  CHECK(g.nodes.size() - carbons(g) == 6);
  CHECK(g.edges == 7);
}

TEST_CASE("DOT structure counts follow from m") {
  for (std::size_t m = 2; m <= 10; ++m) {
    const auto g = dot::parse(export_dot(chain_model(m, 3)));
    CHECK(carbons(g) == m);
    CHECK(g.nodes.size() - carbons(g) == 2 * m + 2);
    CHECK(g.edges == (m - 1) + 2 * m + 2);
  }
  const auto five = dot::parse(export_dot(chain_model(5, 2)));
  CHECK(five.nodes.size() - carbons(five) == 12);
}

TEST_CASE("DOT labels list coefficients per feature, first feature on top") {
  auto model = chain_model(2, 2);
  model.molecules[0].hydrogen_coeffs(0, 0) = 0.148;
  model.molecules[0].hydrogen_coeffs(0, 1) = 3.208;
  const auto text = export_dot(model);
  CHECK(text.find("H1_1 [label=\"H11\\n0.148\\n3.208\"]") != std::string::npos);
  CHECK(text.find("rankdir=LR") != std::string::npos);
}

TEST_CASE("DOT checker rejects malformed graphs") {
  CHECK_THROWS(dot::parse("graph { a -- }"));
  CHECK_THROWS(dot::parse("graph { a -> b }"));
  CHECK_THROWS(dot::parse("graph { a [label=\"x] }"));
  CHECK_NOTHROW(dot::parse("digraph g { a -> b -> c; node [shape=box]; }"));
}

TEST_CASE("structure JSON mirrors the DOT graph") {
  const auto doc = export_structure(chain_model(4, 1));
  CHECK(doc.at("nodes").size() == 4 + 10);
  CHECK(doc.at("edges").size() == 3 + 10);
  CHECK(doc.at("nodes")[0].at("type") == "carbon");
}

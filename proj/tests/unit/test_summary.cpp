#include "ahn/summary.hpp"

#include "doctest.h"

using namespace ahn;

namespace {

CompoundModel tiny_model(std::size_t m) {
  CompoundModel model;
  model.feature_names = {"x1", "x2"};
  model.learning_rate = 0.01;
  model.overall_error = 0.0375;
  const auto chain = saturated_chain(m);
  for (std::size_t j = 0; j < m; ++j) {
    Eigen::VectorXd c(2);
    c << -0.4602019 + static_cast<double>(j), 11.7892192;
    auto mol = Molecule::zeros(chain[j], c);
    mol.carbon_value = 0.932;
    model.molecules.push_back(mol);
  }
  return model;
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find('\n', pos);
    if (text.compare(pos, prefix.size(), prefix) == 0) {
      ++n;
    }
    pos = end == std::string::npos ? text.size() : end + 1;
  }
  return n;
}

}  // namespace

TEST_CASE("format_fixed rounds half away from zero on the decimal value") {
  CHECK(format_fixed(0.0375, 3) == "0.038");
  CHECK(format_fixed(-0.0375, 3) == "-0.038");
  CHECK(format_fixed(0.0374999, 3) == "0.037");
  CHECK(format_fixed(9.9996, 3) == "10.000");
  CHECK(format_fixed(2.5, 0) == "3");
  CHECK(format_fixed(-0.0004, 3) == "0.000");
  CHECK(format_fixed(11.7892192, 7) == "11.7892192");
  CHECK(format_fixed(1e21, 2) == "1000000000000000000000.00");
}

TEST_CASE("summary sections appear in order") {
  const auto text = summary_text(tiny_model(2));
  const auto count = text.find("Number of molecules:\n 2 ");
  const auto learning = text.find("Learning factor:\n 0.01 ");
  const auto error = text.find("Overall error:\n 0.038 ");
  const auto centers = text.find("Centers of the molecules:");
  const auto molecules = text.find("Molecules:");
  REQUIRE(count != std::string::npos);
  REQUIRE(learning != std::string::npos);
  REQUIRE(error != std::string::npos);
  REQUIRE(centers != std::string::npos);
  REQUIRE(molecules != std::string::npos);
  CHECK(count < learning);
  CHECK(learning < error);
  CHECK(error < centers);
  CHECK(centers < molecules);
  CHECK(text.find("molecule1 -0.4602019 11.7892192") != std::string::npos);
}

TEST_CASE("coefficient tables list C and one H row per hydrogen") {
  const auto text = summary_text(tiny_model(3));
  CHECK(count_lines_starting(text, "C1 ") == 1);
  CHECK(count_lines_starting(text, "H11 ") == 1);
  CHECK(count_lines_starting(text, "H12 ") == 1);
  CHECK(count_lines_starting(text, "H13 ") == 1);
  CHECK(count_lines_starting(text, "H14 ") == 0);
  CHECK(count_lines_starting(text, "H23 ") == 0);
  CHECK(count_lines_starting(text, "H33 ") == 1);
  CHECK(text.find("C1  0.932 0.932") != std::string::npos);
}

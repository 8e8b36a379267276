#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "minrec/gallery.hpp"
#include "test_util.hpp"

using namespace minrec;

TEST_CASE("build_fgp_phi with a constant family reproduces the family minors") {
  std::mt19937_64 rng(41);
  for (int k : {2, 3}) {
    FGPPhiSpec spec = random_fgp_spec(k, 2, rng);
    // all g^I equal, identities everywhere
    for (auto& g : spec.family_g) g = spec.family_g.front();
    for (auto& rho : spec.family_p) rho = Permutation::identity(k);
    std::iota(spec.phi.begin(), spec.phi.end(), 0);
    FiniteFunction f = build_fgp_phi(spec);
    for (const Couple& I : couples_of(k + 1))
      CHECK(identification_minor(f, I) == spec.family_g.front());
  }
}

TEST_CASE("build_fgp_phi rejects families that break the agreement condition") {
  std::mt19937_64 rng(42);
  FGPPhiSpec spec = random_fgp_spec(2, 2, rng);
  // corrupt one family member on a non-full-support tuple
  auto table = spec.family_g.front().table();
  table[0] = static_cast<std::uint8_t>(1 - table[0]);  // (1,1) has supp != A
  spec.family_g.front() = FiniteFunction(2, 2, spec.labels, table);
  CHECK_THROWS_AS(build_fgp_phi(spec), std::invalid_argument);
}

TEST_CASE("deck of f_{G,P,phi} is the multiset of family classes") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    int k = 2 + static_cast<int>(rng() % 2);
    FGPPhiSpec spec = random_fgp_spec(k, 2, rng);
    FiniteFunction f = build_fgp_phi(spec);
    std::vector<std::vector<std::uint8_t>> expected;
    for (const auto& g : spec.family_g) expected.push_back(canonical_form(g).table());
    std::sort(expected.begin(), expected.end());
    std::vector<std::vector<std::uint8_t>> got;
    for (const Couple& I : couples_of(k + 1))
      got.push_back(canonical_form(identification_minor(f, I)).table());
    std::sort(got.begin(), got.end());
    CHECK(expected == got);
  }
}

TEST_CASE("example a_plus_1 at k=2 has the hand-computed tables") {
  auto [f, g] = example_a_plus_1(2, {"a", "b", "c"});
  // f: value = the element occurring twice when supp = A, fallback otherwise
  CHECK(f.table() == std::vector<std::uint8_t>{2, 0, 0, 1, 0, 1, 1, 2});
  // g: value = first entry when supp = A, fallback otherwise
  CHECK(g.table() == std::vector<std::uint8_t>{2, 0, 0, 0, 1, 1, 1, 2});
}

TEST_CASE("a_plus_1 verdicts hold for k = 2, 3, 4") {
  for (int k : {2, 3, 4}) {
    SuiteReport report = verify_a_plus_1(k, default_labels(k + 1));
    for (const auto& check : report.checks) {
      INFO(report.suite, ": ", check.name);
      CHECK(check.pass);
    }
  }
  CHECK_THROWS_AS(example_a_plus_1(2, {"a", "b"}), std::invalid_argument);
}

TEST_CASE("cyclic example verdicts hold for k = 3, 4") {
  for (int k : {3, 4}) {
    SuiteReport report = verify_cyclic(k);
    for (const auto& check : report.checks) {
      INFO(report.suite, ": ", check.name);
      CHECK(check.pass);
    }
  }
  CHECK_THROWS_AS(example_cyclic(2), std::invalid_argument);
}

TEST_CASE("theta counterexample verdicts hold for k = 3") {
  SuiteReport report = verify_theta_counterexample(3, "alpha", "beta", "gamma");
  for (const auto& check : report.checks) {
    INFO(check.name);
    CHECK(check.pass);
  }
  CHECK_THROWS_AS(theta_counterexample(5, "a", "b", "c"), std::invalid_argument);
  CHECK_THROWS_AS(theta_counterexample(3, "a", "a", "c"), std::invalid_argument);
  CHECK_THROWS_AS(theta_counterexample(3, "a", "b", "a"), std::invalid_argument);

  // beta = gamma is permitted and the verdicts still hold
  SuiteReport merged = verify_theta_counterexample(3, "alpha", "beta", "beta");
  for (const auto& check : merged.checks) {
    INFO(check.name);
    CHECK(check.pass);
  }
}

TEST_CASE("symmofo triple matches the printed rows") {
  auto triple = example_symmofo("a", "b", "c", "d");
  const auto& f = triple[0];
  const auto& g = triple[1];
  const auto& h = triple[2];
  std::vector<int> row{0, 1, 1};  // (0,1,1)
  CHECK(f.labels()[f.value(row)] == "c");
  CHECK(g.labels()[g.value(row)] == "b");
  CHECK(h.labels()[h.value(row)] == "b");

  SuiteReport report = verify_symmofo("a", "b", "c", "d");
  for (const auto& check : report.checks) {
    INFO(check.name);
    CHECK(check.pass);
  }

  SuiteReport degenerate = verify_symmofo("a", "b", "b", "d");
  for (const auto& check : degenerate.checks) {
    INFO(check.name);
    CHECK(check.pass);
  }
}

TEST_CASE("boolean quadratic example verifies") {
  SuiteReport report = verify_boolean_quadratic();
  for (const auto& check : report.checks) {
    INFO(check.name);
    CHECK(check.pass);
  }
}

TEST_CASE("gallery registry runs every item") {
  for (const std::string& name : gallery_names()) {
    int k = (name == "cyclic" || name == "theta") ? 3 : 2;
    GalleryResult result = run_gallery(name, k);
    CHECK(!result.functions.empty());
    CHECK(result.report.passed());
  }
  CHECK_THROWS_AS(run_gallery("nonsense", 2), std::invalid_argument);
}

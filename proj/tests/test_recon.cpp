#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "minrec/classes.hpp"
#include "minrec/gallery.hpp"
#include "minrec/recon.hpp"
#include "test_util.hpp"

using namespace minrec;

TEST_CASE("enumerate_functions yields every table exactly once") {
  std::set<std::vector<std::uint8_t>> seen;
  std::uint64_t count = 0;
  enumerate_functions(2, 2, 2, [&](const FiniteFunction& f) {
    ++count;
    CHECK(seen.insert(f.table()).second);
  });
  CHECK(count == 16);

  count = 0;
  enumerate_functions(2, 3, 2, [&](const FiniteFunction&) { ++count; });
  CHECK(count == 256);

  CHECK_THROWS_AS(enumerate_functions(2, 4, 3, [](const FiniteFunction&) {}),
                  std::invalid_argument);  // 3^16 exceeds the default budget
}

TEST_CASE("deck index partitions the functions into equivalence classes") {
  DeckIndex index = build_deck_index(2, 2, 2);
  // count equivalence classes independently
  std::set<std::vector<std::uint8_t>> classes;
  enumerate_functions(2, 2, 2,
                      [&](const FiniteFunction& f) { classes.insert(canonical_form(f).table()); });
  CHECK(index.class_count() == classes.size());
  CHECK(index.function_count() == 16);

  // threading does not change the result
  DeckIndex threaded = build_deck_index(2, 2, 2, kFunctionEnumerationBudget, 4);
  CHECK(threaded.buckets == index.buckets);
}

TEST_CASE("constants are reconstructible at n > |A|") {
  DeckIndex index = build_deck_index(2, 3, 2);
  CHECK(is_reconstructible_exhaustive(FiniteFunction::constant(2, 3, {"a", "b"}, 0), index));
  CHECK(is_reconstructible_exhaustive(FiniteFunction::constant(2, 3, {"a", "b"}, 1), index));
}

TEST_CASE("the arity-3 triple defeats reconstruction at (2,3,4)") {
  DeckIndex index = build_deck_index(2, 3, 4);
  auto triple = example_symmofo("a", "b", "c", "d");
  for (const auto& f : triple) CHECK(!is_reconstructible_exhaustive(f, index));
  const auto* bucket = index.bucket_of(deck(triple[0]));
  REQUIRE(bucket != nullptr);
  CHECK(bucket->size() >= 3);

  // totally symmetric class is not recognizable at this shape: h shares the
  // bucket but is not totally symmetric
  CHECK(!class_recognizability(
      [](const FiniteFunction& f) { return is_totally_symmetric(f); }, index));

  // the unique-identification-minor class is recognizable everywhere
  CHECK(class_recognizability(
      [](const FiniteFunction& f) { return has_unique_identification_minor(f); }, index));
}

TEST_CASE("bucket membership is invariant under argument permutation") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    FiniteFunction f = testutil::random_fn(rng, 2, 3, 2);
    Permutation sigma = testutil::random_perm(rng, 3);
    CHECK(deck(f).fingerprint() == deck(precompose_perm(f, sigma)).fingerprint());
  }
}

TEST_CASE("reconstructibility verdicts are label-permutation invariant") {
  DeckIndex index = build_deck_index(2, 3, 2);
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    FiniteFunction f = testutil::random_fn(rng, 2, 3, 2);
    std::vector<std::uint8_t> swapped(f.table());
    for (auto& v : swapped) v = static_cast<std::uint8_t>(1 - v);
    FiniteFunction g(2, 3, f.labels(), std::move(swapped));
    CHECK(is_reconstructible_exhaustive(f, index) == is_reconstructible_exhaustive(g, index));
  }
}

TEST_CASE("tuples with pairwise distinct entries do not reach any minor (n <= |A|)") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    FiniteFunction f = testutil::random_fn(rng, 3, 3, 2);
    // flip values on injective tuples only
    std::vector<std::uint8_t> table = f.table();
    std::vector<int> tuple(3);
    for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
      codec::decode_into(idx, 3, 3, tuple.data());
      if (supp_mask(tuple) == 0b111 && rng() % 2)
        table[idx] = static_cast<std::uint8_t>(1 - table[idx]);
    }
    FiniteFunction g(3, 3, f.labels(), std::move(table));
    CHECK(deck(f) == deck(g));
  }
}

TEST_CASE("weak reconstructibility of totally symmetric functions at (2,4,2)") {
  std::vector<FiniteFunction> members;
  for (std::uint64_t assignment = 0; assignment < 32; ++assignment) {
    std::map<std::vector<int>, int> inner;
    std::uint64_t rest = assignment;
    for (const auto& key : enumerate_msupp_range(2, 4)) {
      inner.emplace(key, static_cast<int>(rest % 2));
      rest /= 2;
    }
    members.push_back(from_msupp(2, 4, {"a", "b"}, inner));
  }
  auto result = class_weak_reconstructibility(members);
  CHECK(result.ok);
}

TEST_CASE("ofo-determined samples at (3,6) are weakly reconstructible") {
  // k = 3 = 3 (mod 4) needs n >= k+3 = 6
  std::mt19937_64 rng(54);
  std::vector<FiniteFunction> members;
  for (int i = 0; i < 60; ++i) {
    std::map<std::vector<int>, int> inner;
    for (const auto& word : enumerate_ofo_range(3, 6))
      inner.emplace(word, static_cast<int>(rng() % 2));
    members.push_back(from_ofo(3, 6, {"a", "b"}, inner));
  }
  CHECK(class_weak_reconstructibility(members).ok);
}

TEST_CASE("the theta pair defeats weak reconstructibility at (3,5)") {
  auto [f, g] = theta_counterexample(3, "alpha", "beta", "gamma");
  std::mt19937_64 rng(55);
  std::vector<FiniteFunction> members{f, g};
  for (int i = 0; i < 20; ++i) {
    std::map<std::vector<int>, int> inner;
    for (const auto& word : enumerate_ofo_range(3, 5))
      inner.emplace(word, static_cast<int>(rng() % 3));
    members.push_back(from_ofo(3, 5, f.labels(), inner));
  }
  auto result = class_weak_reconstructibility(members);
  REQUIRE(!result.ok);
  REQUIRE(result.counterexample.has_value());
  auto [x, y] = *result.counterexample;
  CHECK(decks_equal(x, y));
  CHECK(!is_equivalent(x, y));
}

TEST_CASE("sweep report summarizes the buckets") {
  SweepReport report = recon_sweep(2, 3, 2);
  CHECK(report.function_count == 256);
  CHECK(report.bucket_count > 0);
  CHECK(report.class_count >= report.bucket_count);
  for (const auto& sample : report.samples) CHECK(sample.class_count >= 2);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "minrec/perm.hpp"
#include "test_util.hpp"

using namespace minrec;
using testutil::perm1;

TEST_CASE("compose follows the right-to-left convention") {
  Permutation tau = perm1({3, 1, 2});
  CHECK(compose(Permutation::identity(3), tau) == tau);

  // (1 2 ... p)(p p+1 ... r) = (1 2 ... r) with p=3, r=5 on 6 points
  Permutation left = Permutation::from_cycles_text("(1 2 3)", 6);
  Permutation right = Permutation::from_cycles_text("(3 4 5)", 6);
  CHECK(compose(left, right) == Permutation::from_cycles_text("(1 2 3 4 5)", 6));

  // (1 ... r)(2 ... r)^-1 = (1 2) with r=5
  Permutation full = Permutation::from_cycles_text("(1 2 3 4 5)", 5);
  Permutation tail = Permutation::from_cycles_text("(2 3 4 5)", 5);
  CHECK(compose(full, inverse(tail)) == Permutation::from_cycles_text("(1 2)", 5));
}

TEST_CASE("compose is associative and inverse is two-sided") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 1 + static_cast<int>(rng() % 7);
    auto a = testutil::random_perm(rng, m);
    auto b = testutil::random_perm(rng, m);
    auto c = testutil::random_perm(rng, m);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, inverse(a)) == Permutation::identity(m));
    CHECK(compose(inverse(a), a) == Permutation::identity(m));
  }
}

TEST_CASE("parity is a homomorphism") {
  CHECK(parity(Permutation::identity(4)) == Parity::even);
  CHECK(parity(theta(6)) == Parity::odd);   // three transpositions
  CHECK(parity(theta(4)) == Parity::even);  // n = 0 (mod 4)
  CHECK(parity(theta(5)) == Parity::even);  // n = 1 (mod 4)

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 2 + static_cast<int>(rng() % 6);
    auto a = testutil::random_perm(rng, m);
    auto b = testutil::random_perm(rng, m);
    bool odd_product = (parity(a) == Parity::odd) != (parity(b) == Parity::odd);
    CHECK(parity(compose(a, b)) == (odd_product ? Parity::odd : Parity::even));
  }
}

TEST_CASE("cycle text round-trips with one-line form") {
  Permutation sigma = Permutation::from_cycles_text("(1 5 2)(3 7)", 7);
  CHECK(sigma == perm1({5, 1, 7, 4, 2, 6, 3}));
  CHECK(Permutation::from_cycles_text("", 3) == Permutation::identity(3));
  CHECK(Permutation::from_cycles_text("(1 2)", 2) == perm1({2, 1}));
  CHECK(Permutation::from_oneline_text(sigma.oneline_text()) == sigma);
  CHECK(Permutation::from_cycles_text(sigma.cycles_text(), 7) == sigma);
  CHECK_THROWS_AS(Permutation::from_cycles_text("(1 2)(2 3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles_text("(1 8)", 7), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_oneline_text("(1,1,2)"), std::invalid_argument);
}

TEST_CASE("theta is the displayed product of adjacent transpositions") {
  CHECK(theta(6) == perm1({2, 1, 4, 3, 6, 5}));
  CHECK(theta(5) == perm1({1, 3, 2, 5, 4}));
  CHECK(theta(2) == perm1({2, 1}));
  CHECK_THROWS_AS(theta(1), std::invalid_argument);
}

TEST_CASE("lambda skips ell and keeps the parity grid") {
  CHECK(lambda(3, 5) == perm1({2, 1, 3, 5, 4}));
  CHECK(lambda(2, 4) == perm1({1, 2, 4, 3}));
  CHECK(lambda(5, 5) == perm1({2, 1, 4, 3, 5}));
  CHECK_THROWS_AS(lambda(2, 5), std::invalid_argument);  // parity mismatch

  for (int n = 3; n <= 9; ++n) {
    int k = n - 1;
    for (int ell = (k % 2 == 0) ? 2 : 1; ell <= k; ell += 2) {
      CHECK(lambda(ell, k)(ell - 1) == ell - 1);  // ell is fixed
      CHECK(parity(lambda(ell, k)) == opposite(parity(theta(n))));
    }
  }
}

TEST_CASE("act_on_couple returns a sorted image set") {
  Couple I = Couple::from_one_based(1, 2);
  CHECK(act_on_couple(I, Permutation::identity(4)) == I);
  CHECK(act_on_couple(I, Permutation::from_cycles_text("(1 2 3)", 3)) ==
        Couple::from_one_based(2, 3));
  CHECK(act_on_couple(Couple::from_one_based(1, 3), perm1({5, 1, 7, 4, 2, 6, 3})) ==
        Couple::from_one_based(5, 7));
}

namespace {

// independent oracle: the unique permutation satisfying the hat-sigma
// identity, found by exhaustive search
Permutation hat_sigma_brute(const Permutation& sigma, const Couple& I) {
  int n = sigma.degree();
  Couple J = act_on_couple(I, inverse(sigma));
  auto dI = delta_map(I, n);
  auto dJ = delta_map(J, n);
  Permutation found = Permutation::identity(n - 1);
  int hits = 0;
  for_each_permutation(n - 1, [&](const Permutation& h) {
    for (int i = 0; i < n; ++i)
      if (h(dJ[i]) != dI[sigma(i)]) return;
    found = h;
    ++hits;
  });
  REQUIRE(hits == 1);
  return found;
}

}  // namespace

TEST_CASE("hat_sigma satisfies its defining identity") {
  CHECK(hat_sigma(Permutation::identity(4), Couple::from_one_based(2, 3)) ==
        Permutation::identity(3));

  // frozen from the brute-force oracle: n=3, sigma=(2,1,3), I={1,3}
  Permutation sigma = perm1({2, 1, 3});
  Couple I = Couple::from_one_based(1, 3);
  CHECK(hat_sigma_brute(sigma, I) == perm1({2, 1}));
  CHECK(hat_sigma(sigma, I) == perm1({2, 1}));

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);  // n <= 7
    auto s = testutil::random_perm(rng, n);
    auto c = testutil::random_couple(rng, n);
    Permutation hat = hat_sigma(s, c);
    Couple J = act_on_couple(c, inverse(s));
    auto dI = delta_map(c, n);
    auto dJ = delta_map(J, n);
    for (int i = 0; i < n; ++i) CHECK(hat(dJ[i]) == dI[s(i)]);
    CHECK(hat(J.lo) == c.lo);
    if (n <= 6) CHECK(hat == hat_sigma_brute(s, c));
  }
}

TEST_CASE("group_closure reaches the generated subgroup") {
  auto trivial = group_closure({}, 3);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.front().is_identity());

  for (int m : {3, 4, 5}) {
    auto full = group_closure(
        {Permutation::from_cycles_text("(1 2)", m),
         Permutation::from_cycles_text(m == 3 ? "(1 2 3)" : m == 4 ? "(1 2 3 4)" : "(1 2 3 4 5)", m)},
        m);
    std::uint64_t fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    CHECK(full.size() == fact);
  }

  auto rotations = group_closure({Permutation::from_cycles_text("(1 2 3)", 3)}, 3);
  CHECK(rotations.size() == 3);

  // all adjacent transpositions generate S_m
  for (int m : {2, 3, 4, 5, 6}) {
    std::vector<Permutation> gens;
    for (int i = 0; i + 1 < m; ++i) gens.push_back(transposition(m, i, i + 1));
    CHECK(group_closure(gens, m).size() == [&] {
      std::uint64_t f = 1;
      for (int i = 2; i <= m; ++i) f *= i;
      return f;
    }());
  }

  // closure properties
  std::mt19937_64 rng(3);
  auto gens = std::vector<Permutation>{testutil::random_perm(rng, 5),
                                       testutil::random_perm(rng, 5)};
  auto group = group_closure(gens, 5);
  CHECK(group_contains(group, Permutation::identity(5)));
  for (const auto& a : group) {
    CHECK(group_contains(group, inverse(a)));
    for (const auto& b : group) CHECK(group_contains(group, compose(a, b)));
  }
  CHECK_THROWS_AS(group_closure({}, 9), std::invalid_argument);
}

TEST_CASE("fundamental_partition matches the worked examples") {
  IntervalPartition p = fundamental_partition(perm1({1, 3, 2, 5, 4, 7, 6}));
  REQUIRE(p.block_count() == 4);
  CHECK(p.blocks[0] == std::pair<int, int>{0, 0});
  CHECK(p.blocks[1] == std::pair<int, int>{1, 2});
  CHECK(p.blocks[2] == std::pair<int, int>{3, 4});
  CHECK(p.blocks[3] == std::pair<int, int>{5, 6});

  CHECK(fundamental_partition(perm1({4, 3, 1, 7, 6, 2, 5})).block_count() == 1);
  CHECK(fundamental_partition(perm1({7, 2, 3, 4, 5, 6, 1})).block_count() == 1);
  CHECK(fundamental_partition(perm1({2, 1, 3, 4, 7, 6, 5})).block_count() == 4);

  for (int n = 2; n <= 9; ++n) {
    auto blocks = fundamental_partition(theta(n)).blocks;
    if (n % 2 == 0) {
      for (auto [lo, hi] : blocks) CHECK(hi - lo + 1 == 2);
    } else {
      CHECK(blocks.front() == std::pair<int, int>{0, 0});
      for (std::size_t b = 1; b < blocks.size(); ++b)
        CHECK(blocks[b].second - blocks[b].first + 1 == 2);
    }
  }

  // conversely, only theta_n realizes those block patterns
  for (int n = 2; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& rho) {
      auto blocks = fundamental_partition(rho).blocks;
      bool theta_pattern = true;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        int size = blocks[b].second - blocks[b].first + 1;
        int want = (n % 2 == 1 && b == 0) ? 1 : 2;
        if (size != want) theta_pattern = false;
      }
      CHECK(theta_pattern == (rho == theta(n)));
    });
  }
}

TEST_CASE("fundamental_partition blocks are invariant and unsplittable") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 2 + static_cast<int>(rng() % 7);
    auto rho = testutil::random_perm(rng, m);
    auto partition = fundamental_partition(rho);
    int covered = 0;
    for (auto [lo, hi] : partition.blocks) {
      covered += hi - lo + 1;
      for (int i = lo; i <= hi; ++i) {
        CHECK(rho(i) >= lo);
        CHECK(rho(i) <= hi);
      }
      // splitting at any interior point must break invariance
      for (int cut = lo; cut < hi; ++cut) {
        bool crosses = false;
        for (int i = lo; i <= cut; ++i)
          if (rho(i) > cut) crosses = true;
        CHECK(crosses);
      }
    }
    CHECK(covered == m);
  }
}

TEST_CASE("restrict_oneline removes the large entries") {
  Permutation sigma = perm1({3, 1, 5, 2, 6, 4});
  CHECK(restrict_oneline(sigma, 5) == perm1({3, 1, 5, 2, 4}));
  CHECK(restrict_oneline(sigma, 4) == perm1({3, 1, 2, 4}));
  CHECK(restrict_oneline(sigma, 6) == sigma);
}

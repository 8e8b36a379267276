#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "minrec/classes.hpp"
#include "minrec/equalizing.hpp"
#include "minrec/fn.hpp"
#include "test_util.hpp"

using namespace minrec;
using testutil::perm1;

namespace {

std::vector<std::vector<int>> preimages_brute(int n, int k) {
  // independent oracle: filter all k^n tuples by ofo
  std::vector<int> identity_word(k);
  for (int i = 0; i < k; ++i) identity_word[i] = i;
  std::vector<std::vector<int>> result;
  std::vector<int> tuple(n);
  for (std::uint64_t idx = 0; idx < power_checked(k, n); ++idx) {
    codec::decode_into(idx, k, n, tuple.data());
    if (ofo_word(tuple) == identity_word) result.push_back(tuple);
  }
  return result;
}

}  // namespace

TEST_CASE("ofo_identity_preimages generates exactly the right tuples") {
  CHECK(ofo_identity_preimages(3, 3) ==
        std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(ofo_identity_preimages(3, 2) ==
        std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 0}, {0, 1, 1}});
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 3}, {6, 4}, {7, 3}})
    CHECK(ofo_identity_preimages(n, k) == preimages_brute(n, k));
  CHECK_THROWS_AS(ofo_identity_preimages(2, 3), std::invalid_argument);
}

TEST_CASE("u_set of the identity is trivial") {
  auto u = u_set(Permutation::identity(5), 3);
  REQUIRE(u.size() == 1);
  CHECK(u.front().is_identity());
}

TEST_CASE("u_set of theta_{k+1} consists of odd permutations when k+1 = 0,1 (mod 4)") {
  for (int k : {3, 4}) {
    auto u = u_set(theta(k + 1), k);
    for (const auto& pi : u) CHECK(parity(pi) == Parity::odd);
  }
}

TEST_CASE("delta_set is closed under inverses") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    int k = 2 + static_cast<int>(rng() % 4);  // k <= 5
    int n = k + 1 + static_cast<int>(rng() % 2);
    if (n > 7) continue;
    auto sigma = testutil::random_perm(rng, n);
    auto delta = delta_set(sigma, k);
    for (const auto& pi : delta)
      CHECK(std::binary_search(delta.begin(), delta.end(), inverse(pi)));
  }
}

TEST_CASE("sigma_sub_I reproduces the worked example") {
  const Permutation sigma = perm1({3, 1, 5, 2, 6, 4});
  const int k = 4;
  CHECK(sigma_sub_I(sigma, k, Couple::from_one_based(1, 2)) == perm1({2, 1, 4, 3}));
  CHECK(sigma_sub_I(sigma, k, Couple::from_one_based(1, 3)) == perm1({1, 4, 2, 3}));
  CHECK(sigma_sub_I(sigma, k, Couple::from_one_based(1, 4)) == perm1({3, 1, 4, 2}));
  CHECK(sigma_sub_I(sigma, k, Couple::from_one_based(1, 5)) == perm1({3, 1, 2, 4}));
  CHECK(sigma_sub_I(sigma, k, Couple::from_one_based(2, 3)) == perm1({2, 1, 4, 3}));
  CHECK(sigma_sub_I(sigma, k, Couple::from_one_based(2, 4)) == perm1({3, 1, 4, 2}));
  CHECK(sigma_sub_I(sigma, k, Couple::from_one_based(2, 5)) == perm1({3, 1, 2, 4}));
  CHECK(sigma_sub_I(sigma, k, Couple::from_one_based(3, 4)) == perm1({3, 1, 4, 2}));
  CHECK(sigma_sub_I(sigma, k, Couple::from_one_based(3, 5)) == perm1({3, 1, 2, 4}));
  CHECK(sigma_sub_I(sigma, k, Couple::from_one_based(4, 5)) == perm1({3, 1, 4, 2}));

  // identity at n = k+1: deleting the duplicate leaves the identity word
  for (int kk : {2, 3, 4})
    for (const Couple& I : couples_of(kk + 1))
      CHECK(sigma_sub_I(Permutation::identity(kk + 1), kk, I).is_identity());
}

TEST_CASE("sigma_i_plan matches the worked example data") {
  const Permutation sigma = perm1({3, 1, 5, 2, 6, 4});
  SigmaIPlan plan = sigma_i_plan(sigma, 4, Couple::from_one_based(2, 5));
  CHECK(plan.s_sigma == std::vector<int>{0, 1, 2, 3, 5});  // sigma(i) <= 5
  CHECK(plan.b_sigma == 0);
  CHECK(plan.c_sigma == 2);  // sigma(1) = 3, 1-based
  CHECK(plan.d == 2);        // c not in I, c < max I
  REQUIRE(plan.couples.size() == 2);
  CHECK(plan.couples[0] == Couple::from_one_based(2, 5));
  CHECK(plan.couples[1] == Couple(2, 5));  // {d, k+2}, 0-based
  CHECK(plan.tuple == std::vector<int>{0, 1, 2, 3, 1, 2});

  // c_sigma inside I picks d = min I
  SigmaIPlan plan2 = sigma_i_plan(sigma, 4, Couple::from_one_based(3, 4));
  CHECK(plan2.d == 2);  // min I, 0-based
}

TEST_CASE("pi_sigma is the k-restriction and lies in U") {
  const Permutation sigma = perm1({3, 1, 5, 2, 6, 4});
  CHECK(pi_sigma(sigma, 4) == perm1({3, 1, 2, 4}));
  CHECK(pi_sigma(Permutation::identity(5), 3).is_identity());

  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 2 + static_cast<int>(rng() % 4);  // k <= 5
    int n = k + 1 + static_cast<int>(rng() % 3);
    if (n > 8) n = 8;
    auto sigma2 = testutil::random_perm(rng, n);
    auto u = u_set(sigma2, k);
    CHECK(std::binary_search(u.begin(), u.end(), pi_sigma(sigma2, k)));
    // the whole sigma_I family lies in U
    for (const Couple& I : couples_of(k + 1))
      CHECK(std::binary_search(u.begin(), u.end(), sigma_sub_I(sigma2, k, I)));
  }
}

TEST_CASE("theta_n is the unique non-k-equalizing permutation at n = k+1 = 0,1 (mod 4)") {
  CHECK(!is_k_equalizing(theta(4), 3));
  CHECK(!is_k_equalizing(theta(5), 4));
  for_each_permutation(4, [&](const Permutation& sigma) {
    if (sigma != theta(4)) CHECK(is_k_equalizing(sigma, 3));
  });
  // theta_6: k+1 = 6 = 2 (mod 4), so theta is k-equalizing there
  CHECK(is_k_equalizing(theta(6), 5));
}

TEST_CASE("closed verdict agrees with the connectivity oracle") {
  for_each_permutation(4, [&](const Permutation& sigma) {
    CHECK(is_k_equalizing(sigma, 3) == is_k_equalizing_oracle(sigma, 3));
  });
  for_each_permutation(5, [&](const Permutation& sigma) {
    CHECK(is_k_equalizing(sigma, 3) == is_k_equalizing_oracle(sigma, 3));
    CHECK(is_k_equalizing(sigma, 4) == is_k_equalizing_oracle(sigma, 4));
  });
}

TEST_CASE("the parity coloring separates theta_4 at k=3") {
  CHECK(!is_k_equalizing_oracle(theta(4), 3));
  CHECK(parity_separator_valid(theta(4), 3));
  CHECK(!parity_separator_valid(Permutation::identity(4), 3));
}

TEST_CASE("phi_plus and psi_plus follow the displayed cases") {
  auto phi3 = phi_plus(3, "alpha", "beta", "gamma");
  auto psi3 = psi_plus(3, "alpha", "beta", "gamma");
  CHECK(phi3.at({0, 1, 2}) == "alpha");  // identity is even
  CHECK(phi3.at({1, 0, 2}) == "beta");   // one transposition
  CHECK(psi3.at({1, 0, 2}) == "alpha");

  auto phi4 = phi_plus(4, "alpha", "beta", "gamma");
  CHECK(phi4.at({1, 0, 2, 3}) == "gamma");  // rho(1) != 1
  CHECK(phi4.at({0, 1, 2, 3}) == "alpha");
  CHECK(phi4.at({0, 2, 1, 3}) == "beta");

  CHECK_THROWS_AS(phi_plus(3, "x", "x", "y"), std::invalid_argument);
  CHECK_THROWS_AS(phi_plus(4, "x", "y", "x"), std::invalid_argument);
  CHECK_NOTHROW(phi_plus(3, "x", "y", "x"));  // gamma unused for odd k
  CHECK_NOTHROW(phi_plus(4, "x", "y", "y"));  // beta = gamma permitted
}

TEST_CASE("equalizing couple closed form") {
  CHECK(is_equalizing_couple(3, 2));
  CHECK(!is_equalizing_couple(4, 3));
  CHECK(is_equalizing_couple(5, 3));
  CHECK(!is_equalizing_couple(5, 4));
  CHECK(is_equalizing_couple(6, 4));
  CHECK(!is_equalizing_couple(2, 2));
  CHECK_THROWS_AS(is_equalizing_couple(1, 2), std::invalid_argument);
}

TEST_CASE("equalizing couple oracle on small shapes") {
  // n <= k: never equalizing; n >= 2k-1: always
  CHECK(!is_equalizing_couple_oracle(2, 2));
  CHECK(!is_equalizing_couple_oracle(2, 3));
  CHECK(!is_equalizing_couple_oracle(3, 3));
  CHECK(is_equalizing_couple_oracle(3, 2));
  CHECK(is_equalizing_couple_oracle(4, 2));
  CHECK(is_equalizing_couple_oracle(5, 3));
  CHECK(!is_equalizing_couple_oracle(4, 3));
  CHECK_THROWS_AS(is_equalizing_couple_oracle(8, 5, 1000), std::invalid_argument);
  // threaded run gives the same verdict
  CHECK(is_equalizing_couple_oracle(5, 3, kCoupleOracleBudget, 4));
}

TEST_CASE("U intersects G iff U is contained in G") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 2 + static_cast<int>(rng() % 3);
    int n = k + 1 + static_cast<int>(rng() % 2);
    auto sigma = testutil::random_perm(rng, n);
    auto u = u_set(sigma, k);
    auto group = g_group(sigma, k);
    bool intersects = false, contained = true;
    for (const auto& pi : u) {
      if (group_contains(group, pi))
        intersects = true;
      else
        contained = false;
    }
    CHECK(intersects == contained);
  }
}

TEST_CASE("the relation |> is stable under left translation") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    int k = 2 + static_cast<int>(rng() % 3);  // k <= 4
    int n = k + 1 + static_cast<int>(rng() % 2);
    if (n > 6) continue;
    auto sigma = testutil::random_perm(rng, n);

    // edge set of |> over all full-support tuples
    std::set<std::pair<std::vector<int>, std::vector<int>>> edges;
    const std::uint32_t full = (1u << k) - 1;
    std::vector<int> tuple(n), image(n);
    for (std::uint64_t idx = 0; idx < power_checked(k, n); ++idx) {
      codec::decode_into(idx, k, n, tuple.data());
      if (supp_mask(tuple) != full) continue;
      for (int j = 0; j < n; ++j) image[j] = tuple[sigma(j)];
      edges.insert({ofo_word(tuple), ofo_word(image)});
    }
    for (int sample = 0; sample < 20; ++sample) {
      auto it = edges.begin();
      std::advance(it, static_cast<long>(rng() % edges.size()));
      auto lambda_perm = testutil::random_perm(rng, k);
      std::vector<int> left(k), right(k);
      for (int i = 0; i < k; ++i) {
        left[i] = lambda_perm(it->first[i]);
        right[i] = lambda_perm(it->second[i]);
      }
      CHECK(edges.count({left, right}) == 1);
    }
  }
}

TEST_CASE("ofo(k delta_I theta_n) = k lambda^ell_k") {
  for (int n = 3; n <= 9; ++n) {
    const int k = n - 1;
    const Permutation theta_n = theta(n);
    for (const Couple& I : couples_of(n)) {
      std::vector<int> tuple(n);
      auto d = delta_map(I, n);
      for (int j = 0; j < n; ++j) tuple[j] = d[theta_n(j)];  // k o delta_I o theta_n
      int ell0 = std::min(I.hi, theta_n(I.hi));              // 0-based
      CHECK(ofo_word(tuple) == lambda(ell0 + 1, k).images());
    }
  }
}

TEST_CASE("table 1 rules fire on handcrafted configurations") {
  // sigma-check_3 = (3,1,2): rule (i) with alpha=3 first gives (1 2)
  auto results = table1_rule_check(perm1({3, 1, 2}), 2);
  bool found = false;
  for (const auto& r : results)
    if (r.rule == 1 && r.permutation == transposition(2, 0, 1)) {
      found = true;
      CHECK(r.verified);
    }
  CHECK(found);

  // sigma-check_5 = (1,2,4,3,5): rule (vii) pattern beta..alpha,alpha+2,alpha+1
  auto results7 = table1_rule_check(perm1({1, 2, 4, 3, 5}), 4);
  found = false;
  for (const auto& r : results7)
    if (r.rule == 7 && r.permutation == transposition(4, 1, 2)) {
      found = true;
      CHECK(r.verified);
    }
  CHECK(found);
}

TEST_CASE("every matched table 1 prediction is verified on random permutations") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 2 + static_cast<int>(rng() % 4);  // k <= 5
    int n = k + 1 + static_cast<int>(rng() % 3);
    if (n > 8) n = 8;
    auto sigma = testutil::random_perm(rng, n);
    for (const auto& result : table1_rule_check(sigma, k)) CHECK(result.verified);
  }
}

TEST_CASE("analysis ties the pieces together") {
  EqualizingAnalysis analysis = analyze_k_equalizing(theta(4), 3);
  CHECK(!analysis.verdict);
  CHECK(analysis.parity_separator);
  for (const auto& pi : analysis.u) CHECK(parity(pi) == Parity::odd);
  // delta = {pi^-1 tau}; group generated by it stays in the alternating group
  for (const auto& rho : analysis.group) CHECK(parity(rho) == Parity::even);
}

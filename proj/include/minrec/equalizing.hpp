#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "minrec/perm.hpp"

namespace minrec {

inline constexpr std::uint64_t kKEqualizingBudget = 1ull << 22;   // tuples per sigma
inline constexpr std::uint64_t kCoupleOracleBudget = 1ull << 28;  // n! * k^n

/// All a in A^n with ofo(a) = (1,...,k), lexicographic; entries 0-based.
std::vector<std::vector<int>> ofo_identity_preimages(int n, int k);

/// U^sigma_k = {pi : id |> pi}, swept over ofo_identity_preimages; sorted.
std::vector<Permutation> u_set(const Permutation& sigma, int k);

/// Delta^sigma_k = {pi^-1 tau : pi, tau in U}; sorted, inverse-closed.
std::vector<Permutation> delta_set(const Permutation& sigma, int k);

/// G^sigma_k = closure of Delta^sigma_k; sorted.
std::vector<Permutation> g_group(const Permutation& sigma, int k);

/// The data behind sigma_I: S_sigma = {i : sigma(i) <= k+1}, its minimum
/// b_sigma, c_sigma = sigma(b_sigma), the repeated element d, and the
/// couples I_1 = I, I_i = {d, k+i} (pairwise distinct maxima).
struct SigmaIPlan {
  std::vector<int> s_sigma;
  int b_sigma = 0;
  int c_sigma = 0;
  int d = 0;
  std::vector<Couple> couples;
  std::vector<int> tuple;  // k_{I_1,...,I_r}, 0-based entries
};

SigmaIPlan sigma_i_plan(const Permutation& sigma, int k, const Couple& I);

/// sigma_I for a couple I over {1..k+1} (0-based in memory): the unique rho
/// with ofo(k_{I_1,...,I_r} o sigma) = (1..k) o rho.  Computed both from the
/// tuple construction and from the one-line deletion procedure; the two
/// routes are asserted to agree.
Permutation sigma_sub_I(const Permutation& sigma, int k, const Couple& I);

/// pi^sigma_k = restrict_oneline(sigma, k); cross-checked against the
/// defining sigma_I when the degree allows.
Permutation pi_sigma(const Permutation& sigma, int k);

/// U^sigma_k intersects G^sigma_k.
bool is_k_equalizing(const Permutation& sigma, int k);

/// Brute-force verdict: bipartite connectivity on two copies of A^k_!= with
/// an edge (ofo(a), ofo(a o sigma)) for every full-support a.
bool is_k_equalizing_oracle(const Permutation& sigma, int k,
                            std::uint64_t budget = kKEqualizingBudget);

/// Parity-based value maps on A^k_!= (words are 0-based); keys in word form.
/// Requires alpha != beta, and gamma != alpha when k is even.
std::map<std::vector<int>, std::string> phi_plus(int k, const std::string& alpha,
                                                 const std::string& beta,
                                                 const std::string& gamma);
std::map<std::vector<int>, std::string> psi_plus(int k, const std::string& alpha,
                                                 const std::string& beta,
                                                 const std::string& gamma);

/// True iff phi+ / psi+ witness that sigma is not k-equalizing:
/// phi+(ofo(a)) = psi+(ofo(a o sigma)) for every full-support a.
bool parity_separator_valid(const Permutation& sigma, int k);

/// Closed form of the equalizing-couple characterization.
bool is_equalizing_couple(int n, int k);

/// Brute-force verdict over every sigma in S_n: two copies of A^sharp_n,
/// edge (ofo(a), ofo(a o sigma)) for all a in A^n; equalizing iff every
/// word's left copy is connected to its own right copy for every sigma.
bool is_equalizing_couple_oracle(int n, int k,
                                 std::uint64_t budget = kCoupleOracleBudget,
                                 int threads = 1);

struct TableRuleResult {
  int rule = 0;  // 1..7, the Table 1 row
  Permutation permutation;
  bool verified = false;
};

/// Scans sigma-check_{k+1} for the seven Table 1 configurations and checks
/// each predicted permutation (or subgroup generator) against G^sigma_k.
std::vector<TableRuleResult> table1_rule_check(const Permutation& sigma, int k);

struct EqualizingAnalysis {
  Permutation sigma;
  int k = 0;
  std::vector<Permutation> u;
  std::vector<Permutation> delta;
  std::vector<Permutation> group;
  bool verdict = false;
  bool parity_separator = false;  // set on failure when phi+/psi+ separate
};

EqualizingAnalysis analyze_k_equalizing(const Permutation& sigma, int k);

}  // namespace minrec

#include "minrec/equalizing.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "minrec/classes.hpp"
#include "minrec/fn.hpp"

namespace minrec {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

// Lexicographic rank of a full injective word over {0..k-1} (Lehmer code).
int word_rank(const std::vector<int>& word) {
  int k = static_cast<int>(word.size());
  int rank = 0;
  for (int i = 0; i < k; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < k; ++j)
      if (word[j] < word[i]) ++smaller;
    rank = rank * (k - i) + smaller;
  }
  return rank;
}

int factorial(int k) {
  int result = 1;
  for (int i = 2; i <= k; ++i) result *= i;
  return result;
}

}  // namespace

std::vector<std::vector<int>> ofo_identity_preimages(int n, int k) {
  if (n < k) throw std::invalid_argument("ofo_identity_preimages requires n >= k");
  std::vector<std::vector<int>> result;
  std::vector<int> tuple(n);
  // At each position either repeat one of the introduced values or introduce
  // the next one; first occurrences then read 1,2,...,k in order.
  auto rec = [&](auto&& self, int pos, int introduced) -> void {
    if (pos == n) {
      if (introduced == k) result.push_back(tuple);
      return;
    }
    if (n - pos < k - introduced) return;  // cannot finish
    int top = introduced < k ? introduced : introduced - 1;
    for (int v = 0; v <= top; ++v) {
      tuple[pos] = v;
      self(self, pos + 1, std::max(introduced, v + 1));
    }
  };
  rec(rec, 0, 0);
  return result;
}

std::vector<Permutation> u_set(const Permutation& sigma, int k) {
  const int n = sigma.degree();
  if (n < k) throw std::invalid_argument("u_set requires degree >= k");
  std::set<Permutation> found;
  std::vector<int> image(n);
  for (const auto& tuple : ofo_identity_preimages(n, k)) {
    for (int j = 0; j < n; ++j) image[j] = tuple[sigma(j)];
    found.insert(Permutation(ofo_word(image)));
  }
  return {found.begin(), found.end()};
}

std::vector<Permutation> delta_set(const Permutation& sigma, int k) {
  auto u = u_set(sigma, k);
  std::set<Permutation> diffs;
  for (const auto& pi : u) {
    Permutation pi_inv = inverse(pi);
    for (const auto& tau : u) diffs.insert(compose(pi_inv, tau));
  }
  return {diffs.begin(), diffs.end()};
}

std::vector<Permutation> g_group(const Permutation& sigma, int k) {
  return group_closure(delta_set(sigma, k), k);
}

SigmaIPlan sigma_i_plan(const Permutation& sigma, int k, const Couple& I) {
  const int n = sigma.degree();
  if (n < k + 1) throw std::invalid_argument("sigma_i_plan requires degree >= k+1");
  if (I.hi > k) throw std::invalid_argument("sigma_i_plan: couple exceeds {1..k+1}");

  SigmaIPlan plan;
  for (int i = 0; i < n; ++i)
    if (sigma(i) <= k) plan.s_sigma.push_back(i);
  plan.b_sigma = plan.s_sigma.front();
  plan.c_sigma = sigma(plan.b_sigma);
  if (plan.c_sigma == I.lo || plan.c_sigma == I.hi)
    plan.d = I.lo;
  else
    plan.d = plan.c_sigma > I.hi ? plan.c_sigma - 1 : plan.c_sigma;

  plan.couples.push_back(I);
  for (int i = k + 1; i < n; ++i) plan.couples.emplace_back(plan.d, i);
  for (std::size_t a = 0; a < plan.couples.size(); ++a)
    for (std::size_t b = a + 1; b < plan.couples.size(); ++b)
      if (plan.couples[a].hi == plan.couples[b].hi)
        throw std::logic_error("sigma_i_plan: couple maxima collide");

  plan.tuple.resize(n);
  for (int i = 0; i <= k; ++i) {
    if (i < I.hi)
      plan.tuple[i] = i;
    else if (i == I.hi)
      plan.tuple[i] = I.lo;
    else
      plan.tuple[i] = i - 1;
  }
  for (int i = k + 1; i < n; ++i) plan.tuple[i] = plan.d;
  std::vector<int> identity_word(k);
  std::iota(identity_word.begin(), identity_word.end(), 0);
  if (ofo_word(plan.tuple) != identity_word)
    throw std::logic_error("sigma_i_plan: constructed tuple has wrong ofo");
  return plan;
}

Permutation sigma_sub_I(const Permutation& sigma, int k, const Couple& I) {
  const int n = sigma.degree();
  // Route 1: the tuple k_{I_1,...,I_r} composed with sigma.
  SigmaIPlan plan = sigma_i_plan(sigma, k, I);
  std::vector<int> image(n);
  for (int j = 0; j < n; ++j) image[j] = plan.tuple[sigma(j)];
  std::vector<int> word = ofo_word(image);
  if (static_cast<int>(word.size()) != k)
    throw std::logic_error("sigma_sub_I: image word has wrong length");
  Permutation from_tuple{word};

  // Route 2: the one-line deletion/substitution/decrement procedure.
  std::vector<int> w = restrict_oneline(sigma, k + 1).images();
  int pos_lo = -1, pos_hi = -1;
  for (int i = 0; i <= k; ++i) {
    if (w[i] == I.lo) pos_lo = i;
    if (w[i] == I.hi) pos_hi = i;
  }
  int left = std::min(pos_lo, pos_hi);
  int right = std::max(pos_lo, pos_hi);
  w[left] = I.lo;
  w.erase(w.begin() + right);
  for (int& v : w)
    if (v > I.hi) --v;
  Permutation from_line{std::move(w)};

  if (from_tuple != from_line)
    throw std::logic_error("sigma_sub_I: tuple construction disagrees with the one-line procedure");
  return from_tuple;
}

Permutation pi_sigma(const Permutation& sigma, int k) {
  const int n = sigma.degree();
  if (n < k) throw std::invalid_argument("pi_sigma requires degree >= k");
  Permutation restricted = restrict_oneline(sigma, k);
  if (n >= k + 1) {
    // cross-check against the defining sigma_I
    int b = -1, b2 = -1;
    for (int i = 0; i < n; ++i) {
      if (sigma(i) <= k) {
        if (b < 0)
          b = i;
        else if (b2 < 0)
          b2 = i;
      }
    }
    int c = sigma(b);
    Couple I = (c != k) ? Couple(c, k) : Couple(sigma(b2), k);
    if (sigma_sub_I(sigma, k, I) != restricted)
      throw std::logic_error("pi_sigma: restriction disagrees with sigma_I");
  }
  return restricted;
}

bool is_k_equalizing(const Permutation& sigma, int k) {
  if (sigma.degree() <= k)
    throw std::invalid_argument("is_k_equalizing requires degree > k");
  auto u = u_set(sigma, k);
  auto group = g_group(sigma, k);
  for (const auto& pi : u)
    if (group_contains(group, pi)) return true;
  return false;
}

bool is_k_equalizing_oracle(const Permutation& sigma, int k, std::uint64_t budget) {
  const int n = sigma.degree();
  if (n <= k) throw std::invalid_argument("is_k_equalizing_oracle requires degree > k");
  const std::uint64_t size = power_checked(k, n);
  if (size > budget) throw std::invalid_argument("is_k_equalizing_oracle: budget exceeded");

  const int words = factorial(k);
  UnionFind uf(2 * words);
  const std::uint32_t full = (1u << k) - 1;
  std::vector<int> tuple(n), image(n);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    codec::decode_into(idx, k, n, tuple.data());
    if (supp_mask(tuple) != full) continue;
    for (int j = 0; j < n; ++j) image[j] = tuple[sigma(j)];
    uf.unite(word_rank(ofo_word(tuple)), words + word_rank(ofo_word(image)));
  }
  for (int w = 0; w < words; ++w)
    if (uf.find(w) != uf.find(words + w)) return false;
  return true;
}

namespace {

void check_parity_labels(int k, const std::string& alpha, const std::string& beta,
                         const std::string& gamma) {
  if (alpha == beta)
    throw std::invalid_argument("phi_plus/psi_plus require alpha != beta");
  if (k % 2 == 0 && gamma == alpha)
    throw std::invalid_argument("phi_plus/psi_plus require gamma != alpha for even k");
}

std::map<std::vector<int>, std::string> parity_map(int k, const std::string& even_label,
                                                   const std::string& odd_label,
                                                   const std::string& gamma) {
  std::map<std::vector<int>, std::string> result;
  for_each_permutation(k, [&](const Permutation& rho) {
    const std::string* value;
    if (k % 2 == 1) {
      value = parity(rho) == Parity::even ? &even_label : &odd_label;
    } else if (rho(0) == 0) {
      value = parity(rho) == Parity::even ? &even_label : &odd_label;
    } else {
      value = &gamma;
    }
    result.emplace(rho.images(), *value);
  });
  return result;
}

}  // namespace

std::map<std::vector<int>, std::string> phi_plus(int k, const std::string& alpha,
                                                 const std::string& beta,
                                                 const std::string& gamma) {
  check_parity_labels(k, alpha, beta, gamma);
  return parity_map(k, alpha, beta, gamma);
}

std::map<std::vector<int>, std::string> psi_plus(int k, const std::string& alpha,
                                                 const std::string& beta,
                                                 const std::string& gamma) {
  // alpha and beta trade places; beta = gamma stays permitted.
  check_parity_labels(k, alpha, beta, gamma);
  return parity_map(k, beta, alpha, gamma);
}

bool parity_separator_valid(const Permutation& sigma, int k) {
  const int n = sigma.degree();
  auto phi = phi_plus(k, "alpha", "beta", "gamma");
  auto psi = psi_plus(k, "alpha", "beta", "gamma");
  const std::uint64_t size = power_checked(k, n);
  const std::uint32_t full = (1u << k) - 1;
  std::vector<int> tuple(n), image(n);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    codec::decode_into(idx, k, n, tuple.data());
    if (supp_mask(tuple) != full) continue;
    for (int j = 0; j < n; ++j) image[j] = tuple[sigma(j)];
    if (phi.at(ofo_word(tuple)) != psi.at(ofo_word(image))) return false;
  }
  return true;  // phi != psi by construction, so sigma is not k-equalizing
}

bool is_equalizing_couple(int n, int k) {
  if (n < 2 || k < 2) throw std::invalid_argument("is_equalizing_couple requires n, k >= 2");
  if (k % 4 == 1 || k % 4 == 2) return n >= k + 1;
  return n >= k + 2;
}

bool is_equalizing_couple_oracle(int n, int k, std::uint64_t budget, int threads) {
  if (n < 2 || k < 2)
    throw std::invalid_argument("is_equalizing_couple_oracle requires n, k >= 2");
  const std::uint64_t size = power_checked(k, n);
  std::uint64_t perms = 1;
  for (int i = 2; i <= n; ++i) perms *= i;
  if (perms * size > budget)
    throw std::invalid_argument("is_equalizing_couple_oracle: budget exceeded");

  // Word ids over A^sharp_n and per-index ofo words, shared by all sigma.
  auto words = enumerate_ofo_range(k, n);
  std::map<std::vector<int>, int> id_of;
  for (std::size_t i = 0; i < words.size(); ++i) id_of.emplace(words[i], static_cast<int>(i));
  const int W = static_cast<int>(words.size());

  std::vector<int> digits(size * n);
  std::vector<int> wid(size);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    codec::decode_into(idx, k, n, digits.data() + idx * n);
    std::span<const int> tuple(digits.data() + idx * n, n);
    wid[idx] = id_of.at(ofo_word(tuple));
  }
  std::vector<std::uint64_t> pow(n, 1);
  for (int p = n - 2; p >= 0; --p) pow[p] = pow[p + 1] * k;

  auto sigma_ok = [&](const Permutation& sigma) {
    UnionFind uf(2 * W);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      const int* row = digits.data() + idx * n;
      std::uint64_t jdx = 0;
      for (int p = 0; p < n; ++p) jdx += static_cast<std::uint64_t>(row[sigma(p)]) * pow[p];
      uf.unite(wid[idx], W + wid[jdx]);
    }
    for (int w = 0; w < W; ++w)
      if (uf.find(w) != uf.find(W + w)) return false;
    return true;
  };

  std::vector<Permutation> all = all_permutations(n, n);
  if (threads <= 1) {
    for (const auto& sigma : all)
      if (!sigma_ok(sigma)) return false;
    return true;
  }
  std::atomic<bool> ok{true};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= all.size() || !ok.load()) return;
      if (!sigma_ok(all[i])) ok.store(false);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return ok.load();
}

namespace {

Permutation cycle_perm(int degree, const std::vector<int>& elements) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t i = 0; i < elements.size(); ++i)
    images[elements[i]] = elements[(i + 1) % elements.size()];
  return Permutation(std::move(images));
}

// The cycle (p q q+1 ... r-1) of Table 1, 0-based.
Permutation table_cycle(int k, int p, int q, int r) {
  std::vector<int> elements{p};
  for (int i = q; i <= r - 1; ++i) elements.push_back(i);
  return cycle_perm(k, elements);
}

// Chain transpositions generating the symmetric group on an arbitrary set.
std::vector<Permutation> symmetric_generators(int k, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 1 < elements.size(); ++i)
    gens.push_back(transposition(k, elements[i], elements[i + 1]));
  return gens;
}

}  // namespace

std::vector<TableRuleResult> table1_rule_check(const Permutation& sigma, int k) {
  const int n = sigma.degree();
  if (n <= k) throw std::invalid_argument("table1_rule_check requires degree > k");
  const std::vector<int> w = restrict_oneline(sigma, k + 1).images();
  auto group = g_group(sigma, k);

  std::vector<TableRuleResult> results;
  auto emit = [&](int rule, const Permutation& prediction) {
    results.push_back({rule, prediction, group_contains(group, prediction)});
  };
  auto emit_symmetric = [&](int rule, const std::vector<int>& elements) {
    for (const auto& gen : symmetric_generators(k, elements)) emit(rule, gen);
  };
  auto set_with = [&](int p, int from, int to) {
    std::vector<int> elements{p};
    for (int i = from; i <= to; ++i)
      if (i != p) elements.push_back(i);
    return elements;
  };

  const int len = k + 1;
  for (int p = 0; p < len; ++p)
    for (int q = p + 1; q < len; ++q)
      for (int r = q + 1; r < len; ++r) {
        // (i): alpha beta gamma with alpha largest
        if (w[p] > w[q] && w[p] > w[r]) emit(1, table_cycle(k, p, q, r));
        // (ii): alpha .. beta gamma(adjacent) .. delta
        if (q + 1 < r && w[p] > w[q] && w[p] > w[q + 1] && w[p] > w[r])
          emit_symmetric(2, set_with(p, q, r - 1));
        // (iii): beta .. alpha .. gamma with alpha largest in the middle
        if (w[q] > w[p] && w[q] > w[r] && r - 1 > q) {
          std::vector<int> elements;
          for (int i = q; i <= r - 1; ++i) elements.push_back(i);
          emit(3, cycle_perm(k, elements));
        }
        // (iv): alpha .. alpha+1 .. beta
        if (w[q] == w[p] + 1 && w[r] < w[p] && w[p] <= k - 1) {
          emit(4, table_cycle(k, p, q, r));
          emit_symmetric(4, set_with(p, q, r - 1));
        }
        // (v): alpha .. beta .. alpha+1
        if (w[r] == w[p] + 1 && w[q] < w[p] && w[p] <= k - 1)
          emit(5, table_cycle(k, p, q, r));
        // (vi): alpha .. beta .. alpha+1 .. gamma
        if (w[r] == w[p] + 1 && w[q] < w[p] && w[p] <= k - 1)
          for (int s = r + 1; s < len; ++s)
            if (w[s] < w[p]) emit_symmetric(6, set_with(p, q, s - 1));
        // (vii): beta .. alpha alpha+2 alpha+1 (consecutive positions)
        if (r == q + 1 && r + 1 < len && w[q] > w[p] && w[q] <= k - 2 &&
            w[q + 1] == w[q] + 2 && w[q + 2] == w[q] + 1)
          emit(7, transposition(k, q, q + 1));
      }
  return results;
}

EqualizingAnalysis analyze_k_equalizing(const Permutation& sigma, int k) {
  if (sigma.degree() <= k)
    throw std::invalid_argument("analyze_k_equalizing requires degree > k");
  EqualizingAnalysis a;
  a.sigma = sigma;
  a.k = k;
  a.u = u_set(sigma, k);
  a.delta = delta_set(sigma, k);
  a.group = group_closure(a.delta, k);
  a.verdict = false;
  for (const auto& pi : a.u)
    if (group_contains(a.group, pi)) {
      a.verdict = true;
      break;
    }
  if (!a.verdict) a.parity_separator = parity_separator_valid(sigma, k);
  return a;
}

}  // namespace minrec

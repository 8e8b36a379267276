#include "minrec/gallery.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "minrec/equalizing.hpp"

namespace minrec {

namespace {

std::vector<std::string> dedup_in_order(std::initializer_list<std::string> values) {
  std::vector<std::string> labels;
  for (const auto& v : values)
    if (std::find(labels.begin(), labels.end(), v) == labels.end()) labels.push_back(v);
  return labels;
}

int label_index_of(const std::vector<std::string>& labels, const std::string& value) {
  auto it = std::find(labels.begin(), labels.end(), value);
  if (it == labels.end()) throw std::invalid_argument("label not in list: " + value);
  return static_cast<int>(it - labels.begin());
}

}  // namespace

FiniteFunction build_fgp_phi(const FGPPhiSpec& spec) {
  const int k = spec.k;
  const int n = k + 1;
  const auto couples = couples_of(n);
  if (spec.family_g.size() != couples.size() || spec.family_p.size() != couples.size() ||
      spec.phi.size() != couples.size())
    throw std::invalid_argument("build_fgp_phi: families must be indexed by couples of {1..k+1}");
  {
    std::vector<int> phi_sorted = spec.phi;
    std::sort(phi_sorted.begin(), phi_sorted.end());
    for (std::size_t i = 0; i < phi_sorted.size(); ++i)
      if (phi_sorted[i] != static_cast<int>(i))
        throw std::invalid_argument("build_fgp_phi: phi is not a bijection on couples");
  }
  for (const auto& g : spec.family_g)
    if (g.k() != k || g.n() != k || g.labels() != spec.labels)
      throw std::invalid_argument("build_fgp_phi: family functions must be k-ary over the labels");
  for (const auto& rho : spec.family_p)
    if (rho.degree() != k)
      throw std::invalid_argument("build_fgp_phi: family permutations must lie in S_k");

  // Family agreement with g* . supp off the full-support tuples, checked
  // exhaustively.
  const std::uint32_t full = (1u << k) - 1;
  {
    std::vector<int> a(k);
    for (std::uint64_t idx = 0; idx < power_checked(k, k); ++idx) {
      codec::decode_into(idx, k, k, a.data());
      std::uint32_t mask = supp_mask(a);
      if (mask == full) continue;
      auto it = spec.g_star.find(mask_to_sorted_list(mask));
      if (it == spec.g_star.end())
        throw std::invalid_argument("build_fgp_phi: g_star misses a reachable set");
      for (const auto& g : spec.family_g)
        if (g.value(a) != it->second)
          throw std::invalid_argument(
              "build_fgp_phi: family violates the supp != A agreement condition");
    }
  }

  const std::uint64_t size = power_checked(k, n);
  std::vector<std::uint8_t> table(size);
  std::vector<int> b(n), a(k), permuted(k);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    codec::decode_into(idx, k, n, b.data());
    int value = -1;
    // every decomposition b = a o delta_I must give the same value
    for (std::size_t ci = 0; ci < couples.size(); ++ci) {
      const Couple& I = couples[ci];
      if (b[I.lo] != b[I.hi]) continue;
      a.clear();
      for (int j = 0; j < n; ++j)
        if (j != I.hi) a.push_back(b[j]);
      const Permutation& rho = spec.family_p[ci];
      for (int j = 0; j < k; ++j) permuted[j] = a[rho(j)];
      int candidate = spec.family_g[spec.phi[ci]].value(permuted);
      if (value < 0)
        value = candidate;
      else if (value != candidate)
        throw std::invalid_argument("build_fgp_phi: decompositions of a tuple disagree");
    }
    if (value < 0) throw std::logic_error("build_fgp_phi: tuple admits no decomposition");
    table[idx] = static_cast<std::uint8_t>(value);
  }
  return FiniteFunction(k, n, spec.labels, std::move(table));
}

FGPPhiSpec random_fgp_spec(int k, int label_count, std::mt19937_64& rng) {
  FGPPhiSpec spec;
  spec.k = k;
  spec.labels = default_labels(label_count);
  auto pick = [&](int bound) { return static_cast<int>(rng() % bound); };

  for (std::uint32_t mask = 1; mask < (1u << k); ++mask)
    spec.g_star.emplace(mask_to_sorted_list(mask), pick(label_count));

  const auto couples = couples_of(k + 1);
  const std::uint64_t size = power_checked(k, k);
  const std::uint32_t full = (1u << k) - 1;
  std::vector<int> a(k);
  for (std::size_t ci = 0; ci < couples.size(); ++ci) {
    std::vector<std::uint8_t> table(size);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      codec::decode_into(idx, k, k, a.data());
      std::uint32_t mask = supp_mask(a);
      table[idx] = static_cast<std::uint8_t>(
          mask == full ? pick(label_count) : spec.g_star.at(mask_to_sorted_list(mask)));
    }
    spec.family_g.emplace_back(k, k, spec.labels, std::move(table));
    // random permutation of S_k
    std::vector<int> images(k);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    spec.family_p.emplace_back(std::move(images));
  }
  spec.phi.resize(couples.size());
  std::iota(spec.phi.begin(), spec.phi.end(), 0);
  std::shuffle(spec.phi.begin(), spec.phi.end(), rng);
  return spec;
}

std::pair<FiniteFunction, FiniteFunction> example_a_plus_1(int k,
                                                           std::vector<std::string> labels) {
  if (k < 2) throw std::invalid_argument("example_a_plus_1 requires k >= 2");
  if (static_cast<int>(labels.size()) < k + 1)
    throw std::invalid_argument("example_a_plus_1: need k element images plus a fallback");
  labels.resize(k + 1);

  FGPPhiSpec spec;
  spec.k = k;
  spec.labels = labels;
  const int beta = k;  // fallback label index
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask)
    spec.g_star.emplace(mask_to_sorted_list(mask), beta);

  // h(a) = a_1 if supp(a) = A, fallback otherwise
  const std::uint64_t size = power_checked(k, k);
  const std::uint32_t full = (1u << k) - 1;
  std::vector<std::uint8_t> h_table(size);
  std::vector<int> a(k);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    codec::decode_into(idx, k, k, a.data());
    h_table[idx] = static_cast<std::uint8_t>(supp_mask(a) == full ? a[0] : beta);
  }
  FiniteFunction h(k, k, labels, std::move(h_table));

  const auto couples = couples_of(k + 1);
  spec.phi.resize(couples.size());
  std::iota(spec.phi.begin(), spec.phi.end(), 0);
  for (std::size_t ci = 0; ci < couples.size(); ++ci) {
    spec.family_g.push_back(h);
    spec.family_p.push_back(couples[ci].lo == 0 ? Permutation::identity(k)
                                                : transposition(k, 0, couples[ci].lo));
  }
  FiniteFunction f = build_fgp_phi(spec);

  for (auto& rho : spec.family_p) rho = Permutation::identity(k);
  FiniteFunction g = build_fgp_phi(spec);
  return {std::move(f), std::move(g)};
}

SuiteReport verify_a_plus_1(int k, std::vector<std::string> labels) {
  SuiteReport report;
  report.suite = "a_plus_1(k=" + std::to_string(k) + ")";
  auto [f, g] = example_a_plus_1(k, std::move(labels));
  report.add("deck f = deck g", decks_equal(f, g));
  report.add("f not equivalent to g", !is_equivalent(f, g));
  report.add("f recognized msupp (totally symmetric)",
             recognize(f, ClassKind::msupp).has_value());
  report.add("g recognized ofo", recognize(g, ClassKind::ofo).has_value());
  report.add("g not totally symmetric", !is_totally_symmetric(g));
  report.add("f not ofo-determined", !recognize(f, ClassKind::ofo).has_value());
  return report;
}

FiniteFunction example_cyclic(int k) {
  if (k < 3) throw std::invalid_argument("example_cyclic requires k >= 3");
  std::vector<std::string> labels{"alpha", "beta"};

  FGPPhiSpec spec;
  spec.k = k;
  spec.labels = labels;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask)
    spec.g_star.emplace(mask_to_sorted_list(mask), 1);

  // h(a) = alpha iff a = (1,...,k)
  const std::uint64_t size = power_checked(k, k);
  std::vector<std::uint8_t> h_table(size, 1);
  std::vector<int> identity_tuple(k);
  std::iota(identity_tuple.begin(), identity_tuple.end(), 0);
  h_table[codec::encode(identity_tuple, k)] = 0;
  FiniteFunction h(k, k, labels, std::move(h_table));

  const auto couples = couples_of(k + 1);
  spec.phi.resize(couples.size());
  std::iota(spec.phi.begin(), spec.phi.end(), 0);
  for (const Couple& I : couples) {
    spec.family_g.push_back(h);
    // one-line (i, i+1, ..., k, 1, ..., i-1) with i = min I
    std::vector<int> images(k);
    for (int j = 0; j < k; ++j) images[j] = (I.lo + j) % k;
    spec.family_p.emplace_back(std::move(images));
  }
  return build_fgp_phi(spec);
}

SuiteReport verify_cyclic(int k) {
  SuiteReport report;
  report.suite = "cyclic(k=" + std::to_string(k) + ")";
  FiniteFunction f = example_cyclic(k);
  report.add("unique identification minor", has_unique_identification_minor(f));
  auto group = invariance_group(f);
  report.add("invariance group is {id}",
             group.size() == 1 && group.front().is_identity());
  report.add("not 2-set-transitive", !is_m_set_transitive(f, 2));
  report.add("weakly-ofo rejected", !recognize(f, ClassKind::weakly_ofo).has_value());
  if (k == 4) {
    // the ten printed alpha-points, 1-based
    const std::vector<std::vector<int>> printed = {
        {1, 1, 2, 3, 4}, {1, 2, 1, 3, 4}, {1, 2, 3, 1, 4}, {1, 2, 3, 4, 1},
        {4, 1, 1, 2, 3}, {4, 1, 2, 1, 3}, {4, 1, 2, 3, 1}, {3, 4, 1, 1, 2},
        {3, 4, 1, 2, 1}, {2, 3, 4, 1, 1}};
    std::vector<std::vector<int>> alpha_points;
    for (std::uint64_t idx = 0; idx < f.table_size(); ++idx)
      if (f.table()[idx] == 0) alpha_points.push_back(index_tuple(idx, f.k(), f.n()));
    auto sorted = printed;
    std::sort(sorted.begin(), sorted.end());
    std::sort(alpha_points.begin(), alpha_points.end());
    report.add("alpha-set matches the printed 10 tuples", alpha_points == sorted);
  }
  return report;
}

std::pair<FiniteFunction, FiniteFunction> theta_counterexample(int k,
                                                               const std::string& alpha,
                                                               const std::string& beta,
                                                               const std::string& gamma) {
  if (k % 4 != 0 && k % 4 != 3)
    throw std::invalid_argument("theta_counterexample requires k = 0 or 3 (mod 4)");
  if (alpha == beta || gamma == alpha)
    throw std::invalid_argument("theta_counterexample requires alpha != beta and gamma != alpha");
  const int n = k + 2;
  std::vector<std::string> labels = dedup_in_order({alpha, beta, gamma});

  auto phi = phi_plus(k, alpha, beta, gamma);
  auto psi = psi_plus(k, alpha, beta, gamma);
  std::map<std::vector<int>, int> inner_f, inner_g;
  for (const auto& word : enumerate_ofo_range(k, n)) {
    if (static_cast<int>(word.size()) == k) {
      inner_f.emplace(word, label_index_of(labels, phi.at(word)));
      inner_g.emplace(word, label_index_of(labels, psi.at(word)));
    } else {
      inner_f.emplace(word, label_index_of(labels, gamma));
      inner_g.emplace(word, label_index_of(labels, gamma));
    }
  }
  return {from_ofo(k, n, labels, inner_f), from_ofo(k, n, labels, inner_g)};
}

SuiteReport verify_theta_counterexample(int k, const std::string& alpha,
                                        const std::string& beta,
                                        const std::string& gamma) {
  SuiteReport report;
  report.suite = "theta_counterexample(k=" + std::to_string(k) + ")";
  auto [f, g] = theta_counterexample(k, alpha, beta, gamma);
  const int n = f.n();

  report.add("f not equivalent to g", !is_equivalent(f, g));

  std::vector<FiniteFunction> f_cards, g_cards;
  for (const Couple& I : couples_of(n)) {
    f_cards.push_back(canonical_form(identification_minor(f, I)));
    g_cards.push_back(canonical_form(identification_minor(g, I)));
  }
  bool all_equivalent = true;
  for (const auto& fc : f_cards)
    for (const auto& gc : g_cards)
      if (fc != gc) all_equivalent = false;
  report.add("f_I equivalent to g_J for all I, J", all_equivalent);

  // the equivalences are realized by theta_{k+1}
  FiniteFunction f_minor = identification_minor(f, Couple(n - 2, n - 1));
  FiniteFunction g_minor = identification_minor(g, Couple(n - 2, n - 1));
  report.add("f_I = g_J o theta_{k+1}",
             f_minor == precompose_perm(g_minor, theta(k + 1)));
  return report;
}

std::vector<FiniteFunction> example_symmofo(const std::string& a, const std::string& b,
                                            const std::string& c, const std::string& d) {
  std::vector<std::string> labels = dedup_in_order({a, b, c, d});
  auto idx = [&](const std::string& v) {
    return static_cast<std::uint8_t>(label_index_of(labels, v));
  };
  // rows 000,001,010,011,100,101,110,111
  std::vector<std::uint8_t> f{idx(a), idx(b), idx(b), idx(c), idx(b), idx(c), idx(c), idx(d)};
  std::vector<std::uint8_t> g{idx(a), idx(c), idx(c), idx(b), idx(c), idx(b), idx(b), idx(d)};
  std::vector<std::uint8_t> h{idx(a), idx(b), idx(b), idx(b), idx(c), idx(c), idx(c), idx(d)};
  return {FiniteFunction(2, 3, labels, std::move(f)),
          FiniteFunction(2, 3, labels, std::move(g)),
          FiniteFunction(2, 3, labels, std::move(h))};
}

SuiteReport verify_symmofo(const std::string& a, const std::string& b,
                           const std::string& c, const std::string& d) {
  SuiteReport report;
  report.suite = "symmofo";
  auto triple = example_symmofo(a, b, c, d);
  const FiniteFunction& f = triple[0];
  const FiniteFunction& g = triple[1];
  const FiniteFunction& h = triple[2];

  report.add("f totally symmetric", is_totally_symmetric(f));
  report.add("g totally symmetric", is_totally_symmetric(g));
  report.add("h recognized ofo", recognize(h, ClassKind::ofo).has_value());
  report.add("deck f = deck g", decks_equal(f, g));
  report.add("deck g = deck h", decks_equal(g, h));

  if (b != c) {
    report.add("pairwise nonequivalent",
               !is_equivalent(f, g) && !is_equivalent(f, h) && !is_equivalent(g, h));
    // the printed shared binary card: (0,0)->a, (0,1)->b, (1,0)->c, (1,1)->d
    std::vector<std::uint8_t> expected_table;
    for (const auto& value : {a, b, c, d})
      expected_table.push_back(static_cast<std::uint8_t>(label_index_of(f.labels(), value)));
    FiniteFunction expected(2, 2, f.labels(), expected_table);
    Deck deck_f = deck(f);
    bool single = deck_f.distinct_cards() == 1 && deck_f.total_multiplicity() == 3 &&
                  deck_f.cards.front().first == canonical_form(expected).table();
    report.add("single shared card matches the printed table", single);
  } else {
    report.add("all three equal when b = c", f == g && g == h);
  }
  return report;
}

FiniteFunction example_boolean_quadratic() {
  std::vector<std::string> labels{"0", "1"};
  std::vector<std::uint8_t> table(8);
  std::vector<int> x(3);
  for (std::uint64_t idx = 0; idx < 8; ++idx) {
    codec::decode_into(idx, 2, 3, x.data());
    table[idx] = static_cast<std::uint8_t>((x[0] * x[1] + x[1] * x[2]) % 2);
  }
  return FiniteFunction(2, 3, std::move(labels), std::move(table));
}

SuiteReport verify_boolean_quadratic() {
  SuiteReport report;
  report.suite = "boolean_quadratic";
  FiniteFunction f = example_boolean_quadratic();

  auto binary_of = [&](auto&& poly) {
    std::vector<std::uint8_t> table(4);
    std::vector<int> x(2);
    for (std::uint64_t idx = 0; idx < 4; ++idx) {
      codec::decode_into(idx, 2, 2, x.data());
      table[idx] = static_cast<std::uint8_t>(poly(x[0], x[1]) % 2);
    }
    return FiniteFunction(2, 2, f.labels(), std::move(table));
  };
  FiniteFunction expected_12 = binary_of([](int x1, int x2) { return x1 + x1 * x2; });
  FiniteFunction expected_13 = binary_of([](int, int) { return 0; });
  FiniteFunction expected_23 = binary_of([](int x1, int x2) { return x1 * x2 + x2; });

  FiniteFunction m12 = identification_minor(f, Couple(0, 1));
  FiniteFunction m13 = identification_minor(f, Couple(0, 2));
  FiniteFunction m23 = identification_minor(f, Couple(1, 2));
  report.add("minor at {1,2} = x1 + x1x2", m12 == expected_12);
  report.add("minor at {1,3} = 0", m13 == expected_13);
  report.add("minor at {2,3} = x1x2 + x2", m23 == expected_23);
  report.add("g_{1,2} equivalent to g_{2,3}", is_equivalent(m12, m23));
  return report;
}

std::vector<std::string> gallery_names() {
  return {"a_plus_1", "cyclic", "theta", "symmofo", "boolean_quadratic"};
}

GalleryResult run_gallery(const std::string& name, int k) {
  GalleryResult result;
  if (name == "a_plus_1") {
    std::vector<std::string> labels = default_labels(k + 1);
    auto [f, g] = example_a_plus_1(k, labels);
    result.functions.emplace_back("f", std::move(f));
    result.functions.emplace_back("g", std::move(g));
    result.report = verify_a_plus_1(k, labels);
  } else if (name == "cyclic") {
    result.functions.emplace_back("f", example_cyclic(k));
    result.report = verify_cyclic(k);
  } else if (name == "theta") {
    auto [f, g] = theta_counterexample(k, "alpha", "beta", "gamma");
    result.functions.emplace_back("f", std::move(f));
    result.functions.emplace_back("g", std::move(g));
    result.report = verify_theta_counterexample(k, "alpha", "beta", "gamma");
  } else if (name == "symmofo") {
    auto triple = example_symmofo("a", "b", "c", "d");
    result.functions.emplace_back("f", triple[0]);
    result.functions.emplace_back("g", triple[1]);
    result.functions.emplace_back("h", triple[2]);
    result.report = verify_symmofo("a", "b", "c", "d");
  } else if (name == "boolean_quadratic") {
    result.functions.emplace_back("f", example_boolean_quadratic());
    result.report = verify_boolean_quadratic();
  } else {
    throw std::invalid_argument("unknown gallery item: " + name);
  }
  return result;
}

}  // namespace minrec

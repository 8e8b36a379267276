#include "minrec/fn.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace minrec {

std::uint64_t power_checked(std::uint64_t base, int exp) {
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("power_checked: overflow");
    result *= base;
  }
  return result;
}

std::vector<std::string> default_labels(int count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (int i = 0; i < count; ++i) {
    if (i < 26)
      labels.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      labels.push_back("l" + std::to_string(i + 1));
  }
  return labels;
}

std::uint64_t tuple_index(std::span<const int> tuple_one_based, int k) {
  std::uint64_t index = 0;
  for (int v : tuple_one_based) {
    if (v < 1 || v > k) throw std::invalid_argument("tuple entry out of range 1..k");
    index = index * static_cast<std::uint64_t>(k) + (v - 1);
  }
  return index;
}

std::vector<int> index_tuple(std::uint64_t index, int k, int n) {
  std::vector<int> tuple = codec::decode(index, k, n);
  for (int& v : tuple) ++v;
  return tuple;
}

FiniteFunction::FiniteFunction(int k, int n, std::vector<std::string> labels,
                               std::vector<std::uint8_t> table)
    : k_(k), n_(n), labels_(std::move(labels)), table_(std::move(table)) {
  if (k_ < 1) throw std::invalid_argument("domain size must be >= 1");
  if (n_ < 1) throw std::invalid_argument("arity must be >= 1");
  if (labels_.empty() || labels_.size() > 255)
    throw std::invalid_argument("label list must have 1..255 entries");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw std::invalid_argument("labels must be pairwise distinct");
  if (table_.size() != power_checked(k_, n_))
    throw std::invalid_argument("table length must be k^n");
  for (std::uint8_t v : table_)
    if (v >= labels_.size())
      throw std::invalid_argument("table entry does not index the label list");
}

FiniteFunction FiniteFunction::constant(int k, int n, std::vector<std::string> labels,
                                        int label_index) {
  std::vector<std::uint8_t> table(power_checked(k, n),
                                  static_cast<std::uint8_t>(label_index));
  return FiniteFunction(k, n, std::move(labels), std::move(table));
}

std::vector<int> delta_map(const Couple& I, int n) {
  if (n < 2) throw std::invalid_argument("delta_map requires n >= 2");
  if (I.hi >= n) throw std::invalid_argument("couple exceeds arity");
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) {
    if (i < I.hi)
      map[i] = i;
    else if (i == I.hi)
      map[i] = I.lo;
    else
      map[i] = i - 1;
  }
  return map;
}

FiniteFunction form_minor(const FiniteFunction& g, std::span<const int> sigma, int n) {
  const int m = g.n();
  if (static_cast<int>(sigma.size()) != m)
    throw std::invalid_argument("form_minor: sigma must be total on {1..m}");
  for (int v : sigma)
    if (v < 0 || v >= n) throw std::invalid_argument("form_minor: sigma value out of range");
  const int k = g.k();
  const std::uint64_t size = power_checked(k, n);
  std::vector<std::uint8_t> table(size);
  std::vector<int> a(n), b(m);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    codec::decode_into(idx, k, n, a.data());
    for (int j = 0; j < m; ++j) b[j] = a[sigma[j]];
    table[idx] = g.table()[codec::encode(b, k)];
  }
  return FiniteFunction(k, n, g.labels(), std::move(table));
}

FiniteFunction identification_minor(const FiniteFunction& f, const Couple& I) {
  if (f.n() < 2) throw std::invalid_argument("identification minor requires arity >= 2");
  return form_minor(f, delta_map(I, f.n()), f.n() - 1);
}

FiniteFunction precompose_perm(const FiniteFunction& f, const Permutation& sigma) {
  if (sigma.degree() != f.n())
    throw std::invalid_argument("precompose_perm: degree mismatch");
  return form_minor(f, sigma.images(), f.n());
}

namespace {

// table[(a o sigma)] gathered entry by entry, with shared digit matrix.
struct PermutedView {
  const std::vector<std::uint8_t>& table;
  const std::vector<int>& digits;  // k^n rows of n digits
  const std::vector<std::uint64_t>& pow;
  const Permutation& sigma;
  int n;

  std::uint8_t operator[](std::uint64_t i) const {
    const int* row = digits.data() + i * n;
    std::uint64_t j = 0;
    for (int p = 0; p < n; ++p) j += static_cast<std::uint64_t>(row[sigma(p)]) * pow[p];
    return table[j];
  }
};

void build_digit_matrix(int k, int n, std::uint64_t size, std::vector<int>& digits,
                        std::vector<std::uint64_t>& pow) {
  digits.resize(size * n);
  for (std::uint64_t i = 0; i < size; ++i)
    codec::decode_into(i, k, n, digits.data() + i * n);
  pow.assign(n, 1);
  for (int p = n - 2; p >= 0; --p) pow[p] = pow[p + 1] * k;
}

}  // namespace

FiniteFunction canonical_form(const FiniteFunction& f, int bound) {
  if (f.n() > bound)
    throw std::invalid_argument("canonical_form: arity exceeds enumeration bound");
  const int n = f.n();
  const std::uint64_t size = f.table_size();
  std::vector<int> digits;
  std::vector<std::uint64_t> pow;
  build_digit_matrix(f.k(), n, size, digits, pow);

  std::vector<std::uint8_t> best = f.table();
  for_each_permutation(n, [&](const Permutation& sigma) {
    if (sigma.is_identity()) return;
    PermutedView view{f.table(), digits, pow, sigma, n};
    for (std::uint64_t i = 0; i < size; ++i) {
      std::uint8_t v = view[i];
      if (v > best[i]) return;
      if (v < best[i]) {
        // strictly smaller: materialize the rest of this candidate
        best[i] = v;
        for (std::uint64_t r = i + 1; r < size; ++r) best[r] = view[r];
        return;
      }
    }
  });
  return FiniteFunction(f.k(), n, f.labels(), std::move(best));
}

bool is_equivalent(const FiniteFunction& f, const FiniteFunction& g, int bound) {
  if (!f.same_shape(g)) throw std::invalid_argument("is_equivalent: shape mismatch");
  if (f.n() > bound)
    throw std::invalid_argument("is_equivalent: arity exceeds enumeration bound");
  const int n = f.n();
  const std::uint64_t size = f.table_size();
  std::vector<int> digits;
  std::vector<std::uint64_t> pow;
  build_digit_matrix(f.k(), n, size, digits, pow);

  bool found = false;
  for_each_permutation(n, [&](const Permutation& sigma) {
    if (found) return;
    PermutedView view{g.table(), digits, pow, sigma, n};
    for (std::uint64_t i = 0; i < size; ++i)
      if (view[i] != f.table()[i]) return;
    found = true;
  });
  return found;
}

int Deck::total_multiplicity() const {
  int total = 0;
  for (const auto& [table, mult] : cards) total += mult;
  return total;
}

std::string Deck::fingerprint() const {
  std::string bytes;
  for (const auto& [table, mult] : cards) {
    bytes.append(reinterpret_cast<const char*>(table.data()), table.size());
    bytes.push_back(static_cast<char>(mult));
    bytes.push_back('\x1f');
  }
  return bytes;
}

Deck deck(const FiniteFunction& f, int bound) {
  if (f.n() < 2) throw std::invalid_argument("deck requires arity >= 2");
  std::vector<std::vector<std::uint8_t>> tables;
  for (const Couple& I : couples_of(f.n()))
    tables.push_back(canonical_form(identification_minor(f, I), bound).table());
  std::sort(tables.begin(), tables.end());
  Deck d;
  d.k = f.k();
  d.card_arity = f.n() - 1;
  d.labels = f.labels();
  for (auto& t : tables) {
    if (!d.cards.empty() && d.cards.back().first == t)
      ++d.cards.back().second;
    else
      d.cards.emplace_back(std::move(t), 1);
  }
  return d;
}

bool decks_equal(const FiniteFunction& f, const FiniteFunction& g, int bound) {
  if (!f.same_shape(g)) throw std::invalid_argument("decks_equal: shape mismatch");
  return deck(f, bound) == deck(g, bound);
}

bool has_unique_identification_minor(const FiniteFunction& f, int bound) {
  return deck(f, bound).distinct_cards() == 1;
}

bool depends_on(const FiniteFunction& f, int i) {
  if (i < 0 || i >= f.n()) throw std::invalid_argument("position out of range");
  const int k = f.k();
  const std::uint64_t stride = power_checked(k, f.n() - 1 - i);
  const std::uint64_t size = f.table_size();
  // Walk tuples with entry i fixed to 0 and compare across the k settings.
  for (std::uint64_t base = 0; base < size; ++base) {
    if ((base / stride) % k != 0) continue;
    std::uint8_t v0 = f.table()[base];
    for (int c = 1; c < k; ++c)
      if (f.table()[base + stride * c] != v0) return true;
  }
  return false;
}

std::vector<int> essential_positions(const FiniteFunction& f) {
  std::vector<int> result;
  for (int i = 0; i < f.n(); ++i)
    if (depends_on(f, i)) result.push_back(i);
  return result;
}

std::vector<std::uint8_t> diagonal(const FiniteFunction& f) {
  std::vector<std::uint8_t> result(f.k());
  std::vector<int> tuple(f.n());
  for (int a = 0; a < f.k(); ++a) {
    std::fill(tuple.begin(), tuple.end(), a);
    result[a] = f.value(tuple);
  }
  return result;
}

FiniteFunction extend_with_default(const FiniteFunction& f, int k2,
                                   std::vector<std::string> labels2,
                                   const std::string& default_label) {
  if (k2 < f.k()) throw std::invalid_argument("extended domain must contain A");
  std::vector<int> relabel(f.labels().size(), -1);
  int default_index = -1;
  for (std::size_t j = 0; j < labels2.size(); ++j) {
    if (labels2[j] == default_label) default_index = static_cast<int>(j);
    for (std::size_t i = 0; i < f.labels().size(); ++i)
      if (labels2[j] == f.labels()[i]) relabel[i] = static_cast<int>(j);
  }
  if (default_index < 0)
    throw std::invalid_argument("default label is not in the extended label list");
  for (int r : relabel)
    if (r < 0) throw std::invalid_argument("extended label list must contain all labels");

  const int n = f.n();
  const std::uint64_t size = power_checked(k2, n);
  std::vector<std::uint8_t> table(size, static_cast<std::uint8_t>(default_index));
  std::vector<int> tuple(n);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    codec::decode_into(idx, k2, n, tuple.data());
    bool inside = true;
    for (int v : tuple)
      if (v >= f.k()) {
        inside = false;
        break;
      }
    if (inside) table[idx] = static_cast<std::uint8_t>(relabel[f.value(tuple)]);
  }
  return FiniteFunction(k2, n, std::move(labels2), std::move(table));
}

std::vector<Permutation> invariance_group(const FiniteFunction& f, int bound) {
  if (f.n() > bound)
    throw std::invalid_argument("invariance_group: arity exceeds enumeration bound");
  const int n = f.n();
  const std::uint64_t size = f.table_size();
  std::vector<int> digits;
  std::vector<std::uint64_t> pow;
  build_digit_matrix(f.k(), n, size, digits, pow);

  std::vector<Permutation> group;
  for_each_permutation(n, [&](const Permutation& sigma) {
    PermutedView view{f.table(), digits, pow, sigma, n};
    for (std::uint64_t i = 0; i < size; ++i)
      if (view[i] != f.table()[i]) return;
    group.push_back(sigma);
  });
  // Closure self-check (skipped for very large groups).
  if (group.size() * group.size() <= (1u << 20)) {
    for (const auto& a : group) {
      if (!group_contains(group, inverse(a)))
        throw std::logic_error("invariance_group: not closed under inverse");
      for (const auto& b : group)
        if (!group_contains(group, compose(a, b)))
          throw std::logic_error("invariance_group: not closed under composition");
    }
  }
  return group;
}

bool is_totally_symmetric(const FiniteFunction& f) {
  const int n = f.n();
  for (int m = 0; m + 1 < n; ++m)
    if (precompose_perm(f, transposition(n, m, m + 1)) != f) return false;
  return true;
}

}  // namespace minrec

#include "minrec/classes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace minrec {

int Multiset::cardinality() const {
  int total = 0;
  for (int c : counts) total += c;
  return total;
}

Multiset Multiset::sum(const Multiset& other) const {
  if (counts.size() != other.counts.size())
    throw std::invalid_argument("multiset sum: underlying sets differ");
  Multiset result = *this;
  for (std::size_t i = 0; i < counts.size(); ++i) result.counts[i] += other.counts[i];
  return result;
}

Multiset Multiset::difference(const Multiset& other) const {
  if (counts.size() != other.counts.size())
    throw std::invalid_argument("multiset difference: underlying sets differ");
  Multiset result = *this;
  for (std::size_t i = 0; i < counts.size(); ++i)
    result.counts[i] = std::max(counts[i] - other.counts[i], 0);
  return result;
}

std::uint32_t Multiset::underlying_set() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0) mask |= (1u << i);
  return mask;
}

bool is_injective_word(const OfoWord& word, int k) {
  std::uint32_t seen = 0;
  for (int v : word) {
    if (v < 0 || v >= k || (seen & (1u << v))) return false;
    seen |= (1u << v);
  }
  return !word.empty();
}

Multiset msupp(std::span<const int> tuple, int k) {
  return Multiset{msupp_counts(tuple, k)};
}

std::uint32_t supp_mask(std::span<const int> tuple) {
  if (tuple.empty()) throw std::invalid_argument("supp of empty tuple");
  std::uint32_t mask = 0;
  for (int v : tuple) mask |= (1u << v);
  return mask;
}

std::uint32_t oddsupp_mask(std::span<const int> tuple) {
  if (tuple.empty()) throw std::invalid_argument("oddsupp of empty tuple");
  std::uint32_t mask = 0;
  for (int v : tuple) mask ^= (1u << v);
  return mask;
}

std::vector<int> msupp_counts(std::span<const int> tuple, int k) {
  if (tuple.empty()) throw std::invalid_argument("msupp of empty tuple");
  std::vector<int> counts(k, 0);
  for (int v : tuple) ++counts[v];
  return counts;
}

std::vector<int> ofo_word(std::span<const int> tuple) {
  if (tuple.empty()) throw std::invalid_argument("ofo of empty tuple");
  std::vector<int> word;
  std::uint32_t seen = 0;
  for (int v : tuple) {
    if (!(seen & (1u << v))) {
      seen |= (1u << v);
      word.push_back(v);
    }
  }
  return word;
}

std::vector<int> mask_to_sorted_list(std::uint32_t mask) {
  std::vector<int> list;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1u) list.push_back(v);
  return list;
}

std::vector<std::uint32_t> enumerate_supp_range(int k, int n) {
  std::vector<std::uint32_t> masks;
  int max_card = std::min(n, k);
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask)
    if (std::popcount(mask) <= max_card) masks.push_back(mask);
  return masks;
}

std::vector<std::uint32_t> enumerate_oddsupp_range(int k, int n) {
  std::vector<std::uint32_t> masks;
  int max_card = std::min(n, k);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    int card = std::popcount(mask);
    if (card <= max_card && card % 2 == n % 2) masks.push_back(mask);
  }
  return masks;
}

std::vector<std::vector<int>> enumerate_msupp_range(int k, int n) {
  std::vector<std::vector<int>> result;
  std::vector<int> counts(k, 0);
  // compositions of n into k nonnegative parts, lexicographic
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == k - 1) {
      counts[pos] = remaining;
      result.push_back(counts);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[pos] = c;
      self(self, pos + 1, remaining - c);
    }
  };
  rec(rec, 0, n);
  return result;
}

std::vector<std::vector<int>> enumerate_ofo_range(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("enumerate_ofo_range: k, n >= 1");
  std::vector<std::vector<int>> result;
  std::vector<int> word;
  int max_len = std::min(n, k);
  auto rec = [&](auto&& self) -> void {
    if (!word.empty()) result.push_back(word);
    if (static_cast<int>(word.size()) == max_len) return;
    for (int v = 0; v < k; ++v) {
      if (std::find(word.begin(), word.end(), v) != word.end()) continue;
      word.push_back(v);
      self(self);
      word.pop_back();
    }
  };
  rec(rec);
  std::stable_sort(result.begin(), result.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return result;
}

std::vector<std::pair<int, std::uint32_t>> enumerate_pr_supp_range(int k, int n) {
  std::vector<std::pair<int, std::uint32_t>> result;
  for (std::uint32_t mask : enumerate_supp_range(k, n))
    for (int x = 0; x < k; ++x)
      if (mask & (1u << x)) result.emplace_back(x, mask);
  std::sort(result.begin(), result.end());
  return result;
}

std::string to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::supp: return "supp";
    case ClassKind::oddsupp: return "oddsupp";
    case ClassKind::msupp: return "msupp";
    case ClassKind::ofo: return "ofo";
    case ClassKind::weakly_ofo: return "weakly-ofo";
    case ClassKind::pr_supp: return "pr-supp";
  }
  return "?";
}

std::optional<ClassKind> class_kind_from_string(const std::string& name) {
  if (name == "supp") return ClassKind::supp;
  if (name == "oddsupp") return ClassKind::oddsupp;
  if (name == "msupp" || name == "totally-symmetric") return ClassKind::msupp;
  if (name == "ofo") return ClassKind::ofo;
  if (name == "weakly-ofo") return ClassKind::weakly_ofo;
  if (name == "pr-supp") return ClassKind::pr_supp;
  return std::nullopt;
}

namespace {

using KeyFn = std::vector<int> (*)(std::span<const int>, int);

std::vector<int> supp_key(std::span<const int> t, int) {
  return mask_to_sorted_list(supp_mask(t));
}
std::vector<int> oddsupp_key(std::span<const int> t, int) {
  return mask_to_sorted_list(oddsupp_mask(t));
}
std::vector<int> msupp_key(std::span<const int> t, int k) { return msupp_counts(t, k); }
std::vector<int> ofo_key(std::span<const int> t, int) { return ofo_word(t); }

KeyFn key_fn_for(ClassKind kind) {
  switch (kind) {
    case ClassKind::supp: return supp_key;
    case ClassKind::oddsupp: return oddsupp_key;
    case ClassKind::msupp: return msupp_key;
    case ClassKind::ofo: return ofo_key;
    default: throw std::logic_error("no direct key function for this kind");
  }
}

std::vector<std::vector<int>> key_range_for(ClassKind kind, int k, int n) {
  std::vector<std::vector<int>> range;
  switch (kind) {
    case ClassKind::supp:
      for (auto mask : enumerate_supp_range(k, n)) range.push_back(mask_to_sorted_list(mask));
      break;
    case ClassKind::oddsupp:
      for (auto mask : enumerate_oddsupp_range(k, n)) range.push_back(mask_to_sorted_list(mask));
      break;
    case ClassKind::msupp:
      range = enumerate_msupp_range(k, n);
      break;
    case ClassKind::ofo:
      range = enumerate_ofo_range(k, n);
      break;
    default:
      throw std::logic_error("no key range for this kind");
  }
  return range;
}

FiniteFunction build_through_key(ClassKind kind, int k, int n,
                                 std::vector<std::string> labels,
                                 const std::map<std::vector<int>, int>& inner) {
  KeyFn key = key_fn_for(kind);
  // Reject keys outside the reachable range.
  {
    auto range = key_range_for(kind, k, n);
    for (const auto& [key_value, label] : inner) {
      if (std::find(range.begin(), range.end(), key_value) == range.end())
        throw std::invalid_argument("from_" + to_string(kind) +
                                    ": key outside the reachable range");
      if (label < 0 || label >= static_cast<int>(labels.size()))
        throw std::invalid_argument("from_" + to_string(kind) + ": label index out of range");
    }
  }
  const std::uint64_t size = power_checked(k, n);
  std::vector<std::uint8_t> table(size);
  std::vector<int> tuple(n);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    codec::decode_into(idx, k, n, tuple.data());
    auto it = inner.find(key(tuple, k));
    if (it == inner.end())
      throw std::invalid_argument("from_" + to_string(kind) + ": missing key");
    table[idx] = static_cast<std::uint8_t>(it->second);
  }
  return FiniteFunction(k, n, std::move(labels), std::move(table));
}

}  // namespace

FiniteFunction from_supp(int k, int n, std::vector<std::string> labels,
                         const std::map<std::vector<int>, int>& inner) {
  return build_through_key(ClassKind::supp, k, n, std::move(labels), inner);
}

FiniteFunction from_oddsupp(int k, int n, std::vector<std::string> labels,
                            const std::map<std::vector<int>, int>& inner) {
  return build_through_key(ClassKind::oddsupp, k, n, std::move(labels), inner);
}

FiniteFunction from_msupp(int k, int n, std::vector<std::string> labels,
                          const std::map<std::vector<int>, int>& inner) {
  return build_through_key(ClassKind::msupp, k, n, std::move(labels), inner);
}

FiniteFunction from_ofo(int k, int n, std::vector<std::string> labels,
                        const std::map<std::vector<int>, int>& inner) {
  return build_through_key(ClassKind::ofo, k, n, std::move(labels), inner);
}

FiniteFunction from_pr_supp(int position, int k, int n, std::vector<std::string> labels,
                            const std::map<std::vector<int>, int>& inner) {
  if (position < 0 || position >= n)
    throw std::invalid_argument("from_pr_supp: position out of range");
  {
    auto range = enumerate_pr_supp_range(k, n);
    for (const auto& [key_value, label] : inner) {
      if (key_value.size() < 2)
        throw std::invalid_argument("from_pr_supp: malformed key");
      int x = key_value[0];
      std::vector<int> set(key_value.begin() + 1, key_value.end());
      std::uint32_t mask = 0;
      for (int v : set) {
        if (v < 0 || v >= k) throw std::invalid_argument("from_pr_supp: key outside the reachable range");
        mask |= (1u << v);
      }
      if (std::find(range.begin(), range.end(), std::pair<int, std::uint32_t>(x, mask)) ==
          range.end())
        throw std::invalid_argument("from_pr_supp: key outside the reachable range");
      if (label < 0 || label >= static_cast<int>(labels.size()))
        throw std::invalid_argument("from_pr_supp: label index out of range");
    }
  }
  const std::uint64_t size = power_checked(k, n);
  std::vector<std::uint8_t> table(size);
  std::vector<int> tuple(n);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    codec::decode_into(idx, k, n, tuple.data());
    std::vector<int> key = mask_to_sorted_list(supp_mask(tuple));
    key.insert(key.begin(), tuple[position]);
    auto it = inner.find(key);
    if (it == inner.end()) throw std::invalid_argument("from_pr-supp: missing key");
    table[idx] = static_cast<std::uint8_t>(it->second);
  }
  return FiniteFunction(k, n, std::move(labels), std::move(table));
}

FiniteFunction rebuild(const ClassWitness& w) {
  switch (w.kind) {
    case ClassKind::supp:
    case ClassKind::oddsupp:
    case ClassKind::msupp:
    case ClassKind::ofo:
      return build_through_key(w.kind, w.k, w.n, w.labels, w.inner);
    case ClassKind::pr_supp:
      if (!w.position) throw std::invalid_argument("pr-supp witness lacks position");
      return from_pr_supp(*w.position, w.k, w.n, w.labels, w.inner);
    case ClassKind::weakly_ofo: {
      if (!w.sigma) throw std::invalid_argument("weakly-ofo witness lacks sigma");
      // f(a) = inner[ofo(a o sigma)]
      FiniteFunction base = from_ofo(w.k, w.n, w.labels, w.inner);
      return precompose_perm(base, *w.sigma);
    }
  }
  throw std::logic_error("unknown witness kind");
}

namespace {

std::optional<ClassWitness> recognize_by_key(const FiniteFunction& f, ClassKind kind) {
  KeyFn key = key_fn_for(kind);
  ClassWitness w;
  w.kind = kind;
  w.k = f.k();
  w.n = f.n();
  w.labels = f.labels();
  std::vector<int> tuple(f.n());
  for (std::uint64_t idx = 0; idx < f.table_size(); ++idx) {
    codec::decode_into(idx, f.k(), f.n(), tuple.data());
    auto [it, inserted] = w.inner.emplace(key(tuple, f.k()), f.table()[idx]);
    if (!inserted && it->second != f.table()[idx]) return std::nullopt;
  }
  return w;
}

std::optional<ClassWitness> recognize_pr_supp(const FiniteFunction& f) {
  // Smallest coordinate wins when several are valid.
  for (int i = 0; i < f.n(); ++i) {
    ClassWitness w;
    w.kind = ClassKind::pr_supp;
    w.k = f.k();
    w.n = f.n();
    w.labels = f.labels();
    w.position = i;
    bool ok = true;
    std::vector<int> tuple(f.n());
    for (std::uint64_t idx = 0; idx < f.table_size(); ++idx) {
      codec::decode_into(idx, f.k(), f.n(), tuple.data());
      std::vector<int> key = mask_to_sorted_list(supp_mask(tuple));
      key.insert(key.begin(), tuple[i]);
      auto [it, inserted] = w.inner.emplace(std::move(key), f.table()[idx]);
      if (!inserted && it->second != f.table()[idx]) {
        ok = false;
        break;
      }
    }
    if (ok) return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ClassWitness> recognize(const FiniteFunction& f, ClassKind kind, int bound) {
  switch (kind) {
    case ClassKind::supp:
    case ClassKind::oddsupp:
    case ClassKind::msupp:
    case ClassKind::ofo:
      return recognize_by_key(f, kind);
    case ClassKind::pr_supp:
      return recognize_pr_supp(f);
    case ClassKind::weakly_ofo: {
      if (f.n() > bound)
        throw std::invalid_argument("recognize weakly-ofo: arity exceeds enumeration bound");
      std::optional<ClassWitness> found;
      for_each_permutation(f.n(), [&](const Permutation& sigma) {
        if (found) return;
        auto w = recognize_by_key(precompose_perm(f, sigma), ClassKind::ofo);
        if (w) {
          w->kind = ClassKind::weakly_ofo;
          w->sigma = inverse(sigma);
          found = std::move(w);
        }
      });
      return found;
    }
  }
  throw std::logic_error("unknown class kind");
}

bool is_m_set_transitive(const FiniteFunction& f, int m, int bound) {
  if (m < 1 || m > f.n()) throw std::invalid_argument("is_m_set_transitive: bad m");
  auto group = invariance_group(f, bound);
  // Orbit of the base m-subset under the group action on m-subsets.
  std::vector<std::uint32_t> orbit;
  std::uint32_t base = (1u << m) - 1;
  orbit.push_back(base);
  std::vector<std::uint32_t> work{base};
  auto seen = [&](std::uint32_t s) {
    return std::find(orbit.begin(), orbit.end(), s) != orbit.end();
  };
  while (!work.empty()) {
    std::uint32_t s = work.back();
    work.pop_back();
    for (const auto& sigma : group) {
      std::uint32_t image = 0;
      for (int i = 0; i < f.n(); ++i)
        if (s & (1u << i)) image |= (1u << sigma(i));
      if (!seen(image)) {
        orbit.push_back(image);
        work.push_back(image);
      }
    }
  }
  std::uint64_t subsets = 1;  // C(n, m)
  for (int i = 0; i < m; ++i) subsets = subsets * (f.n() - i) / (i + 1);
  return orbit.size() == subsets;
}

PartialOrder PartialOrder::chain(int size) {
  PartialOrder order;
  order.size = size;
  order.le.assign(static_cast<std::size_t>(size) * size, false);
  for (int a = 0; a < size; ++a)
    for (int b = a; b < size; ++b) order.le[static_cast<std::size_t>(a) * size + b] = true;
  return order;
}

PartialOrder PartialOrder::from_pairs(int size,
                                      const std::vector<std::pair<int, int>>& pairs) {
  PartialOrder order;
  order.size = size;
  order.le.assign(static_cast<std::size_t>(size) * size, false);
  for (int a = 0; a < size; ++a) order.le[static_cast<std::size_t>(a) * size + a] = true;
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= size || b >= size)
      throw std::invalid_argument("partial order pair out of range");
    order.le[static_cast<std::size_t>(a) * size + b] = true;
  }
  // transitive closure
  for (int m = 0; m < size; ++m)
    for (int a = 0; a < size; ++a)
      if (order.leq(a, m))
        for (int b = 0; b < size; ++b)
          if (order.leq(m, b)) order.le[static_cast<std::size_t>(a) * size + b] = true;
  order.validate();
  return order;
}

void PartialOrder::validate() const {
  for (int a = 0; a < size; ++a)
    if (!leq(a, a)) throw std::invalid_argument("order relation is not reflexive");
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (a != b && leq(a, b) && leq(b, a))
        throw std::invalid_argument("order relation is not antisymmetric");
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (leq(a, b))
        for (int c = 0; c < size; ++c)
          if (leq(b, c) && !leq(a, c))
            throw std::invalid_argument("order relation is not transitive");
}

bool is_order_preserving(const FiniteFunction& f, const PartialOrder& le_domain,
                         const PartialOrder& le_labels) {
  if (le_domain.size != f.k() || le_labels.size != static_cast<int>(f.labels().size()))
    throw std::invalid_argument("is_order_preserving: order size mismatch");
  le_domain.validate();
  le_labels.validate();
  // Single-coordinate increments suffice by transitivity.
  const int k = f.k();
  std::vector<int> tuple(f.n());
  for (std::uint64_t idx = 0; idx < f.table_size(); ++idx) {
    codec::decode_into(idx, k, f.n(), tuple.data());
    std::uint64_t stride = 1;
    for (int i = f.n() - 1; i >= 0; --i) {
      int a = tuple[i];
      for (int c = 0; c < k; ++c) {
        if (c == a || !le_domain.leq(a, c)) continue;
        std::uint64_t jdx = idx - stride * static_cast<std::uint64_t>(a) +
                            stride * static_cast<std::uint64_t>(c);
        if (!le_labels.leq(f.table()[idx], f.table()[jdx])) return false;
      }
      stride *= k;
    }
  }
  return true;
}

bool willard_supp_criterion(const FiniteFunction& f) {
  if (f.n() <= 2) throw std::invalid_argument("willard_supp_criterion requires n > 2");
  if (!is_totally_symmetric(f)) return false;
  if (static_cast<int>(essential_positions(f).size()) != f.n()) return false;
  for (const Couple& I : couples_of(f.n())) {
    FiniteFunction minor = identification_minor(f, I);
    if (static_cast<int>(essential_positions(minor).size()) == minor.n() &&
        is_totally_symmetric(minor))
      return true;
  }
  return false;
}

bool willard_oddsupp_criterion(const FiniteFunction& f) {
  if (f.n() <= std::max(f.k(), 3))
    throw std::invalid_argument("willard_oddsupp_criterion requires n > max(k, 3)");
  if (static_cast<int>(essential_positions(f).size()) != f.n()) return false;
  for (const Couple& I : couples_of(f.n())) {
    FiniteFunction minor = identification_minor(f, I);
    if (static_cast<int>(essential_positions(minor).size()) == minor.n()) return false;
  }
  return true;
}

}  // namespace minrec

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minrec/fn.hpp"
#include "minrec/perm.hpp"

namespace minrec {

/// A finite multiset over A = {0..k-1}, as a multiplicity vector.
struct Multiset {
  std::vector<int> counts;

  int cardinality() const;
  /// Multiset sum (pointwise +).
  Multiset sum(const Multiset& other) const;
  /// Multiset difference (pointwise -, truncated at 0).
  Multiset difference(const Multiset& other) const;
  /// set(S): the elements of nonzero multiplicity, as a bitmask.
  std::uint32_t underlying_set() const;

  auto operator<=>(const Multiset&) const = default;
};

/// An injective word over A = {0..k-1}; the order of first occurrence of a
/// tuple's entries.
using OfoWord = std::vector<int>;

bool is_injective_word(const OfoWord& word, int k);

// Tuple invariants.  Entries are 0-based domain elements; sets are bitmasks
// over {0..k-1}.
std::uint32_t supp_mask(std::span<const int> tuple);
std::uint32_t oddsupp_mask(std::span<const int> tuple);
std::vector<int> msupp_counts(std::span<const int> tuple, int k);
Multiset msupp(std::span<const int> tuple, int k);
/// Entries of the tuple in order of first occurrence.
OfoWord ofo_word(std::span<const int> tuple);

std::vector<int> mask_to_sorted_list(std::uint32_t mask);

// Reachable key spaces for n-ary functions over {1..k}, in deterministic
// order.
std::vector<std::uint32_t> enumerate_supp_range(int k, int n);
/// Sets of cardinality n, n-2, n-4, ... (the range of oddsupp on A^n).
std::vector<std::uint32_t> enumerate_oddsupp_range(int k, int n);
/// Count vectors of length k summing to n.
std::vector<std::vector<int>> enumerate_msupp_range(int k, int n);
/// All injective words of length 1..min(n,k), ordered by length then
/// lexicographically; size = sum of falling factorials.
std::vector<std::vector<int>> enumerate_ofo_range(int k, int n);
/// Pairs (x, S) with x in S, |S| <= min(n,k).
std::vector<std::pair<int, std::uint32_t>> enumerate_pr_supp_range(int k, int n);

enum class ClassKind { supp, oddsupp, msupp, ofo, weakly_ofo, pr_supp };

std::string to_string(ClassKind kind);
std::optional<ClassKind> class_kind_from_string(const std::string& name);

/// Witness that f factors through an invariant.  `inner` maps encoded keys
/// to label indices:
///   supp / oddsupp : sorted element list
///   msupp          : count vector of length k
///   ofo            : the word itself
///   pr_supp        : {x, s1, s2, ...} (coordinate value, then sorted set)
/// For weakly_ofo, `sigma` satisfies f(a) = inner[ofo(a o sigma)]; for
/// pr_supp, `position` is the chosen coordinate (0-based).
struct ClassWitness {
  ClassKind kind = ClassKind::supp;
  int k = 0;
  int n = 0;
  std::vector<std::string> labels;
  std::map<std::vector<int>, int> inner;
  std::optional<int> position;
  std::optional<Permutation> sigma;
};

// Constructors.  `inner` must be total on the reachable key space; keys
// outside the range are rejected.
FiniteFunction from_supp(int k, int n, std::vector<std::string> labels,
                         const std::map<std::vector<int>, int>& inner);
FiniteFunction from_oddsupp(int k, int n, std::vector<std::string> labels,
                            const std::map<std::vector<int>, int>& inner);
FiniteFunction from_msupp(int k, int n, std::vector<std::string> labels,
                          const std::map<std::vector<int>, int>& inner);
FiniteFunction from_ofo(int k, int n, std::vector<std::string> labels,
                        const std::map<std::vector<int>, int>& inner);
FiniteFunction from_pr_supp(int position, int k, int n, std::vector<std::string> labels,
                            const std::map<std::vector<int>, int>& inner);

/// Rebuilds the function a witness describes; recognize/rebuild round-trips.
FiniteFunction rebuild(const ClassWitness& witness);

/// Partition-refinement recognizer; returns a witness iff f factors as
/// claimed.  weakly_ofo tries all sigma in S_n and needs n <= bound.
std::optional<ClassWitness> recognize(const FiniteFunction& f, ClassKind kind,
                                      int bound = kDefaultEnumBound);

/// True iff Inv f acts transitively on m-element position sets.
bool is_m_set_transitive(const FiniteFunction& f, int m, int bound = kDefaultEnumBound);

/// Reflexive-antisymmetric-transitive relation on {0..size-1}.
struct PartialOrder {
  int size = 0;
  std::vector<bool> le;  // le[a*size+b] means a <= b

  static PartialOrder chain(int size);
  static PartialOrder from_pairs(int size, const std::vector<std::pair<int, int>>& pairs);

  bool leq(int a, int b) const { return le[static_cast<std::size_t>(a) * size + b]; }
  void validate() const;  // throws std::invalid_argument
};

/// Monotone on all componentwise-comparable pairs.
bool is_order_preserving(const FiniteFunction& f, const PartialOrder& le_domain,
                         const PartialOrder& le_labels);

/// Hypothesis of Willard's supp criterion: f totally symmetric, essentially
/// n-ary, and some f_I essentially (n-1)-ary and totally symmetric.
/// Requires n > 2.
bool willard_supp_criterion(const FiniteFunction& f);

/// Hypothesis of Willard's oddsupp criterion: f essentially n-ary and no
/// identification minor depends on all of its arguments.  Requires
/// n > max(k, 3).
bool willard_oddsupp_criterion(const FiniteFunction& f);

}  // namespace minrec

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "minrec/perm.hpp"

namespace minrec {

inline constexpr int kDefaultEnumBound = 8;

/// base^exp with an overflow check.
std::uint64_t power_checked(std::uint64_t base, int exp);

/// "a", "b", ..., "z", "l27", ... for enumerated codomains.
std::vector<std::string> default_labels(int count);

namespace codec {

/// Row-major index of a 0-based tuple; the first entry is most significant.
inline std::uint64_t encode(std::span<const int> tuple, int k) {
  std::uint64_t index = 0;
  for (int v : tuple) index = index * static_cast<std::uint64_t>(k) + v;
  return index;
}

/// Decodes into out[0..n-1], 0-based entries.
inline void decode_into(std::uint64_t index, int k, int n, int* out) {
  for (int i = n - 1; i >= 0; --i) {
    out[i] = static_cast<int>(index % k);
    index /= k;
  }
}

inline std::vector<int> decode(std::uint64_t index, int k, int n) {
  std::vector<int> tuple(n);
  decode_into(index, k, n, tuple.data());
  return tuple;
}

}  // namespace codec

/// Bijective row-major encoding of a 1-based tuple over {1..k}; the first
/// entry is the most significant digit.
std::uint64_t tuple_index(std::span<const int> tuple_one_based, int k);

/// Inverse of tuple_index; returns a 1-based tuple.
std::vector<int> index_tuple(std::uint64_t index, int k, int n);

/// A dense table for f: A^n -> B with A = {1..k}.  Codomain labels are
/// opaque strings; the table stores indices into the label list.  Immutable
/// after construction.
class FiniteFunction {
public:
  FiniteFunction(int k, int n, std::vector<std::string> labels,
                 std::vector<std::uint8_t> table);

  static FiniteFunction constant(int k, int n, std::vector<std::string> labels,
                                 int label_index);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::uint8_t>& table() const { return table_; }
  std::uint64_t table_size() const { return table_.size(); }

  /// Value at a 0-based tuple.
  std::uint8_t value(std::span<const int> tuple) const {
    return table_[codec::encode(tuple, k_)];
  }
  const std::string& label_of(int label_index) const { return labels_[label_index]; }

  bool same_shape(const FiniteFunction& other) const {
    return k_ == other.k_ && n_ == other.n_ && labels_ == other.labels_;
  }

  bool operator==(const FiniteFunction&) const = default;

private:
  int k_;
  int n_;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> table_;
};

/// delta_I as a total map {0..n-1} -> {0..n-2}: i for i < max I, min I at
/// max I, i-1 beyond.
std::vector<int> delta_map(const Couple& I, int n);

/// result(a) = g(a o sigma) where sigma: {0..m-1} -> {0..n-1} need not be
/// injective; m = g.n().
FiniteFunction form_minor(const FiniteFunction& g, std::span<const int> sigma, int n);

/// f_I(a) = f(a o delta_I); arity drops by one.
FiniteFunction identification_minor(const FiniteFunction& f, const Couple& I);

/// result(a) = f(a o sigma) for a permutation of the argument positions.
FiniteFunction precompose_perm(const FiniteFunction& f, const Permutation& sigma);

/// Lexicographically least table among all argument permutations of f.
/// Idempotent; equal for equivalent inputs.
FiniteFunction canonical_form(const FiniteFunction& f, int bound = kDefaultEnumBound);

/// Equal up to permutation of arguments.  Throws on shape mismatch.
bool is_equivalent(const FiniteFunction& f, const FiniteFunction& g,
                   int bound = kDefaultEnumBound);

/// Multiset of canonical identification-minor tables; total multiplicity
/// n(n-1)/2.  Stored as a sorted run-length list for O(size) equality.
struct Deck {
  int k = 0;
  int card_arity = 0;
  std::vector<std::string> labels;
  std::vector<std::pair<std::vector<std::uint8_t>, int>> cards;

  int distinct_cards() const { return static_cast<int>(cards.size()); }
  int total_multiplicity() const;
  /// Deterministic byte string; equal decks have equal fingerprints and
  /// conversely (the fingerprint embeds the full card list).
  std::string fingerprint() const;

  bool operator==(const Deck&) const = default;
};

Deck deck(const FiniteFunction& f, int bound = kDefaultEnumBound);

bool decks_equal(const FiniteFunction& f, const FiniteFunction& g,
                 int bound = kDefaultEnumBound);

inline bool is_reconstruction_of(const FiniteFunction& g, const FiniteFunction& f,
                                 int bound = kDefaultEnumBound) {
  return decks_equal(f, g, bound);
}

/// True iff all identification minors are equivalent (deck has one distinct
/// card).
bool has_unique_identification_minor(const FiniteFunction& f,
                                     int bound = kDefaultEnumBound);

/// True iff two tuples differing only at position i (0-based) give
/// different values.
bool depends_on(const FiniteFunction& f, int i);

/// 0-based positions f depends on.
std::vector<int> essential_positions(const FiniteFunction& f);

/// a |-> f(a,...,a) as label indices, length k.
std::vector<std::uint8_t> diagonal(const FiniteFunction& f);

/// Extension to a larger domain {1..k2} and label list; value
/// default_label off A^n.  Every label of f must appear in labels2.
FiniteFunction extend_with_default(const FiniteFunction& f, int k2,
                                   std::vector<std::string> labels2,
                                   const std::string& default_label);

/// {sigma : f = f o sigma}, sorted; the invariance group Inv f.
std::vector<Permutation> invariance_group(const FiniteFunction& f,
                                          int bound = kDefaultEnumBound);

bool is_totally_symmetric(const FiniteFunction& f);

}  // namespace minrec

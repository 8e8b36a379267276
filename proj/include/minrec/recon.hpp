#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minrec/fn.hpp"

namespace minrec {

inline constexpr std::uint64_t kFunctionEnumerationBudget = 1ull << 24;

/// Calls fn for every n-ary function over {1..k} with the given codomain
/// size, in ascending table order.  Labels are default_labels(label_count).
void enumerate_functions(int k, int n, int label_count,
                         const std::function<void(const FiniteFunction&)>& fn,
                         std::uint64_t budget = kFunctionEnumerationBudget);

/// All enumerated functions bucketed by deck fingerprint; bucket members
/// are canonical forms, deduplicated per equivalence class.
struct DeckIndex {
  int k = 0;
  int n = 0;
  int label_count = 0;
  std::vector<std::string> labels;
  std::map<std::string, std::vector<std::vector<std::uint8_t>>> buckets;

  std::uint64_t function_count() const;
  std::size_t class_count() const;
  const std::vector<std::vector<std::uint8_t>>* bucket_of(const Deck& d) const;
};

DeckIndex build_deck_index(int k, int n, int label_count,
                           std::uint64_t budget = kFunctionEnumerationBudget,
                           int threads = 1);

/// True iff f's bucket holds exactly one equivalence class.  f must match
/// the index shape (k, n, labels).
bool is_reconstructible_exhaustive(const FiniteFunction& f, const DeckIndex& index);
bool is_reconstructible_exhaustive(const FiniteFunction& f, int label_count,
                                   std::uint64_t budget = kFunctionEnumerationBudget);

struct WeakReconstructibilityResult {
  bool ok = true;
  std::optional<std::pair<FiniteFunction, FiniteFunction>> counterexample;
};

/// True iff no two nonequivalent members share a deck; on failure reports
/// the first offending pair in input order.
WeakReconstructibilityResult class_weak_reconstructibility(
    const std::vector<FiniteFunction>& members);

/// True iff every bucket containing a member consists only of members.
/// The predicate must be invariant under equivalence (it is evaluated on
/// canonical representatives).
bool class_recognizability(const std::function<bool(const FiniteFunction&)>& predicate,
                           const DeckIndex& index);

struct SweepBucketSample {
  std::size_t class_count = 0;
  int deck_cards = 0;
  std::vector<std::string> representatives;  // table entries as labels
};

struct SweepReport {
  int k = 0;
  int n = 0;
  int label_count = 0;
  std::uint64_t function_count = 0;
  std::size_t bucket_count = 0;
  std::size_t class_count = 0;
  std::size_t nonreconstructible_bucket_count = 0;
  std::size_t nonreconstructible_class_count = 0;
  std::vector<SweepBucketSample> samples;  // nonreconstructible buckets, bounded
};

SweepReport recon_sweep(int k, int n, int label_count,
                        std::uint64_t budget = kFunctionEnumerationBudget,
                        int threads = 1, std::size_t max_samples = 10);

}  // namespace minrec

#include "minrec/recon.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace minrec {

namespace {

std::uint64_t table_count_checked(int k, int n, int label_count, std::uint64_t budget) {
  if (label_count < 1) throw std::invalid_argument("label count must be >= 1");
  const std::uint64_t size = power_checked(k, n);
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < size; ++i) {
    if (count > budget / label_count)
      throw std::invalid_argument("function enumeration budget exceeded");
    count *= label_count;
  }
  return count;
}

std::vector<std::uint8_t> table_of_index(std::uint64_t function_index, std::uint64_t size,
                                         int label_count) {
  std::vector<std::uint8_t> table(size);
  for (std::uint64_t pos = size; pos-- > 0;) {
    table[pos] = static_cast<std::uint8_t>(function_index % label_count);
    function_index /= label_count;
  }
  return table;
}

}  // namespace

void enumerate_functions(int k, int n, int label_count,
                         const std::function<void(const FiniteFunction&)>& fn,
                         std::uint64_t budget) {
  const std::uint64_t count = table_count_checked(k, n, label_count, budget);
  const std::uint64_t size = power_checked(k, n);
  const auto labels = default_labels(label_count);
  for (std::uint64_t index = 0; index < count; ++index)
    fn(FiniteFunction(k, n, labels, table_of_index(index, size, label_count)));
}

std::uint64_t DeckIndex::function_count() const {
  return power_checked(label_count, static_cast<int>(power_checked(k, n)));
}

std::size_t DeckIndex::class_count() const {
  std::size_t total = 0;
  for (const auto& [fp, members] : buckets) total += members.size();
  return total;
}

const std::vector<std::vector<std::uint8_t>>* DeckIndex::bucket_of(const Deck& d) const {
  auto it = buckets.find(d.fingerprint());
  return it == buckets.end() ? nullptr : &it->second;
}

DeckIndex build_deck_index(int k, int n, int label_count, std::uint64_t budget,
                           int threads) {
  if (n < 2) throw std::invalid_argument("build_deck_index requires n >= 2");
  const std::uint64_t count = table_count_checked(k, n, label_count, budget);
  const std::uint64_t size = power_checked(k, n);
  const auto labels = default_labels(label_count);

  using LocalMap = std::map<std::string, std::set<std::vector<std::uint8_t>>>;
  auto process_range = [&](std::uint64_t begin, std::uint64_t end, LocalMap& out) {
    for (std::uint64_t index = begin; index < end; ++index) {
      FiniteFunction f(k, n, labels, table_of_index(index, size, label_count));
      out[deck(f).fingerprint()].insert(canonical_form(f).table());
    }
  };

  LocalMap merged;
  if (threads <= 1) {
    process_range(0, count, merged);
  } else {
    std::vector<LocalMap> locals(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      std::uint64_t begin = count * t / threads;
      std::uint64_t end = count * (t + 1) / threads;
      pool.emplace_back(
          [&, begin, end, t] { process_range(begin, end, locals[t]); });
    }
    for (auto& th : pool) th.join();
    for (auto& local : locals)
      for (auto& [fp, members] : local) merged[fp].insert(members.begin(), members.end());
  }

  DeckIndex index;
  index.k = k;
  index.n = n;
  index.label_count = label_count;
  index.labels = labels;
  for (auto& [fp, members] : merged)
    index.buckets.emplace(fp,
                          std::vector<std::vector<std::uint8_t>>(members.begin(), members.end()));
  return index;
}

bool is_reconstructible_exhaustive(const FiniteFunction& f, const DeckIndex& index) {
  if (f.k() != index.k || f.n() != index.n || f.labels() != index.labels)
    throw std::invalid_argument("is_reconstructible_exhaustive: shape mismatch with index");
  const auto* bucket = index.bucket_of(deck(f));
  if (!bucket) throw std::logic_error("function missing from its own deck index");
  return bucket->size() == 1;
}

bool is_reconstructible_exhaustive(const FiniteFunction& f, int label_count,
                                   std::uint64_t budget) {
  return is_reconstructible_exhaustive(
      f, build_deck_index(f.k(), f.n(), label_count, budget));
}

WeakReconstructibilityResult class_weak_reconstructibility(
    const std::vector<FiniteFunction>& members) {
  WeakReconstructibilityResult result;
  if (members.empty()) return result;
  for (const auto& m : members)
    if (!m.same_shape(members.front()))
      throw std::invalid_argument("class_weak_reconstructibility: shape mismatch");

  std::map<std::string, std::vector<std::size_t>> by_deck;
  for (std::size_t i = 0; i < members.size(); ++i)
    by_deck[deck(members[i]).fingerprint()].push_back(i);
  for (const auto& [fp, group] : by_deck) {
    for (std::size_t a = 0; a + 1 < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b)
        if (!is_equivalent(members[group[a]], members[group[b]])) {
          result.ok = false;
          result.counterexample = {members[group[a]], members[group[b]]};
          return result;
        }
  }
  return result;
}

bool class_recognizability(const std::function<bool(const FiniteFunction&)>& predicate,
                           const DeckIndex& index) {
  for (const auto& [fp, bucket] : index.buckets) {
    bool any = false, all = true;
    for (const auto& table : bucket) {
      FiniteFunction member(index.k, index.n, index.labels, table);
      if (predicate(member))
        any = true;
      else
        all = false;
    }
    if (any && !all) return false;
  }
  return true;
}

SweepReport recon_sweep(int k, int n, int label_count, std::uint64_t budget, int threads,
                        std::size_t max_samples) {
  DeckIndex index = build_deck_index(k, n, label_count, budget, threads);
  SweepReport report;
  report.k = k;
  report.n = n;
  report.label_count = label_count;
  report.function_count = index.function_count();
  report.bucket_count = index.buckets.size();
  report.class_count = index.class_count();
  for (const auto& [fp, bucket] : index.buckets) {
    if (bucket.size() <= 1) continue;
    ++report.nonreconstructible_bucket_count;
    report.nonreconstructible_class_count += bucket.size();
    if (report.samples.size() < max_samples) {
      SweepBucketSample sample;
      sample.class_count = bucket.size();
      FiniteFunction representative(index.k, index.n, index.labels, bucket.front());
      sample.deck_cards = deck(representative).distinct_cards();
      for (std::size_t i = 0; i < bucket.size() && i < 4; ++i) {
        std::ostringstream row;
        for (std::size_t pos = 0; pos < bucket[i].size(); ++pos) {
          if (pos) row << ' ';
          row << index.labels[bucket[i][pos]];
        }
        sample.representatives.push_back(row.str());
      }
      report.samples.push_back(std::move(sample));
    }
  }
  return report;
}

}  // namespace minrec

#pragma once

#include <random>
#include <vector>

#include "minrec/fn.hpp"
#include "minrec/perm.hpp"

namespace testutil {

/// Permutation from 1-based one-line entries.
inline minrec::Permutation perm1(std::vector<int> one_based) {
  for (int& v : one_based) --v;
  return minrec::Permutation(std::move(one_based));
}

inline minrec::Permutation random_perm(std::mt19937_64& rng, int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return minrec::Permutation(std::move(images));
}

inline minrec::Couple random_couple(std::mt19937_64& rng, int n) {
  int a = static_cast<int>(rng() % n);
  int b = static_cast<int>(rng() % (n - 1));
  if (b >= a) ++b;
  return minrec::Couple(std::min(a, b), std::max(a, b));
}

inline minrec::FiniteFunction random_fn(std::mt19937_64& rng, int k, int n,
                                        int label_count) {
  std::vector<std::uint8_t> table(minrec::power_checked(k, n));
  for (auto& v : table) v = static_cast<std::uint8_t>(rng() % label_count);
  return minrec::FiniteFunction(k, n, minrec::default_labels(label_count),
                                std::move(table));
}

/// Table built by evaluating fn on every 0-based tuple.
template <typename Fn>
minrec::FiniteFunction fn_of(int k, int n, std::vector<std::string> labels, Fn&& fn) {
  std::vector<std::uint8_t> table(minrec::power_checked(k, n));
  std::vector<int> tuple(n);
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    minrec::codec::decode_into(idx, k, n, tuple.data());
    table[idx] = static_cast<std::uint8_t>(fn(tuple));
  }
  return minrec::FiniteFunction(k, n, std::move(labels), std::move(table));
}

/// The ternary Boolean x1x2 + x2x3 (mod 2) with labels "0", "1".
inline minrec::FiniteFunction boolean_quadratic() {
  return fn_of(2, 3, {"0", "1"},
               [](const std::vector<int>& x) { return (x[0] * x[1] + x[1] * x[2]) % 2; });
}

}  // namespace testutil

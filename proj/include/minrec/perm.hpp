#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace minrec {

/// Positions and domain elements are 0-based in memory; every text form
/// (one-line, cycles, JSON) is 1-based.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// One-line text form "(a1,a2,...,am)", 1-based entries.
  static Permutation from_oneline_text(const std::string& text);
  /// Cycle text form "(c1 c2 ...)(...)" on {1..m}; omitted points are fixed.
  static Permutation from_cycles_text(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  std::string oneline_text() const;
  std::string cycles_text() const;
  /// Disjoint cycles of length >= 2, each rotated to start at its minimum,
  /// sorted by that minimum.
  std::vector<std::vector<int>> cycles() const;

  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

enum class Parity { even, odd };

Parity opposite(Parity p);

/// result(i) = sigma(tau(i)); right-to-left composition.
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);
Parity parity(const Permutation& sigma);

/// Transposition (a b) on {0..degree-1}.
Permutation transposition(int degree, int a, int b);

/// A 2-element position set {lo, hi}, 0-based, lo < hi.
struct Couple {
  int lo = 0;
  int hi = 1;

  Couple() = default;
  Couple(int a, int b);
  static Couple from_one_based(int i, int j);

  int min() const { return lo; }
  int max() const { return hi; }

  auto operator<=>(const Couple&) const = default;
};

/// All couples of {0..n-1} in lexicographic order; n*(n-1)/2 of them.
std::vector<Couple> couples_of(int n);

/// Image set {sigma(i) : i in I}, re-sorted.
Couple act_on_couple(const Couple& I, const Permutation& sigma);

/// The product of disjoint adjacent transpositions (1 2)(3 4)... for even n,
/// (2 3)(4 5)... for odd n.
Permutation theta(int n);

/// The product of adjacent transpositions on {1..k} skipping ell; requires
/// ell == k (mod 2) and 1 <= ell <= k.
Permutation lambda(int ell, int k);

/// The permutation of {1..n-1} with hat_sigma . delta_{I sigma^-1} =
/// delta_I . sigma and hat_sigma(min I sigma^-1) = min I.  Built from the
/// beta_J section and validated against the defining identity.
Permutation hat_sigma(const Permutation& sigma, const Couple& I);

/// BFS closure of the generators under composition; contains the identity.
/// Sorted lexicographically by one-line form.
std::vector<Permutation> group_closure(const std::vector<Permutation>& generators,
                                       int degree, int bound = 8);

bool group_contains(const std::vector<Permutation>& sorted_group,
                    const Permutation& sigma);

/// Ordered interval blocks [lo..hi] (0-based, inclusive) tiling {0..m-1}.
struct IntervalPartition {
  std::vector<std::pair<int, int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  int block_size(int b) const { return blocks[b].second - blocks[b].first + 1; }

  auto operator<=>(const IntervalPartition&) const = default;
};

/// Finest partition of {0..m-1} into intervals preserved by rho.
IntervalPartition fundamental_partition(const Permutation& rho);

/// One-line form of sigma with all entries > ell removed (sigma-check_ell);
/// result is a permutation of {1..ell}.
Permutation restrict_oneline(const Permutation& sigma, int ell);

/// All m! permutations of degree m in lexicographic one-line order.
std::vector<Permutation> all_permutations(int degree, int bound = 8);

/// Calls fn(sigma) for each sigma of S_degree in lexicographic order.
template <typename Fn>
void for_each_permutation(int degree, Fn&& fn) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  do {
    fn(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace minrec

#include "minrec/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace minrec {

namespace {

std::vector<int> parse_int_groups(const std::string& text,
                                  std::vector<std::vector<int>>& groups) {
  // Splits "(..)(..)" into groups of integers; accepts ',' and whitespace
  // as separators inside a group.  Returns the flat list of entries.
  std::vector<int> flat;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in permutation text");
    ++pos;
    std::vector<int> group;
    std::string token;
    for (;;) {
      if (pos >= text.size()) throw std::invalid_argument("unterminated '(' in permutation text");
      char c = text[pos];
      if (c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        if (!token.empty()) {
          group.push_back(std::stoi(token));
          token.clear();
        }
        ++pos;
        if (c == ')') break;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        token.push_back(c);
        ++pos;
      } else {
        throw std::invalid_argument(std::string("unexpected character '") + c +
                                    "' in permutation text");
      }
    }
    for (int v : group) flat.push_back(v);
    groups.push_back(std::move(group));
    skip_ws();
  }
  return flat;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("one-line form is not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_oneline_text(const std::string& text) {
  std::vector<std::vector<int>> groups;
  std::vector<int> flat = parse_int_groups(text, groups);
  if (groups.size() != 1)
    throw std::invalid_argument("one-line form must be a single parenthesized group");
  for (int& v : flat) --v;
  return Permutation(std::move(flat));
}

Permutation Permutation::from_cycles_text(const std::string& text, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<std::vector<int>> groups;
  parse_int_groups(text, groups);
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> seen(degree, false);
  for (const auto& cycle : groups) {
    for (int v : cycle) {
      if (v < 1 || v > degree)
        throw std::invalid_argument("cycle entry out of range");
      if (seen[v - 1]) throw std::invalid_argument("repeated element in cycle text");
      seen[v - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i] - 1;
      int to = cycle[(i + 1) % cycle.size()] - 1;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

std::string Permutation::oneline_text() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < degree(); ++i) {
    if (i) out << ',';
    out << images_[i] + 1;
  }
  out << ')';
  return out.str();
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int i = start;
    while (!seen[i]) {
      seen[i] = true;
      cycle.push_back(i);
      i = images_[i];
    }
    if (cycle.size() >= 2) result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::cycles_text() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ' ';
      out << cycle[i] + 1;
    }
    out << ')';
  }
  return out.str();
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Parity opposite(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(sigma.degree());
  for (int i = 0; i < sigma.degree(); ++i) images[i] = sigma(tau(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& sigma) {
  std::vector<int> images(sigma.degree());
  for (int i = 0; i < sigma.degree(); ++i) images[sigma(i)] = i;
  return Permutation(std::move(images));
}

Parity parity(const Permutation& sigma) {
  // (degree - number of cycles) mod 2, fixed points included as 1-cycles.
  std::vector<bool> seen(sigma.degree(), false);
  int cycles = 0;
  for (int start = 0; start < sigma.degree(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    int i = start;
    while (!seen[i]) {
      seen[i] = true;
      i = sigma(i);
    }
  }
  return ((sigma.degree() - cycles) % 2 == 0) ? Parity::even : Parity::odd;
}

Permutation transposition(int degree, int a, int b) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::swap(images[a], images[b]);
  return Permutation(std::move(images));
}

Couple::Couple(int a, int b) : lo(a), hi(b) {
  if (a < 0 || a >= b) throw std::invalid_argument("couple requires 0 <= lo < hi");
}

Couple Couple::from_one_based(int i, int j) { return Couple(i - 1, j - 1); }

std::vector<Couple> couples_of(int n) {
  std::vector<Couple> result;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) result.emplace_back(i, j);
  return result;
}

Couple act_on_couple(const Couple& I, const Permutation& sigma) {
  if (I.hi >= sigma.degree())
    throw std::invalid_argument("couple exceeds permutation degree");
  int a = sigma(I.lo);
  int b = sigma(I.hi);
  return Couple(std::min(a, b), std::max(a, b));
}

Permutation theta(int n) {
  if (n < 2) throw std::invalid_argument("theta requires n >= 2");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  for (int i = (n % 2 == 0) ? 0 : 1; i + 1 < n; i += 2) std::swap(images[i], images[i + 1]);
  return Permutation(std::move(images));
}

Permutation lambda(int ell, int k) {
  if (ell < 1 || ell > k) throw std::invalid_argument("lambda requires 1 <= ell <= k");
  if ((k - ell) % 2 != 0)
    throw std::invalid_argument("lambda requires ell == k (mod 2)");
  std::vector<int> images(k);
  std::iota(images.begin(), images.end(), 0);
  int start = (k % 2 == 1) ? 1 : 2;  // first transposition (start start+1), 1-based
  for (int i = start; i + 1 <= ell - 1; i += 2) std::swap(images[i - 1], images[i]);
  for (int i = ell + 1; i + 1 <= k; i += 2) std::swap(images[i - 1], images[i]);
  return Permutation(std::move(images));
}

namespace {

// delta_I on {0..n-1} -> {0..n-2}.
int delta_of(const Couple& I, int i) {
  if (i < I.hi) return i;
  if (i == I.hi) return I.lo;
  return i - 1;
}

// beta_J: {0..n-2} -> {0..n-1}, the section of delta_J avoiding max J.
int beta_of(const Couple& J, int ell) { return ell < J.hi ? ell : ell + 1; }

}  // namespace

Permutation hat_sigma(const Permutation& sigma, const Couple& I) {
  int n = sigma.degree();
  if (n < 2 || I.hi >= n) throw std::invalid_argument("hat_sigma: bad couple");
  Permutation sigma_inv = inverse(sigma);
  Couple J = act_on_couple(I, sigma_inv);  // I sigma^-1
  std::vector<int> images(n - 1);
  for (int ell = 0; ell < n - 1; ++ell)
    images[ell] = delta_of(I, sigma(beta_of(J, ell)));
  Permutation result{std::move(images)};
  // Self-check against the defining identity.
  for (int i = 0; i < n; ++i)
    assert(result(delta_of(J, i)) == delta_of(I, sigma(i)));
  assert(result(J.lo) == I.lo);
  return result;
}

std::vector<Permutation> group_closure(const std::vector<Permutation>& generators,
                                       int degree, int bound) {
  if (degree > bound)
    throw std::invalid_argument("group_closure: degree exceeds enumeration bound");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("group_closure: generator degree mismatch");
  std::set<Permutation> closed;
  std::vector<Permutation> work;
  auto push = [&](const Permutation& p) {
    if (closed.insert(p).second) work.push_back(p);
  };
  push(Permutation::identity(degree));
  for (const auto& g : generators) push(g);
  while (!work.empty()) {
    Permutation p = std::move(work.back());
    work.pop_back();
    for (const auto& g : generators) push(compose(g, p));
  }
  return {closed.begin(), closed.end()};
}

bool group_contains(const std::vector<Permutation>& sorted_group,
                    const Permutation& sigma) {
  return std::binary_search(sorted_group.begin(), sorted_group.end(), sigma);
}

IntervalPartition fundamental_partition(const Permutation& rho) {
  // A prefix {a..i} is closed under rho iff max(rho(a..i)) == i; cutting at
  // every closed prefix yields the finest interval partition.
  IntervalPartition result;
  int start = 0;
  int high = -1;
  for (int i = 0; i < rho.degree(); ++i) {
    high = std::max(high, rho(i));
    if (high == i) {
      result.blocks.emplace_back(start, i);
      start = i + 1;
    }
  }
  return result;
}

Permutation restrict_oneline(const Permutation& sigma, int ell) {
  if (ell > sigma.degree())
    throw std::invalid_argument("restrict_oneline: ell exceeds degree");
  std::vector<int> images;
  images.reserve(ell);
  for (int i = 0; i < sigma.degree(); ++i)
    if (sigma(i) < ell) images.push_back(sigma(i));
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int degree, int bound) {
  if (degree > bound)
    throw std::invalid_argument("all_permutations: degree exceeds enumeration bound");
  std::vector<Permutation> result;
  for_each_permutation(degree, [&](const Permutation& p) { result.push_back(p); });
  return result;
}

}  // namespace minrec

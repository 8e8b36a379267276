#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "minrec/classes.hpp"
#include "minrec/fn.hpp"
#include "minrec/report.hpp"

namespace minrec {

/// Inputs of the deck-prescribing scheme at n = k+1: a family of k-ary
/// functions g^I agreeing with g* . supp off the full-support tuples, a
/// family of permutations rho_I, and a bijection phi on couples of {1..k+1}.
/// Families are indexed in couples_of(k+1) order.
struct FGPPhiSpec {
  int k = 0;
  std::vector<std::string> labels;
  std::map<std::vector<int>, int> g_star;  // sorted-set key -> label index
  std::vector<FiniteFunction> family_g;
  std::vector<Permutation> family_p;
  std::vector<int> phi;  // permutation of couple indices
};

/// f(b) = g^{phi(I)}(a o rho_I) whenever b = a o delta_I.  Validates the
/// family agreement condition exhaustively and evaluates every
/// decomposition of every b to assert well-definedness.
FiniteFunction build_fgp_phi(const FGPPhiSpec& spec);

/// A random valid spec (used by the deck-formula property suite).
FGPPhiSpec random_fgp_spec(int k, int label_count, std::mt19937_64& rng);

/// The arity-(k+1) pair with equal decks and f !== g; labels are the images
/// of 1..k followed by the fallback.  f is totally symmetric, g is
/// determined by the order of first occurrence.
std::pair<FiniteFunction, FiniteFunction> example_a_plus_1(
    int k, std::vector<std::string> labels);
SuiteReport verify_a_plus_1(int k, std::vector<std::string> labels);

/// The cyclic-family function of arity k+1 with a unique identification
/// minor, trivial invariance group, and no weak ofo factorization (k >= 3).
FiniteFunction example_cyclic(int k);
SuiteReport verify_cyclic(int k);

/// The theta-based pair of arity k+2 for k = 0, 3 (mod 4): f !== g yet
/// f_I === g_J for all I, J.
std::pair<FiniteFunction, FiniteFunction> theta_counterexample(
    int k, const std::string& alpha, const std::string& beta, const std::string& gamma);
SuiteReport verify_theta_counterexample(int k, const std::string& alpha,
                                        const std::string& beta,
                                        const std::string& gamma);

/// The ternary Boolean-domain triple (two totally symmetric functions and
/// one ofo-determined) sharing a single card.
std::vector<FiniteFunction> example_symmofo(const std::string& a, const std::string& b,
                                            const std::string& c, const std::string& d);
SuiteReport verify_symmofo(const std::string& a, const std::string& b,
                           const std::string& c, const std::string& d);

/// x1x2 + x2x3 over {0,1} together with its printed identification minors.
FiniteFunction example_boolean_quadratic();
SuiteReport verify_boolean_quadratic();

struct GalleryResult {
  std::vector<std::pair<std::string, FiniteFunction>> functions;
  SuiteReport report;
};

std::vector<std::string> gallery_names();

/// Builds and verifies one named item; k is ignored by the fixed-shape
/// items (symmofo, boolean_quadratic).
GalleryResult run_gallery(const std::string& name, int k);

}  // namespace minrec

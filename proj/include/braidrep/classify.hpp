#pragma once

#include "braidrep/braid.hpp"
#include "braidrep/friendship.hpp"
#include "braidrep/linalg.hpp"
#include "braidrep/representation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace braidrep {

enum class IrreducibilityTag { AbsolutelyIrreducible, Reducible, Inconclusive };

const char* to_string(IrreducibilityTag tag);

struct IrreducibilityVerdict {
  IrreducibilityTag tag = IrreducibilityTag::Inconclusive;
  /// Proper nonzero invariant subspace; present iff tag == Reducible.
  std::optional<Subspace> witness;
  std::optional<std::size_t> algebra_dim;
  /// How the verdict was reached, e.g. "burnside" or "spin(e1)".
  std::string method;
};

/// Smallest subspace containing v and stable under every generator image.
/// Stability under the images implies stability under their inverses.
Subspace spin(const Representation& rep, const Vector& v);

/// Dimension of the unital algebra spanned by all products of generator
/// images; AbsolutelyIrreducible iff it equals r^2, otherwise Inconclusive.
std::pair<std::size_t, IrreducibilityVerdict> burnside_dimension(const Representation& rep);

/// W is a proper nonzero subspace stable under every image and inverse.
bool is_invariant_witness(const Representation& rep, const Subspace& w);

/// Invariant subspace U = span{x_1, ..., x_{n-1}}, x_{i+1} = A_{i+1} x_i,
/// grown from an eigenvector x_1 in Im(A_1) when no two of
/// sigma_1..sigma_{n-1} are friends. Reducible if dim U < r.
IrreducibilityVerdict disconnected_invariant_subspace(const Representation& rep);

/// Identities forced on neighbours A = A_i, B = A_j that are not friends:
/// A^2 B = A B^2, B A^2 = B^2 A, and for x in Im(A) ∩ Ker(A - λ):
/// B(Bx) = λ Bx, ABx = -(1 + λ) x.
bool lemma_bb_check(const Representation& rep, std::size_t i, std::size_t j);

struct ChainChecks {
  std::size_t intersections_spanned = 0;  // a_i spans Im(A_i) ∩ Im(A_{i+1})
  std::size_t returns_to_previous = 0;    // (1 + A_i) a_i is a nonzero multiple of a_{i-1}
  bool columns_independent = false;
};

struct ChainBasis {
  /// Columns a_0, ..., a_{n-1}.
  Matrix basis;
  ChainChecks checks;
};

/// a_0 spans Im(A_0) ∩ Im(A_1) (pivot-normalised), a_i = (1 + A_i) a_{i-1}.
/// Requires r = n >= 4, corank 2, full friendship graph a chain.
/// Throws ReducibleSignal on a two-dimensional neighbour intersection or
/// dependent columns.
ChainBasis chain_basis(const Representation& rep);

struct StandardFormResult {
  Rational u;
  Matrix basis;
  ChainChecks checks;
  /// u_i read off from rho(sigma_i) a_i = u_i a_{i-1}, i = 1..n-1.
  std::vector<Rational> u_values;
  bool conjugation_exact = false;
};

/// Conjugates rep into the standard form tau_n(u) and returns u.
StandardFormResult extract_standard_form(const Representation& rep);

/// H = A + A^2 + ABA with A = A_{i-1}, B = A_i (indices mod n).
Matrix h_operator(const Representation& rep, std::size_t i);

/// u = 1: the all-ones vector is fixed. u != 1: for sampled x with x_i != 0,
/// H x = (u - 1) x_i e_i and e_i spins to the whole space; cross-checked
/// against burnside_dimension.
IrreducibilityVerdict tym_irreducibility(std::size_t n, const Rational& u, std::uint64_t seed = 0,
                                         std::size_t samples = 8);

/// r <= (n - 1)(k - 1) + 1 with k = corank. Requires a certified
/// absolutely irreducible rep with r >= n and n != 4.
bool dimension_bound_check(const Representation& rep);

struct WitnessSearchOptions {
  std::uint64_t seed = 0;
  std::size_t random_trials = 16;
};

/// Ordered search: common fixed vectors, the all-ones vector, the
/// eigenvector chain for edgeless graphs, spins of neighbour-intersection
/// and image vectors, then seeded random spins.
std::optional<IrreducibilityVerdict> find_invariant_subspace(const Representation& rep,
                                                             const WitnessSearchOptions& opts = {});

/// Burnside certificate, falling back to the witness search.
IrreducibilityVerdict decide_irreducibility(const Representation& rep, const WitnessSearchOptions& opts = {});

}  // namespace braidrep

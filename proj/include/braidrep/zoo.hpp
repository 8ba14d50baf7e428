#pragma once

#include "braidrep/representation.hpp"

#include <cstddef>
#include <cstdint>

namespace braidrep {

/// One-dimensional character sigma_i -> y.
Representation character_rep(std::size_t n, const Rational& y);

/// The n-dimensional standard representation specialised at u:
/// sigma_i -> I_{i-1} (+) [[0, u], [1, 0]] (+) I_{n-1-i}.
Representation tym_standard(std::size_t n, const Rational& u);

/// Reduced Burau representation specialised at t, of dimension n - 1:
///   sigma_1     -> [[-t, 0], [1, 1]] (+) I_{n-3}
///   sigma_i     -> I_{i-2} (+) [[1, t, 0], [0, -t, 0], [0, 1, 1]] (+) I_{n-2-i}
///   sigma_{n-1} -> I_{n-3} (+) [[1, t], [0, -t]]
/// The braid relations are checked before returning.
Representation reduced_burau(std::size_t n, const Rational& t);

/// rep tensored with the character chi(y): every image scaled by y.
Representation tensor_character(const Representation& rep, const Rational& y);

/// Block-diagonal a (+) b.
Representation direct_sum(const Representation& a, const Representation& b);

/// Every generator image M replaced by P^{-1} M P.
Representation conjugate_rep(const Representation& rep, const Matrix& p);

/// Invertible r x r matrix with small integer entries, reproducible per seed.
Matrix random_invertible(std::size_t r, std::uint64_t seed);

/// A_i = rho(sigma_i) - I with i taken mod n (0 is the derived sigma_0).
Matrix deformation(const Representation& rep, std::size_t i);

/// rank(rho(sigma_i) - I); throws InputError if the rank depends on i.
std::size_t corank(const Representation& rep);

}  // namespace braidrep

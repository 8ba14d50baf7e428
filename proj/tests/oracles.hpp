#pragma once

// Independent reference computations for the tests. Nothing here goes
// through Zassenhaus, the incremental echelon basis or Faddeev-LeVerrier.

#include "braidrep/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace braidrep::oracle {

/// Leibniz expansion; only for small matrices.
inline Rational leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rational det;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && sgn(term) != 0; ++i) term *= m(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const Matrix& m) {
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = kmax; k > 0; --k) {
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        Matrix sub(k, k);
        std::size_t a = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (!rsel[i]) continue;
          std::size_t b = 0;
          for (std::size_t j = 0; j < m.cols(); ++j)
            if (csel[j]) sub(a, b++) = m(i, j);
          ++a;
        }
        if (sgn(leibniz_det(sub)) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

/// U ∩ V from the null space of [U | -V]: x = U c_U for every (c_U, c_V).
inline Subspace stacked_intersection(const Subspace& u, const Subspace& v) {
  const std::size_t d = u.ambient_dim();
  const std::size_t du = u.dim();
  const std::size_t dv = v.dim();
  if (du == 0 || dv == 0) return Subspace(d);
  Matrix system(d, du + dv);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < du; ++k) system(i, k) = u.vectors()[k][i];
    for (std::size_t k = 0; k < dv; ++k) system(i, du + k) = -v.vectors()[k][i];
  }
  std::vector<Vector> common;
  const Subspace null = kernel_basis(system);
  for (const auto& c : null.vectors()) {
    Vector x(d);
    for (std::size_t k = 0; k < du; ++k)
      for (std::size_t i = 0; i < d; ++i) x[i] += c[k] * u.vectors()[k][i];
    common.push_back(std::move(x));
  }
  return Subspace::span(common, d);
}

inline Rational small_rational(std::mt19937_64& rng, int range = 4) {
  const long num = static_cast<long>(rng() % (2 * range + 1)) - range;
  const long den = static_cast<long>(rng() % 3) + 1;
  return make_rational(num, den);
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t d, int range = 4) {
  Vector v(d);
  for (auto& x : v) x = small_rational(rng, range);
  return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range = 4) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational(rng, range);
  return m;
}

/// Span of k random vectors, some of them deliberately dependent.
inline Subspace random_subspace(std::mt19937_64& rng, std::size_t d, std::size_t k) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < k; ++i) {
    if (i >= 2 && rng() % 4 == 0) {
      Vector comb(d);
      for (std::size_t j = 0; j < d; ++j) comb[j] = vs[0][j] * 2 - vs[1][j];
      vs.push_back(std::move(comb));
    } else {
      vs.push_back(random_vector(rng, d, 2));
    }
  }
  return Subspace::span(vs, d);
}

}  // namespace braidrep::oracle

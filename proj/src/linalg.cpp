#include "braidrep/linalg.hpp"

#include "braidrep/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace braidrep {

// ---------------------------------------------------------------------------
// EchelonBasis

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != dim_) throw DimensionError("vector does not match ambient dimension");
  Rational t;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    const Rational f = v[p];
    const Vector& row = rows_[k];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(row[j]) == 0) continue;
      t = f * row[j];
      v[j] -= t;
    }
  }
  return v;
}

bool EchelonBasis::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && sgn(r[p]) == 0) ++p;
  if (p == dim_) return false;

  const Rational lead = r[p];
  for (std::size_t j = p; j < dim_; ++j)
    if (sgn(r[j]) != 0) r[j] /= lead;

  Rational t;
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    const Rational f = row[p];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(r[j]) == 0) continue;
      t = f * r[j];
      row[j] -= t;
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

std::vector<Vector> EchelonBasis::canonical_rows() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<Vector> out;
  out.reserve(rows_.size());
  for (std::size_t k : order) out.push_back(rows_[k]);
  return out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

Subspace Subspace::span(std::span<const Vector> vectors, std::size_t ambient_dim) {
  EchelonBasis eb(ambient_dim);
  for (const auto& v : vectors) {
    eb.insert(v);
    if (eb.size() == ambient_dim) break;
  }
  Subspace s(ambient_dim);
  s.vectors_ = eb.canonical_rows();
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.vectors_.push_back(unit_vector(ambient_dim, i));
  return s;
}

Matrix Subspace::basis() const { return Matrix::from_columns(vectors_, ambient_dim_); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw DimensionError("vector does not match ambient dimension");
  // Canonical vectors are pivot-normalized and mutually reduced, so one
  // elimination pass decides membership.
  Vector r = v;
  for (const auto& b : vectors_) {
    std::size_t p = 0;
    while (sgn(b[p]) == 0) ++p;
    if (sgn(r[p]) == 0) continue;
    const Rational f = r[p];
    for (std::size_t j = p; j < ambient_dim_; ++j)
      if (sgn(b[j]) != 0) r[j] -= f * b[j];
  }
  return braidrep::is_zero(r);
}

bool Subspace::is_invariant_under(const Matrix& m) const {
  if (m.rows() != ambient_dim_ || m.cols() != ambient_dim_) throw DimensionError("operator does not act on subspace");
  for (const auto& b : vectors_)
    if (!contains(m * b)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Elimination

RowEchelon row_reduce(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& a = out.reduced;
  std::size_t row = 0;
  Rational t;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && sgn(a(piv, col)) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) swap(a(piv, j), a(row, j));

    const Rational lead = a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) /= lead;

    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (sgn(a(row, j)) == 0) continue;
        t = f * a(row, j);
        a(i, j) -= t;
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Subspace image_basis(const Matrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace::span(cols, m.rows());
}

Subspace kernel_basis(const Matrix& m) {
  const RowEchelon re = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : re.pivots) is_pivot[p] = true;

  std::vector<Vector> null_vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < re.pivots.size(); ++k) v[re.pivots[k]] = -re.reduced(k, free);
    null_vectors.push_back(std::move(v));
  }
  return Subspace::span(null_vectors, m.cols());
}

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionError("subspaces live in different ambient spaces (" + std::to_string(u.ambient_dim()) + " vs " +
                         std::to_string(v.ambient_dim()) + ")");
}

}  // namespace

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  const std::size_t d = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace(d);

  EchelonBasis eb(2 * d);
  for (const auto& x : u.vectors()) {
    Vector row(2 * d);
    std::copy(x.begin(), x.end(), row.begin());
    std::copy(x.begin(), x.end(), row.begin() + static_cast<std::ptrdiff_t>(d));
    eb.insert(row);
  }
  for (const auto& y : v.vectors()) {
    Vector row(2 * d);
    std::copy(y.begin(), y.end(), row.begin());
    eb.insert(row);
  }

  std::vector<Vector> common;
  for (const auto& row : eb.canonical_rows()) {
    const bool left_zero = std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(d),
                                       [](const Rational& x) { return sgn(x) == 0; });
    if (left_zero) common.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(d), row.end());
  }
  return Subspace::span(common, d);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  std::vector<Vector> all = u.vectors();
  all.insert(all.end(), v.vectors().begin(), v.vectors().end());
  return Subspace::span(all, u.ambient_dim());
}

// ---------------------------------------------------------------------------
// Inverse and conjugation

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon re = row_reduce(aug);
  if (re.pivots.size() < n || re.pivots[n - 1] != n - 1) throw SingularMatrixError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = re.reduced(i, n + j);
  return inv;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix conjugate(const Matrix& m, const Matrix& c) {
  if (!m.is_square() || c.rows() != m.rows() || c.cols() != m.cols())
    throw DimensionError("conjugation shape mismatch");
  return inverse(c) * m * c;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and rational roots

std::vector<Rational> characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: N_k = M N_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(M N_k) / k.
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix acc = Matrix::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
    const Matrix prod = m * acc;
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

namespace {

using Poly = std::vector<Rational>;  // low degree first

void trim(Poly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

// quotient and remainder of f by a nonzero g
std::pair<Poly, Poly> divide(Poly f, const Poly& g) {
  trim(f);
  Poly quot(f.size() >= g.size() ? f.size() - g.size() + 1 : 0);
  while (f.size() >= g.size()) {
    const Rational c = f.back() / g.back();
    const std::size_t shift = f.size() - g.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
    f.pop_back();
    trim(f);
  }
  return {quot, f};
}

Poly monic_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly rem = divide(a, b).second;
    a = std::move(b);
    b = std::move(rem);
  }
  const Rational lead = a.back();
  for (auto& x : a) x /= lead;
  return a;
}

mpz_class horner(const std::vector<mpz_class>& f, const mpz_class& x, const mpz_class& mod) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * x + *it;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
  }
  return acc;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// a + b x with |a| <= bound_a, 0 < b <= bound_b and a = b x mod m, if any
std::optional<Rational> reconstruct(const mpz_class& x, const mpz_class& m, const mpz_class& bound_a,
                                    const mpz_class& bound_b) {
  mpz_class r0 = m, r1 = x, t0 = 0, t1 = 1;
  while (r1 > bound_a) {
    const mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  if (t1 == 0 || t1 > bound_b) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  Poly f = coeffs;
  trim(f);
  if (f.size() <= 1) return {};

  std::set<Rational> roots;
  std::size_t low = 0;
  while (sgn(f[low]) == 0) ++low;
  if (low > 0) {
    roots.insert(Rational(0));
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (f.size() > 1) {
    Poly df(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * static_cast<long>(i);
    const Poly g = monic_gcd(f, df);
    if (g.size() > 1) f = divide(f, g).first;
  }
  if (f.size() == 2) {
    roots.insert(-f[0] / f[1]);
    return {roots.begin(), roots.end()};
  }
  if (f.size() < 2) return {roots.begin(), roots.end()};

  // primitive integer polynomial with the same roots
  mpz_class scale = 1;
  for (const auto& q : f) scale = lcm(scale, q.get_den());
  std::vector<mpz_class> z;
  mpz_class content = 0;
  for (const auto& q : f) {
    z.push_back(q.get_num() * (scale / q.get_den()));
    content = gcd(content, z.back());
  }
  for (auto& c : z) c /= content;
  std::vector<mpz_class> dz(z.size() - 1);
  for (std::size_t i = 1; i < z.size(); ++i) dz[i - 1] = z[i] * static_cast<unsigned long>(i);

  // a root a/b has |a| <= |z_0| and b <= |z_d|; lifting past 2 |z_0| |z_d| makes it unique
  const mpz_class bound_a = abs(z.front());
  const mpz_class bound_b = abs(z.back());
  const mpz_class target = 2 * bound_a * bound_b;

  for (unsigned long p = 1009;; p += 2) {
    if (!is_prime(p) || mpz_divisible_ui_p(z.back().get_mpz_t(), p)) continue;
    const mpz_class pm = p;
    std::vector<unsigned long> zp, dzp;
    for (const auto& c : z) zp.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    for (const auto& c : dz) dzp.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    auto eval = [p](const std::vector<unsigned long>& poly, unsigned long x) {
      unsigned long acc = 0;
      for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (acc * x + *it) % p;
      return acc;
    };
    std::vector<unsigned long> modular;
    bool separable = true;
    for (unsigned long x = 0; x < p && separable; ++x) {
      if (eval(zp, x) != 0) continue;
      if (eval(dzp, x) == 0) separable = false;
      modular.push_back(x);
    }
    if (!separable) continue;

    for (unsigned long x0 : modular) {
      mpz_class x = x0, m = pm;
      while (m <= target) {
        m *= m;
        mpz_class inv;
        const mpz_class slope = horner(dz, x, m);
        mpz_invert(inv.get_mpz_t(), slope.get_mpz_t(), m.get_mpz_t());
        x = x - horner(z, x, m) * inv;
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
      }
      const auto cand = reconstruct(x, m, bound_a, bound_b);
      if (!cand) continue;
      Rational acc;
      for (auto it = z.rbegin(); it != z.rend(); ++it) acc = acc * *cand + Rational(*it);
      if (sgn(acc) == 0) roots.insert(*cand);
    }
    break;
  }
  return {roots.begin(), roots.end()};
}

std::vector<Rational> rational_eigenvalues(const Matrix& m) { return rational_roots(characteristic_polynomial(m)); }

}  // namespace braidrep

#include "braidrep/zoo.hpp"

#include "braidrep/braid.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/linalg.hpp"

#include <random>

namespace braidrep {

namespace {

void require_nonzero(const Rational& x, const char* what) {
  if (is_zero(x)) throw InputError(std::string(what) + " must be nonzero");
}

std::string param_label(const char* family, std::size_t n, const char* name, const Rational& x) {
  return std::string(family) + "(n=" + std::to_string(n) + "," + name + "=" + to_string(x) + ")";
}

}  // namespace

Representation character_rep(std::size_t n, const Rational& y) {
  require_nonzero(y, "character value y");
  std::vector<Matrix> gens(n < 2 ? 0 : n - 1, Matrix{{y}});
  return Representation(n, std::move(gens), param_label("char", n, "y", y));
}

Representation tym_standard(std::size_t n, const Rational& u) {
  require_nonzero(u, "parameter u");
  if (n < 2) throw InputError("standard representation needs n >= 2");
  std::vector<Matrix> gens;
  gens.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    Matrix g = Matrix::identity(n);
    g(i - 1, i - 1) = 0;
    g(i, i) = 0;
    g(i - 1, i) = u;
    g(i, i - 1) = 1;
    gens.push_back(std::move(g));
  }
  return Representation(n, std::move(gens), param_label("tym", n, "u", u));
}

Representation reduced_burau(std::size_t n, const Rational& t) {
  require_nonzero(t, "parameter t");
  if (n < 3) throw InputError("reduced Burau needs n >= 3");
  const std::size_t r = n - 1;
  std::vector<Matrix> gens;
  gens.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    Matrix g = Matrix::identity(r);
    // 0-based row/col of the "-t" entry is i - 1.
    const std::size_t c = i - 1;
    g(c, c) = -t;
    if (c > 0) g(c - 1, c) = t;
    if (c + 1 < r) g(c + 1, c) = 1;
    gens.push_back(std::move(g));
  }
  Representation rep(n, std::move(gens), param_label("burau", n, "t", t));
  if (!verify_braid_relations(rep).ok()) throw InvariantViolation("reduced Burau convention violates braid relations");
  return rep;
}

Representation tensor_character(const Representation& rep, const Rational& y) {
  require_nonzero(y, "character value y");
  std::vector<Matrix> gens = rep.generators();
  for (auto& g : gens) g *= y;
  return Representation(rep.strands(), std::move(gens), rep.label() + " (x) char(y=" + to_string(y) + ")");
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.strands() != b.strands())
    throw InputError("direct sum of representations of different braid groups");
  std::vector<Matrix> gens;
  gens.reserve(a.generators().size());
  for (std::size_t i = 0; i < a.generators().size(); ++i)
    gens.push_back(direct_sum(a.generators()[i], b.generators()[i]));
  return Representation(a.strands(), std::move(gens), a.label() + " (+) " + b.label());
}

Representation conjugate_rep(const Representation& rep, const Matrix& p) {
  if (p.rows() != rep.dim() || p.cols() != rep.dim()) throw DimensionError("conjugating matrix has the wrong shape");
  const Matrix pinv = inverse(p);
  std::vector<Matrix> gens;
  gens.reserve(rep.generators().size());
  for (const auto& g : rep.generators()) gens.push_back(pinv * g * p);
  return Representation(rep.strands(), std::move(gens), rep.label() + " conjugated");
}

Matrix random_invertible(std::size_t r, std::uint64_t seed) {
  // Raw mt19937_64 output keeps the sequence identical across standard libraries.
  std::mt19937_64 rng(seed);
  for (;;) {
    Matrix p(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) p(i, j) = static_cast<long>(rng() % 7) - 3;
    if (is_invertible(p)) return p;
  }
}

Matrix deformation(const Representation& rep, std::size_t i) {
  return rep.extended_generator(i) - Matrix::identity(rep.dim());
}

std::size_t corank(const Representation& rep) {
  const std::size_t k = rank(rep.generator(1) - Matrix::identity(rep.dim()));
  for (std::size_t i = 2; i < rep.strands(); ++i) {
    if (rank(rep.generator(i) - Matrix::identity(rep.dim())) != k)
      throw InputError("rank of rho(sigma_i) - 1 depends on i; not a representation");
  }
  return k;
}

}  // namespace braidrep

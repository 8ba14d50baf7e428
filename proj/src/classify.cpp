#include "braidrep/classify.hpp"

#include "braidrep/errors.hpp"
#include "braidrep/zoo.hpp"

#include <cstdint>
#include <deque>
#include <optional>
#include <random>

namespace braidrep {

const char* to_string(IrreducibilityTag tag) {
  switch (tag) {
    case IrreducibilityTag::AbsolutelyIrreducible: return "AbsolutelyIrreducible";
    case IrreducibilityTag::Reducible: return "Reducible";
    case IrreducibilityTag::Inconclusive: return "Inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Spinning and the Burnside closure

Subspace spin(const Representation& rep, const Vector& v) {
  const std::size_t r = rep.dim();
  EchelonBasis eb(r);
  std::deque<Vector> frontier;
  if (eb.insert(v)) frontier.push_back(v);
  while (!frontier.empty() && eb.size() < r) {
    const Vector w = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : rep.generators()) {
      Vector rem = eb.reduce(g * w);
      if (is_zero(rem)) continue;
      eb.insert(rem);
      frontier.push_back(std::move(rem));
    }
  }
  const std::vector<Vector> rows = eb.canonical_rows();
  return Subspace::span(rows, r);
}

namespace {

// Arithmetic modulo a 32-bit prime. If the words in the generators span all
// r x r matrices mod p they are independent over Q as well, so a full
// modular closure certifies the rational one.
constexpr std::uint64_t kPrime = 4294967291ULL;

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t acc = 1;
  for (; e; e >>= 1, b = b * b % kPrime)
    if (e & 1) acc = acc * b % kPrime;
  return acc;
}

std::optional<std::uint64_t> reduce_mod_p(const Rational& q) {
  const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  return num * mod_pow(den, kPrime - 2) % kPrime;
}

using ModMatrix = std::vector<std::uint64_t>;

bool modular_closure_is_full(const Representation& rep) {
  const std::size_t r = rep.dim();
  const std::size_t full = r * r;
  std::vector<ModMatrix> gens;
  for (const auto& g : rep.generators()) {
    ModMatrix m(full);
    for (std::size_t k = 0; k < full; ++k) {
      const auto x = reduce_mod_p(g.data()[k]);
      if (!x) return false;
      m[k] = *x;
    }
    gens.push_back(std::move(m));
  }
  auto times = [r](const ModMatrix& a, const ModMatrix& b) {
    ModMatrix c(r * r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) {
        const std::uint64_t aik = a[i * r + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < r; ++j) c[i * r + j] = (c[i * r + j] + aik * b[k * r + j]) % kPrime;
      }
    return c;
  };

  // semi-echelon rows: row k is monic at pivots[k] and zero at earlier pivots
  std::vector<ModMatrix> rows;
  std::vector<std::size_t> pivots;
  auto insert = [&](ModMatrix v) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const std::uint64_t c = v[pivots[k]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < full; ++j) v[j] = (v[j] + (kPrime - c) * rows[k][j]) % kPrime;
    }
    std::size_t p = 0;
    while (p < full && v[p] == 0) ++p;
    if (p == full) return false;
    const std::uint64_t inv = mod_pow(v[p], kPrime - 2);
    for (auto& x : v) x = x * inv % kPrime;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  };

  ModMatrix id(full);
  for (std::size_t i = 0; i < r; ++i) id[i * r + i] = 1;
  std::deque<ModMatrix> frontier;
  insert(id);
  frontier.push_back(id);
  while (!frontier.empty() && rows.size() < full) {
    const ModMatrix x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      ModMatrix gx = times(g, x);
      if (insert(gx)) frontier.push_back(std::move(gx));
      if (rows.size() == full) break;
    }
  }
  return rows.size() == full;
}

IrreducibilityVerdict full_algebra_verdict(std::size_t r) {
  IrreducibilityVerdict v;
  v.algebra_dim = r * r;
  v.method = "burnside";
  v.tag = IrreducibilityTag::AbsolutelyIrreducible;
  return v;
}

}  // namespace

std::pair<std::size_t, IrreducibilityVerdict> burnside_dimension(const Representation& rep) {
  const std::size_t r = rep.dim();
  const std::size_t full = r * r;
  if (modular_closure_is_full(rep)) return {full, full_algebra_verdict(r)};
  auto flatten = [](const Matrix& m) { return Vector(m.data().begin(), m.data().end()); };

  EchelonBasis eb(full);
  std::deque<Matrix> frontier;
  const Matrix id = Matrix::identity(r);
  eb.insert(flatten(id));
  frontier.push_back(id);
  while (!frontier.empty() && eb.size() < full) {
    const Matrix x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : rep.generators()) {
      // continue from the remainder: same span, far smaller entries than the raw word
      Vector rem = eb.reduce(flatten(g * x));
      if (is_zero(rem)) continue;
      eb.insert(rem);
      Matrix next(r, r);
      for (std::size_t k = 0; k < full; ++k) next(k / r, k % r) = std::move(rem[k]);
      frontier.push_back(std::move(next));
      if (eb.size() == full) break;
    }
  }

  IrreducibilityVerdict v;
  v.algebra_dim = eb.size();
  v.method = "burnside";
  v.tag = eb.size() == full ? IrreducibilityTag::AbsolutelyIrreducible : IrreducibilityTag::Inconclusive;
  return {eb.size(), v};
}

bool is_invariant_witness(const Representation& rep, const Subspace& w) {
  if (w.ambient_dim() != rep.dim() || w.is_zero() || w.dim() >= rep.dim()) return false;
  for (const auto& g : rep.generators()) {
    if (!w.is_invariant_under(g)) return false;
    if (!w.is_invariant_under(inverse(g))) return false;
  }
  return true;
}

namespace {

IrreducibilityVerdict reducible(Subspace w, std::string method) {
  IrreducibilityVerdict v;
  v.tag = IrreducibilityTag::Reducible;
  v.witness = std::move(w);
  v.method = std::move(method);
  return v;
}

/// Corank 0: every generator acts as the identity.
IrreducibilityVerdict trivial_verdict(const Representation& rep) {
  if (rep.dim() == 1) {
    IrreducibilityVerdict v;
    v.tag = IrreducibilityTag::AbsolutelyIrreducible;
    v.algebra_dim = 1;
    v.method = "one-dimensional";
    return v;
  }
  const Vector e1 = unit_vector(rep.dim(), 0);
  return reducible(Subspace::span(std::span(&e1, 1), rep.dim()), "trivial action; coordinate line");
}

// Commuting matrices through a cyclic vector v. Spinning v gives a basis
// b_k = q_k v for algebra elements q_k, and every generator image of a b_k
// either extends the basis or yields a relation a v = 0. A matrix Y with
// Y v = y commutes with the generators iff a y = 0 for all those relations,
// and then ker(Y - lambda) is invariant for every lambda.
std::optional<IrreducibilityVerdict> commutant_witness(const Representation& rep, const Vector& v) {
  const std::size_t r = rep.dim();
  std::vector<Vector> b;
  std::vector<Matrix> q;
  std::vector<std::size_t> piv;
  std::vector<Matrix> relations;

  // reduce (w, qw) against the semi-echelon basis; true if w leaves a remainder
  auto absorb = [&](Vector w, Matrix qw) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      const Rational c = w[piv[k]];
      if (sgn(c) == 0) continue;
      for (std::size_t j = 0; j < r; ++j) w[j] -= c * b[k][j];
      qw -= c * q[k];
    }
    std::size_t p = 0;
    while (p < r && sgn(w[p]) == 0) ++p;
    if (p == r) {
      if (!qw.is_zero()) relations.push_back(std::move(qw));
      return;
    }
    const Rational lead = w[p];
    for (auto& x : w) x /= lead;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) qw(i, j) /= lead;
    b.push_back(std::move(w));
    q.push_back(std::move(qw));
    piv.push_back(p);
  };

  if (is_zero(v)) return std::nullopt;
  absorb(v, Matrix::identity(r));
  for (std::size_t k = 0; k < b.size(); ++k)
    for (const auto& g : rep.generators()) absorb(g * b[k], g * q[k]);
  if (b.size() < r) {
    Subspace s = Subspace::span(b, r);
    if (!is_invariant_witness(rep, s)) return std::nullopt;
    return reducible(std::move(s), "spin of a random vector");
  }

  EchelonBasis constraints(r);
  for (const auto& a : relations)
    for (std::size_t i = 0; i < r && constraints.size() < r; ++i) constraints.insert(a.row(i));
  if (constraints.size() + 1 >= r) return std::nullopt;  // only scalars commute
  const std::vector<Vector> rows = constraints.canonical_rows();
  Matrix c(rows.size(), r);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < r; ++j) c(i, j) = rows[i][j];
  const Subspace ys = rows.empty() ? Subspace::full(r) : kernel_basis(c);

  const Matrix binv = inverse(Matrix::from_columns(b, r));
  for (const auto& y : ys.vectors()) {
    std::vector<Vector> images;
    for (const auto& qk : q) images.push_back(qk * y);
    const Matrix m = Matrix::from_columns(images, r) * binv;
    for (const auto& lambda : rational_eigenvalues(m)) {
      const Matrix shifted = m - lambda * Matrix::identity(r);
      if (shifted.is_zero()) continue;
      Subspace ker = kernel_basis(shifted);
      if (is_invariant_witness(rep, ker))
        return reducible(std::move(ker), "kernel of a commuting matrix (lambda=" + to_string(lambda) + ")");
    }
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Edgeless friendship graph

IrreducibilityVerdict disconnected_invariant_subspace(const Representation& rep) {
  if (friendship_graph(rep).edge_count() != 0)
    throw PreconditionError("friendship graph is not totally disconnected");
  if (corank(rep) == 0) return trivial_verdict(rep);

  const std::size_t n = rep.strands();
  const std::size_t r = rep.dim();
  std::vector<Matrix> a(n);
  for (std::size_t i = 1; i < n; ++i) a[i] = deformation(rep, i);

  const Subspace im1 = image_basis(a[1]);
  std::optional<Rational> lambda;
  Vector x1;
  for (const auto& ev : rational_eigenvalues(a[1])) {
    const Subspace eig = intersect(im1, kernel_basis(a[1] - ev * Matrix::identity(r)));
    if (!eig.is_zero()) {
      lambda = ev;
      x1 = eig.vectors().front();
      break;
    }
  }
  if (!lambda) throw NeedsFieldExtension("A_1 has no rational eigenvector inside its image");

  // x[i] for i = 1..n-1
  std::vector<Vector> x(n);
  x[1] = x1;
  for (std::size_t i = 1; i + 1 < n; ++i) x[i + 1] = a[i + 1] * x[i];

  const Rational minus_one_minus_lambda = -(1 + *lambda);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      const Vector got = a[j] * x[i];
      Vector want;
      if (j + 1 == i) {
        want = scaled(x[i - 1], minus_one_minus_lambda);
      } else if (j == i) {
        want = scaled(x[i], *lambda);
      } else if (j == i + 1) {
        want = x[i + 1];
      } else {
        want = Vector(r);
      }
      if (got != want)
        throw InvariantViolation("action formula fails for A_" + std::to_string(j) + " x_" + std::to_string(i));
    }
  }

  std::vector<Vector> span_vectors(x.begin() + 1, x.end());
  Subspace u = Subspace::span(span_vectors, r);
  if (u.dim() < r) {
    if (!is_invariant_witness(rep, u)) throw InvariantViolation("eigenvector chain span is not invariant");
    return reducible(std::move(u), "eigenvector chain (lambda=" + to_string(*lambda) + ")");
  }
  IrreducibilityVerdict v;
  v.method = "eigenvector chain spans the whole space";
  return v;
}

bool lemma_bb_check(const Representation& rep, std::size_t i, std::size_t j) {
  const std::size_t n = rep.strands();
  if (!are_neighbors(i, j, n)) throw PreconditionError("lemma_bb_check needs neighbouring generators");
  if (are_friends(rep, i, j)) throw PreconditionError("lemma_bb_check needs generators that are not friends");

  const Matrix a = deformation(rep, i);
  const Matrix b = deformation(rep, j);
  if (a * a * b != a * b * b || b * a * a != b * b * a) return false;

  const std::size_t r = rep.dim();
  const Subspace im = image_basis(a);
  for (const auto& lambda : rational_eigenvalues(a)) {
    const Subspace eig = intersect(im, kernel_basis(a - lambda * Matrix::identity(r)));
    for (const auto& x : eig.vectors()) {
      const Vector bx = b * x;
      if (b * bx != scaled(bx, lambda)) return false;
      if (a * bx != scaled(x, -(1 + lambda))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Chain basis and the standard form

namespace {

bool proportional_nonzero(const Vector& w, const Vector& a) {
  if (is_zero(w)) return false;
  return Subspace::span(std::span(&a, 1), a.size()).contains(w);
}

}  // namespace

ChainBasis chain_basis(const Representation& rep) {
  const std::size_t n = rep.strands();
  const std::size_t r = rep.dim();
  if (n < 4) throw PreconditionError("chain recovery needs n >= 4");
  if (r != n) throw PreconditionError("chain recovery needs dimension r = n");
  if (corank(rep) != 2) throw PreconditionError("chain recovery needs corank 2");

  std::vector<Subspace> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(image_basis(deformation(rep, i)));
  std::vector<Subspace> meets;
  meets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Subspace m = intersect(images[i], images[(i + 1) % n]);
    if (m.dim() == 2)
      throw ReducibleSignal("Im(A_" + std::to_string(i) + ") = Im(A_" + std::to_string((i + 1) % n) +
                            ") is a two-dimensional invariant subspace");
    meets.push_back(std::move(m));
  }
  if (!is_chain(full_friendship_graph(rep))) throw PreconditionError("full friendship graph is not a chain");
  for (const auto& m : meets)
    if (m.dim() != 1) throw InvariantViolation("neighbour images do not meet although the graph is a chain");

  // a[i] for i = 0..n-1
  std::vector<Vector> a(n);
  a[0] = meets[0].vectors().front();
  for (std::size_t i = 1; i < n; ++i) a[i] = rep.generator(i) * a[i - 1];

  ChainChecks checks;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a[i]) || !meets[i].contains(a[i]))
      throw InvariantViolation("a_" + std::to_string(i) + " does not span Im(A_i) ∩ Im(A_{i+1})");
    ++checks.intersections_spanned;
  }
  // Closing the cycle: (1 + A_0) a_{n-1} lies on the line of a_0.
  if (!proportional_nonzero(rep.extended_generator(0) * a[n - 1], a[0]))
    throw InvariantViolation("(1 + A_0) a_{n-1} is not a multiple of a_0");

  for (std::size_t i = 0; i < n; ++i) {
    const Vector w = rep.extended_generator(i) * a[i];
    const Vector& prev = a[(i + n - 1) % n];
    if (!proportional_nonzero(w, prev))
      throw InvariantViolation("(1 + A_" + std::to_string(i) + ") a_" + std::to_string(i) +
                               " is not a nonzero multiple of the previous chain vector");
    ++checks.returns_to_previous;
  }

  Matrix basis = Matrix::from_columns(a, r);
  if (rank(basis) != n) throw ReducibleSignal("chain vectors are linearly dependent; representation is not irreducible");
  checks.columns_independent = true;
  return {std::move(basis), checks};
}

StandardFormResult extract_standard_form(const Representation& rep) {
  ChainBasis cb = chain_basis(rep);
  const std::size_t n = rep.strands();
  const Matrix cinv = inverse(cb.basis);

  StandardFormResult out;
  std::vector<Matrix> conjugated;
  conjugated.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    conjugated.push_back(cinv * rep.generator(i) * cb.basis);
    out.u_values.push_back(conjugated.back()(i - 1, i));
  }
  for (const auto& ui : out.u_values)
    if (ui != out.u_values.front()) throw InputError("u_i differ across generators; not a representation");

  out.u = out.u_values.front();
  if (out.u == 1) throw ReducibleSignal("u = 1: the standard representation fixes the all-ones vector");

  const Representation target = tym_standard(n, out.u);
  out.conjugation_exact = true;
  for (std::size_t i = 1; i < n; ++i)
    if (conjugated[i - 1] != target.generator(i)) out.conjugation_exact = false;
  if (!out.conjugation_exact) throw InvariantViolation("chain basis does not conjugate into the standard form");

  out.basis = std::move(cb.basis);
  out.checks = cb.checks;
  return out;
}

// ---------------------------------------------------------------------------
// Irreducibility of the standard family

Matrix h_operator(const Representation& rep, std::size_t i) {
  const Matrix a = deformation(rep, i + rep.strands() - 1);
  const Matrix b = deformation(rep, i);
  return a + a * a + a * b * a;
}

IrreducibilityVerdict tym_irreducibility(std::size_t n, const Rational& u, std::uint64_t seed, std::size_t samples) {
  const Representation rep = tym_standard(n, u);
  if (u == 1) {
    const Vector ones(n, Rational(1));
    for (const auto& g : rep.generators())
      if (g * ones != ones) throw InvariantViolation("all-ones vector is not fixed at u = 1");
    Subspace w = Subspace::span(std::span(&ones, 1), n);
    if (!is_invariant_witness(rep, w)) throw InvariantViolation("all-ones line is not an invariant witness");
    return reducible(std::move(w), "fixed all-ones vector");
  }
  if (n < 3) {
    auto [dim, verdict] = burnside_dimension(rep);
    verdict.method = "burnside (H-certificate needs n >= 3)";
    return verdict;
  }

  std::mt19937_64 rng(seed);
  const Rational u_minus_one = u - 1;
  for (std::size_t s = 0; s < samples; ++s) {
    Vector x(n);
    while (is_zero(x))
      for (auto& xi : x) xi = static_cast<long>(rng() % 11) - 5;
    std::size_t i = 0;
    while (sgn(x[i]) == 0) ++i;
    // coordinate i (0-based) is e_{i+1}; H pairs sigma_i with sigma_{i+1}.
    const Matrix h = h_operator(rep, i + 1);
    Vector want(n);
    want[i] = u_minus_one * x[i];
    if (h * x != want) throw InvariantViolation("H x != (u - 1) x_i e_i");
    if (spin(rep, unit_vector(n, i)).dim() != n) throw InvariantViolation("e_i does not generate the whole space");
  }

  auto [dim, verdict] = burnside_dimension(rep);
  if (dim != n * n) throw InvariantViolation("Burnside dimension disagrees with the H-certificate");
  verdict.method = "H-certificate + burnside";
  return verdict;
}

bool dimension_bound_check(const Representation& rep) {
  const std::size_t n = rep.strands();
  const std::size_t r = rep.dim();
  if (n == 4) throw PreconditionError("dimension bound is not claimed for n = 4");
  if (r < n) throw PreconditionError("dimension bound needs r >= n");
  if (burnside_dimension(rep).second.tag != IrreducibilityTag::AbsolutelyIrreducible)
    throw PreconditionError("dimension bound needs a certified irreducible representation");
  const long k = static_cast<long>(corank(rep));
  return static_cast<long>(r) <= static_cast<long>(n - 1) * (k - 1) + 1;
}

// ---------------------------------------------------------------------------
// Witness search

std::optional<IrreducibilityVerdict> find_invariant_subspace(const Representation& rep,
                                                             const WitnessSearchOptions& opts) {
  const std::size_t n = rep.strands();
  const std::size_t r = rep.dim();
  if (r < 2) return std::nullopt;

  auto try_spin = [&](const Vector& v, const std::string& method) -> std::optional<IrreducibilityVerdict> {
    if (is_zero(v)) return std::nullopt;
    Subspace s = spin(rep, v);
    if (s.dim() < r && is_invariant_witness(rep, s)) return reducible(std::move(s), method);
    return std::nullopt;
  };

  // 1. common fixed vectors
  Matrix stacked(r * (n - 1), r);
  for (std::size_t i = 1; i < n; ++i) {
    const Matrix a = deformation(rep, i);
    for (std::size_t p = 0; p < r; ++p)
      for (std::size_t q = 0; q < r; ++q) stacked((i - 1) * r + p, q) = a(p, q);
  }
  const Subspace fixed = kernel_basis(stacked);
  if (!fixed.is_zero()) {
    if (fixed.dim() < r) return reducible(fixed, "common fixed vectors");
    return trivial_verdict(rep);
  }

  // 2. all-ones vector
  if (auto v = try_spin(Vector(r, Rational(1)), "spin(all-ones)")) return v;

  // 3. eigenvector chain when no two generators are friends
  if (friendship_graph(rep).edge_count() == 0) {
    try {
      IrreducibilityVerdict v = disconnected_invariant_subspace(rep);
      if (v.tag == IrreducibilityTag::Reducible) return v;
    } catch (const NeedsFieldExtension&) {
    }
  }

  // 4. neighbour intersections, then image vectors
  std::vector<Subspace> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(image_basis(deformation(rep, i)));
  for (std::size_t i = 0; i < n; ++i) {
    const Subspace meet = intersect(images[i], images[(i + 1) % n]);
    for (std::size_t k = 0; k < meet.vectors().size(); ++k)
      if (auto v = try_spin(meet.vectors()[k], "spin(Im(A_" + std::to_string(i) + ") ∩ Im(A_" +
                                                   std::to_string((i + 1) % n) + ") vector " + std::to_string(k) + ")"))
        return v;
  }
  for (std::size_t k = 0; k < images[1].vectors().size(); ++k)
    if (auto v = try_spin(images[1].vectors()[k], "spin(Im(A_1) vector " + std::to_string(k) + ")")) return v;

  // 5. seeded random vectors
  std::mt19937_64 rng(opts.seed);
  for (std::size_t t = 0; t < opts.random_trials; ++t) {
    Vector x(r);
    for (auto& xi : x) xi = static_cast<long>(rng() % 7) - 3;
    if (auto v = try_spin(x, "spin(random #" + std::to_string(t) + ", seed=" + std::to_string(opts.seed) + ")"))
      return v;
  }

  // 6. matrices commuting with the generators, found through a cyclic vector
  for (std::size_t t = 0; t < 3; ++t) {
    Vector x(r);
    for (auto& xi : x) xi = static_cast<long>(rng() % 7) - 3;
    if (auto v = commutant_witness(rep, x)) return v;
  }
  return std::nullopt;
}

IrreducibilityVerdict decide_irreducibility(const Representation& rep, const WitnessSearchOptions& opts) {
  if (modular_closure_is_full(rep)) return full_algebra_verdict(rep.dim());
  // the exact closure is only needed when no witness turns up
  if (auto found = find_invariant_subspace(rep, opts)) return *found;
  auto [dim, verdict] = burnside_dimension(rep);
  if (verdict.tag != IrreducibilityTag::AbsolutelyIrreducible)
    verdict.method = "burnside dimension below r^2; no invariant subspace found";
  return verdict;
}

}  // namespace braidrep

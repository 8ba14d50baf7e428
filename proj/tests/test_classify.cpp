#include "braidrep/analysis.hpp"
#include "braidrep/braid.hpp"
#include "braidrep/classify.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/zoo.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace braidrep;

namespace {

Vector flatten(const Matrix& m) { return Vector(m.data().begin(), m.data().end()); }

// Exact algebra dimension by brute force: span words of growing length
// until the span stops growing.
std::size_t algebra_dimension_oracle(const Representation& rep) {
  const std::size_t r = rep.dim();
  std::vector<Matrix> layer{Matrix::identity(r)};
  std::vector<Vector> all{flatten(layer.front())};
  std::size_t dim = 1;
  while (true) {
    std::vector<Matrix> next;
    for (const auto& w : layer)
      for (const auto& g : rep.generators()) next.push_back(g * w);
    for (const auto& w : next) all.push_back(flatten(w));
    Matrix stacked(all.size(), r * r);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < r * r; ++j) stacked(i, j) = all[i][j];
    const std::size_t d = rank(stacked);
    if (d == dim) return d;
    dim = d;
    // keep only a spanning subset to stop the word list from exploding
    layer.clear();
    const Subspace s = image_basis(stacked.transpose());
    all = s.vectors();
    for (const auto& v : all) {
      Matrix m(r, r);
      for (std::size_t k = 0; k < r * r; ++k) m(k / r, k % r) = v[k];
      layer.push_back(std::move(m));
    }
  }
}

// Invariance checked by hand: g w and g^{-1} w stay in W for each basis vector.
bool witness_oracle(const Representation& rep, const Subspace& w) {
  if (w.is_zero() || w.dim() >= rep.dim()) return false;
  for (const auto& g : rep.generators()) {
    const Matrix gi = inverse(g);
    for (const auto& v : w.vectors())
      if (!w.contains(g * v) || !w.contains(gi * v)) return false;
  }
  return true;
}

Representation disconnected_fixture() {
  return direct_sum(direct_sum(reduced_burau(5, 3), character_rep(5, 1)), character_rep(5, 1));
}

Representation coinciding_images_fixture(std::size_t n) {
  Representation rep = direct_sum(character_rep(n, 2), character_rep(n, 2));
  for (std::size_t k = 2; k < n; ++k) rep = direct_sum(rep, character_rep(n, 1));
  return rep;
}

Vector ones(std::size_t n) { return Vector(n, Rational(1)); }

}  // namespace

TEST_CASE("spin") {
  const Representation perm = tym_standard(6, 1);
  CHECK(spin(perm, Vector(6)).is_zero());
  CHECK(spin(perm, unit_vector(6, 0)) == Subspace::full(6));
  Vector d = unit_vector(6, 0);
  d[1] = -1;
  const Subspace sum_zero = spin(perm, d);
  CHECK(sum_zero.dim() == 5);
  for (const auto& v : sum_zero.vectors()) {
    Rational total;
    for (const auto& x : v) total += x;
    CHECK(total == 0);
  }
  CHECK(spin(perm, ones(6)).dim() == 1);
  // closure under inverses comes for free
  CHECK(witness_oracle(perm, sum_zero));
}

TEST_CASE("Burnside dimension") {
  const auto [d6, v6] = burnside_dimension(tym_standard(6, 2));
  CHECK(d6 == 36);
  CHECK(v6.tag == IrreducibilityTag::AbsolutelyIrreducible);
  CHECK(v6.algebra_dim == std::optional<std::size_t>(36));

  const auto [d1, v1] = burnside_dimension(character_rep(5, 2));
  CHECK(d1 == 1);
  CHECK(v1.tag == IrreducibilityTag::AbsolutelyIrreducible);

  const auto [dp, vp] = burnside_dimension(tym_standard(6, 1));
  CHECK(dp < 36);
  CHECK(vp.tag == IrreducibilityTag::Inconclusive);
  CHECK(decide_irreducibility(tym_standard(6, 1)).tag == IrreducibilityTag::Reducible);
}

TEST_CASE("Burnside dimension agrees with a brute-force closure") {
  const std::vector<Representation> reps = {
      tym_standard(4, 2),
      tym_standard(4, 1),
      conjugate_rep(tym_standard(5, make_rational(-7, 4)), random_invertible(5, 2)),
      reduced_burau(5, 3),
      reduced_burau(4, -1),
      reduced_burau(3, make_rational(1, 2)),
      direct_sum(tym_standard(3, 2), character_rep(3, 5)),
      direct_sum(character_rep(4, 2), character_rep(4, 2)),
      coinciding_images_fixture(4),
      conjugate_rep(direct_sum(reduced_burau(4, 2), character_rep(4, 3)), random_invertible(4, 9)),
  };
  for (const auto& rep : reps) {
    const std::size_t want = algebra_dimension_oracle(rep);
    CHECK(burnside_dimension(rep).first == want);
  }
}

TEST_CASE("invariant subspace for an edgeless graph") {
  const Representation fixture = disconnected_fixture();
  REQUIRE(fixture.dim() == 6);
  REQUIRE(friendship_graph(fixture).edge_count() == 0);
  const IrreducibilityVerdict v = disconnected_invariant_subspace(fixture);
  CHECK(v.tag == IrreducibilityTag::Reducible);
  REQUIRE(v.witness);
  CHECK(v.witness->dim() <= 4);
  CHECK(witness_oracle(fixture, *v.witness));

  // rebuild x_1..x_{n-1} and check the action formulas directly
  const std::size_t n = 5;
  const Matrix a1 = deformation(fixture, 1);
  const Rational lambda = -4;  // A_1 restricted to its image acts by -(1 + t), t = 3
  const Subspace eig = intersect(image_basis(a1), kernel_basis(a1 - lambda * Matrix::identity(6)));
  REQUIRE(eig.dim() == 1);
  std::vector<Vector> x(n);
  x[1] = eig.vectors().front();
  for (std::size_t i = 1; i + 1 < n; ++i) x[i + 1] = deformation(fixture, i + 1) * x[i];
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      const Vector got = deformation(fixture, j) * x[i];
      if (j + 1 == i) CHECK(got == scaled(x[i - 1], -(1 + lambda)));
      else if (j == i) CHECK(got == scaled(x[i], lambda));
      else if (j == i + 1) CHECK(got == x[i + 1]);
      else CHECK(is_zero(got));
    }

  const IrreducibilityVerdict t = disconnected_invariant_subspace(direct_sum(character_rep(5, 1), character_rep(5, 1)));
  CHECK(t.tag == IrreducibilityTag::Reducible);
  CHECK(t.witness->dim() == 1);
  CHECK_THROWS_AS(disconnected_invariant_subspace(tym_standard(6, 2)), PreconditionError);
}

TEST_CASE("eigenvector chain needs a rational eigenvalue") {
  // rotation by 90 degrees on a 2-dim block: A_1 has no rational eigenvector
  const Matrix rot{{0, -1}, {1, 0}};
  const Representation iso(2, {rot});
  CHECK_THROWS_AS(disconnected_invariant_subspace(iso), NeedsFieldExtension);
}

TEST_CASE("neighbour identities when neighbours are not friends") {
  const Representation triv = direct_sum(character_rep(6, 1), character_rep(6, 1));
  CHECK(lemma_bb_check(triv, 1, 2));
  CHECK(lemma_bb_check(triv, 0, 5));
  const Representation fixture = disconnected_fixture();
  for (std::size_t i = 0; i < 5; ++i) CHECK(lemma_bb_check(fixture, i, (i + 1) % 5));
  CHECK_THROWS_AS(lemma_bb_check(tym_standard(6, 2), 1, 2), PreconditionError);
  CHECK_THROWS_AS(lemma_bb_check(fixture, 1, 3), PreconditionError);
}

TEST_CASE("chain basis") {
  const ChainBasis cb = chain_basis(tym_standard(6, 2));
  CHECK(cb.basis == Matrix::identity(6));
  CHECK(cb.checks.intersections_spanned == 6);
  CHECK(cb.checks.returns_to_previous == 6);
  CHECK(cb.checks.columns_independent);

  const Matrix p = random_invertible(7, 12);
  const Representation rep = conjugate_rep(tym_standard(7, 3), p);
  const ChainBasis cp = chain_basis(rep);
  // the chain of the conjugate is P^{-1} times a rescaled standard chain
  const Matrix back = p * cp.basis;
  for (std::size_t c = 0; c < 7; ++c)
    for (std::size_t r = 0; r < 7; ++r) CHECK((r == c) == (sgn(back(r, c)) != 0));
  CHECK(cp.checks.intersections_spanned == 7);
  CHECK(cp.checks.returns_to_previous == 7);

  CHECK_THROWS_AS(chain_basis(coinciding_images_fixture(6)), ReducibleSignal);
  CHECK_THROWS_AS(chain_basis(tym_standard(6, 1)), PreconditionError);
  CHECK_THROWS_AS(chain_basis(reduced_burau(6, 2)), PreconditionError);
  CHECK_THROWS_AS(chain_basis(tym_standard(3, 2)), PreconditionError);
}

TEST_CASE("standard form extraction") {
  const StandardFormResult plain = extract_standard_form(tym_standard(6, 2));
  CHECK(plain.u == 2);
  CHECK(plain.basis == Matrix::identity(6));
  CHECK(plain.conjugation_exact);

  const Rational u = make_rational(5, 3);
  const Representation rep = conjugate_rep(tym_standard(8, u), random_invertible(8, 77));
  const StandardFormResult sf = extract_standard_form(rep);
  CHECK(sf.u == u);
  CHECK(sf.u_values == std::vector<Rational>(7, u));
  const Representation target = tym_standard(8, u);
  const Matrix cinv = inverse(sf.basis);
  for (std::size_t i = 1; i < 8; ++i) CHECK(cinv * rep.generator(i) * sf.basis == target.generator(i));

  // any nonzero multiple of a_0 gives the same chain up to scale, so the same u
  for (long s : {-3L, 2L, 7L}) {
    Matrix scaled = sf.basis;
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c) scaled(r, c) *= s;
    const Matrix sinv = inverse(scaled);
    for (std::size_t i = 1; i < 8; ++i) CHECK(sinv * rep.generator(i) * scaled == target.generator(i));
  }

  CHECK_THROWS_AS(extract_standard_form(tym_standard(6, 1)), PreconditionError);
}

TEST_CASE("H operator") {
  const Representation rep = tym_standard(6, 2);
  Vector x(6);
  x[3] = 3;
  CHECK(h_operator(rep, 4) * x == scaled(unit_vector(6, 3), 3));

  for (const Rational& u : {Rational(2), make_rational(-7, 4), Rational(5)}) {
    for (std::size_t n : {4, 6, 7}) {
      const Representation t = tym_standard(n, u);
      for (std::size_t i = 1; i <= n; ++i) {
        const Matrix a = deformation(t, i + n - 1);
        const Matrix b = deformation(t, i);
        const Matrix h = h_operator(t, i);
        CHECK(h == b + b * b + b * a * b);
        Matrix want = Matrix::zero(n, n);
        want((i - 1) % n, (i - 1) % n) = u - 1;
        CHECK(h == want);
      }
    }
  }
}

TEST_CASE("irreducibility of the standard family") {
  const IrreducibilityVerdict red = tym_irreducibility(6, 1);
  CHECK(red.tag == IrreducibilityTag::Reducible);
  REQUIRE(red.witness);
  CHECK(red.witness->dim() == 1);
  CHECK(red.witness->contains(ones(6)));
  CHECK(witness_oracle(tym_standard(6, 1), *red.witness));

  const IrreducibilityVerdict irr = tym_irreducibility(6, 2);
  CHECK(irr.tag == IrreducibilityTag::AbsolutelyIrreducible);
  CHECK(irr.algebra_dim == std::optional<std::size_t>(36));
  CHECK_THROWS_AS(tym_irreducibility(6, 0), InputError);

  for (std::size_t n = 3; n <= 7; ++n)
    for (const Rational& u : {Rational(-1), make_rational(1, 2), Rational(3)}) {
      const IrreducibilityVerdict v = tym_irreducibility(n, u, n);
      CHECK(v.tag == IrreducibilityTag::AbsolutelyIrreducible);
      CHECK(burnside_dimension(tym_standard(n, u)).second.tag == v.tag);
    }
}

TEST_CASE("dimension bound") {
  CHECK(dimension_bound_check(tym_standard(6, 2)));
  CHECK(dimension_bound_check(tym_standard(9, 4)));
  CHECK_THROWS_AS(dimension_bound_check(reduced_burau(6, 2)), PreconditionError);
  CHECK_THROWS_AS(dimension_bound_check(tym_standard(4, 2)), PreconditionError);
  CHECK_THROWS_AS(dimension_bound_check(tym_standard(6, 1)), PreconditionError);
}

TEST_CASE("witness search finds invariant subspaces of direct sums") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    const Representation a = trial % 3 == 0 ? reduced_burau(n, 2 + static_cast<long>(trial)) : tym_standard(n, 2);
    const Representation b = trial % 2 ? character_rep(n, 3) : reduced_burau(n, -2);
    const Representation sum = conjugate_rep(direct_sum(a, b), random_invertible(a.dim() + b.dim(), rng()));
    const IrreducibilityVerdict v = decide_irreducibility(sum, {static_cast<std::uint64_t>(trial), 16});
    CHECK(v.tag == IrreducibilityTag::Reducible);
    REQUIRE(v.witness);
    CHECK(witness_oracle(sum, *v.witness));
    CHECK(is_invariant_witness(sum, *v.witness));
  }
}

TEST_CASE("analysis examples") {
  const AnalysisReport rt = analyze(conjugate_rep(tym_standard(7, 4), random_invertible(7, 9)));
  CHECK(rt.corank == std::optional<std::size_t>(2));
  CHECK(rt.graph_is_chain);
  CHECK(rt.irreducibility.tag == IrreducibilityTag::AbsolutelyIrreducible);
  REQUIRE(rt.standard_form);
  CHECK(rt.standard_form->u == 4);
  CHECK(rt.main_theorem_applies);
  CHECK(rt.corollary_applies);
  CHECK(rt.dimension_bound_holds == std::optional<bool>(true));

  const AnalysisReport fixed = analyze(tym_standard(6, 1));
  CHECK(fixed.corank == std::optional<std::size_t>(1));
  CHECK(fixed.irreducibility.tag == IrreducibilityTag::Reducible);
  REQUIRE(fixed.irreducibility.witness);
  CHECK(fixed.irreducibility.witness->dim() == 1);
  CHECK(fixed.irreducibility.witness->contains(ones(6)));

  const Representation sum = direct_sum(tym_standard(6, 2), character_rep(6, 3));
  const AnalysisReport ds = analyze(sum);
  CHECK(ds.irreducibility.tag == IrreducibilityTag::Reducible);
  REQUIRE(ds.irreducibility.witness);
  CHECK(ds.irreducibility.witness->dim() == 6);
  CHECK(witness_oracle(sum, *ds.irreducibility.witness));
  CHECK_FALSE(ds.standard_form);

  const AnalysisReport triv = analyze(direct_sum(character_rep(6, 1), character_rep(6, 1)));
  CHECK(triv.corank == std::optional<std::size_t>(0));
  CHECK(triv.irreducibility.tag == IrreducibilityTag::Reducible);

  const AnalysisReport odd(analyze(Representation(3, {Matrix{{2, 0}, {0, 1}}, Matrix{{2, 0}, {0, 3}}})));
  CHECK_FALSE(odd.notes.empty());

  const Json j = report_to_json(rt);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  const std::vector<std::string> head{"relations", "corank", "graph", "irreducibility", "standard_form", "seed"};
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 6) == head);
  CHECK(j["standard_form"]["u"] == "4");
  CHECK(j["graph"]["distance_set"] == Json::array({1}));
  CHECK(j["graph"]["class"] == "ContainsChain");
}

TEST_CASE("extracted u is a conjugation invariant for n = 6..10") {
  std::vector<Rational> us;
  for (long p : {2L, 3L, -1L, -2L, 5L, -7L, 4L, -5L})
    for (long q : {1L, 3L, 4L}) us.push_back(make_rational(p, q));
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end()), us.end());
  us.erase(std::remove(us.begin(), us.end(), Rational(1)), us.end());
  REQUIRE(us.size() >= 20);
  std::uint64_t seed = 1;
  for (std::size_t n = 6; n <= 10; ++n)
    for (const Rational& u : us) {
      const Representation rep = conjugate_rep(tym_standard(n, u), random_invertible(n, seed++));
      const AnalysisReport report = analyze(rep, {seed, 4});
      REQUIRE(report.standard_form);
      CHECK(report.standard_form->u == u);
      CHECK(report.notes.empty());
    }
}

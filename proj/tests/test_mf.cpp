#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mfcat/corpus.hpp"
#include "mfcat/errors.hpp"
#include "mfcat/mf.hpp"
#include "mfcat/stabilize.hpp"

using namespace mfcat;

namespace {

RingCtx R1 = RingCtx::standard(1);
RingCtx R2 = RingCtx::standard(2);

Series P(const std::string& s, const RingCtx& ctx = R1) { return parse_series(s, ctx); }

MatrixFactorization rank1(const std::string& phi, const std::string& psi, const std::string& w,
                          const RingCtx& ctx = R1) {
  return MatrixFactorization(P(w, ctx), RMatrix::from_rows(ctx, {{P(phi, ctx)}}),
                             RMatrix::from_rows(ctx, {{P(psi, ctx)}}));
}

const MatrixFactorization X = rank1("x", "x^2", "x^3");

}  // namespace

TEST_CASE("verify_mf") {
  CHECK(verify_mf(elliptic_factorization()));
  CHECK(verify_mf(MatrixFactorization::trivial(P("x^3"))));
  CHECK_FALSE(verify_mf(rank1("x", "x", "x^3")));
  CHECK(verify_mf(X));
}

TEST_CASE("shift") {
  CHECK(shift(shift(X)) == X);
  MatrixFactorization s = shift(X);
  CHECK(s.phi()(0, 0) == P("-x^2"));
  CHECK(s.psi()(0, 0) == P("-x"));
  CHECK(verify_mf(s));
  MatrixFactorization t = shift(MatrixFactorization::trivial(P("x^3")));
  CHECK(t.phi()(0, 0) == P("-x^3"));
  CHECK(t.psi()(0, 0) == P("-1"));
  CHECK(verify_mf(t));
}

TEST_CASE("dual") {
  MatrixFactorization d = dual(MatrixFactorization::trivial(P("x^3")));
  CHECK(d.potential() == P("-x^3"));
  CHECK(verify_mf(d));
  CHECK(verify_mf(dual(X)));
  CHECK(dual(X).potential() == P("-x^3"));
  MatrixFactorization e = elliptic_factorization();
  CHECK(dual(dual(e)) == e);
}

TEST_CASE("direct sums") {
  MatrixFactorization z = MatrixFactorization::zero(P("x^3"));
  CHECK(direct_sum(X, z) == X);
  MatrixFactorization s = direct_sum(X, rank1("x^2", "x", "x^3"));
  CHECK(s.rank() == 2);
  CHECK(verify_mf(s));
  Dims d = cohomology_mod_k(X);
  CHECK(cohomology_mod_k(direct_sum(X, X)) == Dims{2 * d.even, 2 * d.odd});
}

TEST_CASE("cones") {
  CHECK(cohomology_mod_k(cone(MFMorphism::identity(X))) == Dims{0, 0});
  MatrixFactorization y = rank1("x^2", "x", "x^3");
  CHECK(cone(MFMorphism::zero(X, y)) == direct_sum(shift(X), y));
  MatrixFactorization c = cone(MFMorphism::multiplication(X, P("x")));
  CHECK(c.rank() == 2);
  CHECK(verify_mf(c));
  RMatrix one = RMatrix::identity(R1, 1);
  CHECK_THROWS_AS(cone(MFMorphism(X, y, one, one, 0)), PreconditionError);
}

TEST_CASE("external tensor") {
  MatrixFactorization a = rank1("x", "x", "x^2");
  MatrixFactorization b = rank1("x", "x", "x^2");
  MatrixFactorization t = external_tensor(a, b);
  CHECK(t.rank() == 2);
  CHECK(verify_mf(t));
  CHECK(t.potential() == P("x^2 + x'^2", RingCtx::concat(R1, R1)));
  MatrixFactorization q = external_tensor(X, MatrixFactorization::trivial(P("x^2")));
  CHECK(cohomology_mod_k(q) == Dims{0, 0});
  MatrixFactorization e = external_tensor(elliptic_factorization(), X);
  CHECK(e.rank() == 2 * 3 * 1);
  CHECK(verify_mf(e));
}

TEST_CASE("integral transforms") {
  Series w = P("x^2");
  MatrixFactorization k = stabilize_residue_field(w);
  MatrixFactorization diag = stabilized_diagonal(w);
  TransformResult t = integral_transform(k, diag);
  CHECK(verify_mf(t.mf));
  CHECK(transform_cohomology(t) == cohomology_mod_k(k));
  CHECK(transform_cohomology(integral_transform(k, shift(diag))) == cohomology_mod_k(shift(k)));
  TransformResult triv = integral_transform(MatrixFactorization::trivial(w), diag);
  CHECK(transform_cohomology(triv) == Dims{0, 0});
  CHECK_THROWS_AS(integral_transform(X, diag), PreconditionError);
}

TEST_CASE("hom complexes") {
  Z2Complex h = hom_complex(X, X);
  CHECK(h.even_rank() == 2);
  CHECK(h.odd_rank() == 2);
  CHECK(h.verify());
  MatrixFactorization t = MatrixFactorization::trivial(P("x^3"));
  CHECK(cohomology_mod_k(hom_complex(t, t)) == Dims{0, 0});
  MatrixFactorization y = rank1("x^2", "x", "x^3");
  CHECK(cohomology_over_R(hom_complex(X, y)) == cohomology_over_R(hom_complex(y, X)));
}

TEST_CASE("cohomology modulo m") {
  CHECK(cohomology_mod_k(MatrixFactorization::trivial(P("x^3"))) == Dims{0, 0});
  CHECK(cohomology_mod_k(stabilize_residue_field(P("x^3"))) == Dims{1, 1});
}

TEST_CASE("cohomology over R") {
  Series w = P("x^3");
  Z2Complex kos = koszul_complex({partial_derivative(w, 0)});
  CHECK(cohomology_over_R(kos) == Dims{2, 0});
  MatrixFactorization k = stabilize_residue_field(P("x^2"));
  CHECK(cohomology_over_R(hom_complex(k, k)) == Dims{1, 1});
  // a unit entry splits off a contractible summand
  RMatrix d0 = RMatrix::from_rows(R1, {{P("1"), P("0")}, {P("0"), P("x")}});
  Z2Complex c(d0, RMatrix(R1, 2, 2));
  Z2Complex small(RMatrix::from_rows(R1, {{P("x")}}), RMatrix(R1, 1, 1));
  CHECK(cohomology_over_R(small) == Dims{0, 1});
  CHECK(cohomology_over_R(c) == cohomology_over_R(small));
  OverRReport r = cohomology_over_R_report(kos);
  CHECK(r.stabilized_at >= 1);
}

TEST_CASE("stabilization cap") {
  // x * id on R^1 has infinite-length cohomology R/(x) in two variables
  RMatrix d0 = RMatrix::from_rows(R2, {{P("x", R2)}});
  Z2Complex c(d0, RMatrix(R2, 1, 1));
  StabilizationOptions o;
  o.n_max = 8;
  CHECK_THROWS_AS(cohomology_over_R(c, o), StabilizationError);
}

TEST_CASE("quasi-isomorphisms") {
  MatrixFactorization k = stabilize_residue_field(P("x^3"));
  CHECK(is_quasi_iso(MFMorphism::identity(k)));
  CHECK_FALSE(is_quasi_iso(MFMorphism::zero(k, k)));
  MatrixFactorization y = direct_sum(k, MatrixFactorization::trivial(P("x^3")));
  RMatrix inc(R1, 2, 1);
  inc(0, 0) = P("1");
  CHECK(is_quasi_iso(MFMorphism(k, y, inc, inc, 0)));
  RMatrix one = RMatrix::identity(R1, 1);
  CHECK_THROWS_AS(is_quasi_iso(MFMorphism(X, rank1("x^2", "x", "x^3"), one, one, 0)), PreconditionError);
}

TEST_CASE("shape and context checks") {
  CHECK_THROWS_AS(MatrixFactorization(P("x^2"), RMatrix::identity(R1, 2), RMatrix::identity(R1, 1)),
                  PreconditionError);
  CHECK_THROWS_AS(MatrixFactorization(P("x^2"), RMatrix::identity(R2, 1), RMatrix::identity(R2, 1)),
                  ContextMismatch);
}

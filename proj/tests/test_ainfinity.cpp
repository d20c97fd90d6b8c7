#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mfcat/ainfinity.hpp"
#include "mfcat/errors.hpp"

using namespace mfcat;

namespace {

RingCtx R1 = RingCtx::standard(1);
RingCtx R2 = RingCtx::standard(2);
RingCtx R3 = RingCtx::standard(3);

Series P(const std::string& s, const RingCtx& ctx = R1) { return parse_series(s, ctx); }

SuperOp S(const std::string& s, const RingCtx& ctx = R1) { return SuperOp::from_series(P(s, ctx)); }

Scalar abs(const Scalar& s) {
  mpq_class q = s.to_rational();
  return Scalar(q < 0 ? mpq_class(-q) : q);
}

}  // namespace

TEST_CASE("super operators: canonical anticommutation") {
  SuperOp t1 = SuperOp::theta(R2, 0), t2 = SuperOp::theta(R2, 1);
  SuperOp d1 = SuperOp::dtheta(R2, 0), d2 = SuperOp::dtheta(R2, 1);
  SuperOp one = S("1", R2);
  CHECK(graded_commutator(d1, t1) == one);
  CHECK(graded_commutator(d1, t2).is_zero());
  CHECK((t1 * t1).is_zero());
  CHECK((d2 * d2).is_zero());
  CHECK(t2 * t1 == -(t1 * t2));
  CHECK(d1 * t1 == one - t1 * d1);
  CHECK(graded_commutator(S("x", R2), t1).is_zero());
  CHECK((t1 * d1).parity() == 0u);
  CHECK((t1 + one).x_degree() == 0);
  CHECK_THROWS_AS((t1 + one).parity(), PreconditionError);
}

TEST_CASE("super operators: associativity") {
  SuperOp a = SuperOp::theta(R3, 0) * SuperOp::dtheta(R3, 2) + S("x*y", R3) * SuperOp::dtheta(R3, 1);
  SuperOp b = SuperOp::dtheta(R3, 0) + S("z", R3) * SuperOp::theta(R3, 2) * SuperOp::theta(R3, 1);
  SuperOp c = SuperOp::theta(R3, 1) * SuperOp::dtheta(R3, 0) * SuperOp::theta(R3, 0) + S("1", R3);
  CHECK((a * b) * c == a * (b * c));
  CHECK(multiply(S("x^2", R3), S("y", R3), 2).is_zero());
}

TEST_CASE("dg algebra differential") {
  DgAlgebra a(P("x^3"));
  SuperOp t = SuperOp::theta(R1, 0), d = SuperOp::dtheta(R1, 0);
  CHECK(a.d(t) == S("x"));
  CHECK(a.d(d) == S("x^2"));
  CHECK(a.d(S("1")).is_zero());
  CHECK(a.commutator_differential(t) == a.d(t));
  CHECK(a.commutator_differential(d) == a.d(d));
  // delta^2 = w, so [delta, delta] = 2w
  CHECK(a.commutator_differential(a.delta()) == S("2*x^3"));
  SuperOp m = t * d * S("x");
  CHECK(a.commutator_differential(m) == a.d(m));
  CHECK(a.d(a.d(m)).is_zero());
}

TEST_CASE("contraction for one variable") {
  Contraction c = build_contraction(P("x^3"));
  REQUIRE(c.dim() == 2);
  CHECK(c.label(0) == "1");
  CHECK(c.label(1) == "dbar1");
  CHECK(c.parity(1) == 1);
  CHECK(c.iota(1) == SuperOp::dtheta(R1, 0) - S("x") * SuperOp::theta(R1, 0));
  CHECK(c.h(S("1")).is_zero());
  CHECK(c.h(S("5")).is_zero());
  CHECK(homotopy_identity_failures(c, 5) == 0);
  CHECK(m1_vanishes(c));
}

TEST_CASE("contraction in several variables") {
  Contraction q = build_contraction(P("x^2+y^2", R2));
  CHECK(q.dim() == 4);
  CHECK(q.iota(1) == SuperOp::dtheta(R2, 0) - SuperOp::theta(R2, 0));
  CHECK(homotopy_identity_failures(q, 3) == 0);
  Contraction d4 = build_contraction(P("x^2*y+y^3", R2));
  CHECK(homotopy_identity_failures(d4, 4) == 0);
  Contraction e = build_contraction(P("x^3+y^3+z^3-3*x*y*z", R3));
  CHECK(e.dim() == 8);
  CHECK(homotopy_identity_failures(e, 4) == 0);
}

TEST_CASE("minimal model in one variable: m_i(dbar, ..., dbar) = +-r_i") {
  AInfStructure m = transfer_minimal_model(P("x^2+x^3"), 3);
  const std::size_t d = m.index_of("dbar1");
  CHECK(abs(m.coefficient({d, d}, 0)) == Scalar(1));
  CHECK(abs(m.coefficient({d, d, d}, 0)) == Scalar(1));

  m = transfer_minimal_model(P("3*x^2 - 2*x^4 + 5/2*x^5"), 6);
  CHECK(abs(m.coefficient({d, d}, 0)) == Scalar(3));
  CHECK(m.coefficient({d, d, d}, 0).is_zero());
  CHECK(abs(m.coefficient({d, d, d, d}, 0)) == Scalar(2));
  CHECK(abs(m.coefficient({d, d, d, d, d}, 0)) == Scalar(mpq_class(5, 2)));
  CHECK(m.coefficient({d, d, d, d, d, d}, 0).is_zero());
  CHECK(check_stasheff(m, 6).ok());
}

TEST_CASE("minimal model of x^2: Clifford on one generator") {
  AInfStructure m = transfer_minimal_model(P("x^2"), 4);
  const std::size_t d = m.index_of("dbar1");
  CHECK(m.coefficient({d, d}, 0) == Scalar(-1));
  CHECK(m.value({d, d, d}) == std::vector<Scalar>(2, Scalar(0)));
  CHECK(clifford_check(P("x^2")));
}

TEST_CASE("minimal model of x^2 y + y^3") {
  AInfStructure m = transfer_minimal_model(P("x^2*y+y^3", R2), 4);
  const std::size_t d1 = m.index_of("dbar1"), d2 = m.index_of("dbar2");
  CHECK(abs(m.coefficient({d1, d1, d2}, 0)) == Scalar(1));
  CHECK(check_stasheff(m, 5).ok());
}

TEST_CASE("Clifford check") {
  CHECK(clifford_check(P("x^2+y^2", R2)));
  CHECK(clifford_check(P("x^2 + 2*y^2 - 3*z^2", R3), 4));
  CHECK_THROWS_AS(clifford_check(P("x^3")), PreconditionError);
  CHECK_THROWS_AS(clifford_check(P("x*y", R2)), PreconditionError);
  RingCtx p2({"x"}, FieldSpec::prime(2));
  CHECK_THROWS_AS(clifford_check(parse_series("x^2", p2)), PreconditionError);
  std::vector<std::uint32_t> basis{0b00, 0b01, 0b10, 0b11};
  auto v = clifford_product({Scalar(1), Scalar(2)}, 0b01, 0b01, basis);
  CHECK(v[0] == Scalar(-1));
  v = clifford_product({Scalar(1), Scalar(2)}, 0b10, 0b01, basis);
  CHECK(v[3] == Scalar(-1));
}

TEST_CASE("prime characteristic") {
  RingCtx p5({"x"}, FieldSpec::prime(5));
  AInfStructure m = transfer_minimal_model(parse_series("x^2 + x^3", p5), 4);
  CHECK(m.field.modulus() == 5);
  CHECK(check_stasheff(m, 4).ok());
}

TEST_CASE("arity cap") {
  CHECK_THROWS_AS(transfer_minimal_model(P("x^3"), 1), PreconditionError);
  CHECK_THROWS_AS(transfer_minimal_model(P("x^3"), 9), PreconditionError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mfcat/errors.hpp"
#include "mfcat/linalg.hpp"
#include "mfcat/matrix.hpp"
#include "mfcat/ring.hpp"

using namespace mfcat;

namespace {

RingCtx R1 = RingCtx::standard(1);
RingCtx R2 = RingCtx::standard(2);
RingCtx R3 = RingCtx::standard(3);

Series P(const std::string& s, const RingCtx& ctx) { return parse_series(s, ctx); }

}  // namespace

TEST_CASE("scalars over Q and Z/p") {
  CHECK(Scalar::parse("-3/6", {}).to_string() == "-1/2");
  FieldSpec p7 = FieldSpec::prime(7);
  CHECK(Scalar::parse("1/2", p7).to_string() == "4");
  CHECK((Scalar(3, p7) * Scalar(5, p7)).to_string() == "1");
  CHECK(Scalar(-1, p7).to_string() == "6");
  CHECK_THROWS_AS(FieldSpec::prime(8), PreconditionError);
  CHECK_THROWS_AS(Scalar(1) + Scalar(1, p7), ContextMismatch);
  CHECK_THROWS_AS(Scalar(0).inverse(), PreconditionError);
  CHECK_THROWS_AS(Scalar::parse("1/0", {}), ParseError);
  CHECK(FieldSpec::parse("prime:101").modulus() == 101);
  CHECK_THROWS_AS(FieldSpec::parse("reals"), ParseError);
}

TEST_CASE("series products") {
  CHECK(P("x", R1) * P("x", R1) == P("x^2", R1));
  CHECK(P("x+y", R2) * P("x-y", R2) == P("x^2-y^2", R2));
  RingCtx t2 = R1.with_truncation(2);
  CHECK(P("x+x^2", t2) * P("1+x", t2) == P("x+2*x^2", t2));
  CHECK(P("(1+x)^5", R1).coefficient(Exponent::unit(0)) == Scalar(5));
  CHECK((P("x^2*y - 3/2*y^3", R2) * P("0", R2)).is_zero());
  CHECK_THROWS_AS(P("x", R1) + P("x", R2), ContextMismatch);
}

TEST_CASE("graded-lex order of terms") {
  Series s = P("y^2 + x*y + x^2 + y + x + 1", R2);
  CHECK(s.to_string() == "1 + x + y + x^2 + x*y + y^2");
}

TEST_CASE("parser") {
  CHECK(P("3/2*x^2 - (x+y)^2 + 2*x*y", R2) == P("1/2*x^2 - y^2", R2));
  CHECK(P("-x", R1) == -P("x", R1));
  CHECK_THROWS_AS(P("x^", R1), ParseError);
  CHECK_THROWS_AS(P("z", R2), ParseError);
  CHECK_THROWS_AS(P("x/y", R2), ParseError);
  CHECK_THROWS_AS(P("(x", R1), ParseError);
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(P("x^3", R1), 0) == P("3*x^2", R1));
  CHECK(partial_derivative(P("x^2*y + y^3", R2), 1) == P("x^2 + 3*y^2", R2));
  CHECK(partial_derivative(P("x^3+y^3+z^3-3*x*y*z", R3), 0) == P("3*x^2 - 3*y*z", R3));
}

TEST_CASE("split by variable") {
  auto s = split_by_variable(P("x^3", R1), 0);
  CHECK(s.quotient == P("x^2", R1));
  CHECK(s.remainder.is_zero());
  s = split_by_variable(P("x^2*y + y^3", R2), 0);
  CHECK(s.quotient == P("x*y", R2));
  CHECK(s.remainder == P("y^3", R2));
  s = split_by_variable(P("7", R1), 0);
  CHECK(s.quotient.is_zero());
  CHECK(s.remainder == P("7", R1));
}

TEST_CASE("difference quotients") {
  RingCtx d1 = R1.doubled();
  CHECK(difference_quotient(P("x^2", R1), 0) == P("x + x'", d1));
  CHECK(difference_quotient(P("x", R1), 0) == P("1", d1));
  // telescoping: sum (x_i - y_i) q_i = w(x) - w(y)
  for (const char* w : {"x*y", "x^2*y + y^3", "x^3 + 2*x*y^2 - y^4"}) {
    Series f = P(w, R2);
    RingCtx d = R2.doubled();
    Series sum(d);
    for (std::size_t i = 0; i < 2; ++i) {
      sum += (Series::variable(d, i) - Series::variable(d, i + 2)) * difference_quotient(f, i);
    }
    CHECK(sum == embed_shifted(f, d, 0) - embed_shifted(f, d, 2));
  }
}

TEST_CASE("residue map") {
  CHECK(residue_map(P("3 + x + x^2", R1)) == Scalar(3));
  CHECK(residue_map(P("x^5", R1)).is_zero());
  CHECK(residue_map(P("(1+x)*(1-x)", R1)) == Scalar(1));
}

TEST_CASE("monomial basis") {
  CHECK(monomial_basis(R1, 2).size() == 3);
  auto b = monomial_basis(R2, 1);
  REQUIRE(b.size() == 3);
  CHECK(b[1] == Exponent::unit(0));
  CHECK(b[2] == Exponent::unit(1));
  CHECK(monomial_basis(R2, 2).size() == 6);
  CHECK(monomial_count(3, 4) == 35);
}

TEST_CASE("peeling") {
  auto p = peel_variables(P("x^2*y + y^3", R2), PeelOrder::kIndexOrder);
  CHECK(p.parts[0] == P("x*y", R2));
  CHECK(p.parts[1] == P("y^2", R2));
  p = peel_variables(P("x^2+y^2", R2), PeelOrder::kReverseOrder);
  CHECK(p.parts[0] == P("x", R2));
  CHECK(p.parts[1] == P("y", R2));
}

TEST_CASE("ring contexts") {
  RingCtx r = RingCtx::parse("x,y;prime:5;trunc=7");
  CHECK(r.n_vars() == 2);
  CHECK(r.field().modulus() == 5);
  CHECK(r.truncation() == 7);
  CHECK(RingCtx::concat(R2, R2).name(2) == "x'");
  CHECK_THROWS_AS(RingCtx::parse("x,x"), ParseError);
  CHECK_THROWS_AS(RingCtx({"x", "x"}), PreconditionError);
}

TEST_CASE("echelon rank is insertion-order independent") {
  RowEchelon a, b;
  SparseVector u{{0, Scalar(1)}, {2, Scalar(1)}}, v{{1, Scalar(2)}, {2, Scalar(-1)}},
      s{{0, Scalar(1)}, {1, Scalar(2)}};
  CHECK(a.insert(u));
  CHECK(a.insert(v));
  CHECK_FALSE(a.insert(s));
  CHECK(b.insert(s));
  CHECK(b.insert(v));
  CHECK(a.pivots() == b.pivots());
  CHECK(a.contains(SparseVector{{0, Scalar(2)}, {1, Scalar(4)}}));
}

TEST_CASE("determinant and adjugate") {
  Series w = P("x^3+y^3+z^3-3*x*y*z", R3);
  RMatrix phi = RMatrix::from_rows(R3, {{P("x", R3), P("y", R3), P("z", R3)},
                                        {P("z", R3), P("x", R3), P("y", R3)},
                                        {P("y", R3), P("z", R3), P("x", R3)}});
  CHECK(determinant(phi) == w);
  CHECK(phi * adjugate(phi) == RMatrix::scalar(w, 3));
  RMatrix k = kron(RMatrix::identity(R3, 2), phi);
  CHECK(k.rows() == 6);
  CHECK(k(4, 5) == P("y", R3));
}

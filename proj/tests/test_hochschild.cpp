#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mfcat/corpus.hpp"
#include "mfcat/errors.hpp"
#include "mfcat/hochschild.hpp"
#include "oracles.hpp"

using namespace mfcat;

namespace {

RingCtx R1 = RingCtx::standard(1);
RingCtx R2 = RingCtx::standard(2);
RingCtx R3 = RingCtx::standard(3);

Series P(const std::string& s, const RingCtx& ctx = R1) { return parse_series(s, ctx); }

oracle::Poly to_oracle(const Series& s) {
  oracle::Poly p;
  for (const auto& [e, c] : s.terms()) {
    oracle::Mono m(s.ctx().n_vars());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<int>(e[i]);
    p[m] = c.to_rational();
  }
  return p;
}

bool homogeneous(const Series& s) {
  for (const auto& [e, c] : s.terms()) {
    if (e.degree() != s.degree()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Milnor numbers") {
  for (unsigned n = 2; n <= 7; ++n) {
    CHECK(jacobian_report(P("x^" + std::to_string(n))).milnor_number == n - 1);
  }
  CHECK(jacobian_report(P("x^2+y^2+z^2", R3)).milnor_number == 1);
  JacobianReport r = jacobian_report(P("x^3+y^3", R2));
  CHECK(r.milnor_number == 4);
  REQUIRE(r.monomial_basis.size() == 4);
  CHECK(r.monomial_basis[3] == Exponent::unit(0) + Exponent::unit(1));
  CHECK(jacobian_report(P("x^2*y+y^3", R2)).milnor_number == 4);
}

TEST_CASE("Tyurina numbers") {
  CHECK(jacobian_report(P("x^2*y+y^3", R2)).tyurina_number == 4);
  // E_12 with its modulus switched on: x^3 + y^7 + x y^5 has mu = 12, tau = 11
  JacobianReport r = jacobian_report(P("x^3+y^7+x*y^5", R2));
  CHECK(r.milnor_number == 12);
  CHECK(r.tyurina_number == 11);
  CHECK(jacobian_report(P("x^3+y^7", R2)).tyurina_number == 12);
}

TEST_CASE("non-isolated singularities do not settle") {
  CHECK_THROWS_AS(jacobian_report(P("x^2", R2), 12), StabilizationError);
  CHECK_THROWS_AS(jacobian_report(P("x^3+y^3+z^3-3*x*y*z", R3), 12), StabilizationError);
}

TEST_CASE("local quotient") {
  QuotientLevel q = local_quotient({P("x^2"), }, 5);
  CHECK(q.dim == 2);
  q = local_quotient({P("x - x^2")}, 6);
  CHECK(q.dim == 1);
}

TEST_CASE("Hochschild cohomology") {
  CHECK(hochschild_cohomology(P("x^3")) == Dims{2, 0});
  CHECK(hochschild_cohomology(P("x^2+y^2", R2)) == Dims{1, 0});
  CHECK(hochschild_cohomology(P("x^3+y^3+z^3", R3)) == Dims{8, 0});
}

TEST_CASE("Hochschild homology parity") {
  CHECK(hochschild_homology(P("x^3")) == Dims{0, 2});
  CHECK(hochschild_homology(P("x^2+y^2", R2)) == Dims{1, 0});
  CHECK(hochschild_homology(P("x^2+y^2+z^2", R3)) == Dims{0, 1});
}

TEST_CASE("two routes to HH agree") {
  CHECK(diagonal_hh_crosscheck(P("x^2")));
  CHECK(diagonal_hh_crosscheck(P("x^3")));
  CHECK(diagonal_hh_crosscheck(P("x^2+y^2", R2)));
}

TEST_CASE("Calabi-Yau parity") {
  CHECK(calabi_yau_parity_check(P("x^2")));
  CHECK(calabi_yau_parity_check(P("x^3")));
  CHECK(calabi_yau_parity_check(P("x^2+y^2", R2)));
  CHECK(calabi_yau_hom_check(P("x^2")));
  CHECK(calabi_yau_hom_check(P("x^4")));
  CHECK(calabi_yau_hom_check(P("x^2+y^2", R2)));
}

TEST_CASE("report") {
  HHReport h = hh_report(P("x^3"));
  CHECK(h.cohomology == Dims{2, 0});
  CHECK(h.homology == Dims{0, 2});
  CHECK(h.milnor == 2);
  CHECK(h.tyurina == 2);
  CHECK(h.homology_parity == 1);
  CHECK(h.periodic == h.homology);
}

TEST_CASE("frozen corpus Milnor numbers against independent oracles") {
  for (const CorpusEntry& e : corpus()) {
    auto mu = e.known_value("milnor");
    if (!e.isolated) {
      CHECK_FALSE(mu.has_value());
      continue;
    }
    REQUIRE(mu.has_value());
    CAPTURE(e.name);
    if (homogeneous(e.potential)) {
      const int deg = static_cast<int>(e.potential.degree());
      CHECK(oracle::milnor_homogeneous(to_oracle(e.potential), e.n_vars(), deg) == *mu);
      CHECK(oracle::milnor_orlik_homogeneous(e.n_vars(), deg) == *mu);
    }
    CHECK(jacobian_report(e.potential).milnor_number == static_cast<std::size_t>(*mu));
  }
}

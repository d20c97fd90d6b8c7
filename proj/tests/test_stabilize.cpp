#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mfcat/acceptance.hpp"
#include "mfcat/errors.hpp"
#include "mfcat/stabilize.hpp"

using namespace mfcat;

namespace {

RingCtx R1 = RingCtx::standard(1);
RingCtx R2 = RingCtx::standard(2);
RingCtx R3 = RingCtx::standard(3);

Series P(const std::string& s, const RingCtx& ctx = R1) { return parse_series(s, ctx); }

}  // namespace

TEST_CASE("exterior basis and signs") {
  auto b = exterior_basis(3);
  CHECK(b == std::vector<std::uint32_t>{0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111});
  CHECK(exterior_sign(0b001, 0b010) == 1);
  CHECK(exterior_sign(0b010, 0b001) == -1);
  CHECK(exterior_sign(0b110, 0b001) == 1);
  CHECK(exterior_sign(0b100, 0b011) == 1);
  CHECK(exterior_sign(0b010, 0b101) == -1);
}

TEST_CASE("Koszul factorizations") {
  KoszulData kd{P("x^3"), {P("x")}, {P("x^2")}};
  MatrixFactorization x = make_koszul_mf(kd);
  CHECK(x.rank() == 1);
  CHECK(x.phi()(0, 0) == P("x"));
  CHECK(x.psi()(0, 0) == P("x^2"));

  kd = {P("x^2"), {P("x")}, {P("x")}};
  x = make_koszul_mf(kd);
  CHECK(x.phi()(0, 0) == P("x"));
  CHECK(x.psi()(0, 0) == P("x"));

  kd = {P("x^2+y^2", R2), {P("x", R2), P("y", R2)}, {P("x", R2), P("y", R2)}};
  x = make_koszul_mf(kd);
  CHECK(x.rank() == 2);
  CHECK(verify_mf(x));

  kd = {P("x^3"), {P("x")}, {P("x")}};
  CHECK_THROWS_AS(make_koszul_mf(kd), PreconditionError);
}

TEST_CASE("random regular sequences give factorizations") {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    KoszulData kd = random_koszul_data(rng, 1 + i % 3);
    CHECK_NOTHROW(kd.check());
    MatrixFactorization x = make_koszul_mf(kd);
    CHECK(x.rank() == (1u << (kd.generators.size() - 1)));
    CHECK(verify_mf(x));
  }
}

TEST_CASE("decomposition of w") {
  CHECK(decompose_potential(P("x^3")).witnesses[0] == P("x^2"));
  auto kd = decompose_potential(P("x^2+y^2", R2));
  CHECK(kd.witnesses[0] == P("x", R2));
  CHECK(kd.witnesses[1] == P("y", R2));
  kd = decompose_potential(P("x^2*y+y^3", R2));
  CHECK(kd.witnesses[0] == P("x*y", R2));
  CHECK(kd.witnesses[1] == P("y^2", R2));
}

TEST_CASE("residue field stabilization") {
  MatrixFactorization k = stabilize_residue_field(P("x^2"));
  CHECK(k.phi()(0, 0) == P("x"));
  CHECK(k.psi()(0, 0) == P("x"));
  k = stabilize_residue_field(P("x^3"));
  CHECK(k.phi()(0, 0) == P("x"));
  CHECK(k.psi()(0, 0) == P("x^2"));
  k = stabilize_residue_field(P("x^2+y^2", R2));
  CHECK(k.rank() == 2);
  CHECK(cohomology_mod_k(k) == Dims{2, 2});
  CHECK_THROWS_AS(stabilize_residue_field(P("x")), PreconditionError);
  CHECK_THROWS_AS(stabilize_residue_field(P("1+x^2")), PreconditionError);
  CHECK_THROWS_AS(stabilize_residue_field(P("0")), PreconditionError);
}

TEST_CASE("stabilized diagonal") {
  RingCtx d1 = R1.doubled();
  MatrixFactorization d = stabilized_diagonal(P("x^2"));
  // (x - x', -(x + x')) factors x'^2 - x^2
  CHECK(d.potential() == P("x'^2 - x^2", d1));
  CHECK(d.phi()(0, 0) == P("x - x'", d1));
  CHECK(d.psi()(0, 0) == P("-x - x'", d1));
  CHECK(verify_mf(d));
  d = stabilized_diagonal(P("x^3"));
  CHECK(d.phi()(0, 0) == P("x - x'", d1));
  CHECK(d.psi()(0, 0) == P("-x^2 - x*x' - x'^2", d1));
  CHECK(verify_mf(stabilized_diagonal(P("x^3+y^3+z^3-3*x*y*z", R3))));
  CHECK_THROWS_AS(stabilized_diagonal(P("x")), PreconditionError);
}

TEST_CASE("endomorphisms of k^stab") {
  CHECK(cohomology_over_R(endomorphism_data(P("x^2")).hom) == Dims{1, 1});
  CHECK(cohomology_over_R(endomorphism_data(P("x^3")).hom) == Dims{1, 1});
  CHECK(cohomology_over_R(endomorphism_data(P("x^2+y^2", R2)).hom).total() == 4);
}

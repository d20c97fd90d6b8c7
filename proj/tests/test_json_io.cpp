#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mfcat/corpus.hpp"
#include "mfcat/errors.hpp"
#include "mfcat/json_io.hpp"

using namespace mfcat;

namespace {

RingCtx R1 = RingCtx::standard(1);
Series P(const std::string& s, const RingCtx& ctx = R1) { return parse_series(s, ctx); }

}  // namespace

TEST_CASE("series round trip") {
  RingCtx r = RingCtx::parse("x,y;prime:11;trunc=9");
  Series s = parse_series("3*x^2*y - 1/2*y^3 + 7", r);
  CHECK(series_from_json(to_json(s), r) == s);
  CHECK(to_json(P("x^2")) == R"([[[2],"1"]])");
}

TEST_CASE("ring round trip") {
  RingCtx r = RingCtx::parse("a,b,c;rational;trunc=12");
  CHECK(ring_from_json(to_json(r)) == r);
  CHECK(ring_from_json(to_json(R1)) == R1);
}

TEST_CASE("factorization round trip and canonical bytes") {
  for (const CorpusEntry& e : corpus()) {
    for (const auto& f : e.factorizations) {
      const std::string text = to_json(f.mf);
      MatrixFactorization back = mf_from_json(text);
      CHECK(back == f.mf);
      CHECK(to_json(back) == text);
    }
  }
}

TEST_CASE("morphism and Koszul data round trip") {
  MatrixFactorization k = stabilize_residue_field(P("x^3"));
  MFMorphism f = MFMorphism::multiplication(k, P("x"));
  MFMorphism g = morphism_from_json(to_json(f));
  CHECK(g.f0() == f.f0());
  CHECK(g.source() == f.source());
  KoszulData kd = decompose_potential(P("x^3"));
  KoszulData back = koszul_from_json(to_json(kd), R1);
  CHECK(back.generators == kd.generators);
  CHECK(back.witnesses == kd.witnesses);
}

TEST_CASE("A-infinity structure round trip") {
  AInfStructure m = transfer_minimal_model(P("x^2+x^3"), 3);
  AInfStructure back = ainf_from_json(to_json(m));
  CHECK(back.basis == m.basis);
  CHECK(back.products == m.products);
}

TEST_CASE("HH report format") {
  CHECK(to_json(hh_report(P("x^3"))) ==
        R"({"hh_even":2,"hh_homology_parity":1,"hh_odd":0,"hp":2,"milnor":2,"tyurina":2})");
}

TEST_CASE("potential input forms") {
  Series w = potential_from_text("x^2*y + y^3");
  CHECK(w.ctx().names() == std::vector<std::string>{"x", "y"});
  Series v = potential_from_text(R"({"ring": "y,x;rational", "potential": "x^2*y + y^3"})");
  CHECK(v.ctx().names() == std::vector<std::string>{"y", "x"});
  Series u = potential_from_text("x^3", "x;prime:7;trunc=4");
  CHECK(u.ctx().truncation() >= 6);
  CHECK_THROWS_AS(potential_from_text("x^^2"), ParseError);
  CHECK_THROWS_AS(potential_from_text(R"({"ring": 3})"), ParseError);
}

TEST_CASE("malformed factorization files") {
  CHECK_THROWS_AS(mf_from_json("{"), ParseError);
  CHECK_THROWS_AS(mf_from_json(R"({"phi": []})"), ParseError);
}

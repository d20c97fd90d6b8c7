#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mfcat/acceptance.hpp"
#include "mfcat/corpus.hpp"

using namespace mfcat;

TEST_CASE("filters select by name or family") {
  CHECK(corpus_select("A_n").size() == 6);
  CHECK(corpus_select("D_4").size() == 1);
  CHECK(corpus_select("").size() == corpus().size());
  CHECK(corpus_select("no-such-entry").empty());
}

TEST_CASE("an injected wrong Milnor number is reported") {
  std::vector<CorpusEntry> entries = corpus();
  for (auto& e : entries) {
    if (e.name == "A_2") e.known["milnor"].value = 3;
  }
  AcceptanceOptions o;
  o.entries = &entries;
  o.filter = "A_";
  CheckResult r = run_criterion(5, o);
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.failures.empty());
  for (const auto& f : r.failures) CHECK(f.rfind("A_2:", 0) == 0);
}

TEST_CASE("subset runs") {
  AcceptanceOptions o;
  o.filter = "A_n";
  CheckResult r = run_criterion(13, o);
  CHECK(r.cases == 6);
  CHECK(r.passed());
  CHECK_THROWS(run_criterion(14, o));
}

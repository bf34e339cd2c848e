#include <doctest.h>

#include "contingent/assessment.hpp"
#include "contingent/error.hpp"
#include "support.hpp"

using namespace contingent;
using support::R;

namespace {

Assessment make(const std::vector<std::string>& atoms, const std::vector<std::pair<std::string, std::string>>& pi) {
  const Language lang(atoms);
  std::vector<std::pair<Formula, Rational>> values;
  for (const auto& [f, v] : pi) values.emplace_back(lang.parse(f), R(v.c_str()));
  return Assessment(lang, values);
}

}  // namespace

TEST_CASE("assessment adds the constants and rejects duplicates") {
  const Assessment a = make({"p"}, {{"p", "1/3"}});
  CHECK(a.size() == 3);
  CHECK(a.value(Formula::top()) == 1);
  CHECK(a.value(Formula::bottom()) == 0);
  CHECK_THROWS_AS(make({"p"}, {{"p", "1/3"}, {"(p)", "1/2"}}), InputError);
  CHECK_THROWS_AS(a.value(a.language().parse("!p")), InputError);
}

TEST_CASE("bet values") {
  const Assessment linda = support::load_assessment("linda.json");
  const Language& lang = linda.language();
  CHECK(bet_value(linda, Bet::primitive(lang.parse("f"))) == R("3/4"));
  CHECK(bet_value(linda, Bet({{Formula::top(), R("1/2")}, {Formula::bottom(), R("1/2")}})) == R("1/2"));
  CHECK(bet_value(linda, Bet({{lang.parse("t"), R("1/2")}, {lang.parse("f"), R("1/2")}})) == R("1/2"));
  CHECK_THROWS_AS(Bet({{Formula::top(), R("1/2")}}), InputError);
  CHECK_THROWS_AS(Bet({{Formula::top(), R("3/2")}, {Formula::bottom(), R("-1/2")}}), InputError);
  CHECK_THROWS_AS(bet_value(linda, Bet::primitive(lang.parse("!t"))), InputError);
}

TEST_CASE("axiom NT") {
  CHECK(check_nt(make({"p"}, {{"p", "1/2"}})).pass);
  const AxiomReport bad = check_nt(make({"p"}, {{"F", "1/10"}, {"p", "1/2"}}));
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].formulas == std::vector<std::string>{"F"});
  CHECK(check_nt(support::load_assessment("linda.json")).pass);
  CHECK_FALSE(check_nt(make({"p"}, {{"p", "3/2"}})).pass);
}

TEST_CASE("axiom E") {
  CHECK(check_e(make({"p", "q"}, {{"p & q", "1/4"}, {"q & p", "1/4"}})).pass);
  const AxiomReport bad = check_e(make({"p"}, {{"p", "1/2"}, {"!!p", "1/3"}}));
  CHECK_FALSE(bad.pass);
  CHECK(bad.violations.size() == 1);
  const AxiomReport linda = check_e(support::load_assessment("linda.json"));
  CHECK(linda.pass);
}

TEST_CASE("axiom I") {
  const AxiomReport linda = check_i(support::load_assessment("linda.json"));
  CHECK_FALSE(linda.pass);
  REQUIRE(linda.violations.size() == 1);
  CHECK(linda.violations[0].formulas == std::vector<std::string>{"(t & f)", "t"});
  CHECK(linda.violations[0].lhs == R("1/4"));
  CHECK(linda.violations[0].rhs == R("1/2"));

  CHECK(check_i(make({"p", "q"}, {{"T", "1/2"}, {"F", "1/2"}, {"p", "1/2"}, {"p & q", "1/2"}})).pass);
  CHECK(check_i(make({"p", "q"}, {{"p & q", "1/4"}, {"p", "1/2"}})).pass);
}

TEST_CASE("axiom IE") {
  const Assessment a = make({"p", "q"}, {{"p | q", "1/2"}, {"p", "1/2"}, {"q", "1/2"}, {"p & q", "0"}});
  const AxiomReport r = check_ie(a);
  CHECK_FALSE(r.pass);
  bool found = false;
  for (const auto& v : r.violations) {
    if (v.formulas == std::vector<std::string>{"(p | q)", "p", "q"}) {
      found = true;
      CHECK(v.lhs == R("1/2"));
      CHECK(v.rhs == 1);
    }
  }
  CHECK(found);

  // Families of one reduce to Axiom I.
  const Assessment linda = support::load_assessment("linda.json");
  CHECK_FALSE(check_ie(linda, 1).pass);
  CHECK(check_ie(linda, 1).violations.size() == check_i(linda).violations.size());

  // Additive values pass.
  const Assessment additive =
      make({"p", "q"}, {{"p", "1/2"}, {"q", "1/3"}, {"p & q", "1/6"}, {"p | q", "2/3"}});
  CHECK(check_ie(additive).pass);
}

TEST_CASE("axiom IE reports families with missing conjunctions as untestable") {
  const Assessment a = make({"p", "q"}, {{"p | q", "1"}, {"p", "1/2"}, {"q", "1/2"}});
  const AxiomReport r = check_ie(a, 2);
  CHECK(r.pass);
  CHECK_FALSE(r.untestable.empty());
}

TEST_CASE("axiom A") {
  CHECK(check_a(make({"p"}, {{"p", "1/3"}, {"!p", "2/3"}, {"p | !p", "1"}})).pass);
  // Linda's second model read back through its likelihood: pi(!f) = lambda'({w3}).
  const AxiomReport bad = check_a(make({"t", "f"}, {{"f", "3/4"}, {"!f", "1/2"}, {"f | !f", "1"}}));
  CHECK_FALSE(bad.pass);
  // F is disjoint from everything; phi | F is phi.
  CHECK(check_a(make({"p"}, {{"p", "1/4"}, {"p | F", "1/4"}})).pass);
  // No union member: untestable, never passed silently as tested.
  const AxiomReport loose = check_a(make({"p", "q"}, {{"p & q", "1/4"}, {"!p", "1/4"}}));
  CHECK(loose.pass);
  CHECK_FALSE(loose.untestable.empty());
}

TEST_CASE("axiom S-I on the voting fixture") {
  const Assessment voting = support::load_assessment("voting.json");
  const Theory full = support::load_theory("voting_theory.json");
  const AxiomReport r = check_s_i(voting, full);
  CHECK_FALSE(r.pass);
  bool found = false;
  for (const auto& v : r.violations) {
    if (v.formulas == std::vector<std::string>{"(r & p)", "(b & p)"}) found = true;
  }
  CHECK(found);

  const Language& lang = voting.language();
  CHECK(check_s_i(voting, Theory(lang, {lang.parse("r <-> !b")})).pass);

  const AxiomReport tautological = check_s_i(voting, Theory::tautologies(lang));
  const AxiomReport plain = check_i(voting);
  CHECK(tautological.pass == plain.pass);
  CHECK(tautological.violations.size() == plain.violations.size());
}

TEST_CASE("axiom ids round-trip") {
  for (Axiom a : {Axiom::kNT, Axiom::kE, Axiom::kI, Axiom::kIE, Axiom::kA, Axiom::kSI}) {
    CHECK(parse_axiom_id(axiom_id(a)) == a);
  }
  CHECK_FALSE(parse_axiom_id("eu").has_value());
}

TEST_CASE("report pass flag matches an empty violation list") {
  const Assessment linda = support::load_assessment("linda.json");
  for (const AxiomReport& r : {check_nt(linda), check_e(linda), check_i(linda), check_ie(linda), check_a(linda)}) {
    CHECK(r.pass == r.violations.empty());
  }
}

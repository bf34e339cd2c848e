#include <doctest.h>

#include <map>
#include <random>

#include "contingent/error.hpp"
#include "contingent/games.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace contingent;
using support::R;

namespace {

std::vector<Strategy> load_strategies(const std::string& name, const Language& lang) {
  return strategies_from_json(read_json_file(support::fixture(name)), lang).strategies;
}

PayoffVector vec(std::initializer_list<const char*> xs) {
  PayoffVector out;
  for (const char* x : xs) out.push_back(R(x));
  return out;
}

}  // namespace

TEST_CASE("base payoff vector of the layered example") {
  const SubjectiveModel m = support::load_model("layered_source.json");
  const Strategy s = load_strategies("layered_strategy.json", m.language()).front();
  CHECK(t_circ(m, s) == vec({"3", "4", "2"}));
}

TEST_CASE("base payoff vectors are linear in the strategy") {
  const SubjectiveModel m = support::load_model("layered_source.json");
  const Language& lang = m.language();
  const std::vector<Formula> pool{lang.parse("T"), lang.parse("p"), lang.parse("q"), lang.parse("!q"),
                                  lang.parse("p & !q"), lang.parse("p | q")};
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
  std::uniform_int_distribution<int> amount(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<std::size_t, Rational> first;
    std::map<std::size_t, Rational> second;
    for (int k = 0; k < 3; ++k) {
      first[pick(rng)] += ratio(amount(rng), 2);
      second[pick(rng)] += ratio(amount(rng), 3);
    }
    const Rational a = ratio(amount(rng), 4);
    const Rational b = ratio(amount(rng), 5);
    std::map<std::size_t, Rational> mixed;
    std::vector<std::pair<Formula, Rational>> p1;
    std::vector<std::pair<Formula, Rational>> p2;
    for (const auto& [i, v] : first) {
      p1.emplace_back(pool[i], v);
      mixed[i] += a * v;
    }
    for (const auto& [i, v] : second) {
      p2.emplace_back(pool[i], v);
      mixed[i] += b * v;
    }
    std::vector<std::pair<Formula, Rational>> pm;
    for (const auto& [i, v] : mixed) pm.emplace_back(pool[i], v);
    const PayoffVector x1 = t_circ(m, Strategy("a", p1));
    const PayoffVector x2 = t_circ(m, Strategy("b", p2));
    const PayoffVector xm = t_circ(m, Strategy("m", pm));
    for (std::size_t w = 0; w < xm.size(); ++w) CHECK(xm[w] == a * x1[w] + b * x2[w]);
  }
}

TEST_CASE("primitive bets, zero strategies and unsound models") {
  const SubjectiveModel m = support::load_model("layered_source.json");
  const Language& lang = m.language();
  const PayoffVector bet = t_circ(m, Strategy("bet", {{lang.parse("p"), R("1")}}));
  CHECK(bet == vec({"1", "1", "0"}));
  CHECK(t_circ(m, Strategy("zero", {})) == vec({"0", "0", "0"}));
  CHECK_THROWS_AS(Strategy("neg", {{lang.parse("p"), R("-1")}}), InputError);

  const SubjectiveModel linda1 = support::load_model("linda_model1.json");
  CHECK_THROWS_AS(t_circ(linda1, Strategy("t", {{linda1.language().parse("t"), R("1")}})), PreconditionError);
}

TEST_CASE("layer decomposition") {
  const SubjectiveModel m = support::load_model("layered_source.json");
  const std::vector<Layer> layers = layer_decompose(vec({"3", "4", "2"}), m);
  REQUIRE(layers.size() == 3);
  CHECK(layers[0].level == 4);
  CHECK(layers[0].formula == "(p & !q)");
  CHECK(layers[1].level == 3);
  CHECK(layers[1].formula == "p");
  CHECK(layers[2].level == 2);
  CHECK(layers[2].formula == "T");
  for (const auto& l : layers) CHECK(m.truth(l.formula_tree) == l.event);
  CHECK(layers_to_vector(layers, 3) == vec({"3", "4", "2"}));

  const std::vector<Layer> constant = layer_decompose(vec({"5/2", "5/2", "5/2"}), m);
  REQUIRE(constant.size() == 1);
  CHECK(constant[0].formula == "T");
  CHECK(layer_decompose(vec({"0", "0", "0"}), m).empty());

  const std::vector<Layer> indicator = layer_decompose(vec({"1", "0", "0"}), m);
  REQUIRE(indicator.size() == 1);
  CHECK(indicator[0].formula == "q");

  CHECK_THROWS_AS(layer_decompose(vec({"-1", "0", "0"}), m), PreconditionError);
}

TEST_CASE("layers with no formula preimage are refused") {
  // Only p is stored and w2, w3 are indistinguishable: {w2} has no preimage.
  const Language lang({"p"});
  const SubjectiveModel m(lang, {"w1", "w2", "w3"}, {{lang.parse("p"), Event::from_mask(3, 1)}},
                          Likelihood::additive(vec({"1/3", "1/3", "1/3"})));
  CHECK_THROWS_AS(layer_decompose(vec({"0", "1", "0"}), m), PreconditionError);
  CHECK(layer_decompose(vec({"0", "1", "1"}), m).front().formula == "!p");
}

TEST_CASE("re-reading layers through an additive target preserves the integral") {
  const SubjectiveModel source = support::load_model("layered_source.json");
  const SubjectiveModel target = support::load_model("layered_target.json");
  const Strategy s = load_strategies("layered_strategy.json", source.language()).front();
  CHECK(t_bullet(source, target, s) == vec({"3", "2", "2"}));
  const IntegralCheck check = verify_integral_equality(source, target, s);
  CHECK(check.equal);
  CHECK(check.source_value == R("7/3"));
  CHECK(check.target_value == R("7/3"));

  const Language& lang = source.language();
  const Strategy constant("c", {{lang.parse("T"), R("2")}});
  CHECK(t_bullet(source, target, constant) == vec({"2", "2", "2"}));
  CHECK(verify_integral_equality(source, target, constant).source_value == 2);
  for (const char* phi : {"p", "q", "!q", "p & !q"}) {
    const Strategy bet("b", {{lang.parse(phi), R("1")}});
    const IntegralCheck c = verify_integral_equality(source, target, bet);
    CHECK(c.equal);
    CHECK(c.source_value == source.lambda().at(source.truth(lang.parse(phi))));
  }
}

TEST_CASE("a target that does not represent the same values is refused") {
  const SubjectiveModel source = support::load_model("layered_source.json");
  const SubjectiveModel target = support::load_model("layered_target.json");
  std::vector<std::pair<Formula, Event>> truth;
  for (const auto& e : target.truth_table()) truth.emplace_back(e.formula, e.event);
  const SubjectiveModel skewed(target.language(), target.states(), truth,
                               Likelihood::additive(vec({"1/2", "1/4", "1/4"})));
  const Strategy s = load_strategies("layered_strategy.json", source.language()).front();
  try {
    t_bullet(source, skewed, s);
    FAIL("expected a representation mismatch");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("representation mismatch") != std::string::npos);
  }
  // A non-additive target is refused too.
  CHECK_THROWS_AS(t_bullet(source, source, s), PreconditionError);
}

TEST_CASE("maximal model coordinates and cylinders") {
  const SubjectiveModel base = support::load_model("hedge_model.json");
  const std::vector<Strategy> strategies = load_strategies("hedge_menu.json", base.language());
  const MaximalModel mm = maximal_model(base, strategies);
  REQUIRE(mm.coordinates().size() == 2);
  CHECK(mm.state_count() == 4);
  CHECK(mm.state_label(1) == "(1,0)");
  CHECK(mm.cylinder(Event(2, true)).all());
  CHECK(mm.cylinder(Event(2)).none());
  CHECK(mm.cylinder(mm.coordinates()[0]).count() == 2);
  std::vector<Event> many;
  for (std::uint64_t mask = 1; mask <= 17; ++mask) many.push_back(Event::from_mask(5, mask));
  CHECK_THROWS_AS(MaximalModel(5, many), PreconditionError);
  // Repeated, empty and full events are dropped.
  const MaximalModel small(2, {Event::from_mask(2, 1), Event::from_mask(2, 1), Event(2), Event(2, true)});
  CHECK(small.state_count() == 2);
}

TEST_CASE("pointwise dominance examples") {
  const DominanceResult beaten = pointwise_undominated(vec({"0", "0"}), {vec({"1", "1"})});
  CHECK(beaten.dominated);
  CHECK(beaten.epsilon == 1);

  const DominanceResult hedge = pointwise_undominated(vec({"1/2", "1/2"}), {vec({"1", "0"}), vec({"0", "1"})});
  CHECK_FALSE(hedge.dominated);
  REQUIRE(hedge.prior.size() == 2);
  Rational total = 0;
  for (const auto& p : hedge.prior) total += p;
  CHECK(total == 1);
  // The prior makes x at least as good as each alternative.
  for (const PayoffVector& alt : {vec({"1", "0"}), vec({"0", "1"})}) {
    Rational diff = 0;
    for (std::size_t w = 0; w < 2; ++w) diff += hedge.prior[w] * (R("1/2") - alt[w]);
    CHECK_FALSE(diff < 0);
  }
  // The even mixture pays 1/2 everywhere.
  const DominanceResult low = pointwise_undominated(vec({"1/4", "1/4"}), {vec({"1", "0"}), vec({"0", "1"})});
  CHECK(low.dominated);
  CHECK(low.epsilon == R("1/4"));
  CHECK(low.mixture == vec({"1/2", "1/2"}));

  CHECK_FALSE(pointwise_undominated(vec({"1", "0"}), {vec({"1", "1"})}).dominated);
  CHECK(pointwise_undominated(vec({"1", "0"}), {vec({"1", "1"})}, true).dominated);
  CHECK_THROWS_AS(pointwise_undominated(vec({"1"}), {}), InputError);
  CHECK_THROWS_AS(pointwise_undominated(vec({"1"}), {vec({"1", "2"})}), InputError);
}

TEST_CASE("rationalizing the hedge through the maximal model") {
  const SubjectiveModel base = support::load_model("hedge_model.json");
  const StrategySet set = strategies_from_json(read_json_file(support::fixture("hedge_menu.json")),
                                               base.language());
  RationalizeOptions options;
  options.candidate = likelihood_from_json(*set.candidate, base);
  const RationalizabilityResult r = rationalizable(base, set.strategies, 2, options);
  CHECK(r.rationalizable);
  CHECK(r.method == "maximal-model");
  REQUIRE(r.maximal.has_value());
  CHECK(r.maximal->state_count() == 4);
  CHECK(r.lp_witness_verified);
  CHECK(r.candidate_verified);
  CHECK(r.candidate_values == vec({"1/4", "1/4", "1/3"}));

  RationalizeOptions additive;
  additive.additive_only = true;
  const RationalizabilityResult a = rationalizable(base, set.strategies, 2, additive);
  CHECK_FALSE(a.rationalizable);
  CHECK(a.method == "additive");
  CHECK(a.dominance.epsilon == R("1/6"));
  CHECK(a.dominance.mixture == vec({"1/2", "1/2", "0"}));
}

TEST_CASE("a lone strategy is always rationalizable") {
  const SubjectiveModel base = support::load_model("hedge_model.json");
  const Language& lang = base.language();
  const std::vector<Strategy> one{Strategy("only", {{lang.parse("p"), R("2")}})};
  CHECK(rationalizable(base, one, 0).rationalizable);
  RationalizeOptions additive;
  additive.additive_only = true;
  CHECK(rationalizable(base, one, 0, additive).rationalizable);
}

TEST_CASE("dominance agrees with a grid search on two-state examples") {
  const std::vector<std::vector<PayoffVector>> menus{
      {vec({"1", "0"}), vec({"0", "1"})},
      {vec({"3/4", "1/4"}), vec({"1/4", "3/4"}), vec({"1/2", "1/2"})},
      {vec({"1", "1/4"}), vec({"0", "1"})},
  };
  for (const auto& menu : menus) {
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; b <= 4; ++b) {
        const PayoffVector x{ratio(a, 4), ratio(b, 4)};
        const DominanceResult lp = pointwise_undominated(x, menu);
        const bool grid = oracle::grid_dominates(x, menu, 12).has_value();
        if (grid) CHECK(lp.dominated);
        if (lp.dominated) {
          for (std::size_t w = 0; w < 2; ++w) {
            Rational mixed = 0;
            for (std::size_t k = 0; k < menu.size(); ++k) mixed += lp.mixture[k] * menu[k][w];
            CHECK(mixed > x[w]);
          }
        }
      }
    }
  }
}

TEST_CASE("re-read payoffs agree across sound sources with the same values") {
  const SubjectiveModel first = support::load_model("layered_source.json");
  const SubjectiveModel target = support::load_model("layered_target.json");
  const Language& lang = first.language();
  // The four valuations as states, carrying the first source's values.
  std::vector<std::pair<Formula, Event>> truth;
  for (const char* atom : {"p", "q"}) truth.emplace_back(lang.parse(atom), sat_set(lang, lang.parse(atom)));
  std::map<Event, Rational> values;
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    const ValuationSet e = ValuationSet::from_mask(4, mask);
    values.emplace(e, first.lambda().at(first.truth(lang.characteristic_formula(e))));
  }
  const SubjectiveModel second(lang, {"v0", "v1", "v2", "v3"}, truth, Likelihood::table(4, values));
  CHECK(classify_truth(second).sound);

  const Strategy s = load_strategies("layered_strategy.json", lang).front();
  CHECK(t_circ(second, s) == vec({"2", "4", "1", "3"}));
  CHECK(t_bullet(second, target, s) == t_bullet(first, target, s));
  CHECK(verify_integral_equality(second, target, s).source_value == R("7/3"));
}

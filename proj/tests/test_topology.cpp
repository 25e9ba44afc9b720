#include "support.hpp"

#include <doctest.h>

#include <string>

using namespace test_support;

namespace {

FourManifoldClass cp2_blowup(long k) {
  FourManifoldClass c = block("CP2");
  const FourManifoldClass bar = block("CP2bar");
  for (long i = 0; i < k; ++i)
    c = connected_sum(c, bar);
  return c;
}

bool has_rule(const ObstructionReport& rep, const std::string& rule,
              Verdict verdict) {
  for (const RuleResult& r : rep.rules)
    if (r.rule == rule)
      return r.verdict == verdict;
  return false;
}

} // namespace

TEST_SUITE_BEGIN("topology");

TEST_CASE("the block catalog carries the classical values") {
  CHECK(block_names().size() == 6);

  const FourManifoldClass s4 = block("S4");
  CHECK(s4.chi == 2);
  CHECK(s4.tau == 0);
  CHECK(s4.spin);
  CHECK(s4.simply_connected);

  const FourManifoldClass cp2 = block("CP2");
  CHECK(cp2.chi == 3);
  CHECK(cp2.tau == 1);
  CHECK_FALSE(cp2.spin);

  const FourManifoldClass bar = block("CP2bar");
  CHECK(bar.chi == 3);
  CHECK(bar.tau == -1);

  const FourManifoldClass k3 = block("K3");
  CHECK(k3.chi == 24);
  CHECK(k3.tau == -16);
  CHECK(k3.spin);

  const FourManifoldClass t4 = block("T4");
  CHECK(t4.chi == 0);
  CHECK(t4.b1 == 4);
  CHECK_FALSE(t4.simply_connected);

  CHECK_THROWS_AS(block("RP4"), std::invalid_argument);
}

TEST_CASE("spin catalog entries respect the Rokhlin divisibility") {
  for (const std::string& name : block_names()) {
    const FourManifoldClass c = block(name);
    if (c.spin)
      CHECK(c.tau % 16 == 0);
  }
}

TEST_CASE("connected sums follow the classical arithmetic") {
  const FourManifoldClass sum = connected_sum(block("CP2"), block("CP2bar"));
  CHECK(sum.chi == 4);
  CHECK(sum.tau == 0);
  CHECK_FALSE(sum.spin);
  CHECK(sum.simply_connected);

  // the sphere is the neutral element
  const FourManifoldClass k3s4 = connected_sum(block("K3"), block("S4"));
  CHECK(k3s4.chi == block("K3").chi);
  CHECK(k3s4.tau == block("K3").tau);
  CHECK(k3s4.spin == block("K3").spin);

  for (long k = 0; k <= 12; ++k) {
    const FourManifoldClass c = cp2_blowup(k);
    CHECK(c.chi == 3 + k);
    CHECK(c.tau == 1 - k);
  }

  const FourManifoldClass ab = connected_sum(block("K3"), block("T4"));
  const FourManifoldClass ba = connected_sum(block("T4"), block("K3"));
  CHECK(ab.chi == ba.chi);
  CHECK(ab.tau == ba.tau);
  CHECK(ab.b1 == 4);
  CHECK_FALSE(ab.simply_connected);
}

TEST_CASE("the connected-sum grammar accepts multipliers and rejects junk") {
  const FourManifoldClass c = parse_sum("CP2 + 3*CP2bar");
  CHECK(c.chi == 6);
  CHECK(c.tau == -2);

  const FourManifoldClass spaced = parse_sum("  2 * K3 +  3*S2xS2 ");
  CHECK(spaced.chi == 2 * 24 + 3 * 4 - 2 * 4);
  CHECK(spaced.tau == -32);

  const FourManifoldClass skip = parse_sum("0*CP2 + S4");
  CHECK(skip.chi == 2);
  CHECK(skip.tau == 0);

  CHECK_THROWS_AS(parse_sum(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_sum("CP2 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sum("Q7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sum("x*CP2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sum("-2*CP2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sum("3*"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sum("0*CP2"), std::invalid_argument);
}

TEST_CASE("betti splits and their failure modes") {
  const BettiSplit cp2 = betti_split(block("CP2"));
  CHECK(cp2.b2 == 1);
  CHECK(cp2.bplus == 1);
  CHECK(cp2.bminus == 0);

  const BettiSplit k3 = betti_split(block("K3"));
  CHECK(k3.b2 == 22);
  CHECK(k3.bplus == 3);
  CHECK(k3.bminus == 19);

  const BettiSplit s4 = betti_split(block("S4"));
  CHECK(s4.b2 == 0);
  CHECK(s4.bplus == 0);
  CHECK(s4.bminus == 0);

  const BettiSplit t4 = betti_split(block("T4"));
  CHECK(t4.b2 == 6);
  CHECK(t4.bplus == 3);
  CHECK(t4.bminus == 3);

  FourManifoldClass parity;
  parity.chi = 3; // b2 = 1 with tau = 0: mismatched parity
  parity.tau = 0;
  CHECK_THROWS_AS(betti_split(parity), InconsistentClassError);

  FourManifoldClass negative;
  negative.chi = 2; // b2 = 0 with tau = 2: b- would be negative
  negative.tau = 2;
  CHECK_THROWS_AS(betti_split(negative), InconsistentClassError);

  // consistency: b+ + b- = b2 and b+ - b- = tau on all blocks
  for (const std::string& name : block_names()) {
    const FourManifoldClass c = block(name);
    const BettiSplit b = betti_split(c);
    CHECK(b.bplus + b.bminus == b.b2);
    CHECK(b.bplus - b.bminus == c.tau);
  }
}

TEST_CASE("the inequality predicate distinguishes pass, boundary and fail") {
  const HtPredicate k3 = ht_predicate(block("K3"));
  CHECK(k3.plus_value == 96);
  CHECK(k3.minus_value == 0);
  CHECK(k3.plus_verdict == Verdict::pass);
  CHECK(k3.minus_verdict == Verdict::boundary);
  CHECK(k3.satisfied());

  const HtPredicate nine = ht_predicate(cp2_blowup(9));
  CHECK(nine.minus_value == 0);
  CHECK(nine.minus_verdict == Verdict::boundary);
  CHECK(nine.satisfied());

  const HtPredicate twelve = ht_predicate(cp2_blowup(12));
  CHECK(twelve.minus_value == -3);
  CHECK(twelve.minus_verdict == Verdict::fail);
  CHECK_FALSE(twelve.satisfied());

  const HtPredicate t4 = ht_predicate(block("T4"));
  CHECK(t4.plus_value == 0);
  CHECK(t4.minus_value == 0);
  CHECK(t4.satisfied()); // flat tori realize the equality case
}

TEST_CASE("structure names round-trip and bad ones are rejected") {
  for (const Structure s :
       {Structure::einstein, Structure::shrinking_soliton,
        Structure::kahler_shrinking_soliton,
        Structure::symplectic_shrinking_soliton})
    CHECK(structure_from_string(to_string(s)) == s);
  CHECK_THROWS_AS(structure_from_string("ricci_flat"), std::invalid_argument);
}

TEST_CASE("obstruction rules reproduce the worked examples") {
  SUBCASE("K3 admits no shrinking soliton: spin with nonzero signature") {
    const ObstructionReport rep =
        obstruction_report(block("K3"), Structure::shrinking_soliton);
    CHECK(rep.obstructed);
    CHECK(has_rule(rep, "spin_signature", Verdict::fail));
    CHECK(has_rule(rep, "finite_fundamental_group", Verdict::pass));
  }

  SUBCASE("K3 as an Einstein space sits on the boundary and is allowed") {
    const ObstructionReport rep =
        obstruction_report(block("K3"), Structure::einstein);
    CHECK_FALSE(rep.obstructed);
    CHECK(has_rule(rep, "hitchin_thorpe", Verdict::boundary));
  }

  SUBCASE("two-point blow-up admits the known Kahler shrinker") {
    const ObstructionReport rep =
        obstruction_report(cp2_blowup(2), Structure::kahler_shrinking_soliton);
    CHECK_FALSE(rep.obstructed);
    REQUIRE(rep.classification.has_value());
    CHECK(*rep.classification == "Wang-Zhu soliton (CP2 # 2 CP2bar)");
  }

  SUBCASE("one-point blow-up names the Koiso-Cao soliton") {
    const ObstructionReport rep =
        obstruction_report(cp2_blowup(1), Structure::kahler_shrinking_soliton);
    CHECK_FALSE(rep.obstructed);
    REQUIRE(rep.classification.has_value());
    CHECK(*rep.classification == "Koiso-Cao soliton (CP2 # CP2bar)");
  }

  SUBCASE("K3 fails the symplectic bound b+ <= 1") {
    const ObstructionReport rep =
        obstruction_report(block("K3"), Structure::symplectic_shrinking_soliton);
    CHECK(rep.obstructed);
    CHECK(has_rule(rep, "b_plus_bound", Verdict::fail));
  }

  SUBCASE("nine-point blow-up is shut out of the Kahler class") {
    const ObstructionReport rep =
        obstruction_report(cp2_blowup(9), Structure::kahler_shrinking_soliton);
    CHECK(rep.obstructed);
    CHECK(has_rule(rep, "strict_half_conformal_bound", Verdict::fail));
    CHECK(has_rule(rep, "del_pezzo_membership", Verdict::fail));
    CHECK_FALSE(rep.classification.has_value());
  }

  SUBCASE("the torus has infinite fundamental group") {
    const ObstructionReport rep =
        obstruction_report(block("T4"), Structure::shrinking_soliton);
    CHECK(rep.obstructed);
    CHECK(has_rule(rep, "finite_fundamental_group", Verdict::fail));
  }

  SUBCASE("the spin del Pezzo target is the sphere product") {
    const ObstructionReport rep =
        obstruction_report(block("S2xS2"), Structure::kahler_shrinking_soliton);
    CHECK_FALSE(rep.obstructed);
    REQUIRE(rep.classification.has_value());
    CHECK(*rep.classification == "Kahler-Einstein del Pezzo (S2 x S2)");
  }

  SUBCASE("every rule cites its source") {
    for (const Structure s :
         {Structure::einstein, Structure::shrinking_soliton,
          Structure::kahler_shrinking_soliton,
          Structure::symplectic_shrinking_soliton})
      for (const RuleResult& r : obstruction_report(block("CP2"), s).rules)
        CHECK_FALSE(r.citation.empty());
  }
}

TEST_CASE("blow-up sweep: the strict bound decays as 9 - k and membership "
          "stops at k = 8") {
  for (long k = 0; k <= 20; ++k) {
    CAPTURE(k);
    const FourManifoldClass c = cp2_blowup(k);
    const ObstructionReport rep =
        obstruction_report(c, Structure::kahler_shrinking_soliton);
    long strict = 0;
    for (const RuleResult& r : rep.rules)
      if (r.rule == "strict_half_conformal_bound")
        strict = 2 * c.chi + 3 * c.tau;
    CHECK(strict == 9 - k);
    CHECK(rep.classification.has_value() == (k <= 8));
    CHECK(rep.obstructed == (k > 8));
  }
}

TEST_CASE("the homeomorphism test separates the twisted and trivial sphere "
          "bundles") {
  CHECK_FALSE(freedman_equivalent(connected_sum(block("CP2"), block("CP2bar")),
                                  block("S2xS2")));
  CHECK(freedman_equivalent(block("K3"), block("K3")));
  CHECK(freedman_equivalent(parse_sum("CP2 + 2*CP2bar"),
                            parse_sum("CP2 + 2*CP2bar")));
  // equal chi, different signature
  CHECK_FALSE(freedman_equivalent(block("K3"), parse_sum("11*S2xS2")));
  CHECK_THROWS_AS(freedman_equivalent(block("T4"), block("K3")),
                  UnsupportedError);
}

TEST_SUITE_END();

#pragma once

#include "shrinker/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shrinker {

// Integer data of a closed oriented 4-manifold.  tau always means the
// signature here; the intersection form appears only through (b+, b-).
struct FourManifoldClass {
  long chi = 2;
  long tau = 0;
  long b1 = 0;
  bool spin = true;
  bool simply_connected = true;
  std::string label;
};

// Built-in blocks: S4, CP2, CP2bar, S2xS2, K3, T4.
FourManifoldClass block(const std::string& name); // throws invalid_argument
const std::vector<std::string>& block_names();

// chi and b1 additive up to the gluing sphere, tau additive, spin and simple
// connectivity both required to survive.
FourManifoldClass connected_sum(const FourManifoldClass& a,
                                const FourManifoldClass& b);

// Grammar: blocks joined by '+', optional integer multipliers, e.g.
// "CP2 + 3*CP2bar".  Throws invalid_argument on malformed input.
FourManifoldClass parse_sum(const std::string& expr);

struct BettiSplit {
  long b2 = 0;
  long bplus = 0;
  long bminus = 0;
};

// b2 = chi - 2 + 2 b1, b± = (b2 ± tau)/2.
// Throws InconsistentClassError when b2 ± tau is odd or a part is negative.
BettiSplit betti_split(const FourManifoldClass& c);

// 2 chi + 3 |tau| and 2 chi - 3 |tau| with pass / boundary (= 0) / fail.
struct HtPredicate {
  long plus_value = 0;
  long minus_value = 0;
  Verdict plus_verdict = Verdict::fail;
  Verdict minus_verdict = Verdict::fail;
  bool satisfied() const {
    return plus_verdict != Verdict::fail && minus_verdict != Verdict::fail;
  }
};

HtPredicate ht_predicate(const FourManifoldClass& c);

enum class Structure {
  einstein,
  shrinking_soliton,
  kahler_shrinking_soliton,
  symplectic_shrinking_soliton,
};

Structure structure_from_string(const std::string& s); // throws invalid_argument
const char* to_string(Structure s);

struct RuleResult {
  std::string rule;
  Verdict verdict = Verdict::pass;
  std::string citation;
  std::string detail;
};

struct ObstructionReport {
  std::vector<RuleResult> rules;
  bool obstructed = false;
  // For allowed Kahler shrinkers: the named target on the del Pezzo list.
  std::optional<std::string> classification;
};

ObstructionReport obstruction_report(const FourManifoldClass& c, Structure s);

// Homeomorphism test for simply connected classes: chi, tau and the spin
// flag all agree.  Throws UnsupportedError when either class has pi_1 != 1.
bool freedman_equivalent(const FourManifoldClass& a, const FourManifoldClass& b);

} // namespace shrinker

#include "shrinker/topology.hpp"

#include <cctype>
#include <sstream>

namespace shrinker {

namespace {

const std::vector<std::pair<std::string, FourManifoldClass>>& catalog() {
  static const std::vector<std::pair<std::string, FourManifoldClass>> table = {
      {"S4", {2, 0, 0, true, true, "S4"}},
      {"CP2", {3, 1, 0, false, true, "CP2"}},
      {"CP2bar", {3, -1, 0, false, true, "CP2bar"}},
      {"S2xS2", {4, 0, 0, true, true, "S2xS2"}},
      {"K3", {24, -16, 0, true, true, "K3"}},
      {"T4", {0, 0, 4, true, false, "T4"}},
  };
  return table;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return s.substr(a, b - a);
}

Verdict sign_verdict(long v) {
  if (v == 0)
    return Verdict::boundary;
  return v > 0 ? Verdict::pass : Verdict::fail;
}

// Named targets admitting a compact Kahler shrinker, keyed by
// (chi, tau, spin) among simply connected classes.
std::optional<std::string> del_pezzo_name(const FourManifoldClass& c) {
  if (!c.simply_connected || c.b1 != 0)
    return std::nullopt;
  if (c.spin) {
    if (c.chi == 4 && c.tau == 0)
      return "Kahler-Einstein del Pezzo (S2 x S2)";
    return std::nullopt;
  }
  // CP2 # k CP2bar has chi = 3 + k, tau = 1 - k for 0 <= k <= 8.
  const long k = c.chi - 3;
  if (k < 0 || k > 8 || c.tau != 1 - k)
    return std::nullopt;
  if (k == 0)
    return "Kahler-Einstein del Pezzo (CP2, Fubini-Study)";
  if (k == 1)
    return "Koiso-Cao soliton (CP2 # CP2bar)";
  if (k == 2)
    return "Wang-Zhu soliton (CP2 # 2 CP2bar)";
  std::ostringstream os;
  os << "Kahler-Einstein del Pezzo (CP2 # " << k << " CP2bar, Tian)";
  return os.str();
}

} // namespace

const std::vector<std::string>& block_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, cls] : catalog())
      out.push_back(name);
    return out;
  }();
  return names;
}

FourManifoldClass block(const std::string& name) {
  for (const auto& [key, cls] : catalog())
    if (key == name)
      return cls;
  std::string known;
  for (const auto& [key, cls] : catalog())
    known += (known.empty() ? "" : ", ") + key;
  throw std::invalid_argument("unknown block " + name + " (known: " + known +
                              ")");
}

FourManifoldClass connected_sum(const FourManifoldClass& a,
                                const FourManifoldClass& b) {
  FourManifoldClass out;
  out.chi = a.chi + b.chi - 2;
  out.tau = a.tau + b.tau;
  out.b1 = a.b1 + b.b1;
  out.spin = a.spin && b.spin;
  out.simply_connected = a.simply_connected && b.simply_connected;
  out.label = a.label + " # " + b.label;
  return out;
}

FourManifoldClass parse_sum(const std::string& expr) {
  const std::string whole = trim(expr);
  if (whole.empty())
    throw std::invalid_argument("empty connected-sum expression");
  if (whole.back() == '+') // getline would silently drop a trailing term
    throw std::invalid_argument("empty term in connected-sum expression");
  std::vector<std::pair<long, std::string>> parts;
  std::string term;
  std::istringstream stream(expr);
  while (std::getline(stream, term, '+')) {
    term = trim(term);
    if (term.empty())
      throw std::invalid_argument("empty term in connected-sum expression");
    long mult = 1;
    std::string name = term;
    const auto star = term.find('*');
    if (star != std::string::npos) {
      const std::string head = trim(term.substr(0, star));
      name = trim(term.substr(star + 1));
      try {
        std::size_t used = 0;
        mult = std::stol(head, &used);
        if (used != head.size())
          throw std::invalid_argument(head);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad multiplier '" + head +
                                    "' in connected-sum expression");
      }
      if (mult < 0)
        throw std::invalid_argument("negative multiplier in connected-sum "
                                    "expression");
    }
    if (name.empty())
      throw std::invalid_argument("missing block name in connected-sum "
                                  "expression");
    parts.emplace_back(mult, name);
  }
  if (parts.empty())
    throw std::invalid_argument("empty connected-sum expression");

  std::optional<FourManifoldClass> acc;
  for (const auto& [mult, name] : parts) {
    const FourManifoldClass piece = block(name); // validates the name
    for (long i = 0; i < mult; ++i)
      acc = acc ? connected_sum(*acc, piece) : piece;
  }
  if (!acc)
    throw std::invalid_argument("connected-sum expression has no factors");
  return *acc;
}

BettiSplit betti_split(const FourManifoldClass& c) {
  BettiSplit out;
  out.b2 = c.chi - 2 + 2 * c.b1;
  if ((out.b2 + c.tau) % 2 != 0)
    throw InconsistentClassError("b2 and tau have mismatched parity");
  out.bplus = (out.b2 + c.tau) / 2;
  out.bminus = (out.b2 - c.tau) / 2;
  if (out.b2 < 0 || out.bplus < 0 || out.bminus < 0)
    throw InconsistentClassError("negative Betti number from (chi, tau, b1)");
  return out;
}

HtPredicate ht_predicate(const FourManifoldClass& c) {
  HtPredicate out;
  const long abs_tau = c.tau < 0 ? -c.tau : c.tau;
  out.plus_value = 2 * c.chi + 3 * abs_tau;
  out.minus_value = 2 * c.chi - 3 * abs_tau;
  out.plus_verdict = sign_verdict(out.plus_value);
  out.minus_verdict = sign_verdict(out.minus_value);
  return out;
}

Structure structure_from_string(const std::string& s) {
  if (s == "einstein")
    return Structure::einstein;
  if (s == "shrinking_soliton")
    return Structure::shrinking_soliton;
  if (s == "kahler_shrinking_soliton")
    return Structure::kahler_shrinking_soliton;
  if (s == "symplectic_shrinking_soliton")
    return Structure::symplectic_shrinking_soliton;
  throw std::invalid_argument(
      "unknown structure " + s +
      " (known: einstein, shrinking_soliton, kahler_shrinking_soliton, "
      "symplectic_shrinking_soliton)");
}

const char* to_string(Structure s) {
  switch (s) {
  case Structure::einstein:
    return "einstein";
  case Structure::shrinking_soliton:
    return "shrinking_soliton";
  case Structure::kahler_shrinking_soliton:
    return "kahler_shrinking_soliton";
  default:
    return "symplectic_shrinking_soliton";
  }
}

ObstructionReport obstruction_report(const FourManifoldClass& c, Structure s) {
  ObstructionReport rep;
  auto add = [&rep](std::string rule, Verdict v, std::string citation,
                    std::string detail) {
    rep.rules.push_back(
        {std::move(rule), v, std::move(citation), std::move(detail)});
  };

  if (s == Structure::einstein) {
    const HtPredicate ht = ht_predicate(c);
    const Verdict v = (ht.plus_verdict == Verdict::fail ||
                       ht.minus_verdict == Verdict::fail)
                          ? Verdict::fail
                          : (ht.plus_verdict == Verdict::boundary ||
                                     ht.minus_verdict == Verdict::boundary
                                 ? Verdict::boundary
                                 : Verdict::pass);
    std::ostringstream os;
    os << "2chi+3|tau| = " << ht.plus_value << ", 2chi-3|tau| = "
       << ht.minus_value;
    add("hitchin_thorpe", v,
        "Hitchin-Thorpe inequality for Einstein 4-manifolds (Hitchin; Thorpe)",
        os.str());
  } else {
    {
      std::ostringstream os;
      os << "b1 = " << c.b1;
      add("finite_fundamental_group",
          c.b1 == 0 ? Verdict::pass : Verdict::fail,
          "compact shrinkers have finite fundamental group (Lott)", os.str());
    }
    {
      Verdict v = Verdict::pass;
      std::ostringstream os;
      if (c.spin) {
        v = c.tau == 0 ? Verdict::pass : Verdict::fail;
        os << "spin with tau = " << c.tau;
      } else {
        os << "not spin; rule vacuous";
      }
      add("spin_signature", v,
          "scalar-curvature positivity kills the signature of spin shrinkers "
          "(Lichnerowicz)",
          os.str());
    }
  }

  if (s == Structure::kahler_shrinking_soliton) {
    const long strict = 2 * c.chi + 3 * c.tau;
    {
      std::ostringstream os;
      os << "2chi+3tau = " << strict;
      add("strict_half_conformal_bound",
          strict > 0 ? Verdict::pass : Verdict::fail,
          "half conformal flatness of Kahler surfaces forces strict "
          "positivity (Derdzinski)",
          os.str());
    }
    const auto name = del_pezzo_name(c);
    add("del_pezzo_membership", name ? Verdict::pass : Verdict::fail,
        "compact Kahler shrinkers are del Pezzo surfaces (Tian; Koiso; Cao; "
        "Wang; Zhu)",
        name ? *name : "no del Pezzo target matches (chi, tau, spin)");
    if (name)
      rep.classification = *name;
  }

  if (s == Structure::symplectic_shrinking_soliton) {
    Verdict v = Verdict::fail;
    std::ostringstream os;
    try {
      const BettiSplit b = betti_split(c);
      v = b.bplus <= 1 ? Verdict::pass : Verdict::fail;
      os << "b+ = " << b.bplus;
    } catch (const InconsistentClassError& e) {
      os << "betti split failed: " << e.what();
    }
    add("b_plus_bound", v,
        "Seiberg-Witten theory bounds b+ for symplectic shrinkers (Taubes)",
        os.str());
  }

  for (const RuleResult& r : rep.rules)
    rep.obstructed = rep.obstructed || r.verdict == Verdict::fail;
  if (rep.obstructed)
    rep.classification.reset();
  return rep;
}

bool freedman_equivalent(const FourManifoldClass& a,
                         const FourManifoldClass& b) {
  if (!a.simply_connected || !b.simply_connected)
    throw UnsupportedError(
        "the homeomorphism test covers simply connected classes only");
  return a.chi == b.chi && a.tau == b.tau && a.spin == b.spin;
}

} // namespace shrinker

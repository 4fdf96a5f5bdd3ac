#include "rule_check.hpp"

#include <algorithm>
#include <set>

#include "oracle.hpp"

namespace check {

namespace {

std::vector<std::string> without(const std::set<std::string>& all, const std::vector<std::string>& drop) {
  std::vector<std::string> out;
  for (const auto& x : all) {
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  }
  return out;
}

bool all_hold(const oracle::Model& m, const std::vector<sabotage::Statement>& ss) {
  return std::all_of(ss.begin(), ss.end(), [&](const auto& s) { return oracle::holds(m, s); });
}

std::string describe(const oracle::Model& m) {
  std::string s = "n=" + std::to_string(m.n) + " R={";
  for (const auto& [a, b] : m.rel) s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  s += "}";
  for (const auto& [p, ws] : m.props) {
    s += " " + p + "={";
    for (int w : ws) s += std::to_string(w);
    s += "}";
  }
  for (const auto& [i, w] : m.noms) s += " " + i + "=" + std::to_string(w);
  return s;
}

}  // namespace

CheckResult equivalent(const RuleCheck& c, int max_worlds) {
  std::set<std::string> noms;
  std::set<std::string> props;
  for (const auto* group : {&c.premises, &c.conclusions}) {
    for (const auto& s : *group) {
      auto n = oracle::free_noms(s);
      auto p = oracle::props_of(s);
      noms.insert(n.begin(), n.end());
      props.insert(p.begin(), p.end());
    }
  }
  std::vector<std::string> bound_noms = c.exists_in_conclusion;
  bound_noms.insert(bound_noms.end(), c.forall_in_conclusion.begin(), c.forall_in_conclusion.end());
  const auto free_noms = without(noms, bound_noms);
  const auto free_props = without(props, c.quantified_props);

  CheckResult result;
  for (int n = 1; n <= max_worlds && !result.violation; ++n) {
    for (const auto& frame : oracle::frames(n)) {
      const bool completed = oracle::for_each_valuation(frame, free_props, free_noms, [&](const oracle::Model& m) {
        ++result.cases;
        bool lhs = !c.props_existential;
        oracle::for_each_valuation(m, c.quantified_props, {}, [&](const oracle::Model& mp) {
          const bool h = all_hold(mp, c.premises);
          if (h == c.props_existential) {
            lhs = h;
            return false;
          }
          return true;
        });
        // forall U exists F, enumerated as nested loops over assignments.
        bool rhs = true;
        oracle::for_each_valuation(m, {}, c.forall_in_conclusion, [&](const oracle::Model& mu) {
          const bool some = !oracle::for_each_valuation(mu, {}, c.exists_in_conclusion, [&](const oracle::Model& mf) {
            return !all_hold(mf, c.conclusions);
          });
          if (!some) rhs = false;
          return some;
        });
        if (lhs != rhs) {
          result.violation = describe(m) + ": premises " + (lhs ? "hold" : "fail") + ", conclusions " +
                             (rhs ? "hold" : "fail");
          return false;
        }
        return true;
      });
      if (!completed) break;
    }
  }
  return result;
}

}  // namespace check

#include <cctype>
#include <json.hpp>

#include "sabotage/fol.hpp"

namespace sabotage {

namespace {

using json = nlohmann::ordered_json;

bool is_neq(const FOFormula& f) { return f.is(FOKind::Not) && f.child().is(FOKind::Eq); }

bool is_atomic(const FOFormula& f) {
  switch (f.kind()) {
    case FOKind::Eq:
    case FOKind::Rel:
    case FOKind::Pred: return true;
    case FOKind::And:
    case FOKind::Or: return f.children().empty();
    case FOKind::Not: return is_neq(f);
    default: return false;
  }
}

// ---- text

std::string text(const FOFormula& f);

std::string text_operand(const FOFormula& f) { return is_atomic(f) ? text(f) : "(" + text(f) + ")"; }

std::string join_text(const FOFormula& f, const char* op) {
  std::string out;
  for (const auto& c : f.children()) {
    if (!out.empty()) out += op;
    out += text_operand(c);
  }
  return out;
}

std::string text(const FOFormula& f) {
  const auto& t = f.terms();
  switch (f.kind()) {
    case FOKind::Eq: return t[0].name + " = " + t[1].name;
    case FOKind::Rel: return "R(" + t[0].name + "," + t[1].name + ")";
    case FOKind::Pred: return "P_" + f.pred() + "(" + t[0].name + ")";
    case FOKind::Not:
      if (is_neq(f)) return f.child().terms()[0].name + " != " + f.child().terms()[1].name;
      return "~" + text_operand(f.child());
    case FOKind::And: return f.children().empty() ? "true" : join_text(f, " & ");
    case FOKind::Or: return f.children().empty() ? "false" : join_text(f, " | ");
    case FOKind::Imp: return text_operand(f.child(0)) + " -> " + text_operand(f.child(1));
    case FOKind::Forall: return "forall " + t[0].name + ". " + text(f.child());
    case FOKind::Exists: return "exists " + t[0].name + ". " + text(f.child());
  }
  return "";
}

// ---- json

json to_json(const FOFormula& f) {
  const auto& t = f.terms();
  json out = json::object();
  auto kids = [&] {
    json arr = json::array();
    for (const auto& c : f.children()) arr.push_back(to_json(c));
    return arr;
  };
  switch (f.kind()) {
    case FOKind::Eq: out["eq"] = {t[0].name, t[1].name}; break;
    case FOKind::Rel: out["r"] = {t[0].name, t[1].name}; break;
    case FOKind::Pred: out["p"] = {f.pred(), t[0].name}; break;
    case FOKind::Not: out["not"] = to_json(f.child()); break;
    case FOKind::And: out["and"] = kids(); break;
    case FOKind::Or: out["or"] = kids(); break;
    case FOKind::Imp: out["imp"] = kids(); break;
    case FOKind::Forall: out["forall"] = json::array({t[0].name, to_json(f.child())}); break;
    case FOKind::Exists: out["exists"] = json::array({t[0].name, to_json(f.child())}); break;
  }
  return out;
}

FOTerm term_of(const std::string& name) {
  const bool nominal = name.size() > 1 && name[0] == 'i' && std::isdigit(static_cast<unsigned char>(name[1]));
  return nominal ? FOTerm::nominal(name) : FOTerm::var(name);
}

FOFormula from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) throw std::invalid_argument("expected an object with one key");
  const auto it = j.begin();
  const std::string key = it.key();
  const json& v = it.value();
  auto str = [](const json& x) {
    if (!x.is_string()) throw std::invalid_argument("expected a name");
    return x.get<std::string>();
  };
  auto pair = [&](const json& x) {
    if (!x.is_array() || x.size() != 2) throw std::invalid_argument("'" + key + "' expects two entries");
    return std::pair<const json&, const json&>{x[0], x[1]};
  };
  auto list = [&](const json& x) {
    if (!x.is_array()) throw std::invalid_argument("'" + key + "' expects an array");
    std::vector<FOFormula> out;
    for (const auto& c : x) out.push_back(from_json(c));
    return out;
  };
  if (key == "eq" || key == "r") {
    auto [a, b] = pair(v);
    return key == "eq" ? fo_eq(term_of(str(a)), term_of(str(b))) : fo_rel(term_of(str(a)), term_of(str(b)));
  }
  if (key == "p") {
    auto [p, t] = pair(v);
    return fo_pred(str(p), term_of(str(t)));
  }
  if (key == "not") return fo_not(from_json(v));
  if (key == "and") return FOFormula::make(FOKind::And, {}, "", list(v));
  if (key == "or") return FOFormula::make(FOKind::Or, {}, "", list(v));
  if (key == "imp") {
    auto [a, b] = pair(v);
    return fo_imp(from_json(a), from_json(b));
  }
  if (key == "forall" || key == "exists") {
    auto [x, body] = pair(v);
    return key == "forall" ? fo_forall(term_of(str(x)), from_json(body)) : fo_exists(term_of(str(x)), from_json(body));
  }
  throw std::invalid_argument("unknown key '" + key + "'");
}

// ---- tptp

std::string tptp_var(const std::string& name) {
  std::string out = name;
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::string tptp(const FOFormula& f);

std::string tptp_join(const FOFormula& f, const char* op) {
  std::string out = "(";
  bool first = true;
  for (const auto& c : f.children()) {
    if (!first) out += op;
    out += tptp(c);
    first = false;
  }
  return out + ")";
}

std::string tptp(const FOFormula& f) {
  const auto& t = f.terms();
  switch (f.kind()) {
    case FOKind::Eq: return "(" + tptp_var(t[0].name) + " = " + tptp_var(t[1].name) + ")";
    case FOKind::Rel: return "r(" + tptp_var(t[0].name) + "," + tptp_var(t[1].name) + ")";
    case FOKind::Pred: return "p_" + f.pred() + "(" + tptp_var(t[0].name) + ")";
    case FOKind::Not:
      if (is_neq(f)) {
        return "(" + tptp_var(f.child().terms()[0].name) + " != " + tptp_var(f.child().terms()[1].name) + ")";
      }
      return "~ " + tptp(f.child());
    case FOKind::And: return f.children().empty() ? "$true" : tptp_join(f, " & ");
    case FOKind::Or: return f.children().empty() ? "$false" : tptp_join(f, " | ");
    case FOKind::Imp: return "(" + tptp(f.child(0)) + " => " + tptp(f.child(1)) + ")";
    case FOKind::Forall: return "![" + tptp_var(t[0].name) + "]: " + tptp(f.child());
    case FOKind::Exists: return "?[" + tptp_var(t[0].name) + "]: " + tptp(f.child());
  }
  return "";
}

}  // namespace

std::string emit_fo(const FOFormula& f, FOFormat format) {
  switch (format) {
    case FOFormat::Text: return text(f);
    case FOFormat::Json: return to_json(f).dump();
    case FOFormat::Tptp: {
      std::string body = tptp(f);
      const auto free = free_names(f);
      if (!free.empty()) {
        std::string vars;
        for (const auto& n : free) vars += (vars.empty() ? "" : ",") + tptp_var(n);
        body = "![" + vars + "]: " + (body.front() == '(' ? body : "(" + body + ")");
      }
      return "fof(corr, axiom, " + body + ").";
    }
  }
  return "";
}

FOFormula fo_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return from_json(j);
}

}  // namespace sabotage

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sabotage/formula.hpp"
#include "sabotage/frame.hpp"
#include "sabotage/statement.hpp"

namespace sabotage {

/// A first-order term: a domain variable or a nominal used as a variable.
struct FOTerm {
  enum class Sort { Variable, Nominal };
  Sort sort = Sort::Variable;
  std::string name;

  static FOTerm var(std::string n) { return FOTerm{Sort::Variable, std::move(n)}; }
  static FOTerm nominal(std::string n) { return FOTerm{Sort::Nominal, std::move(n)}; }

  friend bool operator==(const FOTerm&, const FOTerm&) = default;
  friend auto operator<=>(const FOTerm&, const FOTerm&) = default;
};

enum class FOKind { Eq, Rel, Pred, Not, And, Or, Imp, Forall, Exists };

/// Immutable first-order formula over one binary relation, unary predicates
/// and equality. And/Or are n-ary; the empty And is true, the empty Or false.
class FOFormula {
 public:
  FOKind kind() const { return node_->kind; }
  /// Eq/Rel: two terms. Pred: one term. Quantifiers: the bound term.
  const std::vector<FOTerm>& terms() const { return node_->terms; }
  /// Predicate name (the proposition it interprets).
  const std::string& pred() const { return node_->pred; }
  const std::vector<FOFormula>& children() const { return node_->children; }
  const FOFormula& child(std::size_t k = 0) const { return node_->children.at(k); }
  bool is(FOKind k) const { return kind() == k; }

  friend bool operator==(const FOFormula& a, const FOFormula& b);

  static FOFormula make(FOKind kind, std::vector<FOTerm> terms, std::string pred, std::vector<FOFormula> kids);

 private:
  struct Node {
    FOKind kind;
    std::vector<FOTerm> terms;
    std::string pred;
    std::vector<FOFormula> children;
  };
  explicit FOFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

FOFormula fo_eq(FOTerm a, FOTerm b);
FOFormula fo_neq(FOTerm a, FOTerm b);
FOFormula fo_rel(FOTerm a, FOTerm b);
FOFormula fo_pred(std::string p, FOTerm t);
FOFormula fo_not(FOFormula f);
/// A single conjunct is returned as is.
FOFormula fo_and(std::vector<FOFormula> fs);
FOFormula fo_or(std::vector<FOFormula> fs);
FOFormula fo_imp(FOFormula a, FOFormula b);
FOFormula fo_forall(FOTerm v, FOFormula body);
FOFormula fo_exists(FOTerm v, FOFormula body);
FOFormula fo_true();
FOFormula fo_false();

/// Free names in order of first appearance.
std::vector<std::string> free_names(const FOFormula& f);
/// True iff no quantifier rebinds a name already bound above it.
bool has_no_shadowing(const FOFormula& f);

/// Deleted edges as pairs of terms, and the designated variable.
struct TranslationContext {
  std::vector<std::pair<FOTerm, FOTerm>> e;
  FOTerm x = FOTerm::var("x");
};

/// Standard translation with its own counter for bound variables (y0, y1, ...),
/// which skips names already present. Nominal binders that would shadow a name
/// in scope are renamed.
class Translator {
 public:
  explicit Translator(const std::set<std::string>& taken = {});

  FOFormula formula(const Formula& f, const TranslationContext& ctx);
  FOFormula statement(const Statement& s);

 private:
  using Edges = std::vector<std::pair<FOTerm, FOTerm>>;

  FOFormula tr(const Formula& f, const FOTerm& x, const Edges& e);
  FOFormula tr_ineq(const Ineq& i);
  FOFormula tr_mega(const Mega& m);
  FOFormula tr_uq(const UQIneq& u);
  FOFormula tr_quasi(const QuasiUQ& q);

  FOTerm fresh_var();
  FOTerm nominal(const std::string& name) const;
  FOTerm bind_nominal(const std::string& name, const std::set<std::string>& avoid = {});
  void unbind_nominal(const std::string& name);
  Edges label_edges(const EdgeLabelSet& s) const;
  std::vector<FOFormula> exclusions(const Edges& e, const FOTerm& a, const FOTerm& b) const;

  std::set<std::string> taken_;
  std::set<std::string> in_scope_;
  std::map<std::string, std::vector<std::string>> renamed_;
  unsigned long next_var_ = 0;
};

FOFormula st_formula(const TranslationContext& ctx, const Formula& f);
FOFormula st_statement(const Statement& s);

/// Universal closure over the free names, in order of first appearance.
FOFormula universal_closure(const FOFormula& f);

/// Conjunction of the closed translations of the output quasi-inequalities.
FOFormula correspondent(const std::vector<QuasiUQ>& output);

/// A name used by the formula has no value.
class FOEvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A formula compiled to slot indices for repeated evaluation.
class CompiledFO {
 public:
  explicit CompiledFO(const FOFormula& f);

  const std::vector<std::string>& free_names() const { return free_; }
  const std::vector<std::string>& predicates() const { return preds_; }

  /// `preds[k]` interprets predicates()[k]; `free_values[k]` is the world of
  /// free_names()[k].
  bool eval(const KripkeFrame& frame, const std::vector<WorldSet>& preds, const std::vector<int>& free_values) const;

  struct Op {
    FOKind kind;
    int a = -1;  // slot or predicate index
    int b = -1;  // slot
    std::vector<int> kids;
  };

 private:
  int compile(const FOFormula& f, std::map<std::string, int>& slots);

  std::vector<Op> ops_;
  int root_ = -1;
  int slot_count_ = 0;
  std::vector<std::string> free_;
  std::vector<int> free_slots_;
  std::vector<std::string> preds_;
};

/// Tarskian truth; names are looked up in `assignment`, then in `val.noms`.
bool eval_fo(const KripkeFrame& frame, const Valuation& val, const std::map<std::string, int>& assignment,
             const FOFormula& f);

/// Agreement on every frame with 1..max_worlds worlds, every valuation of
/// `vars` and every assignment to the free names of either formula.
bool fo_equiv_on_small_frames(const FOFormula& a, const FOFormula& b, int max_worlds,
                              const std::vector<std::string>& vars = {}, int cap = 4);
/// First frame on which the two disagree, if any.
std::optional<KripkeFrame> fo_counterexample(const FOFormula& a, const FOFormula& b, int max_worlds,
                                             const std::vector<std::string>& vars = {}, int cap = 4);

enum class FOFormat { Text, Json, Tptp };

/// Parses `text`, `json` or `tptp`. Throws std::invalid_argument.
FOFormat parse_fo_format(const std::string& name);
std::string emit_fo(const FOFormula& f, FOFormat format);
/// Inverse of the JSON emitter. Throws std::invalid_argument.
FOFormula fo_from_json(const std::string& text);

/// Checks an annotated `fof(...)` line: balanced brackets, known connectives,
/// `r/2` and `p_*/1` atoms, bound upper-case variables. Returns the first
/// problem found, or nothing.
std::optional<std::string> validate_tptp(const std::string& text);

}  // namespace sabotage

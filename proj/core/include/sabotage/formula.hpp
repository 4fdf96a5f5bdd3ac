#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sabotage {

/// Constructors of the base and expanded languages.
enum class Kind : std::uint8_t {
  Bot,
  Top,
  Prop,
  Nom,
  Not,
  And,
  Or,
  Imp,
  Iff,
  Box,
  Dia,
  SBox,     // sabotage box: every single-edge deletion
  SDia,     // sabotage diamond: some single-edge deletion
  LBox,     // box over R0 minus labelled edges
  LDia,
  InvLBox,  // converse of LBox
  InvLDia,
  GBox,     // global modality A
  GDia,     // global modality E
  ForallNom,
  ExistsNom,
};

std::string_view kind_name(Kind k);

/// Directed edge named by a pair of nominals.
using NominalPair = std::pair<std::string, std::string>;
/// Ordered, duplicate-free set of nominal pairs.
using EdgeLabelSet = std::set<NominalPair>;

/// Immutable formula tree with shared structure.
///
/// A default-constructed formula is `top`.
class Formula {
 public:
  Formula();

  Kind kind() const { return node_->kind; }
  /// Proposition or nominal name, or the bound nominal of a quantifier.
  const std::string& name() const { return node_->name; }
  /// Label set of LBox/LDia/InvLBox/InvLDia; empty otherwise.
  const EdgeLabelSet& labels() const { return node_->labels; }
  const std::vector<Formula>& children() const { return node_->children; }
  std::size_t arity() const { return node_->children.size(); }
  const Formula& child(std::size_t i = 0) const { return node_->children.at(i); }
  const Formula& left() const { return child(0); }
  const Formula& right() const { return child(1); }
  std::size_t hash() const { return node_->hash; }

  bool is(Kind k) const { return kind() == k; }

  /// Rebuilds a node of the same kind, name and labels over new children.
  Formula with_children(std::vector<Formula> kids) const;

  static Formula make(Kind kind, std::string name, EdgeLabelSet labels,
                      std::vector<Formula> children);

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    EdgeLabelSet labels;
    std::vector<Formula> children;
    std::size_t hash;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// True iff `name` lies in the reserved nominal namespace (`i` then digits).
bool is_reserved_nominal_name(std::string_view name);

Formula bot();
Formula top();
Formula prop(std::string name);
Formula nom(std::string name);
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula box(Formula f);
Formula dia(Formula f);
Formula sbox(Formula f);
Formula sdia(Formula f);
Formula lbox(EdgeLabelSet s, Formula f);
Formula ldia(EdgeLabelSet s, Formula f);
Formula inv_lbox(EdgeLabelSet s, Formula f);
Formula inv_ldia(EdgeLabelSet s, Formula f);
Formula gbox(Formula f);
Formula gdia(Formula f);
Formula forall_nom(std::string i, Formula f);
Formula exists_nom(std::string i, Formula f);

/// Left-nested conjunction; `top` when empty.
Formula conj_all(const std::vector<Formula>& fs);
/// Left-nested disjunction; `bot` when empty.
Formula disj_all(const std::vector<Formula>& fs);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

}  // namespace sabotage

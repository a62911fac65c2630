// Formula AST, concrete grammar, parser, printer and structural measures
// for the three languages EL ⊂ DEL- ⊂ DEL.
//
// The core constructors are Top, Atom, Not, And, Possible (P[i]),
// DiamondUpdate (<U@u>) and DiamondUnion (<U@u + V@v>).  Everything else
// (|, ->, <->, B[i], box updates) is parser sugar that normalizes into the
// core.  Formulas are immutable and shared; they are safe to use from
// several threads at once.

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace audel {

using AgentName = std::string;

bool is_identifier(const std::string& s);

// A ground atomic proposition: a predicate instantiated with agent names.
// The empty argument list gives a plain propositional atom.
struct Fluent {
  std::string predicate;
  std::vector<AgentName> args;

  std::string str() const;
  auto operator<=>(const Fluent&) const = default;
};

// Fluent-arity table.  In closed mode every predicate must be declared; in
// open mode first use fixes the arity and later uses must agree.
class Signature {
 public:
  static Signature open() { return Signature{false}; }
  static Signature closed() { return Signature{true}; }

  void declare(const std::string& predicate, std::size_t arity);
  // Returns an error message on arity clash / unknown predicate.
  std::optional<std::string> check(const std::string& predicate,
                                   std::size_t arity);
  bool knows(const std::string& predicate) const;
  std::optional<std::size_t> arity_of(const std::string& predicate) const;

 private:
  explicit Signature(bool closed) : closed_(closed) {}
  bool closed_ = false;
  std::map<std::string, std::size_t> arities_;
};

// Reference to a pointed agent-update frame; the frame itself lives in a
// frame library and is resolved by name at evaluation time.
struct PointedFrameRef {
  std::string frame;
  std::string event;
  auto operator<=>(const PointedFrameRef&) const = default;
};

enum class FormulaKind {
  Top,
  Atom,
  Not,
  And,
  Possible,
  DiamondUpdate,
  DiamondUnion,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind;
  Fluent atom;                            // Atom
  AgentName agent;                        // Possible
  std::vector<PointedFrameRef> pframes;   // DiamondUpdate (1) / DiamondUnion (>1)
  FormulaPtr lhs;                         // unary child / left child
  FormulaPtr rhs;                         // right child of And

  const PointedFrameRef& pframe() const { return pframes.front(); }
};

// Constructors.  dia_union normalizes a one-element list to DiamondUpdate.
FormulaPtr top();
FormulaPtr bottom();  // ~true
FormulaPtr atom(Fluent f);
FormulaPtr atom(const std::string& predicate);
FormulaPtr f_not(FormulaPtr a);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);          // ~(~a & ~b)
FormulaPtr implies(FormulaPtr a, FormulaPtr b);       // ~(a & ~b)
FormulaPtr iff(FormulaPtr a, FormulaPtr b);           // (a->b) & (b->a)
FormulaPtr possible(AgentName i, FormulaPtr a);       // P[i] a
FormulaPtr belief(AgentName i, FormulaPtr a);         // ~P[i]~a
FormulaPtr dia_update(PointedFrameRef pf, FormulaPtr a);
FormulaPtr dia_union(std::vector<PointedFrameRef> pfs, FormulaPtr a);
FormulaPtr box_update(PointedFrameRef pf, FormulaPtr a);      // ~<U@u>~a
FormulaPtr box_union(std::vector<PointedFrameRef> pfs, FormulaPtr a);

bool equal(const FormulaPtr& a, const FormulaPtr& b);

struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t position);
  std::size_t position;
};

// Parses the concrete grammar.  Binary operators may be written with or
// without parentheses; precedence is ~/modalities, then &, |, ->, <->.
FormulaPtr parse_formula(const std::string& text, Signature& signature);
FormulaPtr parse_formula(const std::string& text);  // open signature

Fluent parse_fluent(const std::string& text, Signature& signature);

// Canonical printer; output re-parses to a structurally identical formula.
std::string print_formula(const FormulaPtr& f);

std::size_t node_count(const FormulaPtr& f);
std::size_t modal_depth(const FormulaPtr& f);

bool is_el(const FormulaPtr& f);         // no update constructors
bool is_del_minus(const FormulaPtr& f);  // no union updates

// Agents / fluents / frame names mentioned anywhere in the formula.
std::vector<AgentName> agents_of(const FormulaPtr& f);
std::vector<Fluent> fluents_of(const FormulaPtr& f);
std::vector<std::string> frames_of(const FormulaPtr& f);

}  // namespace audel

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace swapkit {

// Connectives of the logic signature. The numeric value doubles as the
// operation index in every multialgebra over that signature.
enum class Conn : std::uint8_t { And = 0, Or = 1, Imp = 2, Neg = 3, Cons = 4 };

constexpr int arity(Conn c) { return c == Conn::Neg || c == Conn::Cons ? 1 : 2; }
std::string_view conn_name(Conn c);    // "and", "or", ...
std::string_view conn_symbol(Conn c);  // "&", "|", "->", "~", "@"

struct OpDecl {
  std::string name;
  int arity = 0;
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpDecl> ops);

  // {and, or, imp : 2; neg, cons : 1}, in Conn order.
  static const Signature& logic();
  // {and, or, imp : 2; zero, one : 0}
  static const Signature& boolean();

  std::size_t size() const { return ops_.size(); }
  const OpDecl& op(std::size_t i) const { return ops_.at(i); }
  const std::vector<OpDecl>& ops() const { return ops_; }
  std::optional<std::size_t> find(std::string_view name) const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<OpDecl> ops_;
};

bool operator==(const OpDecl& a, const OpDecl& b);

class Formula {
 public:
  enum class Kind : std::uint8_t { Var, Unary, Binary };

  Formula() = default;  // an empty handle; only valid as a placeholder

  static Formula var(std::string name);
  static Formula unary(Conn op, Formula child);
  static Formula binary(Conn op, Formula left, Formula right);

  bool empty() const { return !node_; }
  Kind kind() const;
  bool is_var() const;
  const std::string& name() const;
  Conn op() const;
  const Formula& child() const;
  const Formula& left() const;
  const Formula& right() const;
  std::size_t hash() const;
  std::size_t size() const;
  std::size_t depth() const;

  std::string to_string() const;

  bool operator==(const Formula& other) const;
  std::strong_ordering operator<=>(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  Conn op = Conn::And;
  std::string name;
  Formula left, right;
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t depth = 0;
};

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline bool Formula::is_var() const { return node_->kind == Kind::Var; }
inline const std::string& Formula::name() const { return node_->name; }
inline Conn Formula::op() const { return node_->op; }
inline const Formula& Formula::child() const { return node_->left; }
inline const Formula& Formula::left() const { return node_->left; }
inline const Formula& Formula::right() const { return node_->right; }
inline std::size_t Formula::hash() const { return node_ ? node_->hash : 0; }
inline std::size_t Formula::size() const { return node_ ? node_->size : 0; }
inline std::size_t Formula::depth() const { return node_ ? node_->depth : 0; }

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

inline Formula neg(Formula a) { return Formula::unary(Conn::Neg, std::move(a)); }
inline Formula cons(Formula a) { return Formula::unary(Conn::Cons, std::move(a)); }
inline Formula conj(Formula a, Formula b) { return Formula::binary(Conn::And, std::move(a), std::move(b)); }
inline Formula disj(Formula a, Formula b) { return Formula::binary(Conn::Or, std::move(a), std::move(b)); }
inline Formula imp(Formula a, Formula b) { return Formula::binary(Conn::Imp, std::move(a), std::move(b)); }
// (a -> b) & (b -> a)
Formula iff(const Formula& a, const Formula& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar: ~ and @ bind tightest, then &, then |, then -> and <-> (both right
// associative). & and | associate to the left. Identifiers are
// [A-Za-z][A-Za-z0-9_]*; uppercase-initial identifiers are metavariables.
Formula parse(std::string_view text);

bool is_metavariable(std::string_view name);
bool is_schema(const Formula& f);  // every variable is a metavariable

// Every subformula exactly once, children before parents (post-order).
std::vector<Formula> subformula_closure(std::span<const Formula> formulas);
std::vector<Formula> subformula_closure(const Formula& f);

// Variables in order of first occurrence.
std::vector<std::string> variables(const Formula& f);

using Substitution = std::map<std::string, Formula>;

Formula substitute(const Formula& f, const Substitution& s);

// The unique substitution s with substitute(schema, s) == candidate.
std::optional<Substitution> match_schema(const Formula& schema, const Formula& candidate);

}  // namespace swapkit

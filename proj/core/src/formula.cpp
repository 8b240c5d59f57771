#include "swapkit/formula.hpp"

#include <cctype>
#include <functional>
#include <unordered_set>

namespace swapkit {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

int precedence(const Formula& f) {
  if (f.is_var() || f.kind() == Formula::Kind::Unary) return 4;
  switch (f.op()) {
    case Conn::And: return 3;
    case Conn::Or: return 2;
    default: return 1;
  }
}

void print(const Formula& f, std::string& out) {
  auto wrapped = [&out](const Formula& g, bool parens) {
    if (parens) out += '(';
    print(g, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::Var:
      out += f.name();
      return;
    case Formula::Kind::Unary:
      out += conn_symbol(f.op());
      wrapped(f.child(), precedence(f.child()) < 4);
      return;
    case Formula::Kind::Binary: {
      int p = precedence(f);
      if (f.op() == Conn::Imp) {
        wrapped(f.left(), precedence(f.left()) <= p);
        out += " -> ";
        wrapped(f.right(), precedence(f.right()) < p);
      } else {
        wrapped(f.left(), precedence(f.left()) < p);
        out += ' ';
        out += conn_symbol(f.op());
        out += ' ';
        wrapped(f.right(), precedence(f.right()) <= p);
      }
      return;
    }
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Formula run() {
    Formula f = implication();
    skip();
    if (pos_ != s_.size()) {
      char c = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) ||
          std::string_view("()&|-<>~@_").find(c) != std::string_view::npos)
        fail_here("unexpected input");
      fail(pos_, "unknown operator symbol '" + std::string(1, c) + "'");
    }
    return f;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::size_t at, const std::string& msg) { throw ParseError(at, msg); }
  [[noreturn]] void fail_here(const std::string& msg) {
    if (pos_ >= s_.size()) fail(pos_, msg + " at end of input");
    fail(pos_, msg + " near '" + std::string(1, s_[pos_]) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept("<->")) {
      Formula rhs = implication();
      return iff(lhs, rhs);
    }
    if (accept("->")) {
      Formula rhs = implication();
      return imp(lhs, rhs);
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept("|")) f = disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept("&")) f = conj(f, unary());
    return f;
  }

  Formula unary() {
    if (accept("~")) return neg(unary());
    if (accept("@")) return cons(unary());
    return atom();
  }

  Formula atom() {
    skip();
    if (pos_ >= s_.size()) fail_here("expected a formula");
    char c = s_[pos_];
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      Formula f = implication();
      if (!accept(")")) {
        skip();
        if (pos_ >= s_.size()) fail(open, "unbalanced '('");
        fail_here("expected ')'");
      }
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (!is_metavariable(name)) {
        for (char ch : name)
          if (std::isupper(static_cast<unsigned char>(ch)))
            fail(start, "variable '" + name + "' mixes case; use [a-z][a-z0-9_]*");
      }
      return Formula::var(std::move(name));
    }
    if (std::string_view("&|)-<>").find(c) != std::string_view::npos) fail_here("expected a formula");
    fail(pos_, "unknown operator symbol '" + std::string(1, c) + "'");
  }
};

bool match_into(const Formula& schema, const Formula& cand, Substitution& s) {
  switch (schema.kind()) {
    case Formula::Kind::Var: {
      auto [it, inserted] = s.emplace(schema.name(), cand);
      return inserted || it->second == cand;
    }
    case Formula::Kind::Unary:
      return cand.kind() == Formula::Kind::Unary && cand.op() == schema.op() &&
             match_into(schema.child(), cand.child(), s);
    case Formula::Kind::Binary:
      return cand.kind() == Formula::Kind::Binary && cand.op() == schema.op() &&
             match_into(schema.left(), cand.left(), s) && match_into(schema.right(), cand.right(), s);
  }
  return false;
}

}  // namespace

std::string_view conn_name(Conn c) {
  switch (c) {
    case Conn::And: return "and";
    case Conn::Or: return "or";
    case Conn::Imp: return "imp";
    case Conn::Neg: return "neg";
    case Conn::Cons: return "cons";
  }
  return "?";
}

std::string_view conn_symbol(Conn c) {
  switch (c) {
    case Conn::And: return "&";
    case Conn::Or: return "|";
    case Conn::Imp: return "->";
    case Conn::Neg: return "~";
    case Conn::Cons: return "@";
  }
  return "?";
}

bool operator==(const OpDecl& a, const OpDecl& b) { return a.name == b.name && a.arity == b.arity; }

Signature::Signature(std::vector<OpDecl> ops) : ops_(std::move(ops)) {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    for (std::size_t j = i + 1; j < ops_.size(); ++j)
      if (ops_[i].name == ops_[j].name)
        throw std::invalid_argument("operation '" + ops_[i].name + "' declared twice");
}

const Signature& Signature::logic() {
  static const Signature s({{"and", 2}, {"or", 2}, {"imp", 2}, {"neg", 1}, {"cons", 1}});
  return s;
}

const Signature& Signature::boolean() {
  static const Signature s({{"and", 2}, {"or", 2}, {"imp", 2}, {"zero", 0}, {"one", 0}});
  return s;
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].name == name) return i;
  return std::nullopt;
}

Formula Formula::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->hash = std::hash<std::string>{}(name);
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::unary(Conn op, Formula child) {
  if (arity(op) != 1) throw std::invalid_argument("binary connective used as unary");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Unary;
  n->op = op;
  n->hash = mix(mix(17, static_cast<std::size_t>(op)), child.hash());
  n->size = child.size() + 1;
  n->depth = child.depth() + 1;
  n->left = std::move(child);
  return Formula(std::move(n));
}

Formula Formula::binary(Conn op, Formula left, Formula right) {
  if (arity(op) != 2) throw std::invalid_argument("unary connective used as binary");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Binary;
  n->op = op;
  n->hash = mix(mix(mix(31, static_cast<std::size_t>(op)), left.hash()), right.hash());
  n->size = left.size() + right.size() + 1;
  n->depth = std::max(left.depth(), right.depth()) + 1;
  n->left = std::move(left);
  n->right = std::move(right);
  return Formula(std::move(n));
}

Formula iff(const Formula& a, const Formula& b) { return conj(imp(a, b), imp(b, a)); }

std::string Formula::to_string() const {
  std::string out;
  if (node_) print(*this, out);
  return out;
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->hash != o.node_->hash || node_->kind != o.node_->kind || node_->size != o.node_->size)
    return false;
  switch (node_->kind) {
    case Kind::Var: return node_->name == o.node_->name;
    case Kind::Unary: return node_->op == o.node_->op && node_->left == o.node_->left;
    case Kind::Binary:
      return node_->op == o.node_->op && node_->left == o.node_->left && node_->right == o.node_->right;
  }
  return false;
}

std::strong_ordering Formula::operator<=>(const Formula& o) const {
  if (node_ == o.node_) return std::strong_ordering::equal;
  if (!node_) return std::strong_ordering::less;
  if (!o.node_) return std::strong_ordering::greater;
  if (auto c = node_->kind <=> o.node_->kind; c != 0) return c;
  switch (node_->kind) {
    case Kind::Var: return node_->name <=> o.node_->name;
    case Kind::Unary:
      if (auto c = node_->op <=> o.node_->op; c != 0) return c;
      return node_->left <=> o.node_->left;
    case Kind::Binary:
      if (auto c = node_->op <=> o.node_->op; c != 0) return c;
      if (auto c = node_->left <=> o.node_->left; c != 0) return c;
      return node_->right <=> o.node_->right;
  }
  return std::strong_ordering::equal;
}

ParseError::ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

Formula parse(std::string_view text) { return Parser(text).run(); }

bool is_metavariable(std::string_view name) {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name.front()));
}

bool is_schema(const Formula& f) {
  for (const auto& v : variables(f))
    if (!is_metavariable(v)) return false;
  return true;
}

std::vector<Formula> subformula_closure(std::span<const Formula> formulas) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  std::function<void(const Formula&)> visit = [&](const Formula& f) {
    if (seen.count(f)) return;
    if (f.kind() == Formula::Kind::Unary) visit(f.child());
    if (f.kind() == Formula::Kind::Binary) {
      visit(f.left());
      visit(f.right());
    }
    seen.insert(f);
    out.push_back(f);
  };
  for (const auto& f : formulas) visit(f);
  return out;
}

std::vector<Formula> subformula_closure(const Formula& f) {
  return subformula_closure(std::span<const Formula>(&f, 1));
}

std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> out;
  for (const auto& g : subformula_closure(f))
    if (g.is_var()) out.push_back(g.name());
  return out;
}

Formula substitute(const Formula& f, const Substitution& s) {
  switch (f.kind()) {
    case Formula::Kind::Var: {
      auto it = s.find(f.name());
      return it == s.end() ? f : it->second;
    }
    case Formula::Kind::Unary: return Formula::unary(f.op(), substitute(f.child(), s));
    case Formula::Kind::Binary:
      return Formula::binary(f.op(), substitute(f.left(), s), substitute(f.right(), s));
  }
  return f;
}

std::optional<Substitution> match_schema(const Formula& schema, const Formula& candidate) {
  Substitution s;
  if (!match_into(schema, candidate, s)) return std::nullopt;
  return s;
}

}  // namespace swapkit

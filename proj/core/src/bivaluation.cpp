#include "swapkit/bivaluation.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace swapkit {

namespace {

using Lookup = std::function<std::optional<bool>(const Formula&)>;

bool is_pair_logic(Logic l) { return l == Logic::LFI1o || l == Logic::Ciore; }

bool apply(Conn c, bool a, bool b) {
  switch (c) {
    case Conn::And: return a && b;
    case Conn::Or: return a || b;
    default: return !a || b;
  }
}

bool is_unary(const Formula& f, Conn c) { return f.kind() == Formula::Kind::Unary && f.op() == c; }

// Clauses headed by f.
std::optional<std::string> check(Logic l, const Formula& f, const Lookup& mu) {
  auto v = mu(f);
  if (!v || f.is_var()) return std::nullopt;
  auto fail = [&](const char* clause) { return std::string(clause) + " fails at " + f.to_string(); };

  if (f.kind() == Formula::Kind::Binary) {
    auto a = mu(f.left()), b = mu(f.right());
    if (a && b && *v != apply(f.op(), *a, *b)) return fail("classical clause");
    return std::nullopt;
  }

  const Formula& a = f.child();
  auto va = mu(a);
  if (f.op() == Conn::Neg) {
    if (va && !*va && !*v) return fail("negation clause");
  } else {
    auto vn = mu(neg(a));
    if (va && vn && *v && *va && *vn) return fail("consistency clause");
  }
  if (!is_pair_logic(l) || a.is_var()) return std::nullopt;

  if (f.op() == Conn::Neg && is_unary(a, Conn::Cons)) {
    auto vb = mu(a.child()), vnb = mu(neg(a.child()));
    if (*v && vb && vnb && !(*vb && *vnb)) return fail("negated consistency clause");
  } else if (f.op() == Conn::Neg && is_unary(a, Conn::Neg)) {
    auto vb = mu(a.child());
    if (vb && *v != *vb) return fail("double negation clause");
  } else if (f.op() == Conn::Neg && l == Logic::LFI1o && a.kind() == Formula::Kind::Binary) {
    auto x = mu(a.left()), nx = mu(neg(a.left())), ny = mu(neg(a.right()));
    if (!x || !nx || !ny) return std::nullopt;
    bool want;
    switch (a.op()) {
      case Conn::And: want = *nx || *ny; break;
      case Conn::Or: want = *nx && *ny; break;
      default: want = *x && *ny; break;
    }
    if (*v != want) return fail("negated compound clause");
  } else if (f.op() == Conn::Cons && l == Logic::Ciore && a.kind() == Formula::Kind::Binary) {
    auto cx = mu(cons(a.left())), cy = mu(cons(a.right()));
    if (cx && cy && *v != (*cx || *cy)) return fail("consistency propagation clause");
  }
  return std::nullopt;
}

std::unordered_map<Formula, std::size_t, FormulaHash> positions(const std::vector<Formula>& fs) {
  std::unordered_map<Formula, std::size_t, FormulaHash> pos;
  for (std::size_t i = 0; i < fs.size(); ++i) pos.emplace(fs[i], i);
  return pos;
}

void require_bivaluations(Logic l) {
  if (!has_bivaluations(l))
    throw std::invalid_argument("no bivaluation semantics for " + std::string(logic_name(l)));
}

}  // namespace

bool has_bivaluations(Logic l) { return l == Logic::MbC || is_pair_logic(l); }

std::optional<bool> Bivaluation::value(const Formula& f) const {
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == f) return values[i];
  return std::nullopt;
}

std::vector<Formula> bivaluation_domain(std::span<const Formula> base) {
  std::vector<Formula> all = subformula_closure(base);
  const std::size_t n = all.size();
  for (std::size_t i = 0; i < n; ++i) {
    all.push_back(neg(all[i]));
    all.push_back(cons(all[i]));
    all.push_back(neg(cons(all[i])));
  }
  return subformula_closure(all);
}

std::optional<std::string> bivaluation_violation(Logic l, const Bivaluation& mu) {
  require_bivaluations(l);
  if (mu.domain.size() != mu.values.size()) return std::string("domain and values differ in size");
  auto pos = positions(mu.domain);
  Lookup look = [&](const Formula& f) -> std::optional<bool> {
    auto it = pos.find(f);
    if (it == pos.end()) return std::nullopt;
    return mu.values[it->second];
  };
  for (const auto& f : mu.domain)
    if (auto e = check(l, f, look)) return e;
  return std::nullopt;
}

PartialValuation induced_valuation(Logic l, const Bivaluation& mu, std::span<const Formula> base) {
  require_bivaluations(l);
  SwapStructure target = full_swap(l, BoolAlg(1));
  const BoolAlg& a = target.backing();
  PartialValuation v;
  v.formulas = subformula_closure(base);
  for (const auto& f : v.formulas) {
    auto z1 = mu.value(f), z2 = mu.value(neg(f)), z3 = mu.value(cons(f));
    if (!z1 || !z2 || !z3) throw std::invalid_argument("induced_valuation: domain misses " + f.to_string());
    Snapshot z = l == Logic::MbC ? Snapshot{*z1, *z2, *z3} : from_pair(a, *z1, *z2);
    auto x = target.find(z);
    if (!x) throw std::invalid_argument("induced_valuation: snapshot of " + f.to_string() + " is outside the universe");
    v.values.push_back(*x);
  }
  return v;
}

Bivaluation bivaluation_from(Logic l, const PartialValuation& v, std::span<const Formula> base) {
  require_bivaluations(l);
  SwapStructure source = full_swap(l, BoolAlg(1));
  auto pos = positions(v.formulas);
  auto snap = [&](const Formula& f) -> std::optional<Snapshot> {
    auto it = pos.find(f);
    if (it == pos.end()) return std::nullopt;
    return source.snapshot(v.values[it->second]);
  };
  Bivaluation mu;
  mu.domain = bivaluation_domain(base);
  for (const auto& f : mu.domain) {
    bool val = true;
    if (auto z = snap(f)) {
      val = z->z1;
    } else if (f.is_var()) {
      throw std::invalid_argument("bivaluation_from: valuation misses " + f.to_string());
    } else if (f.kind() == Formula::Kind::Unary && snap(f.child())) {
      const Snapshot z = *snap(f.child());
      val = f.op() == Conn::Neg ? z.z2 : z.z3;
    } else if (f.kind() == Formula::Kind::Unary && f.op() == Conn::Neg && f.child().kind() == Formula::Kind::Unary &&
               f.child().op() == Conn::Cons && snap(f.child().child())) {
      // ~@a with @a outside the closure.
      const Snapshot z = *snap(f.child().child());
      val = l == Logic::MbC ? true : (z.z1 && z.z2);
    } else {
      throw std::invalid_argument("bivaluation_from: cannot value " + f.to_string());
    }
    mu.values.push_back(val);
  }
  return mu;
}

std::optional<Bivaluation> random_bivaluation(Logic l, std::span<const Formula> base, Rng& rng) {
  require_bivaluations(l);
  Bivaluation mu;
  mu.domain = bivaluation_domain(base);
  const std::size_t n = mu.domain.size();
  auto pos = positions(mu.domain);
  std::vector<int> val(n, -1);
  Lookup look = [&](const Formula& f) -> std::optional<bool> {
    auto it = pos.find(f);
    if (it == pos.end() || val[it->second] < 0) return std::nullopt;
    return val[it->second] == 1;
  };
  // Every clause whose formulas are all assigned.
  auto consistent = [&](std::size_t upto) {
    for (std::size_t j = 0; j <= upto; ++j)
      if (check(l, mu.domain[j], look)) return false;
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    const int first = static_cast<int>(pick(rng, 2));
    for (int t = 0; t < 2; ++t) {
      val[i] = t == 0 ? first : 1 - first;
      if (consistent(i) && go(i + 1)) return true;
    }
    val[i] = -1;
    return false;
  };
  if (!go(0)) return std::nullopt;
  for (int x : val) mu.values.push_back(x == 1);
  return mu;
}

}  // namespace swapkit

#include "swapkit/nmatrix.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace swapkit {

namespace {

using Bits = std::vector<std::uint64_t>;
using SetId = std::uint32_t;

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : b) h ^= std::hash<std::uint64_t>()(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

// Interned subsets of the carrier. Id 0 is the empty set.
class SetPool {
 public:
  explicit SetPool(std::size_t k) : k_(k), words_((k + 63) / 64) { intern(Bits(words_, 0)); }

  SetId intern(Bits b) {
    auto it = ids_.find(b);
    if (it != ids_.end()) return it->second;
    const SetId id = static_cast<SetId>(sets_.size());
    ids_.emplace(b, id);
    std::vector<Index> mem;
    for (Index x = 0; x < k_; ++x)
      if (b[x / 64] >> (x % 64) & 1u) mem.push_back(x);
    members_.push_back(std::move(mem));
    sets_.push_back(std::move(b));
    return id;
  }

  SetId of(std::span<const Index> xs) {
    Bits b(words_, 0);
    for (Index x : xs) b[x / 64] |= std::uint64_t{1} << (x % 64);
    return intern(std::move(b));
  }
  SetId singleton(Index x) { return of(std::span<const Index>(&x, 1)); }
  SetId all() {
    std::vector<Index> xs(k_);
    for (Index x = 0; x < k_; ++x) xs[x] = x;
    return of(xs);
  }

  SetId meet(SetId a, SetId b) {
    if (a == b) return a;
    const std::uint64_t key = std::uint64_t{std::min(a, b)} << 32 | std::max(a, b);
    auto it = meets_.find(key);
    if (it != meets_.end()) return it->second;
    Bits r = sets_[a];
    for (std::size_t w = 0; w < words_; ++w) r[w] &= sets_[b][w];
    const SetId id = intern(std::move(r));
    meets_.emplace(key, id);
    return id;
  }

  void unite(Bits& acc, SetId s) const {
    for (std::size_t w = 0; w < words_; ++w) acc[w] |= sets_[s][w];
  }
  Bits empty_bits() const { return Bits(words_, 0); }
  const std::vector<Index>& members(SetId s) const { return members_[s]; }

 private:
  std::size_t k_, words_;
  std::vector<Bits> sets_;
  std::vector<std::vector<Index>> members_;
  std::unordered_map<Bits, SetId, BitsHash> ids_;
  std::unordered_map<std::uint64_t, SetId> meets_;
};

class Engine {
 public:
  Engine(const Nmatrix& m, std::span<const Formula> premises, const Formula& goal)
      : m_(m), pool_(m.algebra.size()) {
    std::vector<Formula> roots(premises.begin(), premises.end());
    roots.push_back(goal);
    std::vector<Formula> closure = subformula_closure(roots);
    for (const auto& f : closure)
      if (f.is_var()) nodes_.push_back(f);
    for (const auto& f : closure)
      if (!f.is_var()) nodes_.push_back(f);

    std::unordered_map<Formula, std::size_t, FormulaHash> pos;
    for (std::size_t i = 0; i < nodes_.size(); ++i) pos.emplace(nodes_[i], i);
    const std::size_t n = nodes_.size();
    kids_.assign(n, {0, 0});
    std::vector<int> parents(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Formula& f = nodes_[i];
      if (f.is_var()) continue;
      kids_[i][0] = pos.at(f.left());
      ++parents[kids_[i][0]];
      if (f.kind() == Formula::Kind::Binary) {
        kids_[i][1] = pos.at(f.right());
        ++parents[kids_[i][1]];
      }
    }

    std::vector<Index> des, undes;
    for (Index x = 0; x < m.algebra.size(); ++x) (m.designated.at(x) ? des : undes).push_back(x);
    const SetId d = pool_.of(des), nd = pool_.of(undes);
    all_ = pool_.all();

    constraint_.assign(n, all_);
    branch_.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) branch_[i] = nodes_[i].is_var() || parents[i] >= 2;
    for (const auto& p : premises) {
      const std::size_t i = pos.at(p);
      constraint_[i] = pool_.meet(constraint_[i], d);
      branch_[i] = true;
    }
    const std::size_t g = pos.at(goal);
    constraint_[g] = pool_.meet(constraint_[g], nd);
    branch_[g] = true;
    cur_.assign(n, 0);
    chosen_.assign(n, 0);
  }

  bool run() { return search(0); }

  // Fixes each node in turn to its least value that still admits a countermodel.
  PartialValuation minimize() {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const SetId base = constraint_[i];
      const bool was_branch = branch_[i];
      branch_[i] = true;
      bool fixed = false;
      for (Index v : std::vector<Index>(pool_.members(base))) {
        constraint_[i] = pool_.singleton(v);
        if (search(0)) {
          fixed = true;
          break;
        }
      }
      if (!fixed) {
        constraint_[i] = base;
        branch_[i] = was_branch;
        throw std::logic_error("decide: countermodel vanished during minimization");
      }
    }
    PartialValuation v;
    v.formulas = nodes_;
    v.values = chosen_;
    return v;
  }

 private:
  SetId lift(std::size_t i) {
    const Formula& f = nodes_[i];
    const std::size_t op = static_cast<std::size_t>(f.op());
    const SetId a = cur_[kids_[i][0]];
    const bool binary = f.kind() == Formula::Kind::Binary;
    const SetId b = binary ? cur_[kids_[i][1]] : 0;
    const std::uint64_t key = std::uint64_t{op} << 58 | std::uint64_t{a} << 29 | b;
    if (a >= (1u << 29) || b >= (1u << 29)) throw CapError("decide: too many intermediate value sets");
    auto it = lifts_.find(key);
    if (it != lifts_.end()) return it->second;
    Bits acc = pool_.empty_bits();
    for (Index x : pool_.members(a)) {
      if (binary) {
        for (Index y : pool_.members(b)) {
          Index args[2] = {x, y};
          pool_.unite(acc, cell_set(op, m_.algebra.encode(args)));
        }
      } else {
        pool_.unite(acc, cell_set(op, x));
      }
    }
    const SetId id = pool_.intern(std::move(acc));
    lifts_.emplace(key, id);
    return id;
  }

  SetId cell_set(std::size_t op, std::size_t code) {
    auto& row = cells_[op];
    if (row.empty()) row.assign(m_.algebra.tuple_count(op), static_cast<SetId>(-1));
    if (row[code] == static_cast<SetId>(-1)) row[code] = pool_.of(m_.algebra.cell_at(op, code));
    return row[code];
  }

  bool search(std::size_t i) {
    if (i == nodes_.size()) return true;
    SetId s = nodes_[i].is_var() ? all_ : lift(i);
    s = pool_.meet(s, constraint_[i]);
    if (s == 0) return false;
    if (!branch_[i]) {
      cur_[i] = s;
      return search(i + 1);
    }
    for (Index v : pool_.members(s)) {
      cur_[i] = pool_.singleton(v);
      chosen_[i] = v;
      if (search(i + 1)) return true;
    }
    return false;
  }

  const Nmatrix& m_;
  SetPool pool_;
  SetId all_ = 0;
  std::vector<Formula> nodes_;
  std::vector<std::array<std::size_t, 2>> kids_;
  std::vector<SetId> constraint_;
  std::vector<bool> branch_;
  std::vector<SetId> cur_;
  std::vector<Index> chosen_;
  std::unordered_map<std::uint64_t, SetId> lifts_;
  std::array<std::vector<SetId>, 8> cells_;
};

}  // namespace

Nmatrix nmatrix_of(const SwapStructure& b) {
  Nmatrix m{b.algebra(), std::vector<bool>(b.size())};
  for (Index x = 0; x < b.size(); ++x) m.designated[x] = b.designated(x);
  return m;
}

std::optional<Index> PartialValuation::value(const Formula& f) const {
  for (std::size_t i = 0; i < formulas.size(); ++i)
    if (formulas[i] == f) return values[i];
  return std::nullopt;
}

bool is_legal(const Nmatrix& m, const PartialValuation& v) {
  if (v.formulas.size() != v.values.size()) return false;
  for (std::size_t i = 0; i < v.formulas.size(); ++i) {
    const Formula& f = v.formulas[i];
    if (v.values[i] >= m.algebra.size()) return false;
    if (f.is_var()) continue;
    auto a = v.value(f.left());
    if (!a) continue;
    if (f.kind() == Formula::Kind::Unary) {
      if (!m.algebra.cell_contains(static_cast<std::size_t>(f.op()), std::span<const Index>(&*a, 1), v.values[i]))
        return false;
    } else {
      auto b = v.value(f.right());
      if (!b) continue;
      Index args[2] = {*a, *b};
      if (!m.algebra.cell_contains(static_cast<std::size_t>(f.op()), args, v.values[i])) return false;
    }
  }
  return true;
}

PartialValuation random_valuation(const Nmatrix& m, std::span<const Formula> formulas, Rng& rng) {
  PartialValuation v;
  v.formulas = subformula_closure(formulas);
  std::unordered_map<Formula, Index, FormulaHash> val;
  for (const auto& f : v.formulas) {
    Index x;
    if (f.is_var()) {
      x = static_cast<Index>(pick(rng, m.algebra.size()));
    } else {
      std::vector<Index> args = {val.at(f.left())};
      if (f.kind() == Formula::Kind::Binary) args.push_back(val.at(f.right()));
      Cell c = m.algebra.cell(static_cast<std::size_t>(f.op()), args);
      x = c[pick(rng, c.size())];
    }
    val.emplace(f, x);
    v.values.push_back(x);
  }
  return v;
}

Verdict decide(const Nmatrix& m, std::span<const Formula> premises, const Formula& goal, const DecideOptions& opts) {
  if (!(m.algebra.signature() == Signature::logic())) throw SignatureMismatch("decide: logic signature expected");
  if (m.designated.size() != m.algebra.size()) throw std::invalid_argument("decide: designation size mismatch");
  Engine e(m, premises, goal);
  Verdict v;
  v.holds = !e.run();
  if (!v.holds && opts.countermodel) v.countermodel = e.minimize();
  return v;
}

SwapStructure characteristic_structure(Logic l) {
  if (l == Logic::CPLeP) throw Unsupported("CPLe+ has no finite characteristic Nmatrix in this engine");
  return full_swap(l, BoolAlg(1));
}

Nmatrix characteristic_matrix(Logic l) { return nmatrix_of(characteristic_structure(l)); }

Verdict decide_logic(Logic l, std::span<const Formula> premises, const Formula& goal, const DecideOptions& opts) {
  return decide(characteristic_matrix(l), premises, goal, opts);
}

}  // namespace swapkit

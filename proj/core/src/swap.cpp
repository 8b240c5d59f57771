#include "swapkit/swap.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace swapkit {

namespace {

constexpr std::size_t kMaxFullCarrier = 1024;

constexpr std::size_t op_index(Conn c) { return static_cast<std::size_t>(c); }
constexpr std::array<Conn, 3> kBinary = {Conn::And, Conn::Or, Conn::Imp};

Elem apply(const BoolAlg& a, Conn c, Elem x, Elem y) {
  switch (c) {
    case Conn::And: return a.meet(x, y);
    case Conn::Or: return a.join(x, y);
    default: return a.imp(x, y);
  }
}

bool fixes_consistency(Logic l) { return l >= Logic::MbCci; }
bool bounds_negation(Logic l) { return l >= Logic::Ci; }
bool single_valued(Logic l) { return l == Logic::LFI1o || l == Logic::Ciore; }

// The fixed value of the consistency operator from mbCci on.
Snapshot consistency_value(const BoolAlg& a, const Snapshot& z) {
  Elem both = a.meet(z.z1, z.z2);
  return from_pair(a, a.compl_(both), both);
}

Snapshot twist_value(Logic l, const BoolAlg& a, Conn c, const Snapshot& z, const Snapshot& w) {
  if (l == Logic::LFI1o) {
    switch (c) {
      case Conn::And: return from_pair(a, a.meet(z.z1, w.z1), a.join(z.z2, w.z2));
      case Conn::Or: return from_pair(a, a.join(z.z1, w.z1), a.meet(z.z2, w.z2));
      default: return from_pair(a, a.imp(z.z1, w.z1), a.meet(z.z1, w.z2));
    }
  }
  Elem x = apply(a, c, z.z1, w.z1);
  Elem inner = a.meet(a.meet(z.z1, z.z2), a.meet(w.z1, w.z2));
  return from_pair(a, x, a.imp(x, inner));
}

Snapshot twist_negation(const BoolAlg& a, const Snapshot& z) { return from_pair(a, z.z2, z.z1); }

// Named two-element snapshots in the order used by the tables.
const std::array<std::pair<Snapshot, const char*>, 5> kNamed = {{
    {{1, 0, 1}, "T"},
    {{1, 1, 0}, "t"},
    {{1, 0, 0}, "t0"},
    {{0, 1, 1}, "F"},
    {{0, 1, 0}, "f0"},
}};

}  // namespace

Snapshot from_pair(const BoolAlg& a, Elem z1, Elem z2) { return {z1, z2, a.compl_(a.meet(z1, z2))}; }

bool pair_encodable(const BoolAlg& a, const Snapshot& z) { return z.z3 == a.compl_(a.meet(z.z1, z.z2)); }

std::string snapshot_label(const BoolAlg& a, const Snapshot& z, Encoding enc) {
  if (a.atoms() == 1)
    for (const auto& [s, name] : kNamed)
      if (s == z) return name;
  std::string out = "(" + a.format(z.z1) + "," + a.format(z.z2);
  if (enc == Encoding::Triple) out += "," + a.format(z.z3);
  return out + ")";
}

bool in_universe(Logic l, const BoolAlg& a, const Snapshot& z) {
  if (!a.contains(z.z1) || !a.contains(z.z2) || !a.contains(z.z3)) return false;
  switch (l) {
    case Logic::CPLeP: return true;
    case Logic::MbC: return a.join(z.z1, z.z2) == a.top() && a.meet(a.meet(z.z1, z.z2), z.z3) == 0;
    case Logic::CPLe: return z.z2 == a.compl_(z.z1) && pair_encodable(a, z);
    default: return a.join(z.z1, z.z2) == a.top() && pair_encodable(a, z);
  }
}

std::vector<Snapshot> universe(Logic l, const BoolAlg& a) {
  std::vector<Snapshot> out;
  if (a.atoms() == 1) {
    for (const auto& [s, name] : kNamed)
      if (in_universe(l, a, s)) out.push_back(s);
  }
  if (a.atoms() > 5) throw CapError("universe: backing algebra too large to enumerate");
  const Elem n = static_cast<Elem>(a.size());
  for (Elem z1 = 0; z1 < n; ++z1)
    for (Elem z2 = 0; z2 < n; ++z2)
      for (Elem z3 = 0; z3 < n; ++z3) {
        Snapshot z{z1, z2, z3};
        if (!in_universe(l, a, z)) continue;
        if (a.atoms() == 1 && std::find(out.begin(), out.end(), z) != out.end()) continue;
        out.push_back(z);
      }
  return out;
}

SwapStructure::SwapStructure(MultiAlg algebra, BoolAlg backing, Logic logic, Encoding encoding,
                             std::vector<Snapshot> snapshots)
    : alg_(std::move(algebra)), backing_(backing), logic_(logic), enc_(encoding), snaps_(std::move(snapshots)) {
  if (!(alg_.signature() == Signature::logic())) throw SignatureMismatch("swap structures use the logic signature");
  if (snaps_.size() != alg_.size()) throw std::invalid_argument("undecodable snapshots: one snapshot per element");
  for (const auto& z : snaps_) {
    if (!backing_.contains(z.z1) || !backing_.contains(z.z2) || !backing_.contains(z.z3))
      throw std::invalid_argument("undecodable snapshots: coordinate outside the backing algebra");
    if (enc_ == Encoding::Pair && !pair_encodable(backing_, z))
      throw std::invalid_argument("undecodable snapshots: third coordinate is not ~(z1 & z2) in pair mode");
  }
  sorted_.resize(snaps_.size());
  for (Index i = 0; i < sorted_.size(); ++i) sorted_[i] = i;
  std::sort(sorted_.begin(), sorted_.end(), [this](Index x, Index y) { return snaps_[x] < snaps_[y]; });
  for (std::size_t i = 1; i < sorted_.size(); ++i)
    if (snaps_[sorted_[i - 1]] == snaps_[sorted_[i]])
      throw std::invalid_argument("undecodable snapshots: two elements share a snapshot");
}

std::optional<Index> SwapStructure::find(const Snapshot& z) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), z,
                             [this](Index x, const Snapshot& s) { return snaps_[x] < s; });
  if (it == sorted_.end() || !(snaps_[*it] == z)) return std::nullopt;
  return *it;
}

Index SwapStructure::at(const Snapshot& z) const {
  if (auto x = find(z)) return *x;
  throw std::out_of_range("snapshot " + snapshot_label(backing_, z, enc_) + " is not in the structure");
}

SwapStructure reencode(const SwapStructure& b, Encoding enc) {
  return SwapStructure(b.algebra(), b.backing(), b.logic(), enc, b.snapshots());
}

SwapStructure full_swap(Logic l, const BoolAlg& a) {
  std::vector<Snapshot> u = universe(l, a);
  if (u.size() > kMaxFullCarrier)
    throw CapError("full swap structure with " + std::to_string(u.size()) + " elements exceeds the cap of " +
                   std::to_string(kMaxFullCarrier));
  const Encoding enc = encoding_of(l);
  std::vector<std::string> labels;
  for (const auto& z : u) labels.push_back(snapshot_label(a, z, enc));

  std::vector<Index> sorted(u.size());
  for (Index i = 0; i < sorted.size(); ++i) sorted[i] = i;
  std::sort(sorted.begin(), sorted.end(), [&](Index x, Index y) { return u[x] < u[y]; });
  auto at = [&](const Snapshot& z) -> Index {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), z, [&](Index x, const Snapshot& s) { return u[x] < s; });
    if (it == sorted.end() || !(u[*it] == z)) throw std::logic_error("full_swap: value outside the universe");
    return *it;
  };

  std::vector<Cell> fiber(a.size());
  for (Index i = 0; i < u.size(); ++i) fiber[u[i].z1].push_back(i);

  MultiAlgBuilder b(Signature::logic(), labels);
  const Index k = static_cast<Index>(u.size());
  for (Conn c : kBinary)
    for (Index x = 0; x < k; ++x)
      for (Index y = 0; y < k; ++y) {
        Index args[2] = {x, y};
        if (single_valued(l))
          b.set(op_index(c), args, Cell{at(twist_value(l, a, c, u[x], u[y]))});
        else
          b.set(op_index(c), args, fiber[apply(a, c, u[x].z1, u[y].z1)]);
      }
  for (Index x = 0; x < k; ++x) {
    const Snapshot& z = u[x];
    Cell negs;
    if (single_valued(l)) {
      negs = {at(twist_negation(a, z))};
    } else {
      for (Index y : fiber[z.z2])
        if (!bounds_negation(l) || a.leq(u[y].z2, z.z1)) negs.push_back(y);
    }
    if (negs.empty()) throw std::logic_error("full_swap: empty negation cell");
    b.set(op_index(Conn::Neg), std::span<const Index>(&x, 1), negs);
    Cell cons = fixes_consistency(l) ? Cell{at(consistency_value(a, z))} : fiber[z.z3];
    if (cons.empty()) throw std::logic_error("full_swap: empty consistency cell");
    b.set(op_index(Conn::Cons), std::span<const Index>(&x, 1), cons);
  }
  return SwapStructure(b.build(), a, l, enc, std::move(u));
}

namespace {
bool singleton_of(const SwapStructure& b, const Cell& cell, const Snapshot& z) {
  auto x = b.find(z);
  return x && cell == Cell{*x};
}
}  // namespace

std::optional<std::string> swap_violation(Logic l, const SwapStructure& b) {
  const BoolAlg& a = b.backing();
  const MultiAlg& m = b.algebra();
  auto lab = [&](Index x) { return m.label(x); };

  bool zero = false;
  for (const auto& z : b.snapshots()) zero = zero || z.z1 == 0;
  if (!zero) return std::string("no element has first coordinate 0");

  for (Index x = 0; x < b.size(); ++x)
    if (!in_universe(l, a, b.snapshot(x)))
      return lab(x) + " lies outside the " + std::string(logic_name(l)) + " universe";

  const Index k = static_cast<Index>(b.size());
  for (Conn c : kBinary)
    for (Index x = 0; x < k; ++x)
      for (Index y = 0; y < k; ++y) {
        Cell cell = m.cell(c, x, y);
        const Elem want = apply(a, c, b.snapshot(x).z1, b.snapshot(y).z1);
        for (Index v : cell)
          if (b.snapshot(v).z1 != want)
            return std::string(conn_name(c)) + "(" + lab(x) + "," + lab(y) + ") contains " + lab(v) +
                   " with the wrong first coordinate";
        if (single_valued(l) && !singleton_of(b, cell, twist_value(l, a, c, b.snapshot(x), b.snapshot(y))))
          return std::string(conn_name(c)) + "(" + lab(x) + "," + lab(y) + ") differs from the " +
                 std::string(logic_name(l)) + " value";
      }
  for (Index x = 0; x < k; ++x) {
    const Snapshot& z = b.snapshot(x);
    Cell negs = m.cell(Conn::Neg, x);
    for (Index v : negs) {
      if (b.snapshot(v).z1 != z.z2) return "neg(" + lab(x) + ") contains " + lab(v) + " with the wrong first coordinate";
      if (bounds_negation(l) && !a.leq(b.snapshot(v).z2, z.z1))
        return "neg(" + lab(x) + ") contains " + lab(v) + " whose second coordinate exceeds z1";
    }
    if (single_valued(l) && !singleton_of(b, negs, twist_negation(a, z)))
      return "neg(" + lab(x) + ") differs from the " + std::string(logic_name(l)) + " value";
    Cell cons = m.cell(Conn::Cons, x);
    for (Index v : cons)
      if (b.snapshot(v).z1 != z.z3)
        return "cons(" + lab(x) + ") contains " + lab(v) + " with the wrong first coordinate";
    if (fixes_consistency(l)) {
      if (!singleton_of(b, cons, consistency_value(a, z))) return "cons(" + lab(x) + ") is not the fixed consistency value";
    }
  }
  return std::nullopt;
}

bool is_swap_for(Logic l, const SwapStructure& b) { return !swap_violation(l, b); }

std::optional<SwapStructure> find_swap_decoding(Logic l, const MultiAlg& m) {
  if (!(m.signature() == Signature::logic())) throw SignatureMismatch("swap structures use the logic signature");
  const std::size_t k = m.size();
  if (k > 8) throw CapError("find_swap_decoding: carrier too large for exhaustive search");
  if (k == 0) return std::nullopt;
  unsigned max_atoms = 0;
  while ((std::size_t{2} << max_atoms) <= k) ++max_atoms;

  for (unsigned n = 0; n <= max_atoms; ++n) {
    BoolAlg a(n);
    std::vector<Snapshot> u = universe(l, a);
    std::vector<Snapshot> snaps(k);
    std::vector<bool> used(u.size(), false);

    auto consistent = [&](Index last) {
      for (Conn c : kBinary)
        for (Index x = 0; x <= last; ++x)
          for (Index y = 0; y <= last; ++y) {
            const Elem want = apply(a, c, snaps[x].z1, snaps[y].z1);
            for (Index v : m.cell(c, x, y))
              if (v <= last && snaps[v].z1 != want) return false;
          }
      for (Index x = 0; x <= last; ++x) {
        for (Index v : m.cell(Conn::Neg, x))
          if (v <= last && snaps[v].z1 != snaps[x].z2) return false;
        for (Index v : m.cell(Conn::Cons, x))
          if (v <= last && snaps[v].z1 != snaps[x].z3) return false;
      }
      return true;
    };

    std::optional<SwapStructure> found;
    std::function<void(Index)> search = [&](Index i) {
      if (found) return;
      if (i == k) {
        SwapStructure s(m, a, l, encoding_of(l), snaps);
        if (!swap_violation(l, s)) found = std::move(s);
        return;
      }
      for (std::size_t j = 0; j < u.size() && !found; ++j) {
        if (used[j]) continue;
        used[j] = true;
        snaps[i] = u[j];
        if (consistent(i)) search(i + 1);
        used[j] = false;
      }
    };
    search(0);
    if (found) return found;
  }
  return std::nullopt;
}

bool is_swap_for(Logic l, const MultiAlg& m) { return find_swap_decoding(l, m).has_value(); }

}  // namespace swapkit

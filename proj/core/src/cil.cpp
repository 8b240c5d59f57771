#include "swapkit/boolean_algebra.hpp"

namespace swapkit {

namespace {

std::string pair_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void check_lattice(const Table& meet, const Table& join) {
  const std::size_t n = meet.size();
  auto bad = [](std::size_t a, std::size_t b, const std::string& law) {
    throw CilError(CilError::Kind::NotLattice, a, b, "not a lattice: " + law + " fails at " + pair_str(a, b));
  };
  if (n == 0) throw CilError(CilError::Kind::NotLattice, 0, 0, "not a lattice: empty carrier");
  if (join.size() != n) throw CilError(CilError::Kind::NotLattice, 0, 0, "not a lattice: table sizes differ");
  for (std::size_t a = 0; a < n; ++a) {
    if (meet[a].size() != n || join[a].size() != n)
      throw CilError(CilError::Kind::NotLattice, a, 0, "not a lattice: ragged table");
    for (std::size_t b = 0; b < n; ++b)
      if (meet[a][b] >= n || join[a][b] >= n) bad(a, b, "closure");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (meet[a][a] != a || join[a][a] != a) bad(a, a, "idempotence");
    for (std::size_t b = 0; b < n; ++b) {
      if (meet[a][b] != meet[b][a] || join[a][b] != join[b][a]) bad(a, b, "commutativity");
      if (meet[a][join[a][b]] != a || join[a][meet[a][b]] != a) bad(a, b, "absorption");
      for (std::size_t c = 0; c < n; ++c)
        if (meet[a][meet[b][c]] != meet[meet[a][b]][c] || join[a][join[b][c]] != join[join[a][b]][c])
          bad(a, b, "associativity");
    }
  }
}

}  // namespace

Cil make_cil(const Table& meet, const Table& join) {
  check_lattice(meet, join);
  const std::size_t n = meet.size();
  Cil l;
  l.meet_ = meet;
  l.join_ = join;
  for (std::size_t x = 0; x < n; ++x) {
    l.top_ = join[l.top_][x];
    l.bottom_ = meet[l.bottom_][x];
  }
  l.imp_.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t sup = l.bottom_;
      for (std::size_t c = 0; c < n; ++c)
        if (l.leq(meet[a][c], b)) sup = join[sup][c];
      if (!l.leq(meet[a][sup], b))
        throw CilError(CilError::Kind::NoImplication, a, b,
                       "no relative pseudocomplement at " + pair_str(a, b) + ": the supremum is not in the set");
      for (std::size_t c = 0; c < n; ++c)
        if (l.leq(meet[a][c], b) != l.leq(c, sup))
          throw CilError(CilError::Kind::NoImplication, a, b,
                         "no relative pseudocomplement at " + pair_str(a, b) + ": adjunction fails");
      l.imp_[a][b] = sup;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (join[a][l.imp_[a][b]] != l.top_)
        throw CilError(CilError::Kind::NotClassical, a, b,
                       "not classical at " + pair_str(a, b) + ": a | (a -> b) = " +
                           std::to_string(join[a][l.imp_[a][b]]));
  return l;
}

Cil cil_of(const BoolAlg& a) {
  Table meet(a.size(), std::vector<std::size_t>(a.size()));
  Table join = meet;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      meet[x][y] = a.meet(x, y);
      join[x][y] = a.join(x, y);
    }
  return make_cil(meet, join);
}

DupAlg::DupAlg(Cil base) : base_(std::move(base)) {}

std::size_t DupAlg::meet(std::size_t x, std::size_t y) const {
  std::size_t a = first(x), b = first(y);
  int s = second(x), t = second(y);
  if (s == 1 && t == 1) return index(base_.meet(a, b), 1);
  if (s == 1 && t == 0) return index(base_.imp(a, b), 0);
  if (s == 0 && t == 1) return index(base_.imp(b, a), 0);
  return index(base_.join(a, b), 0);
}

std::size_t DupAlg::join(std::size_t x, std::size_t y) const {
  std::size_t a = first(x), b = first(y);
  int s = second(x), t = second(y);
  if (s == 1 && t == 1) return index(base_.join(a, b), 1);
  if (s == 1 && t == 0) return index(base_.imp(b, a), 1);
  if (s == 0 && t == 1) return index(base_.imp(a, b), 1);
  return index(base_.meet(a, b), 0);
}

std::size_t DupAlg::imp(std::size_t x, std::size_t y) const {
  std::size_t a = first(x), b = first(y);
  int s = second(x), t = second(y);
  if (s == 1 && t == 1) return index(base_.imp(a, b), 1);
  if (s == 1 && t == 0) return index(base_.meet(a, b), 0);
  if (s == 0 && t == 1) return index(base_.join(a, b), 1);
  return index(base_.imp(b, a), 1);
}

FiniteBooleanOps DupAlg::ops() const {
  FiniteBooleanOps o;
  o.size = size();
  o.meet = [this](std::size_t x, std::size_t y) { return meet(x, y); };
  o.join = [this](std::size_t x, std::size_t y) { return join(x, y); };
  o.imp = [this](std::size_t x, std::size_t y) { return imp(x, y); };
  o.compl_ = [this](std::size_t x) { return compl_(x); };
  o.zero = zero();
  o.one = one();
  return o;
}

DupAlg duplicate(const Cil& l) {
  DupAlg d(l);
  if (auto bad = boolean_law_violation(d.ops()))
    throw std::logic_error("duplicate: result is not a Boolean algebra: " + *bad);
  return d;
}

std::vector<Elem> universal_extension(const DupAlg& dup, const BoolAlg& target, std::span<const Elem> h) {
  const Cil& l = dup.base();
  if (h.size() != l.size()) throw std::invalid_argument("universal_extension: map has the wrong size");
  for (Elem x : h)
    if (!target.contains(x)) throw std::invalid_argument("universal_extension: value outside the target");
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (h[l.meet(a, b)] != target.meet(h[a], h[b]) || h[l.join(a, b)] != target.join(h[a], h[b]) ||
          h[l.imp(a, b)] != target.imp(h[a], h[b]))
        throw std::invalid_argument("universal_extension: not a homomorphism of implicative lattices at " +
                                    pair_str(a, b));
  std::vector<Elem> ext(dup.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    ext[DupAlg::index(a, 1)] = h[a];
    ext[DupAlg::index(a, 0)] = target.compl_(h[a]);
  }
  return ext;
}

}  // namespace swapkit

#include <stdexcept>

#include "swapkit/swap.hpp"

namespace swapkit {

KalmanAlg::KalmanAlg(BoolAlg base) : base_(base) {
  if (base_.atoms() > 8) throw CapError("KalmanAlg: at most 8 atoms");
  const Elem n = static_cast<Elem>(base_.size());
  lookup_.assign(std::size_t{n} * n, static_cast<Index>(-1));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = n; b-- > 0;)
      if ((a & b) == 0) {
        lookup_[std::size_t{a} * n + b] = static_cast<Index>(elems_.size());
        elems_.emplace_back(a, b);
      }
}

Index KalmanAlg::index_of(Elem a, Elem b) const {
  const std::size_t n = base_.size();
  if (a >= n || b >= n || (a & b) != 0) throw std::out_of_range("KalmanAlg: not an element");
  return lookup_[a * n + b];
}

std::string KalmanAlg::label(Index x) const {
  auto [a, b] = element(x);
  if (base_.atoms() == 1) return a ? "T" : (b ? "F" : "f");
  return "(" + base_.format(a) + "," + base_.format(b) + ")";
}

Index KalmanAlg::meet(Index x, Index y) const {
  auto [a, b] = element(x);
  auto [c, d] = element(y);
  return index_of(base_.meet(a, c), base_.join(b, d));
}

Index KalmanAlg::join(Index x, Index y) const {
  auto [a, b] = element(x);
  auto [c, d] = element(y);
  return index_of(base_.join(a, c), base_.meet(b, d));
}

Index KalmanAlg::neg(Index x) const {
  auto [a, b] = element(x);
  return index_of(b, a);
}

Index KalmanAlg::imp(Index x, Index y) const {
  auto [a, b] = element(x);
  auto [c, d] = element(y);
  return index_of(base_.imp(a, c), base_.meet(a, d));
}

Index KalmanAlg::strong_imp(Index x, Index y) const { return meet(imp(x, y), imp(neg(y), neg(x))); }

bool KalmanAlg::leq(Index x, Index y) const { return meet(x, y) == x; }

KalmanAlg kalman_classic(const BoolAlg& a) { return KalmanAlg(a); }

std::vector<std::string> kleene_violations(const KalmanAlg& k) {
  std::vector<std::string> out;
  const Index n = static_cast<Index>(k.size());
  auto note = [&](const std::string& what, Index x, Index y) {
    out.push_back(what + " fails at " + k.label(x) + ", " + k.label(y));
  };
  for (Index x = 0; x < n; ++x) {
    if (k.neg(k.neg(x)) != x) note("double negation", x, x);
    if (k.meet(x, k.top()) != x || k.join(x, k.bottom()) != x) note("bounds", x, x);
    for (Index y = 0; y < n; ++y) {
      if (k.meet(x, y) != k.meet(y, x) || k.join(x, y) != k.join(y, x)) note("commutativity", x, y);
      if (k.meet(x, k.join(x, y)) != x || k.join(x, k.meet(x, y)) != x) note("absorption", x, y);
      if (k.neg(k.meet(x, y)) != k.join(k.neg(x), k.neg(y))) note("De Morgan", x, y);
      if (!k.leq(k.meet(x, k.neg(x)), k.join(y, k.neg(y)))) note("Kleene condition", x, y);
      for (Index z = 0; z < n; ++z)
        if (k.meet(x, k.join(y, z)) != k.join(k.meet(x, y), k.meet(x, z))) note("distributivity", x, y);
    }
  }
  if (k.neg(k.center()) != k.center()) note("fixed center", k.center(), k.center());
  return out;
}

DualityMap duality_star(const BoolAlg& a) {
  KalmanAlg source(a);
  SwapStructure target = full_swap(Logic::LFI1o, a);
  std::vector<Index> map(source.size());
  for (Index x = 0; x < source.size(); ++x) {
    auto [p, q] = source.element(x);
    map[x] = target.at(from_pair(a, a.compl_(p), a.compl_(q)));
  }
  return {std::move(source), std::move(target), std::move(map)};
}

std::vector<std::string> duality_violations(const DualityMap& d) {
  std::vector<std::string> out;
  const KalmanAlg& k = d.source;
  const MultiAlg& m = d.target.algebra();
  const BoolAlg& a = k.base();
  const Index n = static_cast<Index>(k.size());
  auto star = [&](Index x) { return d.map.at(x); };
  auto single = [](Index v) { return Cell{v}; };

  if (d.target.size() != n) out.push_back("sizes differ");
  std::vector<bool> hit(d.target.size(), false);
  for (Index x = 0; x < n; ++x) {
    if (hit.at(star(x))) out.push_back("not injective at " + k.label(x));
    hit[star(x)] = true;
    if (m.cell(Conn::Neg, star(x)) != single(star(k.neg(x)))) out.push_back("negation not preserved at " + k.label(x));
    for (Index y = 0; y < n; ++y) {
      if (m.cell(Conn::Or, star(x), star(y)) != single(star(k.meet(x, y))))
        out.push_back("meet not sent to join at " + k.label(x) + ", " + k.label(y));
      if (m.cell(Conn::And, star(x), star(y)) != single(star(k.join(x, y))))
        out.push_back("join not sent to meet at " + k.label(x) + ", " + k.label(y));
    }
  }
  const Elem top = a.top();
  auto expect = [&](Index x, Elem z1, Elem z2, const char* what) {
    if (!(d.target.snapshot(star(x)) == from_pair(a, z1, z2))) out.push_back(what);
  };
  expect(k.top(), 0, top, "top is not sent to the false value");
  expect(k.center(), top, top, "center is not sent to the inconsistent value");
  expect(k.bottom(), top, 0, "bottom is not sent to the true value");
  return out;
}

}  // namespace swapkit

#include "swapkit/boolean_algebra.hpp"

#include <numeric>

namespace swapkit {

BoolAlg::BoolAlg(unsigned atoms) : n_(atoms) {
  if (atoms > max_atoms)
    throw CapError("Boolean algebra with " + std::to_string(atoms) + " atoms exceeds the cap of " +
                   std::to_string(max_atoms));
}

std::string BoolAlg::format(Elem a) const {
  if (n_ == 0) return "0";
  std::string s;
  for (unsigned i = 0; i < n_; ++i) s += (a >> i) & 1U ? '1' : '0';
  return s;
}

BoolAlg powerset_algebra(unsigned atoms) { return BoolAlg(atoms); }

bool BaHom::is_hom() const {
  if (map.size() != source.size()) return false;
  for (Elem x : map)
    if (!target.contains(x)) return false;
  if (map[source.bottom()] != target.bottom() || map[source.top()] != target.top()) return false;
  for (Elem a = 0; a < source.size(); ++a)
    for (Elem b = 0; b < source.size(); ++b) {
      if (map[source.meet(a, b)] != target.meet(map[a], map[b])) return false;
      if (map[source.join(a, b)] != target.join(map[a], map[b])) return false;
      if (map[source.imp(a, b)] != target.imp(map[a], map[b])) return false;
    }
  return true;
}

bool BaHom::injective() const {
  std::vector<bool> hit(target.size(), false);
  for (Elem x : map) {
    if (hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

bool BaHom::surjective() const {
  std::vector<bool> hit(target.size(), false);
  for (Elem x : map) hit[x] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

BaHom identity_hom(const BoolAlg& a) {
  BaHom h{a, a, std::vector<Elem>(a.size())};
  std::iota(h.map.begin(), h.map.end(), Elem{0});
  return h;
}

BaHom compose(const BaHom& g, const BaHom& f) {
  if (!(f.target == g.source)) throw std::invalid_argument("compose: homomorphisms are not composable");
  BaHom h{f.source, g.target, std::vector<Elem>(f.source.size())};
  for (Elem a = 0; a < f.source.size(); ++a) h.map[a] = g.map[f.map[a]];
  return h;
}

BaHom hom_from_dual(const BoolAlg& source, const BoolAlg& target, std::span<const unsigned> dual) {
  if (dual.size() != target.atoms()) throw std::invalid_argument("hom_from_dual: one source atom per target atom");
  for (unsigned d : dual)
    if (d >= source.atoms()) throw std::invalid_argument("hom_from_dual: atom out of range");
  BaHom h{source, target, std::vector<Elem>(source.size())};
  for (Elem a = 0; a < source.size(); ++a) {
    Elem img = 0;
    for (unsigned j = 0; j < dual.size(); ++j)
      if ((a >> dual[j]) & 1U) img |= Elem{1} << j;
    h.map[a] = img;
  }
  return h;
}

Elem BaProduct::tuple(std::span<const Elem> parts) const {
  if (parts.size() != offsets.size()) throw std::invalid_argument("BaProduct::tuple: wrong arity");
  Elem x = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) x |= parts[i] << offsets[i];
  return x;
}

BaProduct ba_product(std::span<const BoolAlg> factors) {
  unsigned total = 0;
  std::vector<unsigned> offsets;
  for (const auto& f : factors) {
    offsets.push_back(total);
    total += f.atoms();
  }
  BaProduct p{BoolAlg(total), {}, offsets};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    BaHom pi{p.algebra, factors[i], std::vector<Elem>(p.algebra.size())};
    for (Elem x = 0; x < p.algebra.size(); ++x) pi.map[x] = (x >> offsets[i]) & factors[i].top();
    p.projections.push_back(std::move(pi));
  }
  return p;
}

std::vector<BaHom> atom_embedding(const BoolAlg& a) {
  if (a.degenerate()) throw std::invalid_argument("atom_embedding: the one-element algebra has no atoms");
  std::vector<BaHom> out;
  BoolAlg two(1);
  for (unsigned i = 0; i < a.atoms(); ++i) {
    BaHom h{a, two, std::vector<Elem>(a.size())};
    for (Elem x = 0; x < a.size(); ++x) h.map[x] = (x >> i) & 1U;
    out.push_back(std::move(h));
  }
  return out;
}

BaHom tuple_homs(std::span<const BaHom> homs) {
  if (homs.empty()) throw std::invalid_argument("tuple_homs: empty family");
  std::vector<BoolAlg> targets;
  for (const auto& h : homs) {
    if (!(h.source == homs[0].source)) throw std::invalid_argument("tuple_homs: sources differ");
    targets.push_back(h.target);
  }
  BaProduct p = ba_product(targets);
  BaHom out{homs[0].source, p.algebra, std::vector<Elem>(homs[0].source.size())};
  std::vector<Elem> parts(homs.size());
  for (Elem x = 0; x < out.source.size(); ++x) {
    for (std::size_t i = 0; i < homs.size(); ++i) parts[i] = homs[i].map[x];
    out.map[x] = p.tuple(parts);
  }
  return out;
}

std::optional<std::string> boolean_law_violation(const FiniteBooleanOps& o) {
  auto at = [](const char* law, std::size_t a, std::size_t b, std::size_t c) {
    return std::string(law) + " fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")";
  };
  const std::size_t n = o.size;
  for (std::size_t a = 0; a < n; ++a) {
    if (o.meet(a, o.compl_(a)) != o.zero) return at("a & ~a = 0", a, 0, 0);
    if (o.join(a, o.compl_(a)) != o.one) return at("a | ~a = 1", a, 0, 0);
    if (o.meet(a, o.one) != a || o.join(a, o.zero) != a) return at("identity", a, 0, 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (o.meet(a, b) != o.meet(b, a) || o.join(a, b) != o.join(b, a)) return at("commutativity", a, b, 0);
      if (o.meet(a, o.join(a, b)) != a || o.join(a, o.meet(a, b)) != a) return at("absorption", a, b, 0);
      if (o.compl_(o.meet(a, b)) != o.join(o.compl_(a), o.compl_(b))) return at("De Morgan", a, b, 0);
      if (o.imp(a, b) != o.join(o.compl_(a), b)) return at("a -> b = ~a | b", a, b, 0);
      for (std::size_t c = 0; c < n; ++c) {
        if (o.meet(a, o.meet(b, c)) != o.meet(o.meet(a, b), c)) return at("associativity of &", a, b, c);
        if (o.join(a, o.join(b, c)) != o.join(o.join(a, b), c)) return at("associativity of |", a, b, c);
        if (o.meet(a, o.join(b, c)) != o.join(o.meet(a, b), o.meet(a, c))) return at("distributivity", a, b, c);
      }
    }
  }
  return std::nullopt;
}

}  // namespace swapkit

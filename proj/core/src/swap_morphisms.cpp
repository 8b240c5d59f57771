#include <stdexcept>

#include "swapkit/swap.hpp"

namespace swapkit {

namespace {

Snapshot map_snapshot(const BaHom& f, const Snapshot& z) { return {f(z.z1), f(z.z2), f(z.z3)}; }

Elem bit(Elem x, unsigned i) { return (x >> i) & 1u; }

}  // namespace

SwapMorphism kalman_star(Logic l, const BaHom& f) {
  if (!f.is_hom()) throw std::invalid_argument("kalman_star: not a Boolean homomorphism");
  SwapStructure source = full_swap(l, f.source);
  SwapStructure target = full_swap(l, f.target);
  std::vector<Index> map(source.size());
  for (Index x = 0; x < source.size(); ++x) map[x] = target.at(map_snapshot(f, source.snapshot(x)));
  MaMap m{source.algebra(), target.algebra(), std::move(map)};
  return {std::move(source), std::move(target), std::move(m)};
}

ProductIso product_iso(Logic l, const std::vector<BoolAlg>& family) {
  std::vector<SwapStructure> factors;
  std::vector<MultiAlg> algebras;
  for (const auto& a : family) {
    factors.push_back(full_swap(l, a));
    algebras.push_back(factors.back().algebra());
  }
  BaProduct prod = ba_product(family);
  SwapStructure target = full_swap(l, prod.algebra);
  MultiAlg source = make_product(std::move(algebras));

  std::vector<Index> map(source.size());
  std::vector<Elem> p1(family.size()), p2(family.size()), p3(family.size());
  for (Index x = 0; x < source.size(); ++x) {
    std::vector<Index> parts = source.components(x);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Snapshot& z = factors[i].snapshot(parts[i]);
      p1[i] = z.z1;
      p2[i] = z.z2;
      p3[i] = z.z3;
    }
    map[x] = target.at({prod.tuple(p1), prod.tuple(p2), prod.tuple(p3)});
  }
  MaMap m{std::move(source), target.algebra(), std::move(map)};
  return {std::move(factors), std::move(prod), std::move(target), std::move(m)};
}

// Equal to the inverse of product_iso after kalman_star of the atom embedding,
// evaluated coordinatewise so that the full structure over the product is never
// built.
Representation represent(Logic l, const SwapStructure& b) {
  const unsigned n = b.backing().atoms();
  SwapStructure two = full_swap(l, BoolAlg(1));
  MultiAlg product = make_product(std::vector<MultiAlg>(n, two.algebra()));
  Representation r;
  for (unsigned i = 0; i < n; ++i) r.index_set.push_back(i);
  std::vector<Index> map(b.size());
  std::vector<Index> parts(n);
  for (Index x = 0; x < b.size(); ++x) {
    const Snapshot& z = b.snapshot(x);
    for (unsigned i = 0; i < n; ++i) parts[i] = two.at({bit(z.z1, i), bit(z.z2, i), bit(z.z3, i)});
    map[x] = product.from_components(parts);
  }
  r.embedding = MaMap{b.algebra(), std::move(product), std::move(map)};
  return r;
}

}  // namespace swapkit

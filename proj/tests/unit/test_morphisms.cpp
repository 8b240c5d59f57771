#include "doctest.h"

#include <functional>

#include "oracles.hpp"
#include "swapkit/random.hpp"
#include "swapkit/swap.hpp"

using namespace swapkit;

namespace {

// Every homomorphism between the powerset algebras, through maps of atoms.
std::vector<BaHom> all_homs(const BoolAlg& a, const BoolAlg& b) {
  std::vector<BaHom> out;
  if (a.atoms() == 0) {
    if (b.atoms() == 0) out.push_back(identity_hom(a));
    return out;
  }
  std::vector<unsigned> dual(b.atoms(), 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == dual.size()) {
      out.push_back(hom_from_dual(a, b, dual));
      return;
    }
    for (unsigned j = 0; j < a.atoms(); ++j) {
      dual[i] = j;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

Index single(const MultiAlg& m, Conn c, Index x, Index y) { return m.cell(c, x, y).at(0); }

}  // namespace

TEST_CASE("lifting the identity") {
  for (Logic l : all_logics()) {
    SwapMorphism id = kalman_star(l, identity_hom(BoolAlg(1)));
    CHECK(id.map.map == identity_map(full_swap(l, BoolAlg(1)).algebra()).map);
  }
}

TEST_CASE("lifting acts coordinatewise") {
  const BoolAlg four(2), two(1);
  BaHom eval = atom_embedding(four)[0];
  SwapMorphism s = kalman_star(Logic::MbC, eval);
  for (Index x = 0; x < s.source.size(); ++x) {
    const Snapshot& z = s.source.snapshot(x);
    CHECK(s.target.snapshot(s.map(x)) == Snapshot{eval(z.z1), eval(z.z2), eval(z.z3)});
    if (z.z3 == four.top() && z.z2 == four.compl_(z.z1))
      CHECK(s.target.snapshot(s.map(x)) == Snapshot{eval(z.z1), two.compl_(eval(z.z1)), 1});
  }
  BaHom broken = identity_hom(four);
  broken.map[1] = 2;
  CHECK_THROWS_AS(kalman_star(Logic::MbC, broken), std::invalid_argument);
}

TEST_CASE("injective homomorphisms lift to injective homomorphisms") {
  for (Logic l : all_logics())
    for (unsigned n = 0; n <= 3; ++n)
      for (unsigned m = n; m <= 3; ++m) {
        if (l == Logic::CPLeP && m == 3) continue;
        for (const BaHom& f : all_homs(BoolAlg(n), BoolAlg(m))) {
          SwapMorphism s = kalman_star(l, f);
          CHECK(is_homomorphism(s.map));
          if (f.injective()) CHECK(is_injective(s.map));
        }
      }
}

TEST_CASE("products are preserved") {
  ProductIso one = product_iso(Logic::MbC, {BoolAlg(1)});
  CHECK(is_isomorphism(one.map));
  for (Index x = 0; x < one.map.source.size(); ++x)
    CHECK(one.target.algebra().label(one.map(x)) == one.factors[0].algebra().label(one.map.source.components(x)[0]));

  ProductIso p = product_iso(Logic::MbC, {BoolAlg(1), BoolAlg(1)});
  CHECK(p.map.source.size() == 25);
  CHECK(is_isomorphism(p.map));
  const MultiAlg& src = p.map.source;
  const MultiAlg& dst = p.target.algebra();
  for (Index x = 0; x < src.size(); ++x) {
    Cell image;
    for (Index v : src.cell(Conn::Neg, x)) image.push_back(p.map(v));
    std::sort(image.begin(), image.end());
    CHECK(image == dst.cell(Conn::Neg, p.map(x)));
  }

  // f* on each factor, then the isomorphism, equals the isomorphism, then the
  // lift of the product map.
  Rng rng(13);
  for (Logic l : {Logic::MbC, Logic::Ci, Logic::LFI1o}) {
    const std::vector<BoolAlg> as = {BoolAlg(1), BoolAlg(2)}, bs = {BoolAlg(2), BoolAlg(1)};
    std::vector<BaHom> fs = {random_hom(rng, as[0], bs[0]), random_hom(rng, as[1], bs[1])};
    ProductIso pa = product_iso(l, as), pb = product_iso(l, bs);
    BaProduct prod_a = ba_product(as), prod_b = ba_product(bs);
    BaHom prod_f{prod_a.algebra, prod_b.algebra, std::vector<Elem>(prod_a.algebra.size())};
    for (Elem x = 0; x < prod_a.algebra.size(); ++x) {
      const Elem parts[2] = {fs[0](prod_a.projections[0](x)), fs[1](prod_a.projections[1](x))};
      prod_f.map[x] = prod_b.tuple(parts);
    }
    REQUIRE(prod_f.is_hom());
    SwapMorphism lifted = kalman_star(l, prod_f);
    std::vector<SwapMorphism> factors = {kalman_star(l, fs[0]), kalman_star(l, fs[1])};
    for (Index x = 0; x < pa.map.source.size(); ++x) {
      auto comps = pa.map.source.components(x);
      const Index parts[2] = {factors[0].map(comps[0]), factors[1].map(comps[1])};
      const Index via_factors = pb.map(pb.map.source.from_components(parts));
      CHECK(via_factors == lifted.map(pa.map(x)));
    }
  }
}

TEST_CASE("representation") {
  Representation r1 = represent(Logic::MbC, full_swap(Logic::MbC, BoolAlg(1)));
  CHECK(r1.index_set.size() == 1);
  CHECK(is_injective(r1.embedding));
  CHECK(is_surjective(r1.embedding));

  SwapStructure b = full_swap(Logic::MbC, BoolAlg(2));
  Representation r2 = represent(Logic::MbC, b);
  CHECK(r2.index_set.size() == 2);
  CHECK(r2.embedding.target.size() == 25);
  CHECK(is_injective(r2.embedding));
  CHECK(is_homomorphism(r2.embedding));

  // Factor i reads bit i of every coordinate.
  SwapStructure two = full_swap(Logic::MbC, BoolAlg(1));
  for (Index x = 0; x < b.size(); ++x) {
    const Snapshot& z = b.snapshot(x);
    auto comps = r2.embedding.target.components(r2.embedding(x));
    for (unsigned i = 0; i < 2; ++i)
      CHECK(two.snapshot(comps[i]) == Snapshot{z.z1 >> i & 1u, z.z2 >> i & 1u, z.z3 >> i & 1u});
  }

  Rng rng(17);
  SwapStructure ci = full_swap(Logic::Ci, BoolAlg(2));
  for (int i = 0; i < 25; ++i) {
    SwapStructure s = random_submultialgebra(ci, rng).structure;
    Representation r = represent(Logic::Ci, s);
    CHECK(is_injective(r.embedding));
    CHECK(is_homomorphism(r.embedding));
  }
}

TEST_CASE("Kalman's construction over the two-element algebra") {
  KalmanAlg k = kalman_classic(BoolAlg(1));
  REQUIRE(k.size() == 3);
  std::vector<std::string> labels;
  for (Index x = 0; x < 3; ++x) labels.push_back(k.label(x));
  CHECK(labels == std::vector<std::string>{"F", "f", "T"});
  CHECK(k.element(k.index_of(0, 1)) == std::pair<Elem, Elem>{0, 1});
  CHECK(k.label(k.center()) == "f");
  CHECK(k.neg(k.center()) == k.center());
  CHECK(k.neg(k.top()) == k.bottom());
  CHECK(kleene_violations(k).empty());

  // Lukasiewicz arrow min(1, 1 - x + y) on F < f < T.
  auto degree = [&](Index x) { return k.label(x) == "F" ? 0 : k.label(x) == "f" ? 1 : 2; };
  for (Index x = 0; x < 3; ++x)
    for (Index y = 0; y < 3; ++y) {
      CHECK(degree(k.strong_imp(x, y)) == std::min(2, 2 - degree(x) + degree(y)));
      CHECK(degree(k.meet(x, y)) == std::min(degree(x), degree(y)));
      CHECK(degree(k.join(x, y)) == std::max(degree(x), degree(y)));
      CHECK(k.strong_imp(x, y) == k.meet(k.imp(x, y), k.imp(k.neg(y), k.neg(x))));
      CHECK(k.leq(x, y) == (degree(x) <= degree(y)));
    }
}

TEST_CASE("Kalman algebras are centered Kleene algebras") {
  for (unsigned n = 0; n <= 3; ++n) {
    KalmanAlg k = kalman_classic(BoolAlg(n));
    CHECK(kleene_violations(k).empty());
    for (Index x = 0; x < k.size(); ++x) CHECK(k.neg(k.neg(x)) == x);
  }
  CHECK_THROWS_AS(KalmanAlg(BoolAlg(9)), CapError);
}

TEST_CASE("duality with the LFI1o structure") {
  DualityMap d = duality_star(BoolAlg(1));
  const KalmanAlg& k = d.source;
  const MultiAlg& m = d.target.algebra();
  auto star = [&](const char* label) {
    for (Index x = 0; x < k.size(); ++x)
      if (k.label(x) == label) return m.label(d.map[x]);
    return std::string();
  };
  CHECK(star("T") == "F");
  CHECK(star("f") == "t");
  CHECK(star("F") == "T");

  for (unsigned n = 1; n <= 3; ++n) {
    DualityMap dn = duality_star(BoolAlg(n));
    const MultiAlg& t = dn.target.algebra();
    std::set<Index> image(dn.map.begin(), dn.map.end());
    CHECK(image.size() == dn.source.size());
    CHECK(dn.source.size() == t.size());
    for (Index x = 0; x < dn.source.size(); ++x) {
      CHECK(t.cell(Conn::Neg, dn.map[x]) == Cell{dn.map[dn.source.neg(x)]});
      for (Index y = 0; y < dn.source.size(); ++y) {
        CHECK(dn.map[dn.source.meet(x, y)] == single(t, Conn::Or, dn.map[x], dn.map[y]));
        CHECK(dn.map[dn.source.join(x, y)] == single(t, Conn::And, dn.map[x], dn.map[y]));
      }
    }
    CHECK(duality_violations(dn).empty());
  }
}

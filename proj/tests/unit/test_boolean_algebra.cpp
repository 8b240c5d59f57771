#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "swapkit/boolean_algebra.hpp"
#include "swapkit/random.hpp"

using namespace swapkit;

namespace {

FiniteBooleanOps ops_of(const BoolAlg& a) {
  FiniteBooleanOps o;
  o.size = a.size();
  o.meet = [a](std::size_t x, std::size_t y) { return a.meet(Elem(x), Elem(y)); };
  o.join = [a](std::size_t x, std::size_t y) { return a.join(Elem(x), Elem(y)); };
  o.imp = [a](std::size_t x, std::size_t y) { return a.imp(Elem(x), Elem(y)); };
  o.compl_ = [a](std::size_t x) { return a.compl_(Elem(x)); };
  o.zero = a.bottom();
  o.one = a.top();
  return o;
}

// Some bijection of carriers preserving meet, join and complement.
bool isomorphic(const FiniteBooleanOps& x, const FiniteBooleanOps& y) {
  if (x.size != y.size) return false;
  std::vector<std::size_t> f(x.size);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = f[x.zero] == y.zero && f[x.one] == y.one;
    for (std::size_t a = 0; ok && a < x.size; ++a) {
      ok = f[x.compl_(a)] == y.compl_(f[a]);
      for (std::size_t b = 0; ok && b < x.size; ++b)
        ok = f[x.meet(a, b)] == y.meet(f[a], f[b]) && f[x.join(a, b)] == y.join(f[a], f[b]);
    }
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

Table table(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& op) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = op(a, b);
  return t;
}

}  // namespace

TEST_CASE("powerset algebras") {
  CHECK(powerset_algebra(1).size() == 2);
  CHECK(powerset_algebra(0).size() == 1);
  CHECK(powerset_algebra(0).top() == powerset_algebra(0).bottom());
  const BoolAlg four = powerset_algebra(2);
  CHECK(four.size() == 4);
  for (Elem x = 0; x < 4; ++x) CHECK(four.meet(four.top(), x) == x);
  CHECK_THROWS(BoolAlg(BoolAlg::max_atoms + 1));
  CHECK(BoolAlg(2).format(1) == "10");
}

TEST_CASE("Boolean laws hold up to four atoms") {
  for (unsigned n = 0; n <= 4; ++n) {
    CAPTURE(n);
    CHECK_FALSE(boolean_law_violation(ops_of(BoolAlg(n))));
  }
}

TEST_CASE("the law checker notices a broken algebra") {
  FiniteBooleanOps bad = ops_of(BoolAlg(2));
  bad.compl_ = [](std::size_t x) { return x; };
  CHECK(boolean_law_violation(bad));
}

TEST_CASE("products of Boolean algebras") {
  const std::vector<BoolAlg> two = {BoolAlg(1), BoolAlg(1)};
  BaProduct p = ba_product(two);
  CHECK(isomorphic(ops_of(p.algebra), ops_of(powerset_algebra(2))));
  for (const auto& pr : p.projections) CHECK(pr.is_hom());

  BaProduct empty = ba_product(std::vector<BoolAlg>{});
  CHECK(empty.algebra.size() == 1);

  const std::vector<BoolAlg> one = {BoolAlg(2)};
  BaProduct unary = ba_product(one);
  CHECK(unary.projections[0].is_hom());
  CHECK(unary.projections[0].injective());
  CHECK(unary.projections[0].surjective());

  const std::vector<BoolAlg> mixed = {BoolAlg(1), BoolAlg(2)};
  BaProduct m = ba_product(mixed);
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 4; ++y) {
      const Elem parts[2] = {x, y};
      const Elem t = m.tuple(parts);
      CHECK(m.projections[0](t) == x);
      CHECK(m.projections[1](t) == y);
    }
}

TEST_CASE("atom embeddings separate points") {
  std::vector<BaHom> one = atom_embedding(BoolAlg(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].map == identity_hom(BoolAlg(1)).map);

  std::vector<BaHom> two = atom_embedding(BoolAlg(2));
  CHECK(two[0](0b01) == 1);
  CHECK(two[1](0b01) == 0);

  for (unsigned n = 1; n <= 3; ++n) {
    BaHom t = tuple_homs(atom_embedding(BoolAlg(n)));
    CHECK(t.injective());
    CHECK(t.is_hom());
  }
}

TEST_CASE("random homomorphisms compose") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    BoolAlg a(1 + pick(rng, 3)), b(1 + pick(rng, 3)), c(1 + pick(rng, 3));
    BaHom f = random_hom(rng, a, b), g = random_hom(rng, b, c);
    CHECK(f.is_hom());
    CHECK(compose(g, f).is_hom());
    for (Elem x = 0; x < a.size(); ++x) CHECK(compose(g, f)(x) == g(f(x)));
  }
}

TEST_CASE("classical implicative lattices") {
  SUBCASE("two-element chain") {
    Cil l = make_cil({{0, 0}, {0, 1}}, {{0, 1}, {1, 1}});
    CHECK(l.imp(1, 0) == 0);
    CHECK(l.imp(0, 0) == 1);
  }
  SUBCASE("three-element chain is not classical") {
    auto mn = [](std::size_t a, std::size_t b) { return std::min(a, b); };
    auto mx = [](std::size_t a, std::size_t b) { return std::max(a, b); };
    try {
      make_cil(table(3, mn), table(3, mx));
      FAIL("accepted");
    } catch (const CilError& e) {
      CHECK(e.kind() == CilError::Kind::NotClassical);
      CHECK(e.a() == 1);
      CHECK(e.b() == 0);
    }
  }
  SUBCASE("powerset(2) agrees with the Boolean arrow") {
    const BoolAlg a(2);
    Cil l = cil_of(a);
    for (Elem x = 0; x < 4; ++x)
      for (Elem y = 0; y < 4; ++y) CHECK(l.imp(x, y) == a.imp(x, y));
  }
  SUBCASE("tables that are not lattices") {
    CHECK_THROWS_AS(make_cil({{0, 1}, {0, 1}}, {{0, 1}, {1, 1}}), CilError);
  }
}

// Every family of subsets of a 3-set closed under intersection and union is a
// distributive lattice; it is accepted exactly when it is complemented.
TEST_CASE("sublattices of powerset(3)") {
  std::size_t accepted = 0;
  for (unsigned family = 1; family < 256; ++family) {
    std::vector<std::size_t> members;
    for (std::size_t s = 0; s < 8; ++s)
      if (family >> s & 1) members.push_back(s);
    auto in = [&](std::size_t s) { return (family >> s & 1) != 0; };
    bool closed = true;
    for (auto x : members)
      for (auto y : members) closed = closed && in(x & y) && in(x | y);
    if (!closed) continue;
    const std::size_t n = members.size();
    auto pos = [&](std::size_t s) {
      return static_cast<std::size_t>(std::find(members.begin(), members.end(), s) - members.begin());
    };
    Table meet = table(n, [&](std::size_t a, std::size_t b) { return pos(members[a] & members[b]); });
    Table join = table(n, [&](std::size_t a, std::size_t b) { return pos(members[a] | members[b]); });
    const std::size_t lo = members.front(), hi = members.back();
    bool complemented = true;
    for (auto x : members)
      complemented = complemented && std::any_of(members.begin(), members.end(), [&](std::size_t y) {
                       return (x & y) == lo && (x | y) == hi;
                     });
    CAPTURE(family);
    bool ok = true;
    try {
      Cil l = make_cil(meet, join);
      DupAlg d = duplicate(l);
      CHECK_FALSE(boolean_law_violation(d.ops()));
      for (std::size_t a = 0; a < n; ++a) {
        const std::size_t c = l.imp(a, l.bottom());
        CHECK(l.meet(a, c) == l.bottom());
        CHECK(l.join(a, c) == l.top());
      }
      ++accepted;
    } catch (const CilError&) {
      ok = false;
    }
    CHECK(ok == complemented);
  }
  CHECK(accepted > 8);
}

TEST_CASE("duplicating a classical implicative lattice") {
  DupAlg d = duplicate(make_cil({{0, 0}, {0, 1}}, {{0, 1}, {1, 1}}));
  CHECK(d.size() == 4);
  CHECK(d.meet(DupAlg::index(1, 1), DupAlg::index(1, 0)) == DupAlg::index(1, 0));
  CHECK(d.zero() == DupAlg::index(1, 0));
  CHECK(d.join(DupAlg::index(1, 1), DupAlg::index(0, 0)) == DupAlg::index(1, 1));
  CHECK(d.join(DupAlg::index(0, 0), DupAlg::index(1, 1)) == DupAlg::index(1, 1));
  CHECK(isomorphic(d.ops(), ops_of(powerset_algebra(2))));
  for (unsigned n = 0; n <= 2; ++n) CHECK_FALSE(boolean_law_violation(duplicate(cil_of(BoolAlg(n))).ops()));
}

TEST_CASE("universal extension") {
  const Cil l = cil_of(BoolAlg(1));
  const DupAlg d = duplicate(l);
  const std::vector<Elem> id = {0, 1};
  std::vector<Elem> ext = universal_extension(d, BoolAlg(1), id);
  for (std::size_t a = 0; a < 2; ++a) {
    CHECK(ext[DupAlg::index(a, 0)] == BoolAlg(1).compl_(id[a]));
    CHECK(ext[d.embed(a)] == id[a]);
  }

  // Every map from powerset(2) into the four-element algebra: homomorphisms of
  // implicative lattices extend, the rest are rejected.
  const Cil l4 = cil_of(BoolAlg(2));
  const DupAlg d4 = duplicate(l4);
  const BoolAlg target(2);
  std::size_t homs = 0, rejected = 0;
  for (unsigned code = 0; code < 256; ++code) {
    std::vector<Elem> h(4);
    for (std::size_t a = 0; a < 4; ++a) h[a] = (code >> (2 * a)) & 3;
    bool preserves = true;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        preserves = preserves && h[l4.meet(a, b)] == target.meet(h[a], h[b]) &&
                    h[l4.join(a, b)] == target.join(h[a], h[b]) && h[l4.imp(a, b)] == target.imp(h[a], h[b]);
    if (!preserves) {
      CHECK_THROWS_AS(universal_extension(d4, target, h), std::invalid_argument);
      ++rejected;
      continue;
    }
    ++homs;
    std::vector<Elem> e = universal_extension(d4, target, h);
    for (std::size_t a = 0; a < 4; ++a) CHECK(e[d4.embed(a)] == h[a]);
    for (std::size_t x = 0; x < d4.size(); ++x)
      for (std::size_t y = 0; y < d4.size(); ++y) {
        CHECK(e[d4.meet(x, y)] == target.meet(e[x], e[y]));
        CHECK(e[d4.compl_(x)] == target.compl_(e[x]));
      }
  }
  CHECK(homs > 0);
  CHECK(rejected > 0);
}

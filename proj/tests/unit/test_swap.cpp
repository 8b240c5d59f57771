#include "doctest.h"

#include "oracles.hpp"
#include "swapkit/formula.hpp"
#include "swapkit/random.hpp"
#include "swapkit/swap.hpp"

using namespace swapkit;

namespace {

std::set<std::string> labels(const SwapStructure& b, const Cell& c) {
  std::set<std::string> out;
  for (Index x : c) out.insert(b.algebra().label(x));
  return out;
}

std::set<std::string> cell(const SwapStructure& b, Conn c, const char* x, const char* y = nullptr) {
  const MultiAlg& m = b.algebra();
  return y ? labels(b, m.cell(c, *m.find_label(x), *m.find_label(y))) : labels(b, m.cell(c, *m.find_label(x)));
}

using L = std::set<std::string>;

}  // namespace

TEST_CASE("universes over the two-element algebra") {
  const BoolAlg a2(1);
  std::vector<std::string> mbc;
  for (const auto& z : universe(Logic::MbC, a2)) mbc.push_back(snapshot_label(a2, z, Encoding::Triple));
  CHECK(mbc == std::vector<std::string>{"T", "t", "t0", "F", "f0"});
  CHECK(universe(Logic::MbC, a2)[0] == Snapshot{1, 0, 1});
  CHECK(universe(Logic::MbC, a2)[1] == Snapshot{1, 1, 0});
  CHECK(universe(Logic::MbC, a2)[2] == Snapshot{1, 0, 0});
  CHECK(universe(Logic::MbC, a2)[3] == Snapshot{0, 1, 1});
  CHECK(universe(Logic::MbC, a2)[4] == Snapshot{0, 1, 0});

  std::vector<std::string> ciw;
  for (const auto& z : universe(Logic::MbCciw, a2)) ciw.push_back(snapshot_label(a2, z, Encoding::Pair));
  CHECK(ciw == std::vector<std::string>{"T", "t", "F"});
  CHECK(universe(Logic::MbCciw, a2)[1] == from_pair(a2, 1, 1));
  CHECK(universe(Logic::CPLeP, a2).size() == 8);
  CHECK(universe(Logic::CPLe, a2).size() == 2);
}

TEST_CASE("universes match the definitions") {
  for (Logic l : all_logics())
    for (unsigned n = 0; n <= 3; ++n) {
      CAPTURE(logic_name(l));
      CAPTURE(n);
      std::set<oracle::Z> want, got;
      for (auto z : oracle::universe(l, n)) want.insert(z);
      for (const auto& z : universe(l, BoolAlg(n))) got.insert(oracle::of(z));
      CHECK(got == want);
    }
}

TEST_CASE("full structures match the definitions cell by cell") {
  for (Logic l : all_logics())
    for (unsigned n = 0; n <= 2; ++n) {
      CAPTURE(logic_name(l));
      CAPTURE(n);
      SwapStructure b = full_swap(l, BoolAlg(n));
      const MultiAlg& m = b.algebra();
      for (Index x = 0; x < b.size(); ++x) {
        const oracle::Z z = oracle::of(b.snapshot(x));
        for (Conn c : {Conn::Neg, Conn::Cons}) CHECK(oracle::snapshots_of(b, m.cell(c, x)) == oracle::cell(l, n, c, z));
        for (Index y = 0; y < b.size(); ++y)
          for (Conn c : {Conn::And, Conn::Or, Conn::Imp})
            CHECK(oracle::snapshots_of(b, m.cell(c, x, y)) == oracle::cell(l, n, c, z, oracle::of(b.snapshot(y))));
      }
      CHECK(is_swap_for(l, b));
    }
}

TEST_CASE("headline tables over the two-element algebra") {
  SwapStructure mbc = full_swap(Logic::MbC, BoolAlg(1));
  CHECK(cell(mbc, Conn::Neg, "T") == L{"F", "f0"});
  CHECK(cell(mbc, Conn::Cons, "t") == L{"F", "f0"});
  CHECK(cell(mbc, Conn::And, "T", "F") == L{"F", "f0"});
  CHECK(cell(mbc, Conn::Or, "F", "t0") == L{"T", "t", "t0"});

  SwapStructure ciw = full_swap(Logic::MbCciw, BoolAlg(1));
  CHECK(cell(ciw, Conn::And, "T", "T") == L{"T", "t"});
  CHECK(cell(ciw, Conn::Cons, "t") == L{"F"});
  CHECK(cell(ciw, Conn::Cons, "T") == L{"T", "t"});

  SwapStructure cci = full_swap(Logic::MbCci, BoolAlg(1));
  CHECK(cell(cci, Conn::Cons, "T") == L{"T"});
  CHECK(cell(cci, Conn::Cons, "t") == L{"F"});

  SwapStructure ci = full_swap(Logic::Ci, BoolAlg(1));
  CHECK(cell(ci, Conn::Neg, "F") == L{"T"});
  CHECK(cell(ci, Conn::Neg, "t") == L{"T", "t"});
  CHECK(cell(ci, Conn::Neg, "T") == L{"F"});

  SwapStructure j3 = full_swap(Logic::LFI1o, BoolAlg(1));
  CHECK(cell(j3, Conn::Neg, "t") == L{"t"});
  CHECK(cell(j3, Conn::Imp, "t", "F") == L{"F"});
  CHECK(cell(j3, Conn::Cons, "t") == L{"F"});

  SwapStructure ciore = full_swap(Logic::Ciore, BoolAlg(1));
  CHECK(cell(ciore, Conn::And, "T", "t") == L{"T"});
  CHECK(cell(ciore, Conn::And, "t", "t") == L{"t"});
}

TEST_CASE("single-valued logics have singleton cells") {
  for (Logic l : {Logic::LFI1o, Logic::Ciore, Logic::CPLe})
    for (unsigned n = 0; n <= 3; ++n) {
      SwapStructure b = full_swap(l, BoolAlg(n));
      for (std::size_t op = 0; op < 5; ++op)
        for (std::size_t code = 0; code < b.algebra().tuple_count(op); ++code)
          CHECK(b.algebra().cell_at(op, code).size() == 1);
    }
}

TEST_CASE("membership") {
  SwapStructure mbc = full_swap(Logic::MbC, BoolAlg(1));
  CHECK(is_swap_for(Logic::MbC, mbc));
  CHECK(is_swap_for(Logic::CPLeP, mbc));
  auto why = swap_violation(Logic::MbCciw, mbc);
  REQUIRE(why);
  CHECK(why->find("t0") != std::string::npos);

  for (Logic a : all_logics())
    for (Logic b : all_logics())
      for (unsigned n = 1; n <= 2; ++n)
        CHECK(is_swap_for(a, full_swap(b, BoolAlg(n))) == class_included(b, a));
}

TEST_CASE("the class chain on random structures") {
  Rng rng(21);
  const std::vector<Logic> chain = {Logic::CPLe, Logic::Ci, Logic::MbCci, Logic::MbCciw, Logic::MbC, Logic::CPLeP};
  for (int i = 0; i < 200; ++i) {
    const Logic base = all_logics()[static_cast<std::size_t>(i) % 8];
    SwapStructure full = full_swap(base, BoolAlg(1 + static_cast<unsigned>(i % 2)));
    if (full.size() <= 2) continue;
    SwapStructure s = random_submultialgebra(full, rng, {true, true, 0.5}).structure;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
      if (is_swap_for(chain[k], s)) CHECK(is_swap_for(chain[k + 1], s));
    for (Logic l : all_logics())
      CHECK(is_swap_for(l, reencode(s, Encoding::Triple)) == is_swap_for(l, s));

    // The first coordinates form a Boolean subalgebra.
    REQUIRE(is_swap_for(Logic::CPLeP, s));
    std::set<Elem> firsts;
    for (const auto& z : s.snapshots()) firsts.insert(z.z1);
    const BoolAlg& a = s.backing();
    CHECK(firsts.count(0));
    CHECK(firsts.count(a.top()));
    for (Elem x : firsts) {
      CHECK(firsts.count(a.compl_(x)));
      for (Elem y : firsts) CHECK(firsts.count(a.meet(x, y)));
    }
  }
  for (Logic l : all_logics()) {
    SwapStructure f = full_swap(l, BoolAlg(2));
    std::set<Elem> firsts;
    for (const auto& z : f.snapshots()) firsts.insert(z.z1);
    CHECK(firsts.size() == 4);
  }
}

TEST_CASE("full CPLe structures are Boolean algebras") {
  for (unsigned n = 1; n <= 3; ++n) {
    SwapStructure b = full_swap(Logic::CPLe, BoolAlg(n));
    const MultiAlg& m = b.algebra();
    REQUIRE(b.size() == b.backing().size());
    auto one = [&](Cell c) { return std::size_t{c.at(0)}; };
    Index zero = 0, top = 0;
    for (Index x = 0; x < b.size(); ++x) {
      if (b.snapshot(x).z1 == 0) zero = x;
      if (b.snapshot(x).z1 == b.backing().top()) top = x;
    }
    FiniteBooleanOps ops;
    ops.size = b.size();
    ops.meet = [&](std::size_t x, std::size_t y) { return one(m.cell(Conn::And, Index(x), Index(y))); };
    ops.join = [&](std::size_t x, std::size_t y) { return one(m.cell(Conn::Or, Index(x), Index(y))); };
    ops.imp = [&](std::size_t x, std::size_t y) { return one(m.cell(Conn::Imp, Index(x), Index(y))); };
    ops.compl_ = [&](std::size_t x) { return one(m.cell(Conn::Neg, Index(x))); };
    ops.zero = zero;
    ops.one = top;
    CHECK_FALSE(boolean_law_violation(ops));
    for (Index x = 0; x < b.size(); ++x)
      for (Index y = 0; y < b.size(); ++y)
        CHECK(b.snapshot(Index(ops.meet(x, y))).z1 == b.backing().meet(b.snapshot(x).z1, b.snapshot(y).z1));
  }
}

TEST_CASE("schemas validated by full structures") {
  SwapStructure mbc = full_swap(Logic::MbC, BoolAlg(1));
  CHECK(validates(mbc, parse("A | ~A")));
  CHECK(validates(mbc, parse("@A -> A -> ~A -> B")));
  CHECK_FALSE(validates(mbc, parse("@A | A & ~A")));
  CHECK(validates(full_swap(Logic::Ciore, BoolAlg(1)), parse("@A | @B <-> @(A & B)")));
  CHECK_FALSE(validates(full_swap(Logic::LFI1o, BoolAlg(1)), parse("@A | @B <-> @(A & B)")));
}

TEST_CASE("characterization examples") {
  SwapStructure mbc = full_swap(Logic::MbC, BoolAlg(1));
  CHECK(characterize(Logic::MbC, mbc));
  CHECK(characterize(Logic::MbC, mbc) == is_swap_for(Logic::MbC, mbc));
  CHECK_FALSE(characterize(Logic::MbC, full_swap(Logic::CPLeP, BoolAlg(1))));
  CHECK(characterize(Logic::MbCci, full_swap(Logic::Ci, BoolAlg(1))));
  CHECK_FALSE(characterize(Logic::Ci, full_swap(Logic::MbCci, BoolAlg(1))));
  CHECK(defining_schemas(Logic::CPLeP).size() == 9);
  CHECK(defining_schemas(Logic::MbC).size() == 2);
}

TEST_CASE("characterization on the full structures over three atoms") {
  for (Logic base : all_logics()) {
    if (base == Logic::CPLeP || base == Logic::MbC) continue;  // 512 and 125 elements
    SwapStructure b = full_swap(base, BoolAlg(3));
    for (Logic l : all_logics()) {
      CAPTURE(logic_name(base));
      CAPTURE(logic_name(l));
      CHECK(characterize(l, b) == is_swap_for(l, b));
    }
  }
}

TEST_CASE("decoding undecorated multialgebras") {
  SwapStructure mbc = full_swap(Logic::MbC, BoolAlg(1));
  auto d = find_swap_decoding(Logic::MbC, mbc.algebra());
  REQUIRE(d);
  CHECK(is_swap_for(Logic::MbC, *d));
  CHECK(is_swap_for(Logic::MbC, mbc.algebra()));
  CHECK_FALSE(is_swap_for(Logic::MbCciw, mbc.algebra()));
  CHECK(is_swap_for(Logic::LFI1o, full_swap(Logic::LFI1o, BoolAlg(1)).algebra()));
  CHECK_THROWS_AS(find_swap_decoding(Logic::MbC, full_swap(Logic::MbCciw, BoolAlg(2)).algebra()), CapError);
}

TEST_CASE("construction errors") {
  const BoolAlg a2(1);
  SwapStructure mbc = full_swap(Logic::MbC, a2);
  std::vector<Snapshot> short_list(mbc.snapshots().begin(), mbc.snapshots().end() - 1);
  CHECK_THROWS_AS(SwapStructure(mbc.algebra(), a2, Logic::MbC, Encoding::Triple, short_list), std::invalid_argument);
  std::vector<Snapshot> repeated = mbc.snapshots();
  repeated[1] = repeated[0];
  CHECK_THROWS_AS(SwapStructure(mbc.algebra(), a2, Logic::MbC, Encoding::Triple, repeated), std::invalid_argument);
  CHECK_THROWS_AS(reencode(mbc, Encoding::Pair), std::invalid_argument);
  CHECK_THROWS_AS(universe(Logic::MbC, BoolAlg(6)), CapError);
  CHECK_THROWS_AS(full_swap(Logic::CPLeP, BoolAlg(4)), CapError);
  CHECK_THROWS_AS(mbc.at(Snapshot{1, 1, 1}), std::out_of_range);
  CHECK(parse_logic("J3") == Logic::LFI1o);
  CHECK(parse_logic("cple+") == Logic::CPLeP);
  CHECK(parse_logic("CPLEP") == Logic::CPLeP);
  CHECK(parse_logic("lfi1") == Logic::LFI1o);
  CHECK_FALSE(parse_logic("mbd"));
}

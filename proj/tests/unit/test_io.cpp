#include "doctest.h"

#include "io.hpp"
#include "swapkit/random.hpp"

using namespace swapkit;

TEST_CASE("cell text") {
  SwapStructure b = full_swap(Logic::MbC, BoolAlg(1));
  const MultiAlg& m = b.algebra();
  auto at = [&](const char* s) { return *m.find_label(s); };
  CHECK(io::table_style(b) == io::TableStyle::Blocks);
  auto blocks = [&](const Cell& c) { return io::cell_text(b, c, io::TableStyle::Blocks); };
  CHECK(blocks(m.cell(Conn::And, at("T"), at("t"))) == "D");
  CHECK(blocks(m.cell(Conn::And, at("F"), at("t"))) == "ND");
  CHECK(blocks(Cell{at("T")}) == "T");
  CHECK(blocks(Cell{at("T"), at("t")}) == "{T,t}");
  CHECK(blocks(Cell{at("T"), at("F")}) == "{T,F}");

  SwapStructure w = full_swap(Logic::MbCciw, BoolAlg(1));
  auto wt = [&](const char* s) { return *w.algebra().find_label(s); };
  CHECK(io::table_style(w) == io::TableStyle::Sets);
  CHECK(io::cell_text(w, w.algebra().cell(Conn::And, wt("T"), wt("T")), io::TableStyle::Sets) == "{T,t}");
  CHECK(io::cell_text(w, w.algebra().cell(Conn::Cons, wt("t")), io::TableStyle::Sets) == "{F}");

  for (Logic l : {Logic::CPLe, Logic::LFI1o, Logic::Ciore})
    CHECK(io::table_style(full_swap(l, BoolAlg(1))) == io::TableStyle::Elements);
  CHECK(io::table_style(full_swap(Logic::Ci, BoolAlg(1))) == io::TableStyle::Sets);
}

TEST_CASE("rendered tables") {
  const std::string text = io::render_tables(full_swap(Logic::MbC, BoolAlg(1)));
  CHECK(text.rfind("mbC over 1 atom\ncarrier: T t t0 F f0\nD = {T, t, t0}\nND = {F, f0}\n", 0) == 0);
  CHECK(text.find("&  | T  t  t0 F  f0\n---+---------------\nT  | D  D  D  ND ND\n") != std::string::npos);
  CHECK(text.find("~  | ~x\n---+---\nT  | ND\nt  | D\nt0 | ND\nF  | D\nf0 | D\n") != std::string::npos);
  CHECK(text.find("@  | @x\n---+---\nT  | D\nt  | ND\nt0 | ND\nF  | D\nf0 | ND\n") != std::string::npos);

  const std::string lfi = io::render_tables(full_swap(Logic::LFI1o, BoolAlg(1)));
  CHECK(lfi.find("~ | ~x\n--+---\nT | F\nt | t\nF | T\n") != std::string::npos);
  CHECK(io::render_tables(full_swap(Logic::MbC, BoolAlg(2))).rfind("mbC over 2 atoms\n", 0) == 0);
}

TEST_CASE("tables survive a JSON round trip") {
  for (Logic l : all_logics())
    for (unsigned n = 0; n <= 2; ++n) {
      SwapStructure b = full_swap(l, BoolAlg(n));
      io::json j = io::tables_json(b);
      MultiAlg back = io::multialgebra_from_json(io::json::parse(j.dump()));
      CAPTURE(logic_name(l));
      CAPTURE(n);
      CHECK(back.labels() == b.algebra().labels());
      CHECK(back.signature() == b.algebra().signature());
      CHECK(back.same_tables(b.algebra()));
      std::size_t des = 0;
      for (Index x = 0; x < b.size(); ++x) des += b.designated(x);
      CHECK(j["designated"].size() == des);
      CHECK(j["snapshots"].size() == b.size());
    }
  io::json j = io::tables_json(full_swap(Logic::MbC, BoolAlg(1)));
  CHECK(j["snapshots"]["t0"] == io::json::array({"1", "0", "0"}));
  CHECK(j["tables"]["~"][0] == "ND");
  CHECK(j["ops"]["neg"]["arity"] == 1);
  CHECK(j["ops"]["neg"]["table"]["0"] == io::json::array({3, 4}));
  CHECK(j["ops"]["and"]["table"]["0,3"] == io::json::array({3, 4}));
  CHECK(j["signature"][2] == io::json{{"name", "imp"}, {"arity", 2}});

  io::json bad = j;
  bad["ops"]["neg"]["table"]["0"] = io::json::array({7});
  CHECK_THROWS_AS(io::multialgebra_from_json(bad), std::invalid_argument);
  bad = j;
  bad["ops"]["and"]["table"].erase("1,1");
  CHECK_THROWS_AS(io::multialgebra_from_json(bad), std::invalid_argument);

  MultiAlgBuilder builder(Signature::boolean(), {"x", "y"});
  for (std::size_t op = 0; op < Signature::boolean().size(); ++op)
    for (std::size_t code = 0; code < builder.tuple_count(op); ++code) builder.set(op, code, Cell{0, 1});
  MultiAlg other = builder.build();
  CHECK(io::multialgebra_from_json(io::multialgebra_json(other)).same_tables(other));
}

TEST_CASE("verdicts survive a JSON round trip") {
  const SwapStructure b = characteristic_structure(Logic::MbC);
  const MultiAlg& m = b.algebra();
  Rng rng(67);
  for (int i = 0; i < 100; ++i) {
    const std::vector<Formula> premises = {random_formula(rng, {"p", "q"}, 2)};
    Verdict v = decide_logic(Logic::MbC, premises, random_formula(rng, {"p", "q"}, 2));
    Verdict back = io::verdict_from_json(io::json::parse(io::verdict_json(v, m).dump()), m);
    CHECK(back.holds == v.holds);
    CHECK(back.countermodel.has_value() == v.countermodel.has_value());
    if (!v.countermodel) continue;
    for (std::size_t k = 0; k < v.countermodel->formulas.size(); ++k)
      CHECK(back.countermodel->value(v.countermodel->formulas[k]) == v.countermodel->values[k]);
  }
}

TEST_CASE("proof and report text") {
  ProofCheck c = check_proof(Logic::MbC, parse_proof("premise p\naxiom Ax1 p -> q -> p\nmp 1 2\n"));
  CHECK(io::render_proof_check(c) == "valid: 3 steps\np |- q -> p\n");
  CHECK(io::proof_check_json(c)["conclusion"] == "q -> p");
  c = check_proof(Logic::MbC, parse_proof("premise p\nmp 1 1\n"));
  CHECK(io::render_proof_check(c).rfind("invalid at step 2: ", 0) == 0);

  SuiteReport r;
  r.name = "demo";
  r.expect(true, "fine");
  r.expect(false, "broken");
  CHECK(io::render_report(r) == "demo: FAILED (2 checks, 1 failed)\n  broken\n");
  CHECK(io::report_json(r)["failures"] == io::json::array({"broken"}));
}

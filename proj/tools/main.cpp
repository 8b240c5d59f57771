#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "io.hpp"
#include "swapkit/hilbert.hpp"
#include "swapkit/nmatrix.hpp"
#include "swapkit/swap.hpp"
#include "swapkit/verification.hpp"

using namespace swapkit;
using io::json;

namespace {

enum Exit { kOk = 0, kFails = 1, kError = 2 };

struct Options {
  bool json = false;
  unsigned atoms = 1;
  std::string logic;
  std::vector<std::string> premises;
  std::string goal;
  std::string file;
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  bool cross_check = false;
};

Logic logic_or_throw(const std::string& name) {
  auto l = parse_logic(name);
  if (!l) throw std::invalid_argument("unknown logic '" + name + "'");
  return *l;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_tables(const Options& o) {
  SwapStructure b = full_swap(logic_or_throw(o.logic), BoolAlg(o.atoms));
  if (o.json)
    emit(io::tables_json(b));
  else
    std::cout << io::render_tables(b);
  return kOk;
}

int cmd_decide(const Options& o) {
  const Logic l = logic_or_throw(o.logic);
  std::vector<Formula> premises;
  for (const auto& p : o.premises) premises.push_back(parse(p));
  Verdict v = decide_logic(l, premises, parse(o.goal));
  emit(io::verdict_json(v, characteristic_structure(l).algebra()));
  return v.holds ? kOk : kFails;
}

int cmd_check_proof(const Options& o) {
  const Logic l = logic_or_throw(o.logic);
  std::ifstream in(o.file);
  if (!in) throw std::runtime_error("cannot read " + o.file);
  std::stringstream text;
  text << in.rdbuf();
  ProofCheck c = check_proof(l, parse_proof(text.str()));
  std::optional<bool> semantic;
  if (o.cross_check && c.valid) semantic = decide_logic(l, c.premises, c.conclusion(), {false}).holds;
  if (o.json) {
    json j = io::proof_check_json(c);
    if (semantic) j["semantic"] = *semantic;
    emit(j);
  } else {
    std::cout << io::render_proof_check(c);
    if (semantic) std::cout << "decide " << logic_name(l) << ": " << (*semantic ? "holds" : "fails") << "\n";
  }
  return c.valid && semantic.value_or(true) ? kOk : kFails;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> names = {o.suite};
  if (o.suite == "all") names = suite_names();
  SuiteOptions so{o.seed, o.samples};
  bool ok = true;
  json all = json::array();
  for (const auto& n : names) {
    SuiteReport r = run_suite(n, so);
    ok = ok && r.ok();
    if (o.json)
      all.push_back(io::report_json(r));
    else
      std::cout << io::render_report(r);
  }
  if (o.json) emit(names.size() == 1 ? all[0] : all);
  return ok ? kOk : kFails;
}

int cmd_kalman(const Options& o) {
  const BoolAlg a(o.atoms);
  KalmanAlg k = kalman_classic(a);
  DualityMap d = duality_star(a);
  std::vector<std::string> kleene = kleene_violations(k);
  std::vector<std::string> duality = duality_violations(d);
  if (o.json) {
    json j;
    j["atoms"] = o.atoms;
    json elems = json::array(), star = json::object();
    for (Index x = 0; x < k.size(); ++x) {
      elems.push_back(k.label(x));
      star[k.label(x)] = d.target.algebra().label(d.map[x]);
    }
    j["elements"] = elems;
    j["center"] = k.label(k.center());
    j["star"] = star;
    j["kleene_violations"] = kleene;
    j["duality_violations"] = duality;
    emit(j);
  } else {
    std::cout << "K(A) over " << o.atoms << (o.atoms == 1 ? " atom" : " atoms") << ": " << k.size() << " elements\n";
    std::cout << "center: " << k.label(k.center()) << ", ~center = " << k.label(k.neg(k.center())) << "\n";
    std::cout << "duality map into the " << logic_name(Logic::LFI1o) << " structure:\n";
    for (Index x = 0; x < k.size(); ++x)
      std::cout << "  " << k.label(x) << " -> " << d.target.algebra().label(d.map[x]) << "\n";
    std::cout << "Kleene laws: " << (kleene.empty() ? "ok" : "FAILED") << "\n";
    for (const auto& v : kleene) std::cout << "  " << v << "\n";
    std::cout << "duality equations: " << (duality.empty() ? "ok" : "FAILED") << "\n";
    for (const auto& v : duality) std::cout << "  " << v << "\n";
  }
  return kleene.empty() && duality.empty() ? kOk : kFails;
}

int cmd_represent(const Options& o) {
  const Logic l = logic_or_throw(o.logic);
  SwapStructure b = full_swap(l, BoolAlg(o.atoms));
  Representation r = represent(l, b);
  const bool injective = is_injective(r.embedding);
  const bool hom = is_homomorphism(r.embedding);
  if (o.json) {
    json j;
    j["logic"] = std::string(logic_name(l));
    j["atoms"] = o.atoms;
    j["factors"] = r.index_set.size();
    json map = json::object();
    for (Index x = 0; x < b.size(); ++x) map[b.algebra().label(x)] = r.embedding.target.label(r.embedding.map[x]);
    j["embedding"] = map;
    j["injective"] = injective;
    j["homomorphism"] = hom;
    emit(j);
  } else {
    std::cout << logic_name(l) << " over " << o.atoms << (o.atoms == 1 ? " atom" : " atoms") << " into "
              << r.index_set.size() << (r.index_set.size() == 1 ? " copy" : " copies") << " of the two-element "
              << "structure\n";
    for (Index x = 0; x < b.size(); ++x)
      std::cout << "  " << b.algebra().label(x) << " -> " << r.embedding.target.label(r.embedding.map[x]) << "\n";
    std::cout << "injective: " << (injective ? "yes" : "no") << "\n";
    std::cout << "homomorphism: " << (hom ? "yes" : "no") << "\n";
  }
  return injective && hom ? kOk : kFails;
}

json labels_json(const MultiAlg& m, const std::vector<Index>& xs) {
  json a = json::array();
  for (Index x : xs) a.push_back(m.label(x));
  return a;
}

int cmd_quotient_demo(const Options& o) {
  SwapStructure b = full_swap(Logic::MbC, BoolAlg(1));
  const MultiAlg& m = b.algebra();
  auto at = [&](const char* label) { return *m.find_label(label); };
  const std::vector<std::vector<Index>> blocks = {{at("T"), at("F")}, {at("t"), at("t0"), at("f0")}};
  EquivRel theta = EquivRel::from_blocks(m.size(), blocks);
  const bool congruence = is_multicongruence(theta, m);
  Quotient q = quotient(m, theta, {"a", "b"});
  const Cell everything = {0, 1};
  bool trivial = true;
  for (std::size_t op = 0; op < q.algebra.signature().size(); ++op)
    for (std::size_t code = 0; code < q.algebra.tuple_count(op); ++code)
      trivial = trivial && q.algebra.cell_at(op, code) == everything;
  const bool swap = is_swap_for(Logic::MbC, q.algebra);
  const bool hom = is_homomorphism(q.projection);

  if (o.json) {
    json j;
    json parts = json::object();
    for (std::size_t i = 0; i < blocks.size(); ++i) parts[q.algebra.label(static_cast<Index>(i))] = labels_json(m, blocks[i]);
    j["partition"] = parts;
    j["multicongruence"] = congruence;
    j["projection_homomorphism"] = hom;
    j["all_cells_full"] = trivial;
    j["swap_structure_for_mbC"] = swap;
    emit(j);
  } else {
    std::cout << "carrier:";
    for (const auto& label : m.labels()) std::cout << " " << label;
    std::cout << "\n";
    std::cout << "partition: a = " << io::set_text(m, blocks[0]) << ", b = " << io::set_text(m, blocks[1]) << "\n";
    std::cout << "multicongruence: " << (congruence ? "yes" : "no") << "\n";
    std::cout << "canonical projection is a homomorphism: " << (hom ? "yes" : "no") << "\n";
    std::cout << "quotient tables:\n" << io::render_tables(q.algebra);
    std::cout << (swap ? "a swap structure for mbC" : "not a swap structure for mbC") << "\n";
  }
  return congruence && hom && trivial && !swap ? kOk : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite swap structures, Nmatrices and proofs for LFIs"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Print JSON");

  auto* tables = app.add_subcommand("tables", "Print the full swap structure tables");
  tables->add_option("logic", o.logic, "Logic name")->required();
  tables->add_option("--atoms", o.atoms, "Atoms of the Boolean algebra")->check(CLI::Range(0u, 5u));

  auto* decide = app.add_subcommand("decide", "Decide a consequence in the characteristic Nmatrix");
  decide->add_option("logic", o.logic, "Logic name")->required();
  decide->add_option("-p,--premise", o.premises, "Premise (repeatable)");
  decide->add_option("goal", o.goal, "Conclusion")->required();

  auto* proof = app.add_subcommand("check-proof", "Check a Hilbert proof file");
  proof->add_option("logic", o.logic, "Logic name")->required();
  proof->add_option("file", o.file, "Proof file")->required();
  proof->add_flag("--cross-check", o.cross_check, "Also decide the conclusion semantically");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--seed", o.seed, "Seed for sampled checks");
  verify->add_option("--samples", o.samples, "Random samples per suite");

  auto* kalman = app.add_subcommand("kalman", "Kalman algebra, Kleene laws and the duality map");
  kalman->add_option("--atoms", o.atoms, "Atoms of the Boolean algebra")->check(CLI::Range(0u, 8u));

  auto* represent = app.add_subcommand("represent", "Embed a full swap structure into a power of the two-element one");
  represent->add_option("logic", o.logic, "Logic name")->required();
  represent->add_option("--atoms", o.atoms, "Atoms of the Boolean algebra")->check(CLI::Range(0u, 5u));

  auto* quotient_demo = app.add_subcommand("quotient-demo", "A homomorphic image that leaves the mbC class");

  for (auto* sub : {tables, decide, proof, verify, kalman, represent, quotient_demo})
    sub->add_flag("--json", o.json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*tables) return cmd_tables(o);
    if (*decide) return cmd_decide(o);
    if (*proof) return cmd_check_proof(o);
    if (*verify) return cmd_verify(o);
    if (*kalman) return cmd_kalman(o);
    if (*represent) return cmd_represent(o);
    if (*quotient_demo) return cmd_quotient_demo(o);
  } catch (const ProofParseError& e) {
    std::cerr << "error: " << o.file << ": " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

#include "swapkit/verification.hpp"

#include <map>
#include <stdexcept>

#include "swapkit/bivaluation.hpp"
#include "swapkit/hilbert.hpp"
#include "swapkit/nmatrix.hpp"
#include "swapkit/random.hpp"
#include "swapkit/swap.hpp"

namespace swapkit {

namespace {

constexpr std::size_t kKeptFailures = 10;

std::string describe(const SwapStructure& b) {
  std::string out = std::to_string(b.size()) + "-element structure over " + std::to_string(b.backing().atoms()) +
                    " atoms {";
  for (Index x = 0; x < b.size(); ++x) out += (x ? "," : "") + b.algebra().label(x);
  return out + "}";
}

void check_characterization(SuiteReport& r, const SwapStructure& b, const std::string& origin) {
  for (Logic l : all_logics()) {
    const bool structural = is_swap_for(l, b);
    const bool axiomatic = characterize(l, b);
    r.expect(structural == axiomatic, std::string(logic_name(l)) + ": is_swap_for=" + (structural ? "true" : "false") +
                                          " but characterize=" + (axiomatic ? "true" : "false") + " on " + origin +
                                          " " + describe(b));
  }
}

// Full structures over up to `atoms` atoms, built once.
class FullCache {
 public:
  const SwapStructure& get(Logic l, unsigned atoms) {
    auto key = std::make_pair(l, atoms);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, full_swap(l, BoolAlg(atoms))).first;
    return it->second;
  }

 private:
  std::map<std::pair<Logic, unsigned>, SwapStructure> cache_;
};

std::vector<std::vector<Index>> closed_family(const SwapStructure& b) {
  return b.size() <= 16 ? closed_subuniverses(b) : strictly_closed_subuniverses(b);
}

std::string name_of(Logic l) { return std::string(logic_name(l)); }

BoolAlg random_algebra(Rng& rng, unsigned max_atoms) { return BoolAlg(static_cast<unsigned>(1 + pick(rng, max_atoms))); }

}  // namespace

void SuiteReport::expect(bool cond, const std::string& what) {
  ++checks;
  if (cond) return;
  ++failed;
  if (failures.size() < kKeptFailures) failures.push_back(what);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"characterization", "class-chain",  "kalman",   "duality",
                                                 "representation",   "bivaluation", "soundness"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& opts) {
  if (name == "characterization") return verify_characterization(opts);
  if (name == "class-chain") return verify_class_chain(opts);
  if (name == "kalman") return verify_kalman(opts);
  if (name == "duality") return verify_duality(opts);
  if (name == "representation") return verify_representation(opts);
  if (name == "bivaluation") return verify_bivaluation(opts);
  if (name == "soundness") return verify_soundness(opts);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

SuiteReport verify_characterization(const SuiteOptions& opts) {
  SuiteReport r;
  r.name = "characterization";
  Rng rng(opts.seed);
  FullCache full;
  for (unsigned atoms = 0; atoms <= 2; ++atoms)
    for (Logic base : all_logics()) {
      const SwapStructure& f = full.get(base, atoms);
      const std::string origin = "full " + name_of(base);
      check_characterization(r, f, origin);
      for (const auto& s : closed_family(f)) {
        if (s.size() == f.size()) continue;
        check_characterization(r, restrict(f, s), "restriction of " + origin + ",");
      }
    }
  for (unsigned atoms = 1; atoms <= 2; ++atoms)
    for (std::size_t i = 0; i < opts.samples; ++i) {
      const Logic base = all_logics()[i % all_logics().size()];
      if (full.get(base, atoms).size() <= 2) continue;  // no proper submultialgebra
      SampleOptions so;
      so.keep_zero = i % 4 != 3;
      SubSample s = random_submultialgebra(full.get(base, atoms), rng, so);
      check_characterization(r, s.structure, "random submultialgebra of full " + name_of(base) + ",");
    }
  return r;
}

SuiteReport verify_class_chain(const SuiteOptions& opts) {
  SuiteReport r;
  r.name = "class-chain";
  Rng rng(opts.seed);
  FullCache full;
  for (unsigned atoms = 0; atoms <= 2; ++atoms)
    for (Logic b : all_logics())
      for (Logic a : all_logics()) {
        const bool want = atoms == 0 || class_included(b, a);
        r.expect(is_swap_for(a, full.get(b, atoms)) == want,
                 "full " + name_of(b) + " over " + std::to_string(atoms) + " atoms: is_swap_for(" + name_of(a) +
                     ") should be " + (want ? "true" : "false"));
      }
  for (std::size_t i = 0; i < opts.samples; ++i) {
    const unsigned atoms = 1 + static_cast<unsigned>(i % 2);
    const Logic base = all_logics()[i % all_logics().size()];
    SampleOptions so;
    so.keep_zero = true;
    SwapStructure s = random_submultialgebra(full.get(base, atoms), rng, so).structure;
    for (Logic a : all_logics()) {
      const bool in_a = is_swap_for(a, s);
      for (Logic b : all_logics())
        if (class_included(a, b))
          r.expect(!in_a || is_swap_for(b, s),
                   name_of(a) + " structure fails " + name_of(b) + ": " + describe(s));
      // Reading the snapshots as triples changes nothing.
      r.expect(is_swap_for(a, reencode(s, Encoding::Triple)) == in_a, "re-encoding changes " + name_of(a));
    }
    if (is_swap_for(Logic::CPLeP, s)) {
      // The first coordinates form a Boolean subalgebra.
      const BoolAlg& alg = s.backing();
      std::vector<bool> in(alg.size(), false);
      for (const auto& z : s.snapshots()) in[z.z1] = true;
      bool closed = in[0] && in[alg.top()];
      for (Elem x = 0; x < alg.size(); ++x)
        for (Elem y = 0; y < alg.size(); ++y)
          if (in[x] && in[y]) closed = closed && in[alg.meet(x, y)] && in[alg.join(x, y)] && in[alg.compl_(x)];
      r.expect(closed, "first coordinates are not a subalgebra: " + describe(s));
    }
  }
  return r;
}

SuiteReport verify_kalman(const SuiteOptions& opts) {
  SuiteReport r;
  r.name = "kalman";
  Rng rng(opts.seed);
  for (Logic l : all_logics())
    for (unsigned n = 1; n <= 3; ++n) {
      SwapMorphism id = kalman_star(l, identity_hom(BoolAlg(n)));
      r.expect(id.map.map == identity_map(id.source.algebra()).map,
               name_of(l) + ": identity not preserved on " + std::to_string(n) + " atoms");
    }
  for (std::size_t i = 0; i < opts.samples; ++i) {
    const Logic l = all_logics()[i % all_logics().size()];
    const unsigned cap = l == Logic::CPLeP ? 2 : 3;  // 512-element CPLe+ structures are slow to lift
    BoolAlg a = random_algebra(rng, cap), b = random_algebra(rng, cap), c = random_algebra(rng, cap);
    BaHom f = random_hom(rng, a, b), g = random_hom(rng, b, c);
    SwapMorphism sf = kalman_star(l, f), sg = kalman_star(l, g), sgf = kalman_star(l, compose(g, f));
    r.expect(is_homomorphism(sf.map), name_of(l) + ": lifted map is not a homomorphism");
    r.expect(compose(sg.map, sf.map).map == sgf.map.map, name_of(l) + ": composition not preserved");
    if (f.injective()) r.expect(is_monomorphism(sf.map), name_of(l) + ": mono not sent to a mono");
  }
  const std::vector<std::vector<unsigned>> families = {{}, {2}, {1, 2}, {2, 1}, {1, 1, 1}};
  for (Logic l : all_logics())
    for (const auto& atoms : families) {
      std::vector<BoolAlg> family;
      for (unsigned n : atoms) family.push_back(BoolAlg(n));
      ProductIso p = product_iso(l, family);
      r.expect(is_isomorphism(p.map), name_of(l) + ": product_iso not an isomorphism for a family of " +
                                          std::to_string(family.size()));
    }
  return r;
}

SuiteReport verify_duality(const SuiteOptions&) {
  SuiteReport r;
  r.name = "duality";
  for (unsigned n = 0; n <= 3; ++n) {
    const BoolAlg a(n);
    for (const auto& v : duality_violations(duality_star(a)))
      r.expect(false, std::to_string(n) + " atoms: " + v);
    r.expect(true, "duality map");
    for (const auto& v : kleene_violations(kalman_classic(a))) r.expect(false, std::to_string(n) + " atoms: " + v);
    r.expect(true, "Kleene laws");

    // The Ciore second coordinate.
    SwapStructure c = full_swap(Logic::Ciore, a);
    for (Index x = 0; x < c.size(); ++x)
      for (Index y = 0; y < c.size(); ++y)
        for (Conn op : {Conn::And, Conn::Or, Conn::Imp}) {
          const Snapshot &z = c.snapshot(x), &w = c.snapshot(y);
          Elem v = op == Conn::And ? a.meet(z.z1, w.z1) : op == Conn::Or ? a.join(z.z1, w.z1) : a.imp(z.z1, w.z1);
          Elem u2 = a.imp(v, a.meet(a.meet(z.z1, z.z2), a.meet(w.z1, w.z2)));
          Cell cell = c.algebra().cell(op, x, y);
          r.expect(cell.size() == 1 && c.snapshot(cell[0]) == from_pair(a, v, u2),
                   "Ciore " + std::string(conn_name(op)) + " at " + c.algebra().label(x) + "," +
                       c.algebra().label(y));
        }
  }
  return r;
}

SuiteReport verify_representation(const SuiteOptions& opts) {
  SuiteReport r;
  r.name = "representation";
  Rng rng(opts.seed);
  auto check = [&](Logic l, const SwapStructure& b, const std::string& origin) {
    Representation rep = represent(l, b);
    r.expect(rep.index_set.size() == b.backing().atoms(), name_of(l) + ": index set is not the atoms");
    r.expect(is_injective(rep.embedding), name_of(l) + ": embedding not injective on " + origin);
    r.expect(is_homomorphism(rep.embedding), name_of(l) + ": embedding not a homomorphism on " + origin);
  };
  for (Logic l : all_logics())
    for (unsigned n = 0; n <= 3; ++n) check(l, full_swap(l, BoolAlg(n)), "full structure over " + std::to_string(n));
  const std::size_t per_logic = std::max<std::size_t>(50, opts.samples / 4);
  for (Logic l : all_logics()) {
    SwapStructure f2 = full_swap(l, BoolAlg(2));
    SwapStructure f3 = full_swap(l, BoolAlg(3));
    for (std::size_t i = 0; i < per_logic; ++i) {
      SubSample s = random_submultialgebra(i % 2 ? f3 : f2, rng);
      check(l, s.structure, "random submultialgebra " + describe(s.structure));
    }
  }
  return r;
}

SuiteReport verify_bivaluation(const SuiteOptions& opts) {
  SuiteReport r;
  r.name = "bivaluation";
  Rng rng(opts.seed);
  const std::vector<std::string> vars = {"p", "q"};
  const std::size_t rounds = std::max<std::size_t>(1000, opts.samples * 5);
  for (Logic l : {Logic::MbC, Logic::LFI1o, Logic::Ciore}) {
    const Nmatrix m = characteristic_matrix(l);
    const SwapStructure s = characteristic_structure(l);
    for (std::size_t i = 0; i < rounds; ++i) {
      std::vector<Formula> base = {random_formula(rng, vars, 3)};
      if (pick(rng, 2)) base.push_back(random_formula(rng, vars, 2));

      auto mu = random_bivaluation(l, base, rng);
      r.expect(mu.has_value(), name_of(l) + ": no bivaluation found");
      if (mu) {
        r.expect(is_bivaluation(l, *mu), name_of(l) + ": sampled bivaluation breaks a clause");
        PartialValuation v = induced_valuation(l, *mu, base);
        r.expect(is_legal(m, v), name_of(l) + ": induced valuation is not legal for " + base[0].to_string());
        for (std::size_t k = 0; k < v.formulas.size(); ++k)
          r.expect(s.designated(v.values[k]) == *mu->value(v.formulas[k]),
                   name_of(l) + ": designation differs from the bivaluation at " + v.formulas[k].to_string());
      }

      PartialValuation v = random_valuation(m, base, rng);
      Bivaluation back = bivaluation_from(l, v, base);
      auto bad = bivaluation_violation(l, back);
      r.expect(!bad, name_of(l) + ": projected valuation: " + bad.value_or(""));
      for (std::size_t k = 0; k < v.formulas.size(); ++k)
        r.expect(*back.value(v.formulas[k]) == s.designated(v.values[k]),
                 name_of(l) + ": projection disagrees with designation");
    }
  }
  return r;
}

SuiteReport verify_soundness(const SuiteOptions& opts) {
  SuiteReport r;
  r.name = "soundness";
  Rng rng(opts.seed);
  for (Logic l : all_logics()) {
    const Nmatrix m = l == Logic::CPLeP ? nmatrix_of(full_swap(l, BoolAlg(1))) : characteristic_matrix(l);
    if (l != Logic::CPLeP) {
      ProofCheck c = check_proof(l, bottom_derivation(l));
      r.expect(c.valid, name_of(l) + ": bottom derivation rejected: " + c.message);
      if (c.valid) r.expect(decide(m, c.premises, c.conclusion()).holds, name_of(l) + ": bottom derivation unsound");
    }
    const std::size_t proofs = std::max<std::size_t>(100, opts.samples / 2);
    for (std::size_t i = 0; i < proofs; ++i) {
      Proof p = random_proof(l, rng, 2 + pick(rng, 11));
      ProofCheck c = check_proof(l, p);
      r.expect(c.valid, name_of(l) + ": generated proof rejected: " + c.message);
      if (!c.valid) continue;
      r.expect(decide(m, c.premises, c.conclusion(), DecideOptions{false}).holds,
               name_of(l) + ": proof of " + c.conclusion().to_string() + " is not sound");
    }
  }
  return r;
}

}  // namespace swapkit

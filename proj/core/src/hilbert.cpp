#include "swapkit/hilbert.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace swapkit {

namespace {

const std::vector<std::pair<const char*, const char*>> kAxiomText = {
    {"Ax1", "A -> (B -> A)"},
    {"Ax2", "(A -> (B -> C)) -> ((A -> B) -> (A -> C))"},
    {"Ax3", "A -> (B -> A & B)"},
    {"Ax4", "A & B -> A"},
    {"Ax5", "A & B -> B"},
    {"Ax6", "A -> A | B"},
    {"Ax7", "B -> A | B"},
    {"Ax8", "(A -> C) -> ((B -> C) -> (A | B -> C))"},
    {"Ax9", "(A -> B) | A"},
    {"Ax10", "A | ~A"},
    {"bc1", "@A -> (A -> (~A -> B))"},
    {"ciw", "@A | A & ~A"},
    {"ci", "~@A -> A & ~A"},
    {"cf", "~~A -> A"},
    {"cons", "@A"},
    {"ce", "A -> ~~A"},
    {"neg-or", "~(A | B) <-> ~A & ~B"},
    {"neg-and", "~(A & B) <-> ~A | ~B"},
    {"neg-imp", "~(A -> B) <-> A & ~B"},
    {"co1", "@A | @B <-> @(A & B)"},
    {"co2", "@A | @B <-> @(A | B)"},
    {"co3", "@A | @B <-> @(A -> B)"},
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<std::size_t> to_index(const std::string& s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

const std::vector<AxiomSchema>& all_axioms() {
  static const std::vector<AxiomSchema> axioms = [] {
    std::vector<AxiomSchema> out;
    for (const auto& [name, text] : kAxiomText) out.push_back({name, parse(text)});
    return out;
  }();
  return axioms;
}

std::optional<Formula> axiom_schema(std::string_view name) {
  for (const auto& a : all_axioms())
    if (a.name == name) return a.schema;
  return std::nullopt;
}

std::vector<std::string> axioms_of(Logic l) {
  std::vector<std::string> out = {"Ax1", "Ax2", "Ax3", "Ax4", "Ax5", "Ax6", "Ax7", "Ax8", "Ax9"};
  if (l == Logic::CPLeP) return out;
  out.insert(out.end(), {"Ax10", "bc1"});
  switch (l) {
    case Logic::MbCciw: out.push_back("ciw"); break;
    case Logic::MbCci: out.push_back("ci"); break;
    case Logic::Ci: out.insert(out.end(), {"ci", "cf"}); break;
    case Logic::CPLe: out.push_back("cons"); break;
    case Logic::LFI1o: out.insert(out.end(), {"ci", "cf", "ce", "neg-or", "neg-and", "neg-imp"}); break;
    case Logic::Ciore: out.insert(out.end(), {"ci", "cf", "ce", "co1", "co2", "co3"}); break;
    default: break;
  }
  return out;
}

ProofParseError::ProofParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

ProofCheck check_proof(Logic l, const Proof& p) {
  ProofCheck r;
  const std::vector<std::string> allowed = axioms_of(l);
  auto fail = [&](std::size_t step, const std::string& msg) {
    r.valid = false;
    r.failed_step = step;
    r.message = msg;
    return r;
  };
  if (p.steps.empty()) return fail(0, "empty proof");
  for (std::size_t k = 1; k <= p.steps.size(); ++k) {
    const ProofStep& s = p.steps[k - 1];
    switch (s.kind) {
      case ProofStep::Kind::Premise:
        r.lines.push_back(s.formula);
        r.premises.push_back(s.formula);
        break;
      case ProofStep::Kind::Axiom: {
        if (std::find(allowed.begin(), allowed.end(), s.axiom) == allowed.end())
          return fail(k, "axiom " + s.axiom + " is not available in " + std::string(logic_name(l)));
        if (!match_schema(*axiom_schema(s.axiom), s.formula))
          return fail(k, s.formula.to_string() + " is not an instance of " + s.axiom);
        r.lines.push_back(s.formula);
        break;
      }
      case ProofStep::Kind::MP: {
        if (s.i < 1 || s.i >= k || s.j < 1 || s.j >= k) return fail(k, "mp must cite two earlier steps");
        const Formula& a = r.lines[s.i - 1];
        const Formula& b = r.lines[s.j - 1];
        auto is_imp_from = [](const Formula& f, const Formula& ante) {
          return !f.is_var() && f.kind() == Formula::Kind::Binary && f.op() == Conn::Imp && f.left() == ante;
        };
        if (is_imp_from(b, a))
          r.lines.push_back(b.right());
        else if (is_imp_from(a, b))
          r.lines.push_back(a.right());
        else
          return fail(k, "steps " + std::to_string(s.i) + " and " + std::to_string(s.j) + " do not fit modus ponens");
        break;
      }
    }
  }
  r.valid = true;
  return r;
}

Proof parse_proof(std::string_view text) {
  Proof p;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto sp = line.find_first_of(" \t");
    const std::string head = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : trim(std::string_view(line).substr(sp));
    ProofStep s;
    s.line = lineno;
    auto formula = [&](const std::string& t) {
      if (t.empty()) throw ProofParseError(lineno, "missing formula");
      try {
        return parse(t);
      } catch (const ParseError& e) {
        throw ProofParseError(lineno, e.what());
      }
    };
    if (head == "premise") {
      s.kind = ProofStep::Kind::Premise;
      s.formula = formula(rest);
    } else if (head == "axiom") {
      const auto sp2 = rest.find_first_of(" \t");
      if (sp2 == std::string::npos) throw ProofParseError(lineno, "expected: axiom NAME FORMULA");
      s.kind = ProofStep::Kind::Axiom;
      s.axiom = rest.substr(0, sp2);
      if (!axiom_schema(s.axiom)) throw ProofParseError(lineno, "unknown axiom " + s.axiom);
      s.formula = formula(trim(std::string_view(rest).substr(sp2)));
    } else if (head == "mp") {
      std::istringstream args(rest);
      std::string a, b, extra;
      args >> a >> b;
      if (args >> extra) throw ProofParseError(lineno, "mp takes two step numbers");
      auto i = to_index(a), j = to_index(b);
      if (!i || !j) throw ProofParseError(lineno, "mp takes two step numbers");
      s.kind = ProofStep::Kind::MP;
      s.i = *i;
      s.j = *j;
    } else {
      throw ProofParseError(lineno, "unknown step kind '" + head + "'");
    }
    p.steps.push_back(std::move(s));
  }
  return p;
}

std::string format_proof(const Proof& p) {
  std::ostringstream out;
  for (const auto& s : p.steps) {
    switch (s.kind) {
      case ProofStep::Kind::Premise: out << "premise " << s.formula.to_string() << '\n'; break;
      case ProofStep::Kind::Axiom: out << "axiom " << s.axiom << ' ' << s.formula.to_string() << '\n'; break;
      case ProofStep::Kind::MP: out << "mp " << s.i << ' ' << s.j << '\n'; break;
    }
  }
  return out.str();
}

Proof bottom_derivation(Logic l) {
  if (l == Logic::CPLeP) throw std::invalid_argument("bottom_derivation: needs bc1, absent from CPLe+");
  return parse_proof(
      "premise (p & ~p) & @p\n"
      "axiom Ax4 (p & ~p) & @p -> p & ~p\n"
      "mp 1 2\n"
      "axiom Ax5 (p & ~p) & @p -> @p\n"
      "mp 1 4\n"
      "axiom Ax4 p & ~p -> p\n"
      "mp 3 6\n"
      "axiom Ax5 p & ~p -> ~p\n"
      "mp 3 8\n"
      "axiom bc1 @p -> (p -> (~p -> q))\n"
      "mp 5 10\n"
      "mp 7 11\n"
      "mp 9 12\n");
}

Proof random_proof(Logic l, Rng& rng, std::size_t steps, const std::vector<std::string>& vars) {
  Proof p;
  std::vector<Formula> lines;
  const std::vector<std::string> names = axioms_of(l);
  auto add = [&](ProofStep s, Formula f) {
    p.steps.push_back(std::move(s));
    lines.push_back(std::move(f));
  };
  const std::size_t premises = pick(rng, 3);
  for (std::size_t k = 0; k < premises && k < steps; ++k) {
    ProofStep s;
    s.kind = ProofStep::Kind::Premise;
    s.formula = random_formula(rng, vars, 2);
    add(s, s.formula);
  }
  while (p.steps.size() < steps) {
    std::vector<std::pair<std::size_t, std::size_t>> fits;
    for (std::size_t j = 0; j < lines.size(); ++j) {
      const Formula& f = lines[j];
      if (f.is_var() || f.kind() != Formula::Kind::Binary || f.op() != Conn::Imp) continue;
      for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i] == f.left()) fits.emplace_back(i, j);
    }
    if (!fits.empty() && pick(rng, 2) == 0) {
      auto [i, j] = fits[pick(rng, fits.size())];
      ProofStep s;
      s.kind = ProofStep::Kind::MP;
      s.i = i + 1;
      s.j = j + 1;
      add(s, lines[j].right());
      continue;
    }
    ProofStep s;
    s.kind = ProofStep::Kind::Axiom;
    s.axiom = names[pick(rng, names.size())];
    const Formula schema = *axiom_schema(s.axiom);
    Substitution sub;
    for (const auto& v : variables(schema)) {
      std::vector<Formula> small;
      for (const auto& f : lines)
        if (f.size() <= 12) small.push_back(f);
      sub[v] = !small.empty() && pick(rng, 2) == 0 ? small[pick(rng, small.size())] : random_formula(rng, vars, 2);
    }
    s.formula = substitute(schema, sub);
    add(s, s.formula);
  }
  return p;
}

}  // namespace swapkit

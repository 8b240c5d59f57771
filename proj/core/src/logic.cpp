#include <algorithm>
#include <cctype>

#include "swapkit/random.hpp"
#include "swapkit/swap.hpp"

namespace swapkit {

const std::vector<Logic>& all_logics() {
  static const std::vector<Logic> all = {Logic::CPLeP, Logic::MbC, Logic::MbCciw, Logic::MbCci,
                                         Logic::Ci,    Logic::CPLe, Logic::LFI1o, Logic::Ciore};
  return all;
}

std::string_view logic_name(Logic l) {
  switch (l) {
    case Logic::CPLeP: return "CPLe+";
    case Logic::MbC: return "mbC";
    case Logic::MbCciw: return "mbCciw";
    case Logic::MbCci: return "mbCci";
    case Logic::Ci: return "Ci";
    case Logic::CPLe: return "CPLe";
    case Logic::LFI1o: return "LFI1o";
    case Logic::Ciore: return "Ciore";
  }
  return "?";
}

std::optional<Logic> parse_logic(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "cple+" || s == "cplep") return Logic::CPLeP;
  if (s == "mbc") return Logic::MbC;
  if (s == "mbcciw") return Logic::MbCciw;
  if (s == "mbcci") return Logic::MbCci;
  if (s == "ci") return Logic::Ci;
  if (s == "cple") return Logic::CPLe;
  if (s == "lfi1o" || s == "lfi1" || s == "j3") return Logic::LFI1o;
  if (s == "ciore") return Logic::Ciore;
  return std::nullopt;
}

Encoding encoding_of(Logic l) {
  return l == Logic::CPLeP || l == Logic::MbC ? Encoding::Triple : Encoding::Pair;
}

bool class_included(Logic a, Logic b) {
  if (a == b) return true;
  auto chain = [](Logic l) { return l <= Logic::CPLe; };
  auto pos = [](Logic l) { return static_cast<int>(l); };
  if (chain(a) && chain(b)) return pos(a) >= pos(b);
  if (!chain(a) && chain(b)) return pos(b) <= pos(Logic::Ci);
  if (a == Logic::CPLe) return true;  // b is LFI1o or Ciore
  return false;
}

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Formula random_formula(Rng& rng, const std::vector<std::string>& vars, std::size_t depth) {
  if (depth == 0 || pick(rng, 4) == 0) return Formula::var(vars[pick(rng, vars.size())]);
  switch (pick(rng, 5)) {
    case 0: return neg(random_formula(rng, vars, depth - 1));
    case 1: return cons(random_formula(rng, vars, depth - 1));
    case 2: return conj(random_formula(rng, vars, depth - 1), random_formula(rng, vars, depth - 1));
    case 3: return disj(random_formula(rng, vars, depth - 1), random_formula(rng, vars, depth - 1));
    default: return imp(random_formula(rng, vars, depth - 1), random_formula(rng, vars, depth - 1));
  }
}

BaHom random_hom(Rng& rng, const BoolAlg& source, const BoolAlg& target) {
  if (source.degenerate() && !target.degenerate())
    throw std::invalid_argument("random_hom: no homomorphism from the one-element algebra");
  std::vector<unsigned> dual(target.atoms());
  for (auto& d : dual) d = static_cast<unsigned>(pick(rng, source.atoms()));
  return hom_from_dual(source, target, dual);
}

}  // namespace swapkit

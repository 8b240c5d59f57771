#include "swapkit/hilbert.hpp"
#include "swapkit/nmatrix.hpp"
#include "swapkit/swap.hpp"

namespace swapkit {

bool validates(const SwapStructure& b, const Formula& schema) {
  return decide(nmatrix_of(b), {}, schema, DecideOptions{false}).holds;
}

std::vector<Formula> defining_schemas(Logic l) {
  std::vector<std::string> names = axioms_of(l);
  const std::size_t positive = axioms_of(Logic::CPLeP).size();
  std::vector<Formula> out;
  for (std::size_t i = l == Logic::CPLeP ? 0 : positive; i < names.size(); ++i) out.push_back(*axiom_schema(names[i]));
  return out;
}

bool characterize(Logic l, const SwapStructure& b) {
  if (!is_swap_for(Logic::CPLeP, b)) return false;
  for (const auto& s : defining_schemas(l))
    if (!validates(b, s)) return false;
  return true;
}

}  // namespace swapkit

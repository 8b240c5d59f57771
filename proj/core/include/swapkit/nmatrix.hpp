#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swapkit/formula.hpp"
#include "swapkit/multialgebra.hpp"
#include "swapkit/random.hpp"
#include "swapkit/swap.hpp"

namespace swapkit {

// A multialgebra over the logic signature with a set of designated values.
struct Nmatrix {
  MultiAlg algebra;
  std::vector<bool> designated;
};

// Designated values are the snapshots with first coordinate 1.
Nmatrix nmatrix_of(const SwapStructure& b);

// Values for a subformula-closed list of formulas.
struct PartialValuation {
  std::vector<Formula> formulas;
  std::vector<Index> values;

  std::optional<Index> value(const Formula& f) const;
};

// Every compound formula whose immediate subformulas are valued takes a value
// in the cell of their values.
bool is_legal(const Nmatrix& m, const PartialValuation& v);

// A legal valuation of the subformula closure of `formulas`: variables get
// random values, compounds a random member of their cell.
PartialValuation random_valuation(const Nmatrix& m, std::span<const Formula> formulas, Rng& rng);

struct Verdict {
  bool holds = false;
  // When the consequence fails: a legal valuation of the subformula closure
  // designating every premise but not the goal, lexicographically least in
  // closure order (variables first).
  std::optional<PartialValuation> countermodel;
};

struct DecideOptions {
  bool countermodel = true;
};

// premises |= goal in the Nmatrix.
Verdict decide(const Nmatrix& m, std::span<const Formula> premises, const Formula& goal, const DecideOptions& opts = {});

class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The full swap structure over the two-element algebra, which characterizes
// every logic except CPLe+ (throws Unsupported there).
SwapStructure characteristic_structure(Logic l);
Nmatrix characteristic_matrix(Logic l);
Verdict decide_logic(Logic l, std::span<const Formula> premises, const Formula& goal, const DecideOptions& opts = {});

}  // namespace swapkit

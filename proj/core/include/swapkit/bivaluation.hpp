#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swapkit/formula.hpp"
#include "swapkit/nmatrix.hpp"
#include "swapkit/random.hpp"
#include "swapkit/swap.hpp"

namespace swapkit {

// Two-valued semantics for mbC, LFI1o and Ciore.
bool has_bivaluations(Logic l);

struct Bivaluation {
  std::vector<Formula> domain;
  std::vector<bool> values;

  std::optional<bool> value(const Formula& f) const;
};

// The subformula closure of `base` together with ~a, @a and ~@a for each a in
// it. Subformulas come before the formulas containing them.
std::vector<Formula> bivaluation_domain(std::span<const Formula> base);

// First clause violated by mu; a clause applies when every formula it mentions
// is in the domain.
std::optional<std::string> bivaluation_violation(Logic l, const Bivaluation& mu);
inline bool is_bivaluation(Logic l, const Bivaluation& mu) { return !bivaluation_violation(l, mu); }

// The valuation in full_swap(l, A2) sending a to (mu a, mu ~a, mu @a), or to
// (mu a, mu ~a) for the pair logics, over the subformula closure of `base`.
// Throws std::invalid_argument if some snapshot lies outside the universe.
PartialValuation induced_valuation(Logic l, const Bivaluation& mu, std::span<const Formula> base);

// The bivaluation read off a legal valuation of the closure of `base` in
// full_swap(l, A2).
Bivaluation bivaluation_from(Logic l, const PartialValuation& v, std::span<const Formula> base);

// A uniformly seeded search over assignments to bivaluation_domain(base).
std::optional<Bivaluation> random_bivaluation(Logic l, std::span<const Formula> base, Rng& rng);

}  // namespace swapkit

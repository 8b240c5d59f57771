#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "swapkit/boolean_algebra.hpp"
#include "swapkit/formula.hpp"

namespace swapkit {

using Rng = std::mt19937_64;

// Uniform in [0, n).
std::size_t pick(Rng& rng, std::size_t n);

// A random formula of depth at most `depth` over the given variables.
Formula random_formula(Rng& rng, const std::vector<std::string>& vars, std::size_t depth);

// A random Boolean homomorphism between powerset algebras; target atoms are
// sent to random source atoms. A degenerate source only maps to a degenerate
// target.
BaHom random_hom(Rng& rng, const BoolAlg& source, const BoolAlg& target);

}  // namespace swapkit

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swapkit/formula.hpp"
#include "swapkit/random.hpp"
#include "swapkit/swap.hpp"

namespace swapkit {

struct AxiomSchema {
  std::string name;  // "Ax1".."Ax10", "bc1", "ciw", "ci", "cf", "cons", "ce", "neg-or", ...
  Formula schema;    // over the metavariables A, B, C
};

const std::vector<AxiomSchema>& all_axioms();
std::optional<Formula> axiom_schema(std::string_view name);
// Axiom names of the Hilbert calculus for l, positive part first.
std::vector<std::string> axioms_of(Logic l);

struct ProofStep {
  enum class Kind { Premise, Axiom, MP };
  Kind kind = Kind::Premise;
  std::string axiom;   // Kind::Axiom
  Formula formula;     // Kind::Premise and Kind::Axiom
  std::size_t i = 0;   // Kind::MP, 1-based
  std::size_t j = 0;
  std::size_t line = 0;  // source line, 0 when built in code
};

struct Proof {
  std::vector<ProofStep> steps;
};

struct ProofCheck {
  bool valid = false;
  std::size_t failed_step = 0;  // 1-based; 0 when valid
  std::string message;
  std::vector<Formula> lines;     // formula of every checked step
  std::vector<Formula> premises;  // in order of appearance
  Formula conclusion() const { return lines.empty() ? Formula() : lines.back(); }
};

// Each step is a premise, an instance of an axiom of l, or modus ponens on two
// earlier steps in either order.
ProofCheck check_proof(Logic l, const Proof& p);

class ProofParseError : public std::runtime_error {
 public:
  ProofParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Lines "premise F", "axiom NAME F" or "mp I J"; '#' starts a comment.
Proof parse_proof(std::string_view text);
std::string format_proof(const Proof& p);

// q from (p & ~p) & @p. The same proof serves every logic from mbC on;
// throws std::invalid_argument for CPLe+.
Proof bottom_derivation(Logic l);

// A syntactically valid proof of l with about `steps` steps over the variables.
Proof random_proof(Logic l, Rng& rng, std::size_t steps, const std::vector<std::string>& vars = {"p", "q", "r"});

}  // namespace swapkit

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace swapkit {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 200;  // random structures, formulas or proofs, per suite
};

struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // the first few

  bool ok() const { return failed == 0; }
  void expect(bool cond, const std::string& what);
};

// characterization, class-chain, kalman, duality, representation,
// bivaluation, soundness
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opts = {});

SuiteReport verify_characterization(const SuiteOptions& opts);
SuiteReport verify_class_chain(const SuiteOptions& opts);
SuiteReport verify_kalman(const SuiteOptions& opts);
SuiteReport verify_duality(const SuiteOptions& opts);
SuiteReport verify_representation(const SuiteOptions& opts);
SuiteReport verify_bivaluation(const SuiteOptions& opts);
SuiteReport verify_soundness(const SuiteOptions& opts);

}  // namespace swapkit

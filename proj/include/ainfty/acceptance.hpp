#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ainfty {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

constexpr int kCriterionCount = 9;
constexpr std::uint64_t kDefaultSeed = 20260101;

/// Runs one acceptance criterion (1..9); exceptions become failures.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

/// `[PASS] 4 diagonal soundness (0.31 s): detail`
std::string format_result(const CriterionResult& r);

/// JSON models used by the acceptance suite and shipped under models/.
extern const char* const kZ2GroupBialgebra;
extern const char* const kAdversarialModel;
extern const char* const kZeroModel;

}  // namespace ainfty

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "fideal/complex.hpp"
#include "fideal/ideal.hpp"

namespace fideal {

/// The characterization criteria only apply to pure ideals of degree >= 2.
class NotPureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unmixed of height n - d.
struct HeightCondition {
  bool pass = false;
  int observed = 0;
  int expected = 0;
  bool unmixed = false;
};

/// C(n, d) even and |Ass(S/I)| = s = C(n, d) / 2.
struct ParityCountCondition {
  bool pass = false;
  std::uint64_t binom = 0;
  int generators = 0;
  int associated_primes = 0;
  bool parity = false;
};

/// f_{d-2}(δ_F(I)) = C(n, d-1).
struct SkeletonCondition {
  bool pass = false;
  std::uint64_t observed = 0;
  std::uint64_t expected = 0;
};

struct ConditionReport {
  int n = 0;
  int generators = 0;
  /// Absent when the ideal is not pure.
  std::optional<int> pure_degree;
  std::optional<HeightCondition> height;
  std::optional<ParityCountCondition> parity_count;
  /// Absent in a necessary-conditions-only report.
  std::optional<SkeletonCondition> skeleton;

  /// f(δ_F) == f(δ_N). Meaningful only when direct_computed.
  bool direct_verdict = false;
  bool direct_computed = false;
  /// All three conditions; absent unless pure of degree >= 2 and the
  /// skeleton condition was evaluated.
  std::optional<bool> characterization_verdict;

  FVector f_facet;
  /// Empty when direct_computed is false.
  FVector f_nonface;

  bool necessary_conditions_pass() const {
    return height && parity_count && height->pass && parity_count->pass;
  }
  /// Both verdicts known and different.
  bool theorem_violation() const {
    return direct_computed && characterization_verdict &&
           *characterization_verdict != direct_verdict;
  }
  /// The characterization verdict when trusted, else the direct one.
  bool f_ideal() const {
    return direct_computed ? direct_verdict : characterization_verdict.value_or(false);
  }
};

/// f(δ_F(I)) == f(δ_N(I)). Defined for every square-free ideal.
bool is_f_ideal(const SquareFreeIdeal& ideal);

/// Necessary conditions (1) unmixed of height n-d, (2) C(n,d) even,
/// (3) s = |Ass(S/I)| = C(n,d)/2, plus the direct verdict.
/// Throws NotPureError unless the ideal is pure with d >= 2.
ConditionReport check_necessary_conditions(const SquareFreeIdeal& ideal);

struct CharacterizationOptions {
  /// Skip the δ_N f-vector and report the characterization verdict alone.
  bool trust_characterization = false;
};

/// The three characterization conditions and the direct verdict side by
/// side; theorem_violation() reports any disagreement instead of
/// resolving it. Throws NotPureError unless pure with d >= 2.
ConditionReport check_characterization(const SquareFreeIdeal& ideal,
                                       const CharacterizationOptions& options = {});

/// Never throws NotPureError: for pure ideals of degree >= 2 this is
/// check_characterization, otherwise only the direct comparison is filled.
ConditionReport analyze(const SquareFreeIdeal& ideal,
                        const CharacterizationOptions& options = {});

}  // namespace fideal

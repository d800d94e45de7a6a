#pragma once

#include "chernlab/degrees.hpp"
#include "chernlab/koszul.hpp"
#include "chernlab/reductions.hpp"

namespace chernlab {

enum class BoundVerdict { holds, fails, hypotheses_not_met, ingredient_unavailable };

const char* to_string(BoundVerdict v);

struct Hypothesis {
  std::string name;
  bool satisfied = false;
};

// Auditable evaluation of one inequality or identity: every hypothesis is
// checked and recorded, and "fails" is only possible with all hypotheses
// true, which makes it a falsification candidate rather than a misuse.
struct BoundReport {
  std::string name;
  std::string relation;
  std::vector<Hypothesis> hypotheses;
  std::optional<std::int64_t> lhs;
  std::optional<std::int64_t> rhs;
  BoundVerdict verdict = BoundVerdict::ingredient_unavailable;
  std::vector<std::pair<std::string, std::string>> data;

  bool hypotheses_met() const;
};

struct SuiteFlags {
  bool buchsbaum = false;
  bool domain = false;
  std::uint64_t seed = 42;
};

// Evaluates every bound statement applicable to (R, I): Northcott, the
// generalized-CM lower bound, the d-sequence identity, the hdeg_I lower
// bound, the specialization-torsion bounds, superficial-reduction
// invariance, the hdeg-vs-hdeg_I comparison, the Briancon-Skoda style upper
// bound, the Sally-module right-hand side and closure-filtration tracking.
std::vector<BoundReport> bound_suite(const PRingP& R, const RingIdeal& I,
                                     const SuiteFlags& flags);

struct ConjectureVerdict {
  int id = 1;
  std::string instance;
  std::vector<std::pair<std::string, std::string>> evidence;
  std::string verdict;  // consistent | inconsistent | inapplicable
};

// Conjecture 1 (negativity): e_1(J) < 0 iff R is not Cohen-Macaulay, decided
// only on instances flagged domain/unmixed; everything else is inapplicable
// with the computed data attached.
ConjectureVerdict conjecture1_check(const PRingP& R, const RingIdeal& J, bool applicable,
                                    const std::string& instance);

struct ReductionTrial {
  std::vector<std::int64_t> e;
  int retries = 0;
  bool failed = false;
  std::string error;
};

struct ReductionExperiment {
  std::vector<ReductionTrial> trials;
  int failures = 0;
  bool all_agree = true;  // over the successful trials
};

// Question 4 experiment: e_1 across independently drawn minimal-reduction
// candidates of I.  Disagreement is reported, not thrown.
ReductionExperiment reduction_e1_experiment(const PRingP& R, const RingIdeal& I, int trials,
                                            std::uint64_t seed);

}  // namespace chernlab

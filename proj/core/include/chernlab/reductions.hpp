#pragma once

#include <cstdint>
#include <random>

#include "chernlab/modules.hpp"

namespace chernlab {

// Result of quotienting R by random combinations of the generators of I.
// The verification record says which coefficients were recomputed in the
// section and found equal to the originals.
struct ReductionOutcome {
  PRingP original;
  PRingP ring;                     // R' = R/(combinations)
  std::vector<Polynomial> combos;  // ambient representatives of the chosen elements
  int count = 0;
  bool e0_checked = false;
  bool e1_checked = false;
  std::int64_t e0 = 0;  // shared values when the corresponding flag is set
  std::int64_t e1 = 0;
  int retries = 0;

  RingIdeal image_ideal(const RingIdeal& I) const;  // I R'
};

inline constexpr int kReductionRetryBudget = 12;

// Quotients by `count` random combinations of gens(I) and certifies the
// outcome by recomputation: dimension must drop by count; e_0 is compared
// whenever count < dim R; e_1 is compared when superficiality alone forces
// it (count <= dim - 2) or the combos form a regular sequence
// (depth R >= count).  count = dim R switches to the minimal-reduction
// acceptance test: the combos generate an m-primary ideal with
// e_0 = e_0(I).  Fails with GenericityError once the retry budget is spent.
ReductionOutcome random_superficial_reduction(const PRingP& R, const RingIdeal& I, int count,
                                              std::uint64_t seed);

struct ReductionCandidate {
  RingIdeal J;  // candidate minimal reduction, an ideal of R
  std::vector<Polynomial> combos;
  int retries = 0;
};

// dim R random combinations of gens(I), accepted when m-primary with the
// same multiplicity as I.
ReductionCandidate minimal_reduction_candidate(const PRingP& R, const RingIdeal& I,
                                               std::uint64_t seed);

// Random nonzero scalar combination of the given polynomials.
Polynomial random_combination(const std::vector<Polynomial>& gens, std::mt19937_64& rng);

}  // namespace chernlab

#pragma once

#include "chernlab/modules.hpp"

namespace chernlab {

// Lengths h_0..h_d of the Koszul homology of the generators of J over R.
// J must be a parameter ideal: exactly dim R generators and m-primary.
std::vector<std::int64_t> koszul_homology_lengths(const RingIdeal& J);

// Euler characteristic sum (-1)^i h_i; equals e_0(J) by Serre's formula.
std::int64_t koszul_chi(const std::vector<std::int64_t>& h);

// The correction term sum_{i>=1} (-1)^{i-1} h_i, so that
// e_0(J) = lambda(R/J) - correction.
std::int64_t koszul_correction(const std::vector<std::int64_t>& h);

// d-sequence prediction sum_{i>=1} (-1)^i i h_i for e_1(J).
std::int64_t koszul_e1(const std::vector<std::int64_t>& h);

// Colon criterion: ((x_1..x_i) : x_{i+1} x_k) = ((x_1..x_i) : x_k) for all
// 0 <= i < n and k >= i+1, each side taken in R.
bool is_d_sequence(const PRingP& R, const std::vector<Polynomial>& xs);

}  // namespace chernlab

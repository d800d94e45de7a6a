#pragma once

#include <map>
#include <optional>
#include <string>

#include "chernlab/modules.hpp"

namespace chernlab {

// One node of the hdeg recursion: the module's multiplicity contribution
// plus the binomially weighted Ext children.
struct DegreeNode {
  std::string label;
  int dim = 0;
  bool finite_length = false;
  std::int64_t base = 0;  // deg, e(I; .) or lambda on finite-length nodes
  std::int64_t hdeg = 0;
  std::vector<std::pair<std::int64_t, DegreeNode>> ext;  // (weight, child), nonzero children only
};

struct DegreeReport {
  bool relative = false;  // hdeg_I when true
  std::int64_t deg = 0;
  std::int64_t hdeg = 0;
  DegreeNode root;
};

// hdeg(M) = deg(M) + sum_{i=r-d+1}^{r} C(d-1, i-r+d-1) hdeg(Ext^i_S(M, S)),
// with lambda(M) on finite-length modules and 0 on the zero module.
DegreeReport hdeg_report(const PModule& M);
// Same recursion with every multiplicity taken relative to the m-primary
// ideal I (lifted to the ambient ring).
DegreeReport hdeg_report(const PModule& M, const RingIdeal& I);

std::int64_t hdeg_value(const PModule& M);
std::int64_t hdeg_value(const PModule& M, const RingIdeal& I);

std::int64_t hdeg_ring(const PRingP& R);
std::int64_t hdeg_ring(const PRingP& R, const RingIdeal& I);

int ring_depth(const PRingP& R);
bool is_cm_ring(const PRingP& R);
bool is_cm_module(const PModule& M);

// lambda(H^i_m(R)) for i = 0..dim-1; nullopt as soon as one is infinite.
std::optional<std::vector<std::int64_t>> below_top_cohomology(const PRingP& R);
bool is_generalized_cm(const PRingP& R);

// T(R) = sum_{i=1}^{d-1} C(d-2, i-1) lambda(H^i_m(R)); nullopt when R is not
// generalized Cohen-Macaulay.
std::optional<std::int64_t> t_invariant(const PRingP& R);

}  // namespace chernlab

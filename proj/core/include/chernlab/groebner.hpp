#pragma once

#include <vector>

#include "chernlab/modvec.hpp"

namespace chernlab {

// Reduced Groebner basis of a submodule of a free module, together with the
// order it was computed under.  Elements are monic and sorted ascending by
// leading term; the reduced basis is unique for a given (module, order).
struct ModuleBasis {
  RingP ring;
  MOrdP ord;
  int rank = 0;
  std::vector<VectorPoly> gens;

  bool is_zero() const { return gens.empty(); }
};

struct ModuleDivision {
  VectorPoly remainder;
  // One quotient polynomial per basis element: v = sum q_i g_i + remainder.
  std::vector<Polynomial> quotients;
};

ModuleBasis module_buchberger(RingP ring, MOrdP ord, int rank, std::vector<VectorPoly> gens);

// Interreduces a set that is already a Groebner basis under ord (minimalizes
// by leading-term divisibility, tail-reduces, normalizes, sorts).
ModuleBasis module_interreduce(RingP ring, MOrdP ord, int rank, std::vector<VectorPoly> gb);

VectorPoly module_normal_form(const VectorPoly& v, const ModuleBasis& B);
ModuleDivision module_divide(const VectorPoly& v, const ModuleBasis& B);
bool module_contains(const VectorPoly& v, const ModuleBasis& B);

// Schreyer syzygies of a reduced basis: generators of all relations among
// B.gens, returned as a Groebner basis under the induced (Schreyer) order.
// F supplies the degree shifts of the ambient free module so the syzygy
// module's shifts can be derived.
struct SyzygyBasis {
  MOrdP ord;
  FreeModule free;  // one basis vector per element of the input basis
  std::vector<VectorPoly> gens;
};
SyzygyBasis schreyer_syzygies(const ModuleBasis& B, const FreeModule& F);

// Generators of {a in S^s : sum_i a_i columns[i] lies in the span of modulo},
// computed by eliminating the target block of a graph module.  Columns live
// in a free module of rank target_rank.
std::vector<VectorPoly> kernel_of_map(const RingP& ring, int target_rank,
                                      const std::vector<VectorPoly>& columns,
                                      const std::vector<VectorPoly>& modulo);

// Ring-level reduced Groebner basis of an ideal.
class GroebnerBasis {
public:
  GroebnerBasis() = default;
  GroebnerBasis(RingP ring, std::vector<Polynomial> reduced_elements)
      : ring_(std::move(ring)), g_(std::move(reduced_elements)) {}

  const RingP& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return g_; }
  bool is_zero_ideal() const { return g_.empty(); }
  bool is_unit_ideal() const { return g_.size() == 1 && g_[0].is_constant() && !g_[0].is_zero(); }

  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }
  bool same_ideal(const GroebnerBasis& o) const;

private:
  RingP ring_;
  std::vector<Polynomial> g_;
};

GroebnerBasis buchberger(const RingP& ring, const std::vector<Polynomial>& gens);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
SyzygyBasis syzygies(const GroebnerBasis& gb);

// Elements of the ideal free of the leading elimination block (the ring's
// order must be a block elimination order).
std::vector<Polynomial> elimination_slice(const GroebnerBasis& gb);

}  // namespace chernlab

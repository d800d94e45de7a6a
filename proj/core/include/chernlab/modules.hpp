#pragma once

#include <optional>
#include <vector>

#include "chernlab/hilbert.hpp"

namespace chernlab {

// Finitely presented module over the ambient ring: M = F/N with N spanned by
// the relation columns.  Modules over a quotient R = S/a are handled by
// folding a*F into the relations, which changes no lengths or Ext groups
// against S.  The reduced basis of N is computed on construction.
class PModule {
public:
  PModule(FreeModule F, std::vector<VectorPoly> relations);

  static PModule ring_quotient(const PRingP& R);                   // R as a module
  static PModule quotient_by(const RingIdeal& I);                  // R/I
  // A/B for submodules B inside A + span(modulo) of the free module F; the
  // presentation is  S^{#agens} / psi^{-1}(B + modulo)  with psi(e_i) = agens[i].
  static PModule subquotient(const FreeModule& F, const std::vector<VectorPoly>& agens,
                             const std::vector<VectorPoly>& bgens);

  const RingP& ring() const { return free_.ring; }
  const FreeModule& free() const { return free_; }
  const std::vector<VectorPoly>& relations() const { return rels_; }
  const ModuleBasis& basis() const { return gb_; }

  bool is_zero() const;
  bool is_graded() const;

  // Krull dimension of the support (via the initial module); -1 for M = 0.
  int dim() const;
  bool has_finite_length() const;
  std::int64_t length() const;

  // M/(J M + relations).
  PModule quotient_by_ideal(const RingIdeal& J) const;

private:
  FreeModule free_;
  std::vector<VectorPoly> rels_;
  ModuleBasis gb_;
};

// Submodule colon (N :_F m) for the relation submodule N of M inside F: all
// vectors v with x_i v in N for every variable.  Returns generators.
std::vector<VectorPoly> module_colon_maximal(const PModule& M);

// Saturation (N : m^infinity); the quotient by N is H^0_m(M).
std::vector<VectorPoly> module_saturation_maximal(const PModule& M);

// Length of H^0_m(M) (always finite).
std::int64_t h0_length(const PModule& M);

// lengths[n] = lambda(M / J^{n+1} M); J must be m-primary.
HilbertSamuelTable module_hs_table(const PModule& M, const RingIdeal& J, int N);

// Multiplicity e(J; M) fitted at d = dim M (lambda(M) when dim M <= 0).
std::int64_t module_multiplicity(const PModule& M, const RingIdeal& J);

// deg(M) = e(maximal ideal; M).
std::int64_t module_degree(const PModule& M);

struct FreeResolution {
  RingP ring;
  std::vector<FreeModule> frees;               // F_0 .. F_l
  std::vector<std::vector<VectorPoly>> maps;   // maps[i] : F_{i+1} -> F_i
  bool graded = false;
  bool minimal = false;

  int length() const { return static_cast<int>(maps.size()); }
};

// Iterated syzygies; with minimize, unit entries are pivoted away, which
// yields the minimal resolution in the graded case.
FreeResolution free_resolution(const PModule& M, bool minimize = true);

// Projective dimension read off Ext nonvanishing (resolution need not be
// minimal); depth r - pd by the Auslander-Buchsbaum formula.
int projective_dimension(const PModule& M);
int module_depth(const PModule& M);

// Ext^i_S(M, S) as a presented module (minimized presentation).
PModule ext_module(const FreeResolution& res, int i);
PModule ext_module(const PModule& M, int i);

// Length of the local cohomology H^i_m(M) through duality against the
// ambient ring; nullopt when the module is not of finite length there.
std::optional<std::int64_t> local_cohomology_length(const PModule& M, int i);

}  // namespace chernlab

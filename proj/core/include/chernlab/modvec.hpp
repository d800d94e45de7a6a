#pragma once

#include <memory>
#include <vector>

#include "chernlab/polynomial.hpp"

namespace chernlab {

// Graded free module over a polynomial ring: rank many basis vectors with
// per-component degree shifts (basis vector c has degree shifts[c]).
struct FreeModule {
  RingP ring;
  std::vector<std::int64_t> shifts;

  int rank() const { return static_cast<int>(shifts.size()); }
  static FreeModule standard(RingP r, int rank) {
    return FreeModule{std::move(r), std::vector<std::int64_t>(rank, 0)};
  }
};

struct MTerm {
  Scalar c;
  Monomial m;
  std::int32_t comp = 0;
};

class ModuleOrder;
using MOrdP = std::shared_ptr<const ModuleOrder>;

// Module monomial order.  Three kinds cover every use here:
//  - top: ring order on the monomials, ties broken by smaller component;
//  - graph: components below `lead_rank` dominate the rest (module-level
//    elimination used for kernels and syzygy extraction), top inside groups;
//  - schreyer: compare images m * lt(target[comp]) in the base order, ties by
//    smaller component; this is the order induced on syzygies.
class ModuleOrder {
public:
  static MOrdP top(MonomialOrder ring_order);
  static MOrdP graph(MonomialOrder ring_order, int lead_rank);
  static MOrdP schreyer(MOrdP base, std::vector<std::pair<Monomial, int>> images);

  // +1 when (ma, ca) > (mb, cb).
  int compare(const Monomial& ma, int ca, const Monomial& mb, int cb) const;

private:
  enum class Kind { top, graph, schreyer };
  ModuleOrder(Kind k, MonomialOrder ord) : kind_(k), ring_order_(std::move(ord)) {}
  Kind kind_;
  MonomialOrder ring_order_;
  int lead_rank_ = 0;
  MOrdP base_;
  std::vector<std::pair<Monomial, int>> images_;
};

// Element of a free module: term list strictly decreasing in the active
// module order (which is supplied by the computation, not stored).
class VectorPoly {
public:
  VectorPoly() = default;
  explicit VectorPoly(std::vector<MTerm> t) : t_(std::move(t)) {}

  const std::vector<MTerm>& terms() const { return t_; }
  std::vector<MTerm>& terms() { return t_; }
  bool is_zero() const { return t_.empty(); }
  const MTerm& lt() const {
    if (t_.empty()) throw DomainError("leading term of the zero vector");
    return t_[0];
  }

  std::int64_t degree(const FreeModule& F) const {
    std::int64_t d = -1;
    for (const auto& t : t_)
      d = std::max(d, t.m.degree(F.ring->weights()) + F.shifts[t.comp]);
    return d;
  }

  bool is_homogeneous(const FreeModule& F) const {
    if (t_.empty()) return true;
    std::int64_t d = t_[0].m.degree(F.ring->weights()) + F.shifts[t_[0].comp];
    for (const auto& t : t_)
      if (t.m.degree(F.ring->weights()) + F.shifts[t.comp] != d) return false;
    return true;
  }

private:
  std::vector<MTerm> t_;
};

// Normalizing constructor: sorts in the given order, merges, drops zeros.
VectorPoly mv_make(const Field& field, const ModuleOrder& ord, std::vector<MTerm> terms);
VectorPoly mv_add(const Field& field, const ModuleOrder& ord, const VectorPoly& a,
                  const VectorPoly& b);
// a - c * m * b  (component-preserving reduction primitive).
VectorPoly mv_axpy_sub(const Field& field, const ModuleOrder& ord, const VectorPoly& a,
                       const Scalar& c, const Monomial& m, const VectorPoly& b);
VectorPoly mv_scale(const Field& field, const VectorPoly& a, const Scalar& c);
VectorPoly mv_negate(const Field& field, const VectorPoly& a);
bool mv_equal(const Field& field, const VectorPoly& a, const VectorPoly& b);

// Embeds a ring element into component comp of a free module.
VectorPoly mv_from_poly(const Polynomial& f, int comp);
// Extracts component comp as a ring element.
Polynomial mv_component(const RingP& ring, const VectorPoly& v, int comp);
// Re-sorts v under a different order.
VectorPoly mv_reorder(const Field& field, const ModuleOrder& ord, const VectorPoly& v);

std::string mv_to_string(const RingP& ring, const VectorPoly& v);

}  // namespace chernlab

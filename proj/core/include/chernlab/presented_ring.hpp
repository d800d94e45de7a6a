#pragma once

#include <optional>
#include <vector>

#include "chernlab/groebner.hpp"

namespace chernlab {

class PresentedRing;
using PRingP = std::shared_ptr<const PresentedRing>;

// Quotient R = S/a of the ambient polynomial ring by a fixed ideal of
// relations, held as a reduced Groebner basis.  Elements of R are represented
// by their ambient normal forms; the distinguished maximal ideal is the image
// of (x_1..x_e).
class PresentedRing {
public:
  static PRingP polynomial_ring(RingP ambient);
  static PRingP quotient(RingP ambient, std::vector<Polynomial> relations);

  const RingP& ambient() const { return ambient_; }
  const GroebnerBasis& relations() const { return relations_; }
  bool is_polynomial_ring() const { return relations_.is_zero_ideal(); }
  bool is_trivial() const { return relations_.is_unit_ideal(); }

  Polynomial reduce(const Polynomial& f) const { return relations_.reduce(f); }
  bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }
  bool equal(const Polynomial& f, const Polynomial& g) const {
    return reduce(f - g).is_zero();
  }

  // Krull dimension of R (computed from the initial ideal of the relations).
  int dim() const;

  // Images of the ambient variables, i.e. generators of the maximal ideal.
  std::vector<Polynomial> variable_images() const;

private:
  PresentedRing(RingP ambient, GroebnerBasis rel)
      : ambient_(std::move(ambient)), relations_(std::move(rel)) {}
  RingP ambient_;
  GroebnerBasis relations_;
  mutable std::optional<int> dim_;
};

void require_same_presented_ring(const PRingP& a, const PRingP& b);

// Ideal of a presented ring, given by ambient representatives.  The full
// Groebner basis (of I + a in the ambient ring) is computed on construction.
class RingIdeal {
public:
  RingIdeal(PRingP ring, std::vector<Polynomial> gens);
  static RingIdeal zero(PRingP ring) { return RingIdeal(std::move(ring), {}); }
  static RingIdeal maximal(PRingP ring);

  const PRingP& ring() const { return ring_; }
  // Generators reduced modulo the relations, zeros dropped.
  const std::vector<Polynomial>& gens() const { return gens_; }
  // Reduced basis of I + a in the ambient ring.
  const GroebnerBasis& full_gb() const { return full_; }

  bool contains(const Polynomial& f) const { return full_.contains(f); }
  bool contains_ideal(const RingIdeal& o) const;
  bool same_ideal(const RingIdeal& o) const;
  bool is_zero_ideal() const;  // I = (0) in R
  bool is_unit_ideal() const { return full_.is_unit_ideal(); }

  // Krull dimension of R/I.
  int dim() const;

  // Finiteness and size of dim_k R/I.  length() throws PreconditionError
  // when the quotient is not finite dimensional.
  bool has_finite_colength() const;
  std::int64_t length() const;

  // True when I is proper and its radical is the maximal ideal, so that the
  // quotient is supported only at the origin and affine length equals the
  // local length.
  bool is_m_primary() const;

private:
  PRingP ring_;
  std::vector<Polynomial> gens_;
  GroebnerBasis full_;
};

RingIdeal ideal_from_strings(const PRingP& ring, const std::vector<std::string>& texts);

RingIdeal ideal_sum(const RingIdeal& a, const RingIdeal& b);
RingIdeal ideal_product(const RingIdeal& a, const RingIdeal& b);
RingIdeal ideal_power(const RingIdeal& a, int n);
RingIdeal ideal_colon(const RingIdeal& a, const Polynomial& f);
RingIdeal ideal_colon(const RingIdeal& a, const RingIdeal& b);
RingIdeal ideal_intersect(const RingIdeal& a, const RingIdeal& b);
RingIdeal ideal_saturation(const RingIdeal& a, const RingIdeal& b);

// Number of standard monomials of the initial ideal of gb, or nullopt when
// infinite.  Shared by length computations at ring and module level.
std::optional<std::int64_t> standard_monomial_count(const GroebnerBasis& gb);

// Ideal of c-by-c minors of the Jacobian matrix of the relations, with
// c = codim(a) = nvars - dim.  Used for smoothness and singular-locus checks.
RingIdeal jacobian_ideal(const PRingP& ring);

// Kernel of the ring map source -> target sending source variable i to
// images[i] (ambient representatives in target's ambient ring).  Returned as
// generators in the source ring.
std::vector<Polynomial> ring_map_kernel(const RingP& source, const PRingP& target,
                                        const std::vector<Polynomial>& images);

}  // namespace chernlab

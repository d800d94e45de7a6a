#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chernlab/field.hpp"
#include "chernlab/monomial.hpp"

namespace chernlab {

class PolyRing;
using RingP = std::shared_ptr<const PolyRing>;

// Ambient polynomial ring k[x_1..x_e]: coefficient field, named variables,
// positive grading weights and the active monomial order.  Shared immutably
// by everything built on top of it.
class PolyRing {
public:
  static RingP make(Field field, std::vector<std::string> names,
                    std::vector<int> weights = {},
                    MonomialOrder::Kind order_kind = MonomialOrder::Kind::grevlex,
                    int max_working_degree = kDefaultMaxWorkingDegree);
  static RingP make_with_order(Field field, std::vector<std::string> names,
                               std::vector<int> weights, MonomialOrder order,
                               int max_working_degree = kDefaultMaxWorkingDegree);

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int var_index(const std::string& name) const;  // -1 when absent
  const std::vector<int>& weights() const { return weights_; }
  const MonomialOrder& order() const { return order_; }
  int max_working_degree() const { return max_working_degree_; }

  // Structural compatibility: same field, variables, weights and order.
  bool compatible(const PolyRing& o) const;

  // Runaway-degree guard used by the basis engine.
  void check_degree(std::int64_t d) const;

  static constexpr int kDefaultMaxWorkingDegree = 60;

private:
  PolyRing(Field f, std::vector<std::string> n, std::vector<int> w, MonomialOrder o, int maxdeg)
      : field_(f), names_(std::move(n)), weights_(std::move(w)), order_(std::move(o)),
        max_working_degree_(maxdeg) {}
  Field field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  MonomialOrder order_;
  int max_working_degree_;
};

void require_same_ring(const RingP& a, const RingP& b);

struct Term {
  Scalar c;
  Monomial m;
};

// Sparse polynomial: term list kept strictly decreasing in the ring's order.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingP ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingP ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingP ring, Scalar c);
  static Polynomial from_int(RingP ring, long long n);
  static Polynomial variable(RingP ring, int i);
  static Polynomial from_monomial(RingP ring, Scalar c, Monomial m);
  // Normalizes: sorts, merges equal monomials, drops zero coefficients.
  static Polynomial from_terms(RingP ring, std::vector<Term> terms);

  const RingP& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int nterms() const { return static_cast<int>(t_.size()); }

  const Term& lt() const;
  const Monomial& lm() const { return lt().m; }
  const Scalar& lc() const { return lt().c; }

  // Maximum weighted degree over the terms; -1 for the zero polynomial.
  std::int64_t degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return t_.size() == 1; }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial negated() const;
  Polynomial scaled(const Scalar& c) const;
  // this - c * m * g, the reduction kernel primitive.
  Polynomial axpy_sub(const Scalar& c, const Monomial& m, const Polynomial& g) const;
  Polynomial mul_term(const Scalar& c, const Monomial& m) const;
  Polynomial monic() const;
  Polynomial derivative(int var) const;

  bool equals(const Polynomial& g) const;
  std::string to_string() const;

private:
  RingP ring_;
  std::vector<Term> t_;
};

Polynomial poly_pow(const Polynomial& f, int k);

// Moves f into `target` sending source variable i to target variable var_map[i].
Polynomial remap(const Polynomial& f, const RingP& target, const std::vector<int>& var_map);

// Substitutes images[i] (elements of the target ring) for variable i.
Polynomial substitute(const Polynomial& f, const RingP& target,
                      const std::vector<Polynomial>& images);

// Parses "3*x^2*y - 1/2*z" style text over the ring's variables; rational
// literals are only accepted over Q.  Column numbers in errors are 1-based;
// `line` seeds the reported line number.
Polynomial parse_polynomial(const RingP& ring, const std::string& text, int line = 1);

}  // namespace chernlab

#pragma once

#include <cstdint>
#include <vector>

#include "chernlab/errors.hpp"

namespace chernlab {

// Exponent vector of a monomial in a fixed set of variables.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::int32_t> e) : e_(std::move(e)) {}

  int nvars() const { return static_cast<int>(e_.size()); }
  std::int32_t operator[](int i) const { return e_[i]; }
  std::int32_t& operator[](int i) { return e_[i]; }
  const std::vector<std::int32_t>& exponents() const { return e_; }

  bool is_one() const {
    for (auto v : e_)
      if (v) return false;
    return true;
  }

  // Total degree weighted by per-variable grading weights.
  std::int64_t degree(const std::vector<int>& weights) const {
    std::int64_t d = 0;
    for (int i = 0; i < nvars(); ++i) d += static_cast<std::int64_t>(e_[i]) * weights[i];
    return d;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e_[i] += m.e_[i];
    return r;
  }

  // Componentwise quotient; caller guarantees divisibility.
  Monomial quotient_by(const Monomial& m) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) {
      r.e_[i] -= m.e_[i];
      if (r.e_[i] < 0) throw DomainError("monomial quotient of a non-divisor");
    }
    return r;
  }

  Monomial lcm(const Monomial& m) const {
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i)
      if (m.e_[i] > r.e_[i]) r.e_[i] = m.e_[i];
    return r;
  }

  bool coprime(const Monomial& m) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > 0 && m.e_[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& m) const { return e_ == m.e_; }
  bool operator!=(const Monomial& m) const { return !(e_ == m.e_); }

private:
  std::vector<std::int32_t> e_;
};

// Multiplicative well-order on monomials.  grevlex refines the weighted total
// degree; lex compares exponents left to right; a block order compares the
// leading variable block first (used for elimination).
class MonomialOrder {
public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder make_grevlex(std::vector<int> weights);
  static MonomialOrder make_lex(int nvars);
  // Eliminates the first `first_block` variables: monomials are compared by
  // weighted grevlex on that block first, ties by weighted grevlex on the rest.
  static MonomialOrder make_block_elimination(std::vector<int> weights, int first_block);

  Kind kind() const { return kind_; }
  int nvars() const { return static_cast<int>(weights_.size()); }
  const std::vector<int>& weights() const { return weights_; }
  int first_block() const { return first_block_; }

  // Returns +1 if a > b, 0 if equal, -1 if a < b.
  int compare(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && weights_ == o.weights_ && first_block_ == o.first_block_;
  }

private:
  MonomialOrder(Kind k, std::vector<int> w, int fb)
      : kind_(k), weights_(std::move(w)), first_block_(fb) {}
  Kind kind_;
  std::vector<int> weights_;
  int first_block_ = 0;
};

}  // namespace chernlab

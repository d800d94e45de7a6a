#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "chernlab/errors.hpp"

namespace chernlab {

enum class FieldKind { prime_field, rationals };

// Value in the active coefficient field.  The live member is decided by the
// Field that created it: `fp` holds the reduced representative in [0, p) for
// a prime field, `rat` holds the exact value over the rationals.
struct Scalar {
  std::uint64_t fp = 0;
  mpq_class rat;
};

// Coefficient field descriptor: F_p for a word-sized prime, or Q with exact
// arbitrary-precision arithmetic.  All scalar arithmetic goes through the
// field so the two representations never mix.
class Field {
public:
  static Field prime(std::uint32_t p);
  static Field rationals();

  FieldKind kind() const { return kind_; }
  std::uint32_t prime_modulus() const { return p_; }
  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  // Exact a/b; in a prime field this is a * b^-1 mod p.
  Scalar from_fraction(long long num, long long den) const;
  Scalar from_mpq(const mpq_class& q) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;

  // Canonical text form: decimal representative for F_p, num or num/den for Q.
  std::string to_string(const Scalar& a) const;

private:
  Field(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint32_t p_;
};

// Default prime used across the lab when no field is specified.
inline constexpr std::uint32_t kDefaultPrime = 32003;

}  // namespace chernlab

#include "chernlab/field.hpp"

namespace chernlab {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
  while (newr != 0) {
    long long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw DomainError("scalar is not invertible");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<long long>(p) : t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime_u32(p)) throw DomainError("field characteristic must be prime");
  return Field(FieldKind::prime_field, p);
}

Field Field::rationals() { return Field(FieldKind::rationals, 0); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
  Scalar s;
  if (kind_ == FieldKind::prime_field) {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    s.fp = static_cast<std::uint64_t>(r);
  } else {
    s.rat = mpq_class(static_cast<long>(n));
  }
  return s;
}

Scalar Field::from_fraction(long long num, long long den) const {
  if (den == 0) throw DomainError("zero denominator");
  if (kind_ == FieldKind::prime_field) return div(from_int(num), from_int(den));
  Scalar s;
  s.rat = mpq_class(static_cast<long>(num), static_cast<long>(den));
  s.rat.canonicalize();
  return s;
}

Scalar Field::from_mpq(const mpq_class& q) const {
  if (kind_ != FieldKind::rationals)
    throw DomainError("rational literal in a prime-field context");
  Scalar s;
  s.rat = q;
  s.rat.canonicalize();
  return s;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (kind_ == FieldKind::prime_field) {
    s.fp = a.fp + b.fp;
    if (s.fp >= p_) s.fp -= p_;
  } else {
    s.rat = a.rat + b.rat;
  }
  return s;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (kind_ == FieldKind::prime_field) {
    s.fp = a.fp + p_ - b.fp;
    if (s.fp >= p_) s.fp -= p_;
  } else {
    s.rat = a.rat - b.rat;
  }
  return s;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (kind_ == FieldKind::prime_field) {
    s.fp = (a.fp * b.fp) % p_;
  } else {
    s.rat = a.rat * b.rat;
  }
  return s;
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::neg(const Scalar& a) const {
  Scalar s;
  if (kind_ == FieldKind::prime_field) {
    s.fp = a.fp == 0 ? 0 : p_ - a.fp;
  } else {
    s.rat = -a.rat;
  }
  return s;
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw DomainError("division by zero scalar");
  Scalar s;
  if (kind_ == FieldKind::prime_field) {
    s.fp = inv_mod(a.fp, p_);
  } else {
    s.rat = 1 / a.rat;
  }
  return s;
}

bool Field::is_zero(const Scalar& a) const {
  return kind_ == FieldKind::prime_field ? a.fp == 0 : a.rat == 0;
}

bool Field::is_one(const Scalar& a) const {
  return kind_ == FieldKind::prime_field ? a.fp == 1 : a.rat == 1;
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
  return kind_ == FieldKind::prime_field ? a.fp == b.fp : a.rat == b.rat;
}

std::string Field::to_string(const Scalar& a) const {
  if (kind_ == FieldKind::prime_field) return std::to_string(a.fp);
  return a.rat.get_str();
}

}  // namespace chernlab

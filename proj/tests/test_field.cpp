#include "doctest.h"
#include "helpers.hpp"

using namespace chernlab;

namespace {

void check_axioms(const Field& k, std::mt19937_64& rng, int rounds) {
  std::uniform_int_distribution<long long> d(-1000, 1000);
  for (int i = 0; i < rounds; ++i) {
    Scalar a = k.from_int(d(rng)), b = k.from_int(d(rng)), c = k.from_int(d(rng));
    CHECK(k.equal(k.add(a, b), k.add(b, a)));
    CHECK(k.equal(k.mul(a, b), k.mul(b, a)));
    CHECK(k.equal(k.add(k.add(a, b), c), k.add(a, k.add(b, c))));
    CHECK(k.equal(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c))));
    CHECK(k.equal(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c))));
    CHECK(k.equal(k.add(a, k.zero()), a));
    CHECK(k.equal(k.mul(a, k.one()), a));
    CHECK(k.is_zero(k.add(a, k.neg(a))));
    CHECK(k.equal(k.sub(a, b), k.add(a, k.neg(b))));
    if (!k.is_zero(b)) {
      CHECK(k.is_one(k.mul(b, k.inv(b))));
      CHECK(k.equal(k.mul(k.div(a, b), b), a));
    }
  }
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("prime field axioms hold on random values") {
    std::mt19937_64 rng(101);
    Field k = Field::prime(kDefaultPrime);
    check_axioms(k, rng, 4000);
    Field small = Field::prime(5);
    check_axioms(small, rng, 2000);
  }

  TEST_CASE("rational field axioms hold on random values") {
    std::mt19937_64 rng(102);
    Field k = Field::rationals();
    check_axioms(k, rng, 4000);
    Scalar half = k.from_fraction(1, 2);
    CHECK(k.is_one(k.add(half, half)));
    CHECK(k.to_string(half) == "1/2");
    CHECK(k.to_string(k.from_int(-3)) == "-3");
  }

  TEST_CASE("characteristic and representatives") {
    Field k = Field::prime(7);
    Scalar s = k.zero();
    for (int i = 0; i < 7; ++i) s = k.add(s, k.one());
    CHECK(k.is_zero(s));
    CHECK(k.to_string(k.from_int(-1)) == "6");
    CHECK(k.equal(k.from_fraction(1, 3), k.from_int(5)));  // 3*5 = 15 = 1 mod 7
  }

  TEST_CASE("division by zero is rejected") {
    for (const Field& k : {Field::prime(kDefaultPrime), Field::rationals()}) {
      CHECK_THROWS_AS((void)k.inv(k.zero()), DomainError);
      CHECK_THROWS_AS((void)k.div(k.one(), k.zero()), DomainError);
    }
  }

  TEST_CASE("mpq round-trip over the rationals") {
    Field k = Field::rationals();
    mpq_class q(22, 7);
    CHECK(k.to_string(k.from_mpq(q)) == "22/7");
  }
}

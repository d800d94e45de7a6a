#include <map>

#include "doctest.h"
#include "helpers.hpp"

using namespace chernlab;
using namespace chernlab::testing;

namespace {

// Order-free model of polynomial arithmetic: exponent vector -> coefficient.
using Model = std::map<std::vector<std::int32_t>, Scalar>;

Model to_model(const Polynomial& f) {
  Model m;
  for (const auto& t : f.terms()) m[t.m.exponents()] = t.c;
  return m;
}

Model model_add(const Field& k, const Model& a, const Model& b) {
  Model r = a;
  for (const auto& [e, c] : b) {
    auto it = r.find(e);
    if (it == r.end())
      r[e] = c;
    else {
      it->second = k.add(it->second, c);
      if (k.is_zero(it->second)) r.erase(it);
    }
  }
  return r;
}

Model model_mul(const Field& k, const Model& a, const Model& b) {
  Model r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<std::int32_t> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Scalar c = k.mul(ca, cb);
      auto it = r.find(e);
      if (it == r.end())
        r[e] = c;
      else {
        it->second = k.add(it->second, c);
        if (k.is_zero(it->second)) r.erase(it);
      }
    }
  return r;
}

bool model_equal(const Field& k, const Model& a, const Model& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [e, c] : a) {
    auto it = b.find(e);
    if (it == b.end() || !k.equal(c, it->second)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("grevlex is a multiplicative total order with 1 minimal") {
    std::mt19937_64 rng(201);
    for (const auto& weights :
         {std::vector<int>{1, 1, 1, 1}, std::vector<int>{1, 2, 1, 3}}) {
      MonomialOrder ord = MonomialOrder::make_grevlex(weights);
      for (int i = 0; i < 4000; ++i) {
        Monomial a = random_monomial(4, 6, rng);
        Monomial b = random_monomial(4, 6, rng);
        Monomial c = random_monomial(4, 6, rng);
        const int ab = ord.compare(a, b);
        CHECK(ord.compare(b, a) == -ab);
        CHECK((ab == 0) == (a == b));
        CHECK(ord.compare(a * c, b * c) == ab);
        if (ab >= 0 && ord.compare(b, c) >= 0) CHECK(ord.compare(a, c) >= 0);
        if (a.degree(weights) > b.degree(weights)) CHECK(ab == 1);
        if (!a.is_one()) CHECK(ord.compare(a, Monomial(4)) == 1);
      }
    }
  }

  TEST_CASE("lex and block elimination orders") {
    MonomialOrder lex = MonomialOrder::make_lex(2);
    Monomial x(2), yk(2);
    x[0] = 1;
    yk[1] = 9;
    CHECK(lex.compare(x, yk) == 1);

    MonomialOrder blk = MonomialOrder::make_block_elimination({1, 1, 1}, 1);
    Monomial t(3), rest(3);
    t[0] = 1;          // elimination block variable
    rest[1] = 5;
    rest[2] = 5;       // heavy but block-free
    CHECK(blk.compare(t, rest) == 1);
  }

  TEST_CASE("arithmetic agrees with an order-free model") {
    std::mt19937_64 rng(202);
    for (const Field& k : {Field::prime(kDefaultPrime), Field::rationals()}) {
      RingP S = PolyRing::make(k, {"x", "y", "z"});
      for (int i = 0; i < 300; ++i) {
        Polynomial f = random_polynomial(S, 5, 6, rng);
        Polynomial g = random_polynomial(S, 5, 6, rng);
        CHECK(model_equal(k, to_model(f + g), model_add(k, to_model(f), to_model(g))));
        CHECK(model_equal(k, to_model(f * g), model_mul(k, to_model(f), to_model(g))));
        CHECK((f - g + g).equals(f));
        CHECK((f * (g + g)).equals(f * g + f * g));
        CHECK(poly_pow(f, 3).equals(f * f * f));
        if (!f.is_zero()) CHECK(k.is_one(f.monic().lc()));
      }
    }
  }

  TEST_CASE("derivative satisfies the product rule") {
    std::mt19937_64 rng(203);
    RingP S = fp_ring({"x", "y"});
    for (int i = 0; i < 200; ++i) {
      Polynomial f = random_polynomial(S, 4, 4, rng);
      Polynomial g = random_polynomial(S, 4, 4, rng);
      for (int v = 0; v < 2; ++v)
        CHECK((f * g).derivative(v).equals(f.derivative(v) * g + f * g.derivative(v)));
    }
  }

  TEST_CASE("degree and homogeneity respect weights") {
    RingP S = fp_ring({"x", "y"}, {1, 2});
    CHECK(pp(S, "x^2*y").degree() == 4);
    CHECK(pp(S, "x^2 + y").is_homogeneous());
    CHECK(!pp(S, "x + y").is_homogeneous());
    CHECK(Polynomial::zero(S).degree() == -1);
  }

  TEST_CASE("parse and print round-trip") {
    std::mt19937_64 rng(204);
    for (const Field& k : {Field::prime(kDefaultPrime), Field::rationals()}) {
      RingP S = PolyRing::make(k, {"x", "y", "z"});
      for (int i = 0; i < 200; ++i) {
        Polynomial f = random_polynomial(S, 5, 5, rng);
        CHECK(parse_polynomial(S, f.to_string()).equals(f));
      }
    }
    RingP Q = qq_ring({"x", "y"});
    CHECK(pp(Q, "1/2*x - 3/4*y + 2").to_string() == "1/2*x - 3/4*y + 2");
  }

  TEST_CASE("parser rejects bad input with positions") {
    RingP S = fp_ring({"x", "y"});
    CHECK_THROWS_AS((void)pp(S, "x + w"), ParseError);
    CHECK_THROWS_AS((void)pp(S, "x ^"), ParseError);
    CHECK_THROWS_AS((void)pp(S, "1/2*x"), ParseError);  // rational literal over F_p
    try {
      (void)parse_polynomial(S, "x + $", 7);
      CHECK(false);
    } catch (const ParseError& e) {
      CHECK(e.line() == 7);
      CHECK(e.column() == 5);
    }
  }

  TEST_CASE("substitute and remap act as ring maps") {
    RingP S = fp_ring({"a", "b"});
    RingP T = fp_ring({"x", "y"});
    Polynomial f = pp(S, "a^2 + 3*a*b");
    Polynomial g = substitute(f, T, {pp(T, "x + y"), pp(T, "y")});
    CHECK(g.equals(pp(T, "(x + y)^2 + 3*(x + y)*y")));
    Polynomial h = remap(f, T, {0, 1});
    CHECK(h.equals(pp(T, "x^2 + 3*x*y")));
  }
}

#include <cstdint>
#include <random>
#include <vector>

#include "chernlab/degrees.hpp"
#include "chernlab/lab.hpp"
#include "chernlab/modules.hpp"
#include "chernlab/presented_ring.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace chernlab;
using namespace chernlab::testing;

namespace {

PRingP z_ring() {
  RingP A = fp_ring({"x", "y", "z"});
  return quot(A, {"x*z", "y*z", "z^2"});
}

}  // namespace

TEST_SUITE("degrees") {
  TEST_CASE("Cohen-Macaulay rings have hdeg equal to deg") {
    PRingP S = PresentedRing::polynomial_ring(fp_ring({"x", "y"}));
    CHECK(ring_depth(S) == 2);
    CHECK(is_cm_ring(S));
    CHECK(hdeg_ring(S) == 1);
    DegreeReport rep = hdeg_report(PModule::ring_quotient(S));
    CHECK(!rep.relative);
    CHECK(rep.deg == 1);
    CHECK(rep.hdeg == 1);
    CHECK(rep.root.ext.empty());

    RingP A = fp_ring({"x", "y", "z"});
    PRingP W = quot(A, {"x^2*y - z^2"});
    CHECK(ring_depth(W) == 2);
    CHECK(is_cm_ring(W));
    DegreeReport wrep = hdeg_report(PModule::ring_quotient(W));
    CHECK(wrep.deg == 2);
    CHECK(wrep.hdeg == 2);
    CHECK(wrep.root.ext.empty());
  }

  TEST_CASE("z-ring hdeg exceeds deg by the finite part") {
    PRingP Z = z_ring();
    CHECK(ring_depth(Z) == 0);
    CHECK(!is_cm_ring(Z));
    DegreeReport rep = hdeg_report(PModule::ring_quotient(Z));
    CHECK(rep.deg == 1);
    CHECK(rep.hdeg == 2);
    CHECK(!rep.root.ext.empty());
    CHECK(hdeg_ring(Z) == 2);

    RingIdeal J = ideal_in(Z, {"x", "y"});
    CHECK(hdeg_ring(Z, J) == 2);
  }

  TEST_CASE("z-ring cohomology below the top is finite") {
    PRingP Z = z_ring();
    auto below = below_top_cohomology(Z);
    REQUIRE(below.has_value());
    REQUIRE(below->size() == 2);
    CHECK((*below)[0] == 1);
    CHECK((*below)[1] == 0);
    CHECK(is_generalized_cm(Z));
    auto T = t_invariant(Z);
    REQUIRE(T.has_value());
    CHECK(*T == 0);
  }

  TEST_CASE("hdeg additivity over the finite part on the z-ring") {
    PRingP Z = z_ring();
    PModule M = PModule::ring_quotient(Z);
    CHECK(h0_length(M) == 1);
    PModule N = PModule::quotient_by(ideal_in(Z, {"z"}));
    CHECK(hdeg_value(N) == 1);
    CHECK(hdeg_value(M) == hdeg_value(N) + h0_length(M));
  }

  TEST_CASE("hdeg additivity on random modules with embedded parts") {
    PRingP S = PresentedRing::polynomial_ring(fp_ring({"x", "y", "z"}));
    RingIdeal mx = RingIdeal::maximal(S);
    std::mt19937_64 rng(801);
    for (int t = 0; t < 6; ++t) {
      Monomial mono = random_monomial(3, 2, rng);
      Polynomial f =
          Polynomial::from_monomial(S->ambient(), S->ambient()->field().one(), mono);
      if (f.is_constant()) f = pp(S->ambient(), "x");
      int k = static_cast<int>(f.degree()) + 1;
      RingIdeal I = ideal_intersect(RingIdeal(S, {f}), ideal_power(mx, k));
      PModule M = PModule::quotient_by(I);
      PModule N = PModule::quotient_by(ideal_saturation(I, mx));
      std::int64_t h0 = h0_length(M);
      CHECK(h0 > 0);
      CHECK(hdeg_value(M) == hdeg_value(N) + h0);
      DegreeReport mrep = hdeg_report(M);
      CHECK(mrep.hdeg >= mrep.deg);
      CHECK((mrep.hdeg == mrep.deg) == mrep.root.ext.empty());
    }
  }

  TEST_CASE("embedded primary components destroy the CM property") {
    PRingP S = PresentedRing::polynomial_ring(fp_ring({"x", "y", "z"}));
    RingIdeal mx = RingIdeal::maximal(S);
    RingIdeal I = ideal_intersect(ideal_in(S, {"x"}), ideal_power(mx, 2));
    CHECK(!is_cm_module(PModule::quotient_by(I)));
    CHECK(is_cm_module(PModule::quotient_by(ideal_in(S, {"x"}))));
  }

  TEST_CASE("idealization instance is not generalized CM") {
    LabInstance inst = build_lab_instance("idealization-1");
    CHECK(ring_depth(inst.ring) == 2);
    CHECK(!is_generalized_cm(inst.ring));
    CHECK(!below_top_cohomology(inst.ring).has_value());
    CHECK(!t_invariant(inst.ring).has_value());
  }

  TEST_CASE("Buchsbaum rational instance has T equal to one") {
    LabInstance inst = build_lab_instance("buchsbaum-rational");
    CHECK(ring_depth(inst.ring) == 1);
    auto below = below_top_cohomology(inst.ring);
    REQUIRE(below.has_value());
    REQUIRE(below->size() == 2);
    CHECK((*below)[0] == 0);
    CHECK((*below)[1] == 1);
    auto T = t_invariant(inst.ring);
    REQUIRE(T.has_value());
    CHECK(*T == 1);
  }
}

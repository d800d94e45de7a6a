#include "doctest.h"
#include "helpers.hpp"

using namespace chernlab;
using namespace chernlab::testing;

namespace {

std::int64_t e0_of(const RingIdeal& J) {
  return chern_coefficients(GoodFiltration::adic(J)).e[0];
}

std::int64_t e1_of(const RingIdeal& J) {
  return chern_coefficients(GoodFiltration::adic(J)).e[1];
}

}  // namespace

TEST_SUITE("koszul") {
  TEST_CASE("z-ring parameter ideal anchors") {
    RingP A = fp_ring({"x", "y", "z"});
    PRingP Z = quot(A, {"x*z", "y*z", "z^2"});
    RingIdeal J = ideal_in(Z, {"x", "y"});
    auto h = koszul_homology_lengths(J);
    REQUIRE(h.size() == 3);
    CHECK(h[0] == 2);
    CHECK(h[1] == 2);
    CHECK(h[2] == 1);
    CHECK(koszul_chi(h) == 1);
    CHECK(koszul_chi(h) == e0_of(J));
    CHECK(koszul_correction(h) == 1);
    CHECK(h[0] - koszul_correction(h) == e0_of(J));
    CHECK(is_d_sequence(Z, J.gens()));
    CHECK(koszul_e1(h) == 0);
    CHECK(koszul_e1(h) == e1_of(J));
  }

  TEST_CASE("regular sequences have trivial higher homology") {
    RingP A = fp_ring({"x", "y"});
    PRingP S = PresentedRing::polynomial_ring(A);
    RingIdeal m = RingIdeal::maximal(S);
    auto h = koszul_homology_lengths(m);
    CHECK(h == std::vector<std::int64_t>{1, 0, 0});
    CHECK(is_d_sequence(S, m.gens()));

    RingP A3 = fp_ring({"x", "y", "z"});
    PRingP W = quot(A3, {"x^2*y - z^2"});
    RingIdeal J = ideal_in(W, {"x", "y"});
    auto hw = koszul_homology_lengths(J);
    CHECK(hw == std::vector<std::int64_t>{2, 0, 0});
    CHECK(koszul_chi(hw) == 2);
    CHECK(koszul_chi(hw) == e0_of(J));
    CHECK(is_d_sequence(W, J.gens()));
    CHECK(koszul_e1(hw) == 0);
    CHECK(koszul_e1(hw) == e1_of(J));
  }

  TEST_CASE("non-parameter input is rejected") {
    RingP A = fp_ring({"x", "y", "z"});
    PRingP Z = quot(A, {"x*z", "y*z", "z^2"});
    // Wrong generator count is a shape error; right count but not m-primary
    // violates the precondition.
    CHECK_THROWS_AS((void)koszul_homology_lengths(RingIdeal::maximal(Z)), DomainError);
    CHECK_THROWS_AS((void)koszul_homology_lengths(ideal_in(Z, {"x"})), DomainError);
    CHECK_THROWS_AS((void)koszul_homology_lengths(ideal_in(Z, {"x", "x^2"})), PreconditionError);
  }

  TEST_CASE("serre identity on random parameter ideals") {
    RingP A2 = fp_ring({"x", "y"});
    RingP A3 = fp_ring({"x", "y", "z"});
    std::vector<PRingP> rings = {
        PresentedRing::polynomial_ring(A2),
        quot(A3, {"x*z", "y*z", "z^2"}),
        quot(A3, {"x^2*y - z^2"}),
    };
    int checked = 0;
    for (std::size_t r = 0; r < rings.size(); ++r) {
      const PRingP& R = rings[r];
      const bool cm = is_cm_ring(R);
      for (int t = 0; t < 4; ++t) {
        ReductionCandidate cand =
            minimal_reduction_candidate(R, RingIdeal::maximal(R), 7000 + 31 * t + r);
        auto h = koszul_homology_lengths(cand.J);
        const std::int64_t lam = cand.J.length();
        CHECK(koszul_chi(h) == e0_of(cand.J));
        CHECK(lam - koszul_correction(h) == e0_of(cand.J));
        if (cm)
          CHECK(koszul_correction(h) == 0);
        else
          CHECK(koszul_correction(h) > 0);
        if (is_d_sequence(R, cand.J.gens())) CHECK(koszul_e1(h) == e1_of(cand.J));
        ++checked;
      }
    }
    CHECK(checked == 12);
  }

  TEST_CASE("d-sequence detection rejects a non-example") {
    RingP A2 = fp_ring({"x", "y"});
    PRingP S = PresentedRing::polynomial_ring(A2);
    CHECK(is_d_sequence(S, {pp(A2, "x^2"), pp(A2, "y")}));

    // In the z-ring, (0 : z) = m but (0 : z^2) = (1): the colon jumps.
    RingP A = fp_ring({"x", "y", "z"});
    PRingP Z = quot(A, {"x*z", "y*z", "z^2"});
    CHECK(!is_d_sequence(Z, {pp(A, "z")}));
  }
}

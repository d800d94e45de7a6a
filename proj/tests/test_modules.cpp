#include "doctest.h"
#include "helpers.hpp"

using namespace chernlab;
using namespace chernlab::testing;

TEST_SUITE("modules") {
  TEST_CASE("cyclic module lengths match ideal colengths") {
    std::mt19937_64 rng(601);
    RingP A = fp_ring({"x", "y", "z"});
    PRingP S = PresentedRing::polynomial_ring(A);
    for (int trial = 0; trial < 6; ++trial) {
      RingIdeal I = monomials_to_ideal(S, random_mprimary_monomials(3, 3, 1, rng));
      PModule M = PModule::quotient_by(I);
      CHECK(M.has_finite_length());
      CHECK(M.length() == I.length());
      CHECK(M.dim() == 0);
    }
  }

  TEST_CASE("quotient by ideal and h0 anchors") {
    RingP A = fp_ring({"x", "y", "z"});
    PRingP Z = quot(A, {"x*z", "y*z", "z^2"});
    PModule M = PModule::ring_quotient(Z);
    CHECK(M.dim() == 2);
    CHECK(!M.has_finite_length());
    CHECK(h0_length(M) == 1);  // socle element z

    PRingP W = quot(A, {"x^2*y - z^2"});
    CHECK(h0_length(PModule::ring_quotient(W)) == 0);

    RingIdeal J = ideal_in(Z, {"x", "y"});
    PModule Q = M.quotient_by_ideal(J);
    CHECK(Q.has_finite_length());
    CHECK(Q.length() == 2);  // k[z]/(z^2)
  }

  TEST_CASE("module multiplicities agree with the filtration coefficients") {
    RingP A = fp_ring({"x", "y"});
    PRingP S = PresentedRing::polynomial_ring(A);
    RingIdeal m2 = ideal_in(S, {"x^2", "x*y", "y^2"});
    PModule M = PModule::ring_quotient(S);
    CHECK(module_multiplicity(M, m2) == 4);
    CHECK(module_degree(M) == 1);

    RingP A3 = fp_ring({"x", "y", "z"});
    PRingP Z = quot(A3, {"x*z", "y*z", "z^2"});
    CHECK(module_degree(PModule::ring_quotient(Z)) == 1);

    HilbertSamuelTable t = module_hs_table(M, m2, 4);
    GoodFiltration F = GoodFiltration::adic(m2);
    HilbertSamuelTable t2 = hs_table(F, 4);
    CHECK(t.lengths == t2.lengths);
  }

  TEST_CASE("koszul resolution of the maximal ideal") {
    RingP A = fp_ring({"x", "y", "z"});
    PRingP S = PresentedRing::polynomial_ring(A);
    PModule k = PModule::quotient_by(RingIdeal::maximal(S));
    FreeResolution res = free_resolution(k, true);
    REQUIRE(res.length() == 3);
    CHECK(res.frees[0].rank() == 1);
    CHECK(res.frees[1].rank() == 3);
    CHECK(res.frees[2].rank() == 3);
    CHECK(res.frees[3].rank() == 1);
    CHECK(res.graded);
    CHECK(res.minimal);
    CHECK(resolution_is_complex(res));
    CHECK(!resolution_has_unit_entry(res));
    CHECK(projective_dimension(k) == 3);
    CHECK(module_depth(k) == 0);
  }

  TEST_CASE("z-ring resolution anchors") {
    RingP A = fp_ring({"x", "y", "z"});
    PRingP Z = quot(A, {"x*z", "y*z", "z^2"});
    PModule M = PModule::ring_quotient(Z);
    FreeResolution res = free_resolution(M, true);
    REQUIRE(res.length() == 3);
    CHECK(res.frees[0].rank() == 1);
    CHECK(res.frees[1].rank() == 3);
    CHECK(res.frees[2].rank() == 3);
    CHECK(res.frees[3].rank() == 1);
    CHECK(resolution_is_complex(res));
    CHECK(!resolution_has_unit_entry(res));
    CHECK(projective_dimension(M) == 3);
    CHECK(module_depth(M) == 0);
  }

  TEST_CASE("hypersurfaces have length-one resolutions") {
    RingP A = fp_ring({"x", "y", "z"});
    PRingP W = quot(A, {"x^2*y - z^2"});
    PModule M = PModule::ring_quotient(W);
    FreeResolution res = free_resolution(M, true);
    CHECK(res.length() == 1);
    CHECK(res.frees[1].rank() == 1);
    CHECK(projective_dimension(M) == 1);
    CHECK(module_depth(M) == 2);
  }

  TEST_CASE("minimization is a correct chain homotopy equivalence") {
    std::mt19937_64 rng(602);
    RingP A = fp_ring({"x", "y", "z"});
    PRingP S = PresentedRing::polynomial_ring(A);
    for (int trial = 0; trial < 8; ++trial) {
      RingIdeal I = monomials_to_ideal(S, random_mprimary_monomials(3, 3, 2, rng));
      PModule M = PModule::quotient_by(I);
      FreeResolution raw = free_resolution(M, false);
      FreeResolution res = free_resolution(M, true);
      CHECK(resolution_is_complex(raw));
      CHECK(resolution_is_complex(res));
      CHECK(!resolution_has_unit_entry(res));
      CHECK(res.length() <= raw.length());
      CHECK(res.length() == projective_dimension(M));
      // Betti_1 of S/I is the number of minimal monomial generators.
      CHECK(res.frees[1].rank() ==
            static_cast<int>(MonomialIdeal::from_ideal(I)->gens.size()));
      // Finite length forces the Euler characteristic to vanish.
      std::int64_t chi = 0;
      for (std::size_t i = 0; i < res.frees.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * res.frees[i].rank();
      CHECK(chi == 0);
      // Auslander-Buchsbaum for zero-dimensional modules.
      CHECK(module_depth(M) == 0);
      CHECK(res.length() == 3);
    }
  }

  TEST_CASE("minimization handles pivots that interact upstream") {
    // Quotient of a rank-2 free module shaped so the Schreyer chain carries a
    // unit pivot whose column supports a nonzero entry of the following map.
    RingP A = fp_ring({"x", "y", "z"});
    PRingP S = PresentedRing::polynomial_ring(A);
    std::vector<VectorPoly> agens = {mv_from_poly(pp(A, "1"), 0), mv_from_poly(pp(A, "1"), 1)};
    std::vector<VectorPoly> bgens;
    MOrdP top = ModuleOrder::top(A->order());
    const Field& k = A->field();
    // Relations (x, y), (y, z), (z, 0), (0, x*z) between the two generators.
    auto pair = [&](const char* f, const char* g) {
      return mv_add(k, *top, mv_from_poly(pp(A, f), 0), mv_from_poly(pp(A, g), 1));
    };
    bgens.push_back(pair("x", "y"));
    bgens.push_back(pair("y", "z"));
    bgens.push_back(pair("z", "0"));
    bgens.push_back(pair("0", "x*z"));
    PModule M = PModule::subquotient(FreeModule::standard(A, 2), agens, bgens);
    FreeResolution res = free_resolution(M, true);
    CHECK(resolution_is_complex(res));
    CHECK(!resolution_has_unit_entry(res));
    CHECK(res.length() == projective_dimension(M));
  }

  TEST_CASE("exactness of the resolution interior certified by kernels") {
    RingP A = fp_ring({"x", "y", "z"});
    PRingP Z = quot(A, {"x*z", "y*z", "z^2"});
    PModule M = PModule::ring_quotient(Z);
    FreeResolution res = free_resolution(M, true);
    MOrdP top = ModuleOrder::top(A->order());
    for (std::size_t i = 0; i + 1 < res.maps.size(); ++i) {
      auto ker = kernel_of_map(A, res.frees[i].rank(), res.maps[i], {});
      std::vector<VectorPoly> img_cols;
      for (const auto& w : res.maps[i + 1]) img_cols.push_back(mv_reorder(A->field(), *top, w));
      ModuleBasis img = module_buchberger(A, top, res.frees[i + 1].rank(), img_cols);
      for (const auto& v : ker) CHECK(module_contains(v, img));
    }
  }

  TEST_CASE("ext modules vanish below the codimension") {
    RingP A = fp_ring({"x", "y", "z"});
    PRingP Z = quot(A, {"x*z", "y*z", "z^2"});
    PModule M = PModule::ring_quotient(Z);  // dim 2, codim 1 over 3 variables
    CHECK(ext_module(M, 0).is_zero());
    for (int i = 1; i <= 3; ++i) {
      PModule E = ext_module(M, i);
      if (!E.is_zero()) CHECK(E.dim() <= 3 - i);
    }
    CHECK(ext_module(M, 3).length() == 1);  // dual of the socle H0
  }

  TEST_CASE("local cohomology lengths by duality") {
    RingP A = fp_ring({"x", "y", "z"});
    PRingP Z = quot(A, {"x*z", "y*z", "z^2"});
    PModule M = PModule::ring_quotient(Z);
    CHECK(local_cohomology_length(M, 0) == std::optional<std::int64_t>(1));
    CHECK(local_cohomology_length(M, 1) == std::optional<std::int64_t>(0));
    CHECK(!local_cohomology_length(M, 2).has_value());  // top cohomology has infinite length

    PRingP W = quot(A, {"x^2*y - z^2"});
    PModule N = PModule::ring_quotient(W);
    CHECK(local_cohomology_length(N, 0) == std::optional<std::int64_t>(0));
    CHECK(local_cohomology_length(N, 1) == std::optional<std::int64_t>(0));

    PModule K = PModule::quotient_by(RingIdeal::maximal(PresentedRing::polynomial_ring(A)));
    CHECK(local_cohomology_length(K, 0) == std::optional<std::int64_t>(1));
  }

  TEST_CASE("auslander-buchsbaum across a random batch") {
    std::mt19937_64 rng(603);
    RingP A = fp_ring({"x", "y", "z"});
    PRingP S = PresentedRing::polynomial_ring(A);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Monomial> gens;
      for (int i = 0; i < 3; ++i) gens.push_back(random_monomial(3, 3, rng));
      RingIdeal I = monomials_to_ideal(S, gens);
      if (I.is_unit_ideal() || I.is_zero_ideal()) continue;
      PModule M = PModule::quotient_by(I);
      FreeResolution res = free_resolution(M, true);
      CHECK(res.length() == projective_dimension(M));
      CHECK(module_depth(M) + projective_dimension(M) == 3);
      CHECK(resolution_is_complex(res));
      CHECK(!resolution_has_unit_entry(res));
    }
  }
}

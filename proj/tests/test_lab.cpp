#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chernlab/lab.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace chernlab;
using namespace chernlab::testing;

TEST_SUITE("lab") {
  TEST_CASE("instance catalog") {
    std::vector<std::string> basic = lab_instance_names(false);
    std::vector<std::string> expected = {"plane",         "whitney",       "z-ring",
                                         "idealization-1", "idealization-2", "idealization-3",
                                         "idealization-4", "buchsbaum-rational"};
    CHECK(basic == expected);
    std::vector<std::string> all = lab_instance_names(true);
    CHECK(all.size() == basic.size() + 1);
    CHECK(all.back() == "rees-cubic");
    for (const auto& n : basic) CHECK(build_lab_instance(n).name == n);
    CHECK_THROWS(build_lab_instance("no-such-instance"));
  }

  TEST_CASE("z-ring description is canonical") {
    LabInstance z = build_lab_instance("z-ring");
    CHECK(describe_presented_ring(z.ring) == "poly(x,y,z) / (x*z, y*z, z^2)");
    CHECK_THROWS(z.ideal("no-such-ideal"));
    CHECK_THROWS_AS(evaluate_expected_key(z, "no-such-key"), InternalError);
  }

  TEST_CASE("plane expectations reproduce") {
    for (const auto& c : check_expected_values(build_plane())) {
      CHECK_MESSAGE(c.ok, c.key, " expected ", c.expected, " got ", c.computed);
    }
  }

  TEST_CASE("whitney expectations reproduce") {
    for (const auto& c : check_expected_values(build_whitney())) {
      CHECK_MESSAGE(c.ok, c.key, " expected ", c.expected, " got ", c.computed);
    }
  }

  TEST_CASE("z-ring expectations reproduce") {
    for (const auto& c : check_expected_values(build_z_ring())) {
      CHECK_MESSAGE(c.ok, c.key, " expected ", c.expected, " got ", c.computed);
    }
  }

  TEST_CASE("idealization-1 expectations reproduce") {
    LabInstance inst = build_idealization_family(1);
    auto checks = check_expected_values(inst);
    CHECK(!checks.empty());
    std::set<std::string> sources;
    for (const auto& c : checks) {
      sources.insert(c.source);
      CHECK_MESSAGE(c.ok, c.key, " expected ", c.expected, " got ", c.computed);
    }
    CHECK(sources.count("reference") == 1);
  }

  TEST_CASE("buchsbaum rational expectations reproduce") {
    for (const auto& c : check_expected_values(build_buchsbaum_rc())) {
      CHECK_MESSAGE(c.ok, c.key, " expected ", c.expected, " got ", c.computed);
    }
  }
}

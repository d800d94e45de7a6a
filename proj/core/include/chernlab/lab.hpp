#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chernlab/degrees.hpp"
#include "chernlab/hilbert.hpp"

namespace chernlab {

// A value an instance is documented to have, re-derived by the engine at test
// time.  source is "reference" for values quoted from the literature and
// "derived" for values established by an independent computation.
struct ExpectedValue {
  std::string key;
  std::int64_t value = 0;
  std::string source;
};

struct NamedIdeal {
  std::string name;
  RingIdeal ideal;
  bool parameter = false;
};

struct InstanceFlags {
  bool domain = false;
  bool unmixed = false;
  bool buchsbaum = false;
  bool normal = false;
  bool expensive = false;
};

// A built-in worked example: a presented ring, its distinguished ideals and
// the values the library is expected to reproduce for them.
struct LabInstance {
  std::string name;
  PRingP ring;
  std::vector<NamedIdeal> ideals;
  InstanceFlags flags;
  std::optional<bool> expect_generalized_cm;
  // When set, a random parameter ideal is expected to have e1 < 0.
  bool experiment_negative_e1 = false;
  std::vector<ExpectedValue> expected;

  const RingIdeal& ideal(const std::string& name) const;
};

LabInstance build_idealization_family(int n);
LabInstance build_z_ring();
LabInstance build_buchsbaum_rc();
LabInstance build_rees_cubic();
LabInstance build_plane();
LabInstance build_whitney();

std::vector<std::string> lab_instance_names(bool include_expensive);
LabInstance build_lab_instance(const std::string& name);

// Recomputes one documented key ("dim", "depth", "h0", "h1", "hdeg", "gcm",
// "cm", "e<k>(<ideal>)", "e0bar(<ideal>)", "hdeg_I(<ideal>)",
// "colength(<ideal>)") from scratch.
std::int64_t evaluate_expected_key(const LabInstance& inst, const std::string& key);

struct ExpectationCheck {
  std::string key;
  std::int64_t expected = 0;
  std::int64_t computed = 0;
  std::string source;
  bool ok = false;
};

std::vector<ExpectationCheck> check_expected_values(const LabInstance& inst);

// Canonical one-line description, e.g. "poly(x,y,z) / (x*z, y*z, z^2)".
std::string describe_presented_ring(const PRingP& R);

}  // namespace chernlab

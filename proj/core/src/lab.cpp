#include "chernlab/lab.hpp"

#include <cctype>
#include <sstream>

#include "chernlab/modules.hpp"

namespace chernlab {

const RingIdeal& LabInstance::ideal(const std::string& n) const {
  for (const auto& entry : ideals)
    if (entry.name == n) return entry.ideal;
  throw DomainError("instance " + name + " has no ideal named " + n);
}

namespace {

PRingP quotient_from_strings(Field field, std::vector<std::string> vars,
                             const std::vector<std::string>& rels,
                             std::vector<int> weights = {}) {
  RingP S = PolyRing::make(field, std::move(vars), std::move(weights));
  std::vector<Polynomial> relations;
  relations.reserve(rels.size());
  for (const auto& text : rels) relations.push_back(parse_polynomial(S, text));
  if (relations.empty()) return PresentedRing::polynomial_ring(S);
  return PresentedRing::quotient(S, std::move(relations));
}

std::vector<Polynomial> parse_images(const PRingP& target, const std::vector<std::string>& texts) {
  std::vector<Polynomial> images;
  images.reserve(texts.size());
  for (const auto& text : texts) images.push_back(parse_polynomial(target->ambient(), text));
  return images;
}

}  // namespace

LabInstance build_idealization_family(int n) {
  if (n < 1) throw DomainError("idealization family needs n >= 1");
  LabInstance inst;
  inst.name = "idealization-" + std::to_string(n);
  inst.ring = quotient_from_strings(Field::prime(kDefaultPrime), {"x", "y", "z", "u", "v"},
                                    {"u^2", "u*v", "v^2", "y*u - x*v"});
  inst.ideals.push_back(
      {"J", ideal_from_strings(inst.ring, {"x", "y", "z^" + std::to_string(n)}), true});
  inst.flags.unmixed = true;
  inst.expect_generalized_cm = false;
  inst.expected = {
      {"dim", 3, "derived"},
      {"depth", 2, "derived"},
      {"e0(J)", 2 * n, "derived"},
      {"e1(J)", -n, "reference"},
      {"hdeg_I(J)", 3 * n, "derived"},
      {"gcm", 0, "derived"},
  };
  return inst;
}

LabInstance build_z_ring() {
  LabInstance inst;
  inst.name = "z-ring";
  inst.ring = quotient_from_strings(Field::prime(kDefaultPrime), {"x", "y", "z"},
                                    {"x*z", "y*z", "z^2"});
  inst.ideals.push_back({"m", RingIdeal::maximal(inst.ring), false});
  inst.ideals.push_back({"J", ideal_from_strings(inst.ring, {"x", "y"}), true});
  inst.flags.buchsbaum = true;
  inst.expect_generalized_cm = true;
  inst.expected = {
      {"dim", 2, "derived"},  {"depth", 0, "derived"}, {"e1(m)", 0, "reference"},
      {"h0", 1, "derived"},   {"h1", 0, "derived"},    {"hdeg", 2, "derived"},
      {"e0(J)", 1, "derived"}, {"e1(J)", 0, "derived"}, {"e2(J)", 1, "derived"},
      {"gcm", 1, "derived"},
  };
  return inst;
}

LabInstance build_buchsbaum_rc() {
  LabInstance inst;
  inst.name = "buchsbaum-rational";
  Field Q = Field::rationals();
  PRingP target = quotient_from_strings(Q, {"x", "y", "s"}, {"s^2 + 1"});
  RingP source = PolyRing::make(Q, {"a", "b", "c", "d"});
  auto kernel = ring_map_kernel(source, target, parse_images(target, {"x", "y", "s*x", "s*y"}));
  inst.ring = PresentedRing::quotient(source, std::move(kernel));
  inst.ideals.push_back({"J", ideal_from_strings(inst.ring, {"a", "b"}), true});
  inst.ideals.push_back({"m", RingIdeal::maximal(inst.ring), false});
  inst.flags.domain = true;
  inst.flags.unmixed = true;
  inst.flags.buchsbaum = true;
  inst.expect_generalized_cm = true;
  inst.expected = {
      {"dim", 2, "derived"},     {"depth", 1, "derived"}, {"e1(J)", -1, "reference"},
      {"e1(m)", 0, "reference"}, {"h1", 1, "derived"},    {"e0(J)", 2, "derived"},
      {"gcm", 1, "derived"},
  };
  return inst;
}

LabInstance build_rees_cubic() {
  LabInstance inst;
  inst.name = "rees-cubic";
  Field Q = Field::rationals();
  PRingP target = quotient_from_strings(Q, {"x", "y", "z", "t"}, {"x^3 + y^3 + z^3"});
  RingP source = PolyRing::make(Q, {"a", "b", "c", "T1", "T2", "T3"}, {1, 1, 1, 2, 2, 2});
  auto kernel = ring_map_kernel(
      source, target, parse_images(target, {"x", "y", "z", "x*t", "y*t", "z*t"}));
  inst.ring = PresentedRing::quotient(source, std::move(kernel));
  inst.ideals.push_back({"m", RingIdeal::maximal(inst.ring), false});
  inst.flags.domain = true;
  inst.flags.unmixed = true;
  inst.flags.normal = true;
  inst.flags.expensive = true;
  inst.experiment_negative_e1 = true;
  inst.expected = {
      {"dim", 3, "derived"},
      {"cm", 0, "reference"},
  };
  return inst;
}

LabInstance build_plane() {
  LabInstance inst;
  inst.name = "plane";
  inst.ring = quotient_from_strings(Field::prime(kDefaultPrime), {"x", "y"}, {});
  inst.ideals.push_back({"m", RingIdeal::maximal(inst.ring), true});
  inst.ideals.push_back({"m2", ideal_from_strings(inst.ring, {"x^2", "x*y", "y^2"}), false});
  inst.flags.domain = true;
  inst.flags.unmixed = true;
  inst.flags.buchsbaum = true;
  inst.expect_generalized_cm = true;
  inst.expected = {
      {"dim", 2, "derived"},    {"depth", 2, "derived"},  {"cm", 1, "derived"},
      {"hdeg", 1, "derived"},   {"e0(m)", 1, "derived"},  {"e1(m)", 0, "derived"},
      {"e2(m)", 0, "derived"},  {"e0(m2)", 4, "derived"}, {"e1(m2)", 1, "derived"},
      {"e2(m2)", 0, "derived"},
  };
  return inst;
}

LabInstance build_whitney() {
  LabInstance inst;
  inst.name = "whitney";
  inst.ring = quotient_from_strings(Field::prime(kDefaultPrime), {"x", "y", "z"},
                                    {"x^2*y - z^2"});
  inst.ideals.push_back({"m", RingIdeal::maximal(inst.ring), false});
  inst.ideals.push_back({"J", ideal_from_strings(inst.ring, {"x", "y"}), true});
  inst.flags.domain = true;
  inst.flags.unmixed = true;
  inst.flags.buchsbaum = true;
  inst.expect_generalized_cm = true;
  inst.expected = {
      {"dim", 2, "derived"},   {"depth", 2, "derived"}, {"cm", 1, "derived"},
      {"hdeg", 2, "derived"},  {"e0(m)", 2, "derived"}, {"e0(J)", 2, "derived"},
      {"e1(J)", 0, "derived"}, {"gcm", 1, "derived"},
  };
  return inst;
}

std::vector<std::string> lab_instance_names(bool include_expensive) {
  std::vector<std::string> names = {"plane",          "whitney",        "z-ring",
                                    "idealization-1", "idealization-2", "idealization-3",
                                    "idealization-4", "buchsbaum-rational"};
  if (include_expensive) names.push_back("rees-cubic");
  return names;
}

LabInstance build_lab_instance(const std::string& name) {
  if (name == "plane") return build_plane();
  if (name == "whitney") return build_whitney();
  if (name == "z-ring") return build_z_ring();
  if (name == "buchsbaum-rational") return build_buchsbaum_rc();
  if (name == "rees-cubic") return build_rees_cubic();
  if (name.rfind("idealization-", 0) == 0) {
    const std::string tail = name.substr(13);
    if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos)
      return build_idealization_family(std::stoi(tail));
  }
  throw DomainError("unknown lab instance: " + name);
}

std::int64_t evaluate_expected_key(const LabInstance& inst, const std::string& key) {
  const PRingP& R = inst.ring;
  if (key == "dim") return R->dim();
  if (key == "depth") return ring_depth(R);
  if (key == "h0") return h0_length(PModule::ring_quotient(R));
  if (key == "h1") {
    auto len = local_cohomology_length(PModule::ring_quotient(R), 1);
    if (!len) throw PreconditionError("H^1 of " + inst.name + " has infinite length");
    return *len;
  }
  if (key == "hdeg") return hdeg_ring(R);
  if (key == "gcm") return is_generalized_cm(R) ? 1 : 0;
  if (key == "cm") return is_cm_ring(R) ? 1 : 0;

  const auto open = key.find('(');
  if (open != std::string::npos && key.back() == ')') {
    const std::string head = key.substr(0, open);
    const std::string arg = key.substr(open + 1, key.size() - open - 2);
    const RingIdeal& I = inst.ideal(arg);
    if (head.size() == 2 && head[0] == 'e' && std::isdigit(static_cast<unsigned char>(head[1]))) {
      const int k = head[1] - '0';
      const auto cc = chern_coefficients(GoodFiltration::adic(I));
      if (k >= static_cast<int>(cc.e.size()))
        throw DomainError("no coefficient e" + std::to_string(k) + " in dimension " +
                          std::to_string(R->dim()));
      return cc.e[k];
    }
    if (head == "e0bar") return chern_coefficients(GoodFiltration::closure_powers(I)).e[0];
    if (head == "hdeg_I") return hdeg_ring(R, I);
    if (head == "colength") return I.length();
  }
  throw InternalError("unknown expected-value key: " + key);
}

std::vector<ExpectationCheck> check_expected_values(const LabInstance& inst) {
  std::vector<ExpectationCheck> checks;
  checks.reserve(inst.expected.size());
  for (const auto& ev : inst.expected) {
    ExpectationCheck c;
    c.key = ev.key;
    c.expected = ev.value;
    c.source = ev.source;
    c.computed = evaluate_expected_key(inst, ev.key);
    c.ok = c.computed == c.expected;
    checks.push_back(std::move(c));
  }
  return checks;
}

std::string describe_presented_ring(const PRingP& R) {
  const RingP& S = R->ambient();
  std::ostringstream out;
  out << "poly(";
  for (int i = 0; i < S->nvars(); ++i) out << (i ? "," : "") << S->name(i);
  out << ")";
  if (!R->is_polynomial_ring()) {
    out << " / (";
    const auto& rels = R->relations().elements();
    for (std::size_t i = 0; i < rels.size(); ++i)
      out << (i ? ", " : "") << rels[i].to_string();
    out << ")";
  }
  bool weighted = false;
  for (int w : S->weights())
    if (w != 1) weighted = true;
  if (weighted) {
    out << " weights ";
    for (std::size_t i = 0; i < S->weights().size(); ++i)
      out << (i ? "," : "") << S->weights()[i];
  }
  return out.str();
}

}  // namespace chernlab

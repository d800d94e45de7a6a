#include "chernlab/bounds.hpp"

#include <sstream>

namespace chernlab {

const char* to_string(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::holds: return "holds";
    case BoundVerdict::fails: return "fails";
    case BoundVerdict::hypotheses_not_met: return "hypotheses-not-met";
    case BoundVerdict::ingredient_unavailable: return "ingredient-unavailable";
  }
  return "?";
}

bool BoundReport::hypotheses_met() const {
  for (const auto& h : hypotheses)
    if (!h.satisfied) return false;
  return true;
}

namespace {

std::string i2s(std::int64_t v) { return std::to_string(v); }

void settle(BoundReport& rep, bool comparison) {
  if (!rep.hypotheses_met()) {
    rep.verdict = BoundVerdict::hypotheses_not_met;
    return;
  }
  if (!rep.lhs || !rep.rhs) {
    rep.verdict = BoundVerdict::ingredient_unavailable;
    return;
  }
  rep.verdict = comparison ? BoundVerdict::holds : BoundVerdict::fails;
}

int nilpotency_index(const PRingP& R, const RingIdeal& I) {
  RingIdeal m = RingIdeal::maximal(R);
  RingIdeal p = m;
  for (int r = 1;; ++r) {
    if (I.contains_ideal(p)) return r;
    p = ideal_product(p, m);
  }
}

}  // namespace

std::vector<BoundReport> bound_suite(const PRingP& R, const RingIdeal& I,
                                     const SuiteFlags& flags) {
  require_same_presented_ring(I.ring(), R);
  if (!I.is_m_primary()) throw PreconditionError("bound suite needs an m-primary ideal");

  const int d = R->dim();
  const auto coeffs = chern_coefficients(GoodFiltration::adic(I)).e;
  const std::int64_t e0 = coeffs[0];
  const std::int64_t e1 = d >= 1 ? coeffs[1] : 0;
  const std::int64_t colength = I.length();
  const bool parameter_shaped = static_cast<int>(I.gens().size()) == d && d >= 1;
  const bool cm = is_cm_ring(R);
  const auto T = t_invariant(R);
  const bool gcm = is_generalized_cm(R);

  PModule RM = PModule::ring_quotient(R);
  const std::int64_t degR = module_degree(RM);
  const std::int64_t hdeg_abs = hdeg_value(RM);
  const std::int64_t hdeg_rel = hdeg_value(RM, I);

  auto closure_e1 = [&]() -> std::optional<std::int64_t> {
    if (!R->is_polynomial_ring()) return std::nullopt;
    if (!MonomialIdeal::from_ideal(I)) return std::nullopt;
    return chern_coefficients(GoodFiltration::closure_powers(I)).e[1];
  }();

  auto reduction_e1 = [&]() -> std::optional<std::int64_t> {
    if (parameter_shaped) return e1;
    try {
      RingIdeal J = minimal_reduction_candidate(R, I, flags.seed + 2).J;
      return chern_coefficients(GoodFiltration::adic(J)).e[1];
    } catch (const GenericityError&) {
      return std::nullopt;
    }
  };

  std::vector<BoundReport> out;

  {
    BoundReport rep;
    rep.name = "northcott";
    rep.relation = "e1(I) >= e0(I) - lambda(R/I)";
    rep.hypotheses.push_back({"R is Cohen-Macaulay", cm});
    rep.lhs = e1;
    rep.rhs = e0 - colength;
    rep.data = {{"e0", i2s(e0)}, {"e1", i2s(e1)}, {"colength", i2s(colength)}};
    settle(rep, e1 >= e0 - colength);
    out.push_back(std::move(rep));
  }

  {
    BoundReport rep;
    rep.name = "generalized-cm-lower";
    rep.relation = flags.buchsbaum ? "e1(J) = -T(R)" : "e1(J) >= -T(R)";
    rep.hypotheses.push_back({"J is a parameter ideal (dim R generators)", parameter_shaped});
    rep.hypotheses.push_back({"R is generalized Cohen-Macaulay", gcm});
    if (flags.buchsbaum) rep.hypotheses.push_back({"R is Buchsbaum (instance flag)", true});
    rep.lhs = e1;
    if (T) {
      rep.rhs = -*T;
      rep.data.push_back({"T", i2s(*T)});
    }
    settle(rep, T && (flags.buchsbaum ? e1 == -*T : e1 >= -*T));
    out.push_back(std::move(rep));
  }

  {
    BoundReport rep;
    rep.name = "d-sequence-e1";
    rep.relation = "e1(J) = sum_{i>=1} (-1)^i i h_i(J)";
    rep.hypotheses.push_back({"J is a parameter ideal (dim R generators)", parameter_shaped});
    bool dseq = false;
    std::optional<std::int64_t> predicted;
    if (parameter_shaped) {
      dseq = is_d_sequence(R, I.gens());
      if (dseq) {
        auto h = koszul_homology_lengths(I);
        predicted = koszul_e1(h);
        std::ostringstream hs;
        for (std::size_t i = 0; i < h.size(); ++i) hs << (i ? "," : "") << h[i];
        rep.data.push_back({"h", hs.str()});
      }
    }
    rep.hypotheses.push_back({"generators form a d-sequence (colon criterion)", dseq});
    rep.lhs = e1;
    rep.rhs = predicted;
    settle(rep, predicted && e1 == *predicted);
    out.push_back(std::move(rep));
  }

  {
    BoundReport rep;
    rep.name = "lowere1";
    rep.relation = "e1(I) >= e0(I) - hdeg_I(R)";
    rep.hypotheses.push_back({"I is m-primary", true});
    rep.lhs = e1;
    rep.rhs = e0 - hdeg_rel;
    rep.data = {{"hdeg_I(R)", i2s(hdeg_rel)}};
    settle(rep, e1 >= e0 - hdeg_rel);
    out.push_back(std::move(rep));
  }

  {
    BoundReport rep;
    rep.name = "specialtor";
    rep.relation = "lambda(H0(R/(x))) <= hdeg(R), x a full superficial system";
    rep.hypotheses.push_back({"dim R >= 1", d >= 1});
    if (d >= 1) {
      try {
        ReductionOutcome o =
            random_superficial_reduction(R, RingIdeal::maximal(R), d, flags.seed + 3);
        rep.hypotheses.push_back({"reduction accepted (e0 certified)", true});
        rep.lhs = h0_length(PModule::ring_quotient(o.ring));
        rep.rhs = hdeg_abs;
        rep.data.push_back({"retries", i2s(o.retries)});
      } catch (const GenericityError& e) {
        rep.hypotheses.push_back({"reduction accepted (e0 certified)", false});
        rep.data.push_back({"error", e.what()});
      }
    }
    settle(rep, rep.lhs && rep.rhs && *rep.lhs <= *rep.rhs);
    out.push_back(std::move(rep));
  }

  {
    BoundReport rep;
    rep.name = "degreddim1";
    rep.relation = "lambda(H0(R/(x))) <= lambda(H0(R)) + T(R), x of length dim R - 1";
    rep.hypotheses.push_back({"dim R >= 2", d >= 2});
    rep.hypotheses.push_back({"R is generalized Cohen-Macaulay", gcm});
    if (d >= 2 && gcm) {
      try {
        ReductionOutcome o =
            random_superficial_reduction(R, RingIdeal::maximal(R), d - 1, flags.seed + 4);
        rep.hypotheses.push_back({"reduction accepted (e0 certified)", true});
        rep.lhs = h0_length(PModule::ring_quotient(o.ring));
        rep.rhs = h0_length(RM) + *T;
        rep.data.push_back({"lambda(H0(R))", i2s(h0_length(RM))});
        rep.data.push_back({"T", i2s(*T)});
      } catch (const GenericityError& e) {
        rep.hypotheses.push_back({"reduction accepted (e0 certified)", false});
        rep.data.push_back({"error", e.what()});
      }
    }
    settle(rep, rep.lhs && rep.rhs && *rep.lhs <= *rep.rhs);
    out.push_back(std::move(rep));
  }

  {
    BoundReport rep;
    rep.name = "boundtorsion";
    rep.relation = "hdeg_I(R/(x)) <= hdeg_I(R), x superficial in I";
    rep.hypotheses.push_back({"dim R >= 1", d >= 1});
    if (d >= 1) {
      const int r = d >= 2 ? d - 1 : 1;
      try {
        ReductionOutcome o = random_superficial_reduction(R, I, r, flags.seed + 5);
        rep.hypotheses.push_back({"reduction accepted (e0 certified)", true});
        RingIdeal Iq = o.image_ideal(I);
        PModule RqM = PModule::ring_quotient(o.ring);
        rep.lhs = hdeg_value(RqM, Iq);
        rep.rhs = hdeg_rel;
        bool ok = *rep.lhs <= *rep.rhs;
        if (r < d) {
          const std::int64_t torsion = h0_length(RqM);
          rep.data.push_back({"lambda(H0(R/(x)))", i2s(torsion)});
          rep.data.push_back({"hdeg_I(R) - e(I;R)", i2s(hdeg_rel - e0)});
          ok = ok && torsion <= hdeg_rel - e0;
        }
        settle(rep, ok);
        out.push_back(std::move(rep));
      } catch (const GenericityError& e) {
        rep.hypotheses.push_back({"reduction accepted (e0 certified)", false});
        rep.data.push_back({"error", e.what()});
        settle(rep, false);
        out.push_back(std::move(rep));
      }
    } else {
      settle(rep, false);
      out.push_back(std::move(rep));
    }
  }

  {
    BoundReport rep;
    rep.name = "hdeg-comparison";
    rep.relation = "hdeg_I(R) <= r^d deg(R) + r^{d-1} (hdeg(R) - deg(R)), m^r inside I";
    rep.hypotheses.push_back({"I is m-primary", true});
    const int r = nilpotency_index(R, I);
    std::int64_t rd = 1, rd1 = 1;
    for (int i = 0; i < d; ++i) rd *= r;
    for (int i = 0; i + 1 < d; ++i) rd1 *= r;
    rep.lhs = hdeg_rel;
    rep.rhs = rd * degR + rd1 * (hdeg_abs - degR);
    rep.data = {{"nilpotency-index", i2s(r)}, {"deg", i2s(degR)}, {"hdeg", i2s(hdeg_abs)}};
    settle(rep, *rep.lhs <= *rep.rhs);
    out.push_back(std::move(rep));
  }

  {
    BoundReport rep;
    rep.name = "briancon-skoda";
    rep.relation = "ebar1(I) - e1(J) <= (d + lambda(R/L) - 1) e0(I), L the Jacobian ideal";
    rep.hypotheses.push_back(
        {"I monomial in a polynomial ring (closure computable)", closure_e1.has_value()});
    if (closure_e1) {
      RingIdeal L = jacobian_ideal(R);
      const std::int64_t jac_colength = L.length();
      auto e1J = reduction_e1();
      rep.hypotheses.push_back({"minimal reduction candidate found", e1J.has_value()});
      if (e1J) {
        rep.lhs = *closure_e1 - *e1J;
        rep.rhs = (d + jac_colength - 1) * e0;
        rep.data = {{"ebar1", i2s(*closure_e1)},
                    {"e1(J)", i2s(*e1J)},
                    {"jacobian-colength", i2s(jac_colength)}};
      }
    }
    settle(rep, rep.lhs && rep.rhs && *rep.lhs <= *rep.rhs);
    out.push_back(std::move(rep));
  }

  {
    BoundReport rep;
    rep.name = "sally-rhs";
    rep.relation = "ebar1(I) - e0(I) - e1(J) + lambda(R/Ibar) >= 0";
    rep.hypotheses.push_back({"ambient ring regular (polynomial ring)", R->is_polynomial_ring()});
    rep.hypotheses.push_back(
        {"I monomial (closure computable)", closure_e1.has_value()});
    if (closure_e1) {
      auto e1J = reduction_e1();
      rep.hypotheses.push_back({"minimal reduction candidate found", e1J.has_value()});
      if (e1J) {
        const std::int64_t closure_colength = integral_closure_power(I, 1).length();
        rep.lhs = *closure_e1 - e0 - *e1J + closure_colength;
        rep.rhs = 0;
        rep.data = {{"ebar1", i2s(*closure_e1)},
                    {"e1(J)", i2s(*e1J)},
                    {"lambda(R/Ibar)", i2s(closure_colength)}};
      }
    }
    settle(rep, rep.lhs && rep.rhs && *rep.lhs >= *rep.rhs);
    out.push_back(std::move(rep));
  }

  {
    BoundReport rep;
    rep.name = "e1-tracking";
    rep.relation = "e1(adic) <= e1(closure filtration)";
    rep.hypotheses.push_back(
        {"I monomial in a polynomial ring (closure computable)", closure_e1.has_value()});
    rep.lhs = e1;
    if (closure_e1) {
      rep.rhs = *closure_e1;
      rep.data.push_back({"max-chain-length", i2s(*closure_e1 - e1)});
    }
    settle(rep, closure_e1 && e1 <= *closure_e1);
    out.push_back(std::move(rep));
  }

  return out;
}

ConjectureVerdict conjecture1_check(const PRingP& R, const RingIdeal& J, bool applicable,
                                    const std::string& instance) {
  require_same_presented_ring(J.ring(), R);
  const int d = R->dim();
  if (static_cast<int>(J.gens().size()) != d || !J.is_m_primary())
    throw PreconditionError("conjecture 1 takes a parameter ideal");
  const std::int64_t e1 = chern_coefficients(GoodFiltration::adic(J)).e[1];
  const bool cm = is_cm_ring(R);

  ConjectureVerdict v;
  v.id = 1;
  v.instance = instance;
  v.evidence = {{"e1(J)", std::to_string(e1)},
                {"cohen-macaulay", cm ? "true" : "false"},
                {"applicable (domain/unmixed flag)", applicable ? "true" : "false"}};
  if (!applicable)
    v.verdict = "inapplicable";
  else
    v.verdict = ((e1 < 0) == !cm) ? "consistent" : "inconsistent";
  return v;
}

ReductionExperiment reduction_e1_experiment(const PRingP& R, const RingIdeal& I, int trials,
                                            std::uint64_t seed) {
  ReductionExperiment ex;
  std::optional<std::int64_t> first;
  for (int t = 0; t < trials; ++t) {
    ReductionTrial trial;
    try {
      ReductionCandidate c = minimal_reduction_candidate(R, I, seed + 101 * t);
      trial.e = chern_coefficients(GoodFiltration::adic(c.J)).e;
      trial.retries = c.retries;
      if (!first)
        first = trial.e[1];
      else if (*first != trial.e[1])
        ex.all_agree = false;
    } catch (const GenericityError& e) {
      trial.failed = true;
      trial.error = e.what();
      ++ex.failures;
    }
    ex.trials.push_back(std::move(trial));
  }
  return ex;
}

}  // namespace chernlab

#include "chernlab/reductions.hpp"

namespace chernlab {

RingIdeal ReductionOutcome::image_ideal(const RingIdeal& I) const {
  require_same_presented_ring(I.ring(), original);
  return RingIdeal(ring, I.gens());
}

Polynomial random_combination(const std::vector<Polynomial>& gens, std::mt19937_64& rng) {
  if (gens.empty()) throw DomainError("random combination of an empty generator list");
  const RingP& S = gens[0].ring();
  const Field& field = S->field();
  Polynomial out = Polynomial::zero(S);
  for (const auto& g : gens) {
    Scalar c;
    if (field.kind() == FieldKind::prime_field) {
      std::uniform_int_distribution<std::uint64_t> pick(1, field.prime_modulus() - 1);
      c = field.from_int(static_cast<long long>(pick(rng)));
    } else {
      std::uniform_int_distribution<long long> pick(1, 1009);
      c = field.from_int(pick(rng));
    }
    out = out + g.scaled(c);
  }
  return out;
}

namespace {

std::vector<std::int64_t> adic_coefficients(const RingIdeal& I) {
  return chern_coefficients(GoodFiltration::adic(I)).e;
}

}  // namespace

ReductionOutcome random_superficial_reduction(const PRingP& R, const RingIdeal& I, int count,
                                              std::uint64_t seed) {
  require_same_presented_ring(I.ring(), R);
  if (!I.is_m_primary()) throw PreconditionError("superficial reduction needs an m-primary ideal");
  const int d = R->dim();
  if (count < 0 || count > d) throw DomainError("reduction count must lie in [0, dim R]");

  ReductionOutcome out;
  out.original = R;
  out.count = count;
  if (count == 0) {
    out.ring = R;
    return out;
  }

  const auto base = adic_coefficients(I);
  const bool candidate_mode = (count == d);
  bool check_e1 = false;
  if (!candidate_mode) {
    check_e1 = (count <= d - 2);
    if (!check_e1 && module_depth(PModule::ring_quotient(R)) >= count) check_e1 = true;
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kReductionRetryBudget; ++attempt) {
    std::vector<Polynomial> combos;
    for (int i = 0; i < count; ++i) combos.push_back(random_combination(I.gens(), rng));

    if (candidate_mode) {
      RingIdeal J(R, combos);
      if (!J.is_m_primary() || adic_coefficients(J)[0] != base[0]) {
        ++out.retries;
        continue;
      }
    }

    std::vector<Polynomial> rels;
    for (const auto& g : R->relations().elements()) rels.push_back(g);
    rels.insert(rels.end(), combos.begin(), combos.end());
    PRingP Rq = PresentedRing::quotient(R->ambient(), std::move(rels));
    if (Rq->dim() != d - count) {
      ++out.retries;
      continue;
    }

    if (!candidate_mode) {
      RingIdeal Iq(Rq, I.gens());
      if (!Iq.is_m_primary()) {
        ++out.retries;
        continue;
      }
      const auto section = adic_coefficients(Iq);
      if (section[0] != base[0] || (check_e1 && section[1] != base[1])) {
        ++out.retries;
        continue;
      }
    }

    out.e0_checked = true;
    out.e0 = base[0];
    if (!candidate_mode && check_e1) {
      out.e1_checked = true;
      out.e1 = base[1];
    }
    out.ring = std::move(Rq);
    out.combos = std::move(combos);
    return out;
  }
  throw GenericityError("no verified reduction found within the retry budget");
}

ReductionCandidate minimal_reduction_candidate(const PRingP& R, const RingIdeal& I,
                                               std::uint64_t seed) {
  ReductionOutcome out = random_superficial_reduction(R, I, R->dim(), seed);
  ReductionCandidate c{RingIdeal(R, out.combos), out.combos, out.retries};
  return c;
}

}  // namespace chernlab

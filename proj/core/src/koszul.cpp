#include "chernlab/koszul.hpp"

#include <algorithm>

namespace chernlab {

namespace {

// Basis vectors of the i-th exterior power, as bitmasks in increasing order.
std::vector<unsigned> level_masks(int d, int i) {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << d); ++mask)
    if (__builtin_popcount(mask) == i) out.push_back(mask);
  return out;
}

VectorPoly apply_columns(const Field& field, const ModuleOrder& ord,
                         const std::vector<VectorPoly>& columns, const VectorPoly& v) {
  std::vector<MTerm> acc;
  for (const auto& t : v.terms()) {
    for (const auto& u : columns[t.comp].terms())
      acc.push_back(MTerm{field.mul(t.c, u.c), t.m * u.m, u.comp});
  }
  return mv_make(field, ord, std::move(acc));
}

}  // namespace

std::vector<std::int64_t> koszul_homology_lengths(const RingIdeal& J) {
  const PRingP& R = J.ring();
  const RingP& S = R->ambient();
  const Field& field = S->field();
  const int d = R->dim();
  const auto& f = J.gens();
  if (static_cast<int>(f.size()) != d)
    throw DomainError("parameter ideal must have exactly dim R generators");
  if (!J.is_m_primary()) throw PreconditionError("parameter ideal must be m-primary");
  if (d == 0) return {J.length()};

  MOrdP ord = ModuleOrder::top(S->order());

  // Index tables for the exterior-power bases.
  std::vector<std::vector<unsigned>> levels(d + 1);
  std::vector<int> pos(1u << d, -1);
  for (int i = 0; i <= d; ++i) {
    levels[i] = level_masks(d, i);
    for (int k = 0; k < static_cast<int>(levels[i].size()); ++k) pos[levels[i][k]] = k;
  }

  bool homog = true;
  for (const auto& g : f)
    if (!g.is_homogeneous()) homog = false;

  std::vector<FreeModule> frees(d + 1);
  for (int i = 0; i <= d; ++i) {
    FreeModule F{S, {}};
    for (unsigned mask : levels[i]) {
      std::int64_t shift = 0;
      if (homog)
        for (int j = 0; j < d; ++j)
          if (mask & (1u << j)) shift += f[j].degree();
      F.shifts.push_back(shift);
    }
    frees[i] = std::move(F);
  }

  // maps[i] sends K_i to K_{i-1}: e_T -> sum_j +- f_j e_{T minus j}.
  std::vector<std::vector<VectorPoly>> maps(d + 1);
  for (int i = 1; i <= d; ++i) {
    for (unsigned mask : levels[i]) {
      std::vector<MTerm> terms;
      int below = 0;
      for (int j = 0; j < d; ++j) {
        if (!(mask & (1u << j))) continue;
        const int target = pos[mask & ~(1u << j)];
        Scalar sign = (below % 2 == 0) ? field.one() : field.neg(field.one());
        for (const auto& t : f[j].terms())
          terms.push_back(MTerm{field.mul(sign, t.c), t.m, target});
        ++below;
      }
      maps[i].push_back(mv_make(field, *ord, std::move(terms)));
    }
  }

  // d compose d = 0 sanity check on the assembled matrices.
  for (int i = 2; i <= d; ++i)
    for (const auto& col : maps[i])
      if (!apply_columns(field, *ord, maps[i - 1], col).is_zero())
        throw InternalError("Koszul differential does not square to zero");

  const auto& rel = R->relations().elements();
  auto relation_block = [&](int level) {
    std::vector<VectorPoly> out;
    for (int c = 0; c < frees[level].rank(); ++c)
      for (const auto& g : rel) out.push_back(mv_from_poly(g, c));
    return out;
  };

  std::vector<std::int64_t> h(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    std::vector<VectorPoly> kernel;
    if (i == 0) {
      kernel.push_back(mv_from_poly(Polynomial::from_int(S, 1), 0));
    } else {
      kernel = kernel_of_map(S, frees[i - 1].rank(), maps[i], relation_block(i - 1));
    }
    std::vector<VectorPoly> image = (i < d) ? maps[i + 1] : std::vector<VectorPoly>{};
    auto rels = relation_block(i);
    image.insert(image.end(), rels.begin(), rels.end());
    PModule H = PModule::subquotient(frees[i], kernel, image);
    if (!H.has_finite_length())
      throw InternalError("Koszul homology of a parameter ideal is not finite");
    h[i] = H.length();
  }
  return h;
}

std::int64_t koszul_chi(const std::vector<std::int64_t>& h) {
  std::int64_t chi = 0;
  for (int i = 0; i < static_cast<int>(h.size()); ++i) chi += (i % 2 == 0) ? h[i] : -h[i];
  return chi;
}

std::int64_t koszul_correction(const std::vector<std::int64_t>& h) {
  std::int64_t s = 0;
  for (int i = 1; i < static_cast<int>(h.size()); ++i) s += (i % 2 == 1) ? h[i] : -h[i];
  return s;
}

std::int64_t koszul_e1(const std::vector<std::int64_t>& h) {
  std::int64_t s = 0;
  for (int i = 1; i < static_cast<int>(h.size()); ++i)
    s += (i % 2 == 0) ? i * h[i] : -i * h[i];
  return s;
}

bool is_d_sequence(const PRingP& R, const std::vector<Polynomial>& xs) {
  const int n = static_cast<int>(xs.size());
  for (int i = 0; i < n; ++i) {
    std::vector<Polynomial> prefix(xs.begin(), xs.begin() + i);
    RingIdeal P(R, prefix);
    for (int k = i; k < n; ++k) {
      RingIdeal lhs = ideal_colon(P, xs[i] * xs[k]);
      RingIdeal rhs = ideal_colon(P, xs[k]);
      if (!lhs.same_ideal(rhs)) return false;
    }
  }
  return true;
}

}  // namespace chernlab

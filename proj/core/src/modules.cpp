#include "chernlab/modules.hpp"

#include <algorithm>
#include <set>

namespace chernlab {

namespace {

int dim_of_monomial_cover(const RingP& ring, const std::vector<Monomial>& lms) {
  const int e = ring->nvars();
  for (const auto& m : lms)
    if (m.is_one()) return -1;
  int best = 0;
  for (unsigned mask = 0; mask < (1u << e); ++mask) {
    int size = 0;
    for (int i = 0; i < e; ++i)
      if (mask & (1u << i)) ++size;
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : lms) {
      bool inside = true;
      for (int i = 0; i < e && inside; ++i)
        if (m[i] > 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::optional<std::int64_t> standard_count_of_monomials(const RingP& ring,
                                                        const std::vector<Monomial>& lms) {
  const int e = ring->nvars();
  for (const auto& m : lms)
    if (m.is_one()) return 0;
  for (int i = 0; i < e; ++i) {
    bool pure = false;
    for (const auto& m : lms) {
      bool p = m[i] > 0;
      for (int j = 0; j < e && p; ++j)
        if (j != i && m[j] > 0) p = false;
      if (p) {
        pure = true;
        break;
      }
    }
    if (!pure) return std::nullopt;
  }
  auto member = [&](const Monomial& m) {
    for (const auto& g : lms)
      if (g.divides(m)) return true;
    return false;
  };
  std::set<std::vector<std::int32_t>> seen;
  std::vector<Monomial> frontier;
  Monomial one(e);
  seen.insert(one.exponents());
  frontier.push_back(one);
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      for (int i = 0; i < e; ++i) {
        Monomial n = m;
        n[i] += 1;
        if (member(n)) continue;
        if (seen.insert(n.exponents()).second) next.push_back(std::move(n));
      }
    }
    frontier.swap(next);
  }
  return static_cast<std::int64_t>(seen.size());
}

std::vector<std::vector<Monomial>> leading_monomials_by_component(const ModuleBasis& B,
                                                                  int rank) {
  std::vector<std::vector<Monomial>> per(rank);
  for (const auto& g : B.gens) per[g.lt().comp].push_back(g.lt().m);
  return per;
}

}  // namespace

PModule::PModule(FreeModule F, std::vector<VectorPoly> relations) : free_(std::move(F)) {
  const Field& field = free_.ring->field();
  MOrdP ord = ModuleOrder::top(free_.ring->order());
  for (const auto& v : relations) {
    VectorPoly w = mv_reorder(field, *ord, v);
    if (!w.is_zero()) rels_.push_back(std::move(w));
  }
  gb_ = module_buchberger(free_.ring, ord, free_.rank(), rels_);
}

PModule PModule::ring_quotient(const PRingP& R) {
  FreeModule F = FreeModule::standard(R->ambient(), 1);
  std::vector<VectorPoly> rels;
  for (const auto& g : R->relations().elements()) rels.push_back(mv_from_poly(g, 0));
  return PModule(std::move(F), std::move(rels));
}

PModule PModule::quotient_by(const RingIdeal& I) {
  FreeModule F = FreeModule::standard(I.ring()->ambient(), 1);
  std::vector<VectorPoly> rels;
  for (const auto& g : I.full_gb().elements()) rels.push_back(mv_from_poly(g, 0));
  return PModule(std::move(F), std::move(rels));
}

PModule PModule::subquotient(const FreeModule& F, const std::vector<VectorPoly>& agens,
                             const std::vector<VectorPoly>& bgens) {
  std::vector<VectorPoly> kern = kernel_of_map(F.ring, F.rank(), agens, bgens);
  FreeModule G{F.ring, {}};
  G.shifts.reserve(agens.size());
  bool homog = true;
  for (const auto& a : agens)
    if (!a.is_homogeneous(F)) homog = false;
  for (const auto& a : agens) G.shifts.push_back(homog ? a.degree(F) : 0);
  return PModule(std::move(G), std::move(kern));
}

bool PModule::is_zero() const {
  for (int c = 0; c < free_.rank(); ++c) {
    VectorPoly unit = mv_from_poly(Polynomial::from_int(free_.ring, 1), c);
    if (!module_contains(unit, gb_)) return false;
  }
  return true;
}

bool PModule::is_graded() const {
  for (const auto& v : rels_)
    if (!v.is_homogeneous(free_)) return false;
  return true;
}

int PModule::dim() const {
  auto per = leading_monomials_by_component(gb_, free_.rank());
  int best = -1;
  for (int c = 0; c < free_.rank(); ++c)
    best = std::max(best, dim_of_monomial_cover(free_.ring, per[c]));
  return best;
}

bool PModule::has_finite_length() const {
  auto per = leading_monomials_by_component(gb_, free_.rank());
  for (int c = 0; c < free_.rank(); ++c)
    if (!standard_count_of_monomials(free_.ring, per[c])) return false;
  return true;
}

std::int64_t PModule::length() const {
  auto per = leading_monomials_by_component(gb_, free_.rank());
  std::int64_t total = 0;
  for (int c = 0; c < free_.rank(); ++c) {
    auto n = standard_count_of_monomials(free_.ring, per[c]);
    if (!n) throw PreconditionError("module does not have finite length");
    total += *n;
  }
  return total;
}

PModule PModule::quotient_by_ideal(const RingIdeal& J) const {
  require_same_ring(free_.ring, J.ring()->ambient());
  std::vector<VectorPoly> rels = rels_;
  for (const auto& g : J.full_gb().elements())
    for (int c = 0; c < free_.rank(); ++c) rels.push_back(mv_from_poly(g, c));
  return PModule(free_, std::move(rels));
}

namespace {

std::vector<VectorPoly> colon_maximal_once(const RingP& ring, int rank,
                                           const std::vector<VectorPoly>& ngens) {
  const int e = ring->nvars();
  const Field& field = ring->field();
  MOrdP top = ModuleOrder::top(ring->order());
  // Map F -> (F/N)^e, v |-> (x_1 v, .., x_e v); its kernel is (N : m).
  std::vector<VectorPoly> columns;
  columns.reserve(rank);
  for (int j = 0; j < rank; ++j) {
    std::vector<MTerm> terms;
    for (int i = 0; i < e; ++i) {
      Monomial xi(e);
      xi[i] = 1;
      terms.push_back({field.one(), std::move(xi), i * rank + j});
    }
    columns.push_back(mv_make(field, *top, std::move(terms)));
  }
  std::vector<VectorPoly> modulo;
  for (const auto& w : ngens) {
    for (int i = 0; i < e; ++i) {
      std::vector<MTerm> terms = w.terms();
      for (auto& t : terms) t.comp += i * rank;
      modulo.push_back(mv_make(field, *top, std::move(terms)));
    }
  }
  return kernel_of_map(ring, e * rank, columns, modulo);
}

bool same_submodule(const RingP& ring, int rank, const ModuleBasis& a, const ModuleBasis& b) {
  const Field& field = ring->field();
  if (a.gens.size() != b.gens.size()) return false;
  for (size_t i = 0; i < a.gens.size(); ++i)
    if (!mv_equal(field, a.gens[i], b.gens[i])) return false;
  return true;
}

}  // namespace

std::vector<VectorPoly> module_colon_maximal(const PModule& M) {
  return colon_maximal_once(M.ring(), M.free().rank(), M.basis().gens);
}

std::vector<VectorPoly> module_saturation_maximal(const PModule& M) {
  const RingP& ring = M.ring();
  const int rank = M.free().rank();
  MOrdP top = ModuleOrder::top(ring->order());
  ModuleBasis cur = M.basis();
  for (;;) {
    std::vector<VectorPoly> next = colon_maximal_once(ring, rank, cur.gens);
    ModuleBasis nb = module_buchberger(ring, top, rank, next);
    if (same_submodule(ring, rank, cur, nb)) return cur.gens;
    cur = std::move(nb);
  }
}

std::int64_t h0_length(const PModule& M) {
  std::vector<VectorPoly> sat = module_saturation_maximal(M);
  PModule H = PModule::subquotient(M.free(), sat, M.basis().gens);
  return H.length();
}

HilbertSamuelTable module_hs_table(const PModule& M, const RingIdeal& J, int N) {
  if (!J.is_m_primary())
    throw PreconditionError("module multiplicities need an ideal primary for the maximal ideal");
  HilbertSamuelTable T;
  T.dim = std::max(M.dim(), 0);
  RingIdeal P = J;
  for (int n = 0; n <= N; ++n) {
    T.lengths.push_back(M.quotient_by_ideal(P).length());
    if (n < N) P = ideal_product(P, J);
  }
  return T;
}

std::int64_t module_multiplicity(const PModule& M, const RingIdeal& J) {
  if (M.is_zero()) return 0;
  const int d = M.dim();
  if (d <= 0) return M.length();
  if (!J.is_m_primary())
    throw PreconditionError("module multiplicities need an ideal primary for the maximal ideal");
  std::vector<std::int64_t> H;
  RingIdeal P = J;
  int target = 2 * d + 4;
  for (int n = 0;; ++n) {
    H.push_back(M.quotient_by_ideal(P).length());
    if (n >= target) {
      auto fit = fit_binomial(H, d, kStabilizationGuard);
      if (fit) return fit->e[0];
      if (n >= kMaxTableIndex)
        throw StabilizationError("module Hilbert function did not stabilize by index " +
                                 std::to_string(kMaxTableIndex));
      target += 2;
    }
    P = ideal_product(P, J);
  }
}

std::int64_t module_degree(const PModule& M) {
  PRingP poly = PresentedRing::polynomial_ring(M.ring());
  return module_multiplicity(M, RingIdeal::maximal(poly));
}

namespace {

// Sort a basis for the Schreyer iteration: component ascending, then leading
// monomial descending in the ring order (the classical arrangement that
// bounds the length of the iterated syzygy resolution).
std::vector<VectorPoly> schreyer_sort(const RingP& ring, std::vector<VectorPoly> v) {
  const MonomialOrder& ord = ring->order();
  std::stable_sort(v.begin(), v.end(), [&](const VectorPoly& a, const VectorPoly& b) {
    if (a.lt().comp != b.lt().comp) return a.lt().comp < b.lt().comp;
    return ord.compare(a.lt().m, b.lt().m) > 0;
  });
  return v;
}

// Dense chain form used by the minimization pivots.
struct DenseChain {
  RingP ring;
  std::vector<FreeModule> frees;
  // maps[i][c][r]: entry of column c at component r.
  std::vector<std::vector<std::vector<Polynomial>>> maps;
};

DenseChain to_dense(const RingP& ring, const std::vector<FreeModule>& frees,
                    const std::vector<std::vector<VectorPoly>>& maps) {
  DenseChain D;
  D.ring = ring;
  D.frees = frees;
  for (size_t i = 0; i < maps.size(); ++i) {
    std::vector<std::vector<Polynomial>> dm;
    for (const auto& col : maps[i]) {
      std::vector<Polynomial> dc(D.frees[i].rank(), Polynomial::zero(ring));
      for (int r = 0; r < D.frees[i].rank(); ++r) dc[r] = mv_component(ring, col, r);
      dm.push_back(std::move(dc));
    }
    D.maps.push_back(std::move(dm));
  }
  return D;
}

void minimize_chain(DenseChain& D) {
  const Field& field = D.ring->field();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < D.maps.size() && !changed; ++i) {
      auto& M = D.maps[i];
      for (size_t c = 0; c < M.size() && !changed; ++c) {
        for (int r = 0; r < D.frees[i].rank() && !changed; ++r) {
          const Polynomial& u = M[c][r];
          if (u.is_zero() || !u.is_constant()) continue;
          Scalar uinv = field.inv(u.lc());
          // Clear row r across the other columns; compensate in the next map.
          std::vector<Polynomial> alpha(M.size(), Polynomial::zero(D.ring));
          for (size_t c2 = 0; c2 < M.size(); ++c2) {
            if (c2 == c || M[c2][r].is_zero()) continue;
            alpha[c2] = M[c2][r].scaled(uinv);
            for (int rr = 0; rr < D.frees[i].rank(); ++rr)
              M[c2][rr] = M[c2][rr] - alpha[c2] * M[c][rr];
          }
          if (i + 1 < D.maps.size()) {
            for (auto& w : D.maps[i + 1]) {
              Polynomial acc = w[c];
              for (size_t c2 = 0; c2 < M.size(); ++c2)
                if (c2 != c && !alpha[c2].is_zero()) acc = acc + alpha[c2] * w[c2];
              // The complex identity forces this entry to vanish once row r
              // is cleared; anything else means the chain was not a complex.
              if (!acc.is_zero()) throw InternalError("pivot left a nonzero entry behind");
              w[c] = std::move(acc);
            }
          }
          // Split off the unit: drop column c and component r here, the
          // corresponding column upstream and component downstream.
          M.erase(M.begin() + static_cast<std::ptrdiff_t>(c));
          for (auto& col : M) col.erase(col.begin() + r);
          D.frees[i].shifts.erase(D.frees[i].shifts.begin() + r);
          D.frees[i + 1].shifts.erase(D.frees[i + 1].shifts.begin() +
                                      static_cast<std::ptrdiff_t>(c));
          if (i + 1 < D.maps.size())
            for (auto& w : D.maps[i + 1]) w.erase(w.begin() + static_cast<std::ptrdiff_t>(c));
          if (i > 0)
            D.maps[i - 1].erase(D.maps[i - 1].begin() + r);
          changed = true;
        }
      }
    }
  }
}

std::vector<std::vector<VectorPoly>> from_dense(const DenseChain& D) {
  MOrdP top = ModuleOrder::top(D.ring->order());
  const Field& field = D.ring->field();
  std::vector<std::vector<VectorPoly>> out;
  for (size_t i = 0; i < D.maps.size(); ++i) {
    std::vector<VectorPoly> cols;
    for (const auto& dc : D.maps[i]) {
      std::vector<MTerm> terms;
      for (size_t r = 0; r < dc.size(); ++r)
        for (const auto& t : dc[r].terms())
          terms.push_back({t.c, t.m, static_cast<std::int32_t>(r)});
      cols.push_back(mv_make(field, *top, std::move(terms)));
    }
    out.push_back(std::move(cols));
  }
  return out;
}

}  // namespace

FreeResolution free_resolution(const PModule& M, bool minimize) {
  const RingP& ring = M.ring();
  FreeResolution res;
  res.ring = ring;
  res.graded = M.is_graded();
  res.frees.push_back(M.free());

  MOrdP top = ModuleOrder::top(ring->order());
  ModuleBasis B{ring, top, M.free().rank(), schreyer_sort(ring, M.basis().gens)};
  const int cap = ring->nvars() + 5;
  for (int level = 0; level < cap && !B.gens.empty(); ++level) {
    SyzygyBasis syz = schreyer_syzygies(B, res.frees.back());
    res.maps.push_back(B.gens);
    res.frees.push_back(syz.free);
    if (syz.gens.empty()) break;
    if (level + 1 == cap)
      throw InternalError("iterated syzygy resolution exceeded the variable-count bound");
    B = ModuleBasis{ring, syz.ord, res.frees.back().rank(), schreyer_sort(ring, syz.gens)};
  }
  // Trailing free module with no further syzygies: trim it when empty.
  if (!res.frees.empty() && res.frees.back().rank() == 0 && !res.maps.empty() &&
      res.maps.back().empty()) {
    res.frees.pop_back();
    res.maps.pop_back();
  }

  if (minimize && !res.maps.empty()) {
    DenseChain D = to_dense(ring, res.frees, res.maps);
    minimize_chain(D);
    res.frees = D.frees;
    res.maps = from_dense(D);
    while (!res.maps.empty() && res.maps.back().empty()) {
      res.maps.pop_back();
      res.frees.pop_back();
    }
    res.minimal = res.graded;
  }
  return res;
}

namespace {

// Columns of the transpose of maps[i-1]... transpose of D: F_{i+1} -> F_i is
// indexed by the components of F_i, with values in the dual of F_{i+1}.
std::vector<VectorPoly> transpose_columns(const FreeResolution& res, int i) {
  const RingP& ring = res.ring;
  const Field& field = ring->field();
  MOrdP top = ModuleOrder::top(ring->order());
  const auto& cols = res.maps[static_cast<size_t>(i)];
  const int target = res.frees[static_cast<size_t>(i)].rank();
  std::vector<VectorPoly> out;
  out.reserve(target);
  for (int j = 0; j < target; ++j) {
    std::vector<MTerm> terms;
    for (size_t c = 0; c < cols.size(); ++c)
      for (const auto& t : cols[c].terms())
        if (t.comp == j) terms.push_back({t.c, t.m, static_cast<std::int32_t>(c)});
    out.push_back(mv_make(field, *top, std::move(terms)));
  }
  return out;
}

PModule minimal_presentation(const PModule& M) {
  if (M.relations().empty()) return M;
  std::vector<FreeModule> frees{M.free(), FreeModule{M.ring(), {}}};
  frees[1].shifts.assign(M.relations().size(), 0);
  for (size_t j = 0; j < M.relations().size(); ++j)
    if (M.relations()[j].is_homogeneous(M.free()))
      frees[1].shifts[j] = M.relations()[j].degree(M.free());
  std::vector<std::vector<VectorPoly>> maps{M.relations()};
  DenseChain D = to_dense(M.ring(), frees, maps);
  minimize_chain(D);
  auto back = from_dense(D);
  return PModule(D.frees[0], back.empty() ? std::vector<VectorPoly>{} : back[0]);
}

}  // namespace

PModule ext_module(const FreeResolution& res, int i) {
  const RingP& ring = res.ring;
  const Field& field = ring->field();
  MOrdP top = ModuleOrder::top(ring->order());
  const int l = res.length();
  if (i < 0 || i > l || static_cast<size_t>(i) >= res.frees.size())
    return PModule(FreeModule{ring, {}}, {});

  const FreeModule& Fi = res.frees[static_cast<size_t>(i)];
  FreeModule dual{ring, {}};
  dual.shifts.reserve(Fi.rank());
  for (auto s : Fi.shifts) dual.shifts.push_back(-s);

  std::vector<VectorPoly> K;
  if (i < l) {
    std::vector<VectorPoly> tcols = transpose_columns(res, i);
    K = kernel_of_map(ring, res.frees[static_cast<size_t>(i) + 1].rank(), tcols, {});
  } else {
    for (int j = 0; j < Fi.rank(); ++j)
      K.push_back(mv_from_poly(Polynomial::from_int(ring, 1), j));
  }

  std::vector<VectorPoly> B;
  if (i >= 1) {
    const auto& cols = res.maps[static_cast<size_t>(i) - 1];
    const int prev = res.frees[static_cast<size_t>(i) - 1].rank();
    for (int j = 0; j < prev; ++j) {
      std::vector<MTerm> terms;
      for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& t : cols[c].terms())
          if (t.comp == j) terms.push_back({t.c, t.m, static_cast<std::int32_t>(c)});
      VectorPoly v = mv_make(field, *top, std::move(terms));
      if (!v.is_zero()) B.push_back(std::move(v));
    }
  }

  PModule E = PModule::subquotient(dual, K, B);
  return minimal_presentation(E);
}

PModule ext_module(const PModule& M, int i) {
  FreeResolution res = free_resolution(M, true);
  return ext_module(res, i);
}

int projective_dimension(const PModule& M) {
  if (M.is_zero()) throw PreconditionError("projective dimension of the zero module");
  FreeResolution res = free_resolution(M, true);
  if (res.minimal) {
    int pd = 0;
    for (int i = 0; i < static_cast<int>(res.frees.size()); ++i)
      if (res.frees[static_cast<size_t>(i)].rank() > 0) pd = i;
    return pd;
  }
  for (int i = res.length(); i >= 0; --i)
    if (!ext_module(res, i).is_zero()) return i;
  return 0;
}

int module_depth(const PModule& M) {
  return M.ring()->nvars() - projective_dimension(M);
}

std::optional<std::int64_t> local_cohomology_length(const PModule& M, int i) {
  const int r = M.ring()->nvars();
  if (i < 0 || i > r) return 0;
  PModule E = ext_module(M, r - i);
  if (E.is_zero()) return 0;
  if (E.dim() > 0) return std::nullopt;
  return E.length();
}

}  // namespace chernlab

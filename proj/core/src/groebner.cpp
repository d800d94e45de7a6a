#include "chernlab/groebner.hpp"

#include <algorithm>
#include <map>

namespace chernlab {

namespace {

struct Pair {
  int i, j;  // indices into the working basis, i < j
  Monomial lcm;
  std::int32_t comp;
  std::int64_t deg;
  bool coprime;
};

// Deterministic pair priority: degree of the pair lcm, then the lcm itself
// under the module order, then the indices (normal selection strategy).
struct PairPriority {
  const ModuleOrder* ord;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ord->compare(a.lcm, a.comp, b.lcm, b.comp);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

bool is_monomial_vec(const VectorPoly& v) { return v.terms().size() == 1; }

// Gebauer-Moeller update of the pair set for the freshly appended basis
// element with index h; `alive` tracks which elements still spawn pairs.
void gm_update(const RingP& ring, const ModuleOrder& ord, int rank,
               const std::vector<VectorPoly>& g, std::vector<bool>& alive,
               std::vector<Pair>& pairs, int h) {
  const auto& weights = ring->weights();
  const MTerm& lth = g[h].lt();

  std::vector<Pair> cand;
  for (int i = 0; i < h; ++i) {
    if (!alive[i]) continue;
    const MTerm& lti = g[i].lt();
    if (lti.comp != lth.comp) continue;
    Pair p;
    p.i = i;
    p.j = h;
    p.lcm = lti.m.lcm(lth.m);
    p.comp = lth.comp;
    p.deg = p.lcm.degree(weights);
    p.coprime = rank == 1 && lti.m.coprime(lth.m);
    cand.push_back(std::move(p));
  }

  // First Gebauer-Moeller filter: among the new pairs, keep (i,h) only when
  // coprime or when no other new pair's lcm properly divides its lcm (ties
  // keep the smallest index).
  std::vector<Pair> kept;
  for (size_t a = 0; a < cand.size(); ++a) {
    bool drop = false;
    if (!cand[a].coprime) {
      for (size_t b = 0; b < cand.size() && !drop; ++b) {
        if (a == b) continue;
        if (!cand[b].lcm.divides(cand[a].lcm)) continue;
        if (cand[b].lcm == cand[a].lcm) {
          if (cand[b].coprime || b < a) drop = true;  // keep one representative
        } else {
          drop = true;
        }
      }
    }
    if (!drop) kept.push_back(cand[a]);
  }

  // Prune old pairs whose lcm is reducible through the new leading term.
  std::vector<Pair> next;
  next.reserve(pairs.size() + kept.size());
  for (const auto& p : pairs) {
    const MTerm& lti = g[p.i].lt();
    const MTerm& ltj = g[p.j].lt();
    bool covered = p.comp == lth.comp && lth.m.divides(p.lcm) &&
                   !(lti.m.lcm(lth.m) == p.lcm) && !(ltj.m.lcm(lth.m) == p.lcm);
    if (!covered) next.push_back(p);
  }
  for (auto& p : kept)
    if (!p.coprime) next.push_back(std::move(p));
  pairs.swap(next);

  for (int i = 0; i < h; ++i)
    if (alive[i] && g[i].lt().comp == lth.comp && lth.m.divides(g[i].lt().m)) alive[i] = false;
}

// Full reduction of v by the (not necessarily reduced) working basis.
// Quotients are recorded when `quot` is non-null; reducers are chosen as the
// first match in basis order, which keeps the result deterministic.
VectorPoly reduce_full(const RingP& ring, const ModuleOrder& ord, const VectorPoly& v,
                       const std::vector<VectorPoly>& g, std::vector<Polynomial>* quot) {
  const Field& field = ring->field();
  VectorPoly h = v;
  std::vector<MTerm> tail;
  while (!h.is_zero()) {
    const MTerm& lt = h.lt();
    bool reduced = false;
    for (size_t k = 0; k < g.size(); ++k) {
      if (g[k].is_zero()) continue;
      const MTerm& gk = g[k].lt();
      if (gk.comp != lt.comp || !gk.m.divides(lt.m)) continue;
      Monomial u = lt.m.quotient_by(gk.m);
      Scalar c = field.div(lt.c, gk.c);
      h = mv_axpy_sub(field, ord, h, c, u, g[k]);
      if (quot) {
        Polynomial& q = (*quot)[k];
        q = q + Polynomial::from_monomial(ring, c, u);
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      tail.push_back(lt);
      h = VectorPoly(std::vector<MTerm>(h.terms().begin() + 1, h.terms().end()));
    }
  }
  return mv_make(field, ord, std::move(tail));
}

VectorPoly make_monic(const Field& field, const VectorPoly& v) {
  if (v.is_zero()) return v;
  return mv_scale(field, v, field.inv(v.lt().c));
}

std::vector<VectorPoly> sort_by_lt(const ModuleOrder& ord, std::vector<VectorPoly> v) {
  std::sort(v.begin(), v.end(), [&](const VectorPoly& a, const VectorPoly& b) {
    return ord.compare(a.lt().m, a.lt().comp, b.lt().m, b.lt().comp) < 0;
  });
  return v;
}

}  // namespace

ModuleBasis module_interreduce(RingP ring, MOrdP ord, int rank, std::vector<VectorPoly> gb) {
  const Field& field = ring->field();
  // Minimalize: drop elements whose leading term another (kept) one divides.
  std::vector<VectorPoly> sorted = sort_by_lt(*ord, std::move(gb));
  std::vector<VectorPoly> minimal;
  for (auto& v : sorted) {
    if (v.is_zero()) continue;
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (kept.lt().comp == v.lt().comp && kept.lt().m.divides(v.lt().m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(v));
  }
  // Tail-reduce each against all the others.
  std::vector<VectorPoly> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<VectorPoly> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    VectorPoly r = reduce_full(ring, *ord, minimal[i], others, nullptr);
    if (!r.is_zero()) out.push_back(make_monic(field, r));
  }
  ModuleBasis B;
  B.ring = std::move(ring);
  B.ord = std::move(ord);
  B.rank = rank;
  B.gens = sort_by_lt(*B.ord, std::move(out));
  return B;
}

ModuleBasis module_buchberger(RingP ring, MOrdP ord, int rank, std::vector<VectorPoly> gens) {
  const Field& field = ring->field();
  std::vector<VectorPoly> g;
  // Cheap pre-minimalization for monomial-heavy input: a monomial generator
  // divisible by another monomial generator is redundant.
  std::vector<VectorPoly> seeds = sort_by_lt(*ord, std::move(gens));
  for (auto& v : seeds) {
    if (v.is_zero()) continue;
    bool redundant = false;
    if (is_monomial_vec(v)) {
      for (const auto& kept : g) {
        if (is_monomial_vec(kept) && kept.lt().comp == v.lt().comp &&
            kept.lt().m.divides(v.lt().m)) {
          redundant = true;
          break;
        }
      }
    }
    if (!redundant) g.push_back(make_monic(field, v));
  }

  std::vector<bool> alive(g.size(), true);
  std::vector<Pair> pairs;
  for (int h = 0; h < static_cast<int>(g.size()); ++h)
    gm_update(ring, *ord, rank, g, alive, pairs, h);

  PairPriority prio{ord.get()};
  while (!pairs.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k)
      if (prio(pairs[k], pairs[best])) best = k;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    ring->check_degree(p.deg);
    const VectorPoly& gi = g[p.i];
    const VectorPoly& gj = g[p.j];
    Monomial ui = p.lcm.quotient_by(gi.lt().m);
    Monomial uj = p.lcm.quotient_by(gj.lt().m);
    // Both sides are monic, so the S-vector is u_i g_i - u_j g_j.
    VectorPoly s = mv_axpy_sub(field, *ord, mv_axpy_sub(field, *ord, VectorPoly(), field.neg(field.one()), ui, gi),
                               field.one(), uj, gj);
    VectorPoly r = reduce_full(ring, *ord, s, g, nullptr);
    if (r.is_zero()) continue;
    ring->check_degree(r.lt().m.degree(ring->weights()));
    g.push_back(make_monic(field, r));
    alive.push_back(true);
    gm_update(ring, *ord, rank, g, alive, pairs, static_cast<int>(g.size()) - 1);
  }

  return module_interreduce(std::move(ring), std::move(ord), rank, std::move(g));
}

VectorPoly module_normal_form(const VectorPoly& v, const ModuleBasis& B) {
  return reduce_full(B.ring, *B.ord, v, B.gens, nullptr);
}

ModuleDivision module_divide(const VectorPoly& v, const ModuleBasis& B) {
  ModuleDivision d;
  d.quotients.assign(B.gens.size(), Polynomial::zero(B.ring));
  d.remainder = reduce_full(B.ring, *B.ord, v, B.gens, &d.quotients);
  return d;
}

bool module_contains(const VectorPoly& v, const ModuleBasis& B) {
  return module_normal_form(v, B).is_zero();
}

SyzygyBasis schreyer_syzygies(const ModuleBasis& B, const FreeModule& F) {
  const Field& field = B.ring->field();
  const int t = static_cast<int>(B.gens.size());

  std::vector<std::pair<Monomial, int>> images;
  images.reserve(t);
  FreeModule syzF{B.ring, {}};
  syzF.shifts.reserve(t);
  for (const auto& gv : B.gens) {
    images.emplace_back(gv.lt().m, gv.lt().comp);
    syzF.shifts.push_back(gv.lt().m.degree(B.ring->weights()) + F.shifts[gv.lt().comp]);
  }
  MOrdP syzOrd = ModuleOrder::schreyer(B.ord, std::move(images));

  std::vector<VectorPoly> taus;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      const MTerm& lti = B.gens[i].lt();
      const MTerm& ltj = B.gens[j].lt();
      if (lti.comp != ltj.comp) continue;
      Monomial lcm = lti.m.lcm(ltj.m);
      Monomial ui = lcm.quotient_by(lti.m);
      Monomial uj = lcm.quotient_by(ltj.m);
      VectorPoly s = mv_axpy_sub(field, *B.ord,
                                 mv_axpy_sub(field, *B.ord, VectorPoly(),
                                             field.neg(field.one()), ui, B.gens[i]),
                                 field.one(), uj, B.gens[j]);
      ModuleDivision div = module_divide(s, B);
      if (!div.remainder.is_zero())
        throw InternalError("S-vector of a Groebner basis did not reduce to zero");
      std::vector<MTerm> terms;
      terms.push_back({field.one(), ui, i});
      terms.push_back({field.neg(field.one()), uj, j});
      for (int k = 0; k < t; ++k)
        for (const auto& qt : div.quotients[k].terms())
          terms.push_back({field.neg(qt.c), qt.m, k});
      taus.push_back(mv_make(field, *syzOrd, std::move(terms)));
    }
  }

  ModuleBasis reduced = module_interreduce(B.ring, syzOrd, t, std::move(taus));
  SyzygyBasis out;
  out.ord = reduced.ord;
  out.free = std::move(syzF);
  out.gens = std::move(reduced.gens);
  return out;
}

std::vector<VectorPoly> kernel_of_map(const RingP& ring, int target_rank,
                                      const std::vector<VectorPoly>& columns,
                                      const std::vector<VectorPoly>& modulo) {
  const Field& field = ring->field();
  const int s = static_cast<int>(columns.size());
  const int big = target_rank + s;
  MOrdP ord = ModuleOrder::graph(ring->order(), target_rank);

  std::vector<VectorPoly> gens;
  gens.reserve(columns.size() + modulo.size());
  for (int i = 0; i < s; ++i) {
    std::vector<MTerm> terms = columns[i].terms();
    terms.push_back({field.one(), Monomial(ring->nvars()), target_rank + i});
    gens.push_back(mv_make(field, *ord, std::move(terms)));
  }
  for (const auto& q : modulo) gens.push_back(mv_reorder(field, *ord, q));

  ModuleBasis B = module_buchberger(ring, ord, big, std::move(gens));

  MOrdP outOrd = ModuleOrder::top(ring->order());
  std::vector<VectorPoly> kernel;
  for (const auto& v : B.gens) {
    if (v.is_zero() || v.lt().comp < target_rank) continue;
    std::vector<MTerm> terms;
    terms.reserve(v.terms().size());
    for (const auto& t : v.terms()) {
      if (t.comp < target_rank)
        throw InternalError("graph basis element mixes target and source blocks");
      terms.push_back({t.c, t.m, t.comp - target_rank});
    }
    kernel.push_back(mv_make(field, *outOrd, std::move(terms)));
  }
  return module_interreduce(ring, outOrd, s, std::move(kernel)).gens;
}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const {
  return normal_form(f, *this);
}

bool GroebnerBasis::same_ideal(const GroebnerBasis& o) const {
  require_same_ring(ring_, o.ring_);
  if (g_.size() != o.g_.size()) return false;
  for (size_t i = 0; i < g_.size(); ++i)
    if (!g_[i].equals(o.g_[i])) return false;
  return true;
}

GroebnerBasis buchberger(const RingP& ring, const std::vector<Polynomial>& gens) {
  MOrdP ord = ModuleOrder::top(ring->order());
  std::vector<VectorPoly> vg;
  vg.reserve(gens.size());
  for (const auto& f : gens) {
    require_same_ring(ring, f.ring());
    if (!f.is_zero()) vg.push_back(mv_from_poly(f, 0));
  }
  ModuleBasis B = module_buchberger(ring, ord, 1, std::move(vg));
  std::vector<Polynomial> out;
  out.reserve(B.gens.size());
  for (const auto& v : B.gens) out.push_back(mv_component(ring, v, 0));
  return GroebnerBasis(ring, std::move(out));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  require_same_ring(f.ring(), gb.ring());
  if (gb.elements().empty()) return f;
  MOrdP ord = ModuleOrder::top(gb.ring()->order());
  std::vector<VectorPoly> g;
  g.reserve(gb.elements().size());
  for (const auto& e : gb.elements()) g.push_back(mv_from_poly(e, 0));
  ModuleBasis B{gb.ring(), ord, 1, std::move(g)};
  return mv_component(gb.ring(), module_normal_form(mv_from_poly(f, 0), B), 0);
}

SyzygyBasis syzygies(const GroebnerBasis& gb) {
  MOrdP ord = ModuleOrder::top(gb.ring()->order());
  std::vector<VectorPoly> g;
  for (const auto& e : gb.elements()) g.push_back(mv_from_poly(e, 0));
  ModuleBasis B{gb.ring(), ord, 1, std::move(g)};
  return schreyer_syzygies(B, FreeModule::standard(gb.ring(), 1));
}

std::vector<Polynomial> elimination_slice(const GroebnerBasis& gb) {
  const auto& ord = gb.ring()->order();
  if (ord.kind() != MonomialOrder::Kind::block)
    throw DomainError("elimination requires a block order");
  const int fb = ord.first_block();
  std::vector<Polynomial> out;
  for (const auto& f : gb.elements()) {
    bool free_of_block = true;
    for (const auto& t : f.terms()) {
      for (int v = 0; v < fb && free_of_block; ++v)
        if (t.m[v] > 0) free_of_block = false;
      if (!free_of_block) break;
    }
    if (free_of_block) out.push_back(f);
  }
  return out;
}

}  // namespace chernlab

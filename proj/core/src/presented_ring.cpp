#include "chernlab/presented_ring.hpp"

#include <algorithm>
#include <set>

namespace chernlab {

namespace {

// Krull dimension of S/in = max cardinality of a variable set meeting the
// support of no leading monomial (initial ideals preserve dimension).
int dim_from_initial(const RingP& ring, const std::vector<Polynomial>& gb) {
  const int e = ring->nvars();
  for (const auto& g : gb)
    if (g.is_constant() && !g.is_zero()) return -1;  // unit ideal: empty scheme
  int best = 0;
  for (unsigned mask = 0; mask < (1u << e); ++mask) {
    int size = 0;
    for (int i = 0; i < e; ++i)
      if (mask & (1u << i)) ++size;
    if (size <= best) continue;
    bool independent = true;
    for (const auto& g : gb) {
      const Monomial& m = g.lm();
      bool supported_inside = true;
      for (int i = 0; i < e && supported_inside; ++i)
        if (m[i] > 0 && !(mask & (1u << i))) supported_inside = false;
      if (supported_inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace

PRingP PresentedRing::polynomial_ring(RingP ambient) {
  GroebnerBasis none(ambient, {});
  return PRingP(new PresentedRing(std::move(ambient), std::move(none)));
}

PRingP PresentedRing::quotient(RingP ambient, std::vector<Polynomial> relations) {
  GroebnerBasis gb = buchberger(ambient, relations);
  return PRingP(new PresentedRing(std::move(ambient), std::move(gb)));
}

int PresentedRing::dim() const {
  if (!dim_) dim_ = dim_from_initial(ambient_, relations_.elements());
  return *dim_;
}

std::vector<Polynomial> PresentedRing::variable_images() const {
  std::vector<Polynomial> out;
  out.reserve(ambient_->nvars());
  for (int i = 0; i < ambient_->nvars(); ++i)
    out.push_back(reduce(Polynomial::variable(ambient_, i)));
  return out;
}

void require_same_presented_ring(const PRingP& a, const PRingP& b) {
  if (a == b) return;
  if (!a || !b) throw ContextError("presented ring missing");
  require_same_ring(a->ambient(), b->ambient());
  if (!a->relations().same_ideal(b->relations()))
    throw ContextError("operands live in different quotient rings");
}

RingIdeal::RingIdeal(PRingP ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  std::vector<Polynomial> work = ring_->relations().elements();
  for (auto& f : gens) {
    require_same_ring(ring_->ambient(), f.ring());
    Polynomial r = ring_->reduce(f);
    if (!r.is_zero()) {
      gens_.push_back(r);
      work.push_back(std::move(r));
    }
  }
  full_ = buchberger(ring_->ambient(), work);
}

RingIdeal RingIdeal::maximal(PRingP ring) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < ring->ambient()->nvars(); ++i)
    vars.push_back(Polynomial::variable(ring->ambient(), i));
  return RingIdeal(std::move(ring), std::move(vars));
}

bool RingIdeal::contains_ideal(const RingIdeal& o) const {
  require_same_presented_ring(ring_, o.ring_);
  for (const auto& g : o.gens_)
    if (!contains(g)) return false;
  return true;
}

bool RingIdeal::same_ideal(const RingIdeal& o) const {
  require_same_presented_ring(ring_, o.ring_);
  return full_.same_ideal(o.full_);
}

bool RingIdeal::is_zero_ideal() const {
  return full_.same_ideal(ring_->relations());
}

int RingIdeal::dim() const { return dim_from_initial(ring_->ambient(), full_.elements()); }

std::optional<std::int64_t> standard_monomial_count(const GroebnerBasis& gb) {
  const RingP& ring = gb.ring();
  const int e = ring->nvars();
  std::vector<Monomial> lms;
  for (const auto& g : gb.elements()) lms.push_back(g.lm());
  // Finiteness: every variable must carry a pure power in the initial ideal.
  for (int i = 0; i < e; ++i) {
    bool found = false;
    for (const auto& m : lms) {
      bool pure = m[i] > 0;
      for (int j = 0; j < e && pure; ++j)
        if (j != i && m[j] > 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  // Count monomials below the initial ideal by breadth-first growth.
  std::set<std::vector<std::int32_t>> seen;
  std::vector<Monomial> frontier;
  Monomial one(e);
  auto standard = [&](const Monomial& m) {
    for (const auto& g : lms)
      if (g.divides(m)) return false;
    return true;
  };
  if (!standard(one)) return 0;
  seen.insert(one.exponents());
  frontier.push_back(one);
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      for (int i = 0; i < e; ++i) {
        Monomial n = m;
        n[i] += 1;
        if (!standard(n)) continue;
        if (seen.insert(n.exponents()).second) next.push_back(std::move(n));
      }
    }
    frontier.swap(next);
  }
  return static_cast<std::int64_t>(seen.size());
}

bool RingIdeal::has_finite_colength() const {
  if (full_.is_unit_ideal()) return true;
  return standard_monomial_count(full_).has_value();
}

std::int64_t RingIdeal::length() const {
  if (full_.is_unit_ideal()) return 0;
  auto n = standard_monomial_count(full_);
  if (!n) throw PreconditionError("quotient by the ideal is not finite dimensional");
  // A finite affine count equals the local length only when the support is
  // the origin; refuse to report anything else.
  if (!is_m_primary()) throw PreconditionError("ideal is not m-primary");
  return *n;
}

bool RingIdeal::is_m_primary() const {
  if (full_.is_unit_ideal()) return false;
  auto n = standard_monomial_count(full_);
  if (!n) return false;
  // Nilpotency of each variable on the finite quotient certifies that the
  // radical is the maximal ideal, so the support is exactly the origin.
  const RingP& A = ring_->ambient();
  for (int i = 0; i < A->nvars(); ++i) {
    Polynomial p = poly_pow(Polynomial::variable(A, i), static_cast<int>(*n));
    if (!full_.contains(p)) return false;
  }
  return true;
}

RingIdeal ideal_from_strings(const PRingP& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> gens;
  gens.reserve(texts.size());
  for (const auto& t : texts) gens.push_back(parse_polynomial(ring->ambient(), t));
  return RingIdeal(ring, std::move(gens));
}

RingIdeal ideal_sum(const RingIdeal& a, const RingIdeal& b) {
  require_same_presented_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return RingIdeal(a.ring(), std::move(gens));
}

RingIdeal ideal_product(const RingIdeal& a, const RingIdeal& b) {
  require_same_presented_ring(a.ring(), b.ring());
  // Multiply the reduced basis of a+rel rather than a's raw generators: the
  // extra products land in rel and reduce away, and iterated powers stay
  // GB-sized instead of growing like |gens|^k.
  std::vector<Polynomial> gens;
  for (const auto& f : a.full_gb().elements())
    for (const auto& g : b.gens()) gens.push_back(f * g);
  return RingIdeal(a.ring(), std::move(gens));
}

RingIdeal ideal_power(const RingIdeal& a, int n) {
  if (n < 0) throw DomainError("negative ideal power");
  if (n == 0)
    return RingIdeal(a.ring(), {Polynomial::from_int(a.ring()->ambient(), 1)});
  RingIdeal p = a;
  for (int k = 1; k < n; ++k) p = ideal_product(p, a);
  return p;
}

RingIdeal ideal_colon(const RingIdeal& a, const Polynomial& f) {
  const RingP& A = a.ring()->ambient();
  require_same_ring(A, f.ring());
  Polynomial fr = a.ring()->reduce(f);
  if (fr.is_zero())
    return RingIdeal(a.ring(), {Polynomial::from_int(A, 1)});
  std::vector<VectorPoly> columns{mv_from_poly(fr, 0)};
  std::vector<VectorPoly> modulo;
  for (const auto& g : a.full_gb().elements()) modulo.push_back(mv_from_poly(g, 0));
  std::vector<Polynomial> gens;
  for (const auto& v : kernel_of_map(A, 1, columns, modulo))
    gens.push_back(mv_component(A, v, 0));
  return RingIdeal(a.ring(), std::move(gens));
}

RingIdeal ideal_colon(const RingIdeal& a, const RingIdeal& b) {
  require_same_presented_ring(a.ring(), b.ring());
  const RingP& A = a.ring()->ambient();
  const auto& fs = b.gens();
  if (fs.empty()) return RingIdeal(a.ring(), {Polynomial::from_int(A, 1)});
  const int s = static_cast<int>(fs.size());
  std::vector<MTerm> column;
  for (int j = 0; j < s; ++j)
    for (const auto& t : fs[j].terms()) column.push_back({t.c, t.m, j});
  MOrdP top = ModuleOrder::top(A->order());
  std::vector<VectorPoly> columns{mv_make(A->field(), *top, std::move(column))};
  std::vector<VectorPoly> modulo;
  for (const auto& g : a.full_gb().elements())
    for (int j = 0; j < s; ++j) modulo.push_back(mv_from_poly(g, j));
  std::vector<Polynomial> gens;
  for (const auto& v : kernel_of_map(A, s, columns, modulo))
    gens.push_back(mv_component(A, v, 0));
  return RingIdeal(a.ring(), std::move(gens));
}

RingIdeal ideal_intersect(const RingIdeal& a, const RingIdeal& b) {
  require_same_presented_ring(a.ring(), b.ring());
  const RingP& A = a.ring()->ambient();
  MOrdP top = ModuleOrder::top(A->order());
  Scalar one = A->field().one();
  Monomial unit(A->nvars());
  std::vector<VectorPoly> columns{
      mv_make(A->field(), *top, {{one, unit, 0}, {one, unit, 1}})};
  std::vector<VectorPoly> modulo;
  for (const auto& g : a.full_gb().elements()) modulo.push_back(mv_from_poly(g, 0));
  for (const auto& g : b.full_gb().elements()) modulo.push_back(mv_from_poly(g, 1));
  std::vector<Polynomial> gens;
  for (const auto& v : kernel_of_map(A, 2, columns, modulo))
    gens.push_back(mv_component(A, v, 0));
  return RingIdeal(a.ring(), std::move(gens));
}

RingIdeal ideal_saturation(const RingIdeal& a, const RingIdeal& b) {
  RingIdeal cur = a;
  for (;;) {
    RingIdeal next = ideal_colon(cur, b);
    if (next.same_ideal(cur)) return cur;
    cur = std::move(next);
  }
}

namespace {

Polynomial poly_det(const RingP& ring, const std::vector<std::vector<Polynomial>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Polynomial::from_int(ring, 1);
  if (n == 1) return m[0][0];
  Polynomial det = Polynomial::zero(ring);
  for (int i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    minor.reserve(n - 1);
    for (int r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    Polynomial cof = m[i][0] * poly_det(ring, minor);
    det = (i % 2 == 0) ? det + cof : det - cof;
  }
  return det;
}

void choose(int n, int k, int start, std::vector<int>& cur,
            std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

RingIdeal jacobian_ideal(const PRingP& ring) {
  const RingP& A = ring->ambient();
  const auto& rel = ring->relations().elements();
  const int c = A->nvars() - ring->dim();
  if (c <= 0 || rel.empty())
    return RingIdeal(ring, {Polynomial::from_int(A, 1)});
  const int t = static_cast<int>(rel.size());
  const int e = A->nvars();
  if (c > t || c > e) return RingIdeal(ring, {});
  std::vector<std::vector<Polynomial>> jac(t, std::vector<Polynomial>(e, Polynomial::zero(A)));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < e; ++j) jac[i][j] = rel[i].derivative(j);
  std::vector<std::vector<int>> rows, cols;
  std::vector<int> cur;
  choose(t, c, 0, cur, rows);
  choose(e, c, 0, cur, cols);
  std::vector<Polynomial> minors;
  for (const auto& R : rows) {
    for (const auto& C : cols) {
      std::vector<std::vector<Polynomial>> sub(c, std::vector<Polynomial>(c, Polynomial::zero(A)));
      for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) sub[i][j] = jac[R[i]][C[j]];
      Polynomial d = poly_det(A, sub);
      if (!d.is_zero()) minors.push_back(std::move(d));
    }
  }
  return RingIdeal(ring, std::move(minors));
}

std::vector<Polynomial> ring_map_kernel(const RingP& source, const PRingP& target,
                                        const std::vector<Polynomial>& images) {
  const RingP& T = target->ambient();
  if (static_cast<int>(images.size()) != source->nvars())
    throw DomainError("one image per source variable required");
  if (source->field().kind() != T->field().kind())
    throw DomainError("ring map between different coefficient fields");
  const int et = T->nvars();
  const int es = source->nvars();
  std::vector<std::string> names = T->names();
  for (const auto& n : source->names()) {
    if (T->var_index(n) >= 0)
      throw DomainError("variable name collision in ring map kernel");
    names.push_back(n);
  }
  std::vector<int> weights = T->weights();
  weights.insert(weights.end(), source->weights().begin(), source->weights().end());
  MonomialOrder ord = MonomialOrder::make_block_elimination(weights, et);
  RingP C = PolyRing::make_with_order(T->field(), std::move(names), std::move(weights), ord,
                                      std::max(T->max_working_degree(),
                                               source->max_working_degree()));

  std::vector<int> t_to_c(et);
  for (int i = 0; i < et; ++i) t_to_c[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& r : target->relations().elements()) gens.push_back(remap(r, C, t_to_c));
  for (int j = 0; j < es; ++j) {
    require_same_ring(T, images[j].ring());
    Polynomial y = Polynomial::variable(C, et + j);
    gens.push_back(y - remap(images[j], C, t_to_c));
  }

  GroebnerBasis gb = buchberger(C, gens);
  std::vector<int> c_to_s(et + es, -1);
  for (int j = 0; j < es; ++j) c_to_s[et + j] = j;
  std::vector<Polynomial> out;
  for (const auto& f : elimination_slice(gb)) out.push_back(remap(f, source, c_to_s));
  return out;
}

}  // namespace chernlab

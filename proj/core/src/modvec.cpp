#include "chernlab/modvec.hpp"

#include <algorithm>
#include <sstream>

namespace chernlab {

MOrdP ModuleOrder::top(MonomialOrder ring_order) {
  return MOrdP(new ModuleOrder(Kind::top, std::move(ring_order)));
}

MOrdP ModuleOrder::graph(MonomialOrder ring_order, int lead_rank) {
  auto o = new ModuleOrder(Kind::graph, std::move(ring_order));
  o->lead_rank_ = lead_rank;
  return MOrdP(o);
}

MOrdP ModuleOrder::schreyer(MOrdP base, std::vector<std::pair<Monomial, int>> images) {
  if (!base) throw InternalError("schreyer order needs a base order");
  auto o = new ModuleOrder(Kind::schreyer, MonomialOrder::make_lex(1));
  o->base_ = std::move(base);
  o->images_ = std::move(images);
  return MOrdP(o);
}

int ModuleOrder::compare(const Monomial& ma, int ca, const Monomial& mb, int cb) const {
  switch (kind_) {
    case Kind::top: {
      int c = ring_order_.compare(ma, mb);
      if (c) return c;
      if (ca != cb) return ca < cb ? 1 : -1;
      return 0;
    }
    case Kind::graph: {
      bool ga = ca < lead_rank_, gb = cb < lead_rank_;
      if (ga != gb) return ga ? 1 : -1;
      int c = ring_order_.compare(ma, mb);
      if (c) return c;
      if (ca != cb) return ca < cb ? 1 : -1;
      return 0;
    }
    case Kind::schreyer: {
      const auto& ia = images_[ca];
      const auto& ib = images_[cb];
      int c = base_->compare(ma * ia.first, ia.second, mb * ib.first, ib.second);
      if (c) return c;
      if (ca != cb) return ca < cb ? 1 : -1;
      return 0;
    }
  }
  throw InternalError("unknown module order kind");
}

VectorPoly mv_make(const Field& field, const ModuleOrder& ord, std::vector<MTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&](const MTerm& a, const MTerm& b) {
    return ord.compare(a.m, a.comp, b.m, b.comp) > 0;
  });
  std::vector<MTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = field.add(out.back().c, t.c);
      if (field.is_zero(out.back().c)) out.pop_back();
    } else if (!field.is_zero(t.c)) {
      out.push_back(std::move(t));
    }
  }
  return VectorPoly(std::move(out));
}

VectorPoly mv_add(const Field& field, const ModuleOrder& ord, const VectorPoly& a,
                  const VectorPoly& b) {
  std::vector<MTerm> out;
  out.reserve(a.terms().size() + b.terms().size());
  size_t i = 0, j = 0;
  const auto& at = a.terms();
  const auto& bt = b.terms();
  while (i < at.size() && j < bt.size()) {
    int c = ord.compare(at[i].m, at[i].comp, bt[j].m, bt[j].comp);
    if (c > 0) {
      out.push_back(at[i++]);
    } else if (c < 0) {
      out.push_back(bt[j++]);
    } else {
      Scalar s = field.add(at[i].c, bt[j].c);
      if (!field.is_zero(s)) out.push_back({std::move(s), at[i].m, at[i].comp});
      ++i;
      ++j;
    }
  }
  for (; i < at.size(); ++i) out.push_back(at[i]);
  for (; j < bt.size(); ++j) out.push_back(bt[j]);
  return VectorPoly(std::move(out));
}

VectorPoly mv_axpy_sub(const Field& field, const ModuleOrder& ord, const VectorPoly& a,
                       const Scalar& c, const Monomial& m, const VectorPoly& b) {
  std::vector<MTerm> out;
  const auto& at = a.terms();
  const auto& bt = b.terms();
  out.reserve(at.size() + bt.size());
  size_t i = 0, j = 0;
  while (i < at.size() && j < bt.size()) {
    Monomial bm = bt[j].m * m;
    int cmp = ord.compare(at[i].m, at[i].comp, bm, bt[j].comp);
    if (cmp > 0) {
      out.push_back(at[i++]);
    } else if (cmp < 0) {
      out.push_back({field.neg(field.mul(c, bt[j].c)), std::move(bm), bt[j].comp});
      ++j;
    } else {
      Scalar s = field.sub(at[i].c, field.mul(c, bt[j].c));
      if (!field.is_zero(s)) out.push_back({std::move(s), at[i].m, at[i].comp});
      ++i;
      ++j;
    }
  }
  for (; i < at.size(); ++i) out.push_back(at[i]);
  for (; j < bt.size(); ++j)
    out.push_back({field.neg(field.mul(c, bt[j].c)), bt[j].m * m, bt[j].comp});
  return VectorPoly(std::move(out));
}

VectorPoly mv_scale(const Field& field, const VectorPoly& a, const Scalar& c) {
  if (field.is_zero(c)) return VectorPoly();
  std::vector<MTerm> out;
  out.reserve(a.terms().size());
  for (const auto& t : a.terms()) out.push_back({field.mul(t.c, c), t.m, t.comp});
  return VectorPoly(std::move(out));
}

VectorPoly mv_negate(const Field& field, const VectorPoly& a) {
  std::vector<MTerm> out;
  out.reserve(a.terms().size());
  for (const auto& t : a.terms()) out.push_back({field.neg(t.c), t.m, t.comp});
  return VectorPoly(std::move(out));
}

bool mv_equal(const Field& field, const VectorPoly& a, const VectorPoly& b) {
  if (a.terms().size() != b.terms().size()) return false;
  for (size_t i = 0; i < a.terms().size(); ++i) {
    const auto& x = a.terms()[i];
    const auto& y = b.terms()[i];
    if (x.comp != y.comp || x.m != y.m || !field.equal(x.c, y.c)) return false;
  }
  return true;
}

VectorPoly mv_from_poly(const Polynomial& f, int comp) {
  std::vector<MTerm> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) out.push_back({t.c, t.m, comp});
  return VectorPoly(std::move(out));
}

Polynomial mv_component(const RingP& ring, const VectorPoly& v, int comp) {
  std::vector<Term> out;
  for (const auto& t : v.terms())
    if (t.comp == comp) out.push_back({t.c, t.m});
  return Polynomial::from_terms(ring, std::move(out));
}

VectorPoly mv_reorder(const Field& field, const ModuleOrder& ord, const VectorPoly& v) {
  return mv_make(field, ord, v.terms());
}

std::string mv_to_string(const RingP& ring, const VectorPoly& v) {
  if (v.is_zero()) return "0";
  std::int32_t maxc = 0;
  for (const auto& t : v.terms()) maxc = std::max(maxc, t.comp);
  std::ostringstream os;
  os << "(";
  for (int c = 0; c <= maxc; ++c) {
    if (c) os << ", ";
    os << mv_component(ring, v, c).to_string();
  }
  os << ")";
  return os.str();
}

}  // namespace chernlab

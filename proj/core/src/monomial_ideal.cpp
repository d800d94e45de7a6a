#include "chernlab/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>

namespace chernlab {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.exponents() < b.exponents();
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& g : gens) {
      if (g == m) continue;
      if (g.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

}  // namespace

MonomialIdeal MonomialIdeal::make(RingP ring, std::vector<Monomial> gens) {
  return MonomialIdeal{std::move(ring), minimalize(std::move(gens))};
}

std::optional<MonomialIdeal> MonomialIdeal::from_ideal(const RingIdeal& I) {
  if (!I.ring()->is_polynomial_ring()) return std::nullopt;
  std::vector<Monomial> gens;
  for (const auto& f : I.gens()) {
    if (!f.is_monomial()) return std::nullopt;
    gens.push_back(f.lm());
  }
  return make(I.ring()->ambient(), std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

RingIdeal MonomialIdeal::to_ideal(const PRingP& pring) const {
  require_same_ring(pring->ambient(), ring);
  std::vector<Polynomial> polys;
  polys.reserve(gens.size());
  for (const auto& m : gens)
    polys.push_back(Polynomial::from_monomial(ring, ring->field().one(), m));
  return RingIdeal(pring, std::move(polys));
}

MonomialIdeal monomial_ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring, b.ring);
  std::vector<Monomial> out;
  for (const auto& f : a.gens)
    for (const auto& g : b.gens) out.push_back(f * g);
  return MonomialIdeal::make(a.ring, std::move(out));
}

MonomialIdeal monomial_ideal_power(const MonomialIdeal& a, int n) {
  if (n <= 0) throw DomainError("monomial ideal power wants a positive exponent");
  MonomialIdeal p = a;
  for (int k = 1; k < n; ++k) p = monomial_ideal_product(p, a);
  return p;
}

namespace {

// Determinant of an integer matrix by cofactor expansion; sizes here stay
// below the grading bound, so 64-bit arithmetic is safe.
std::int64_t int_det(const std::vector<std::vector<std::int64_t>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t det = 0;
  for (int i = 0; i < n; ++i) {
    if (m[i][0] == 0) continue;
    std::vector<std::vector<std::int64_t>> minor;
    minor.reserve(n - 1);
    for (int r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    std::int64_t cof = m[i][0] * int_det(minor);
    det += (i % 2 == 0) ? cof : -cof;
  }
  return det;
}

// Integer normal of the hyperplane spanned by the rows (n-1 rows in n
// columns): component i is the signed maximal minor omitting column i.
std::vector<std::int64_t> hyperplane_normal(const std::vector<std::vector<std::int64_t>>& rows,
                                            int n) {
  std::vector<std::int64_t> w(n, 0);
  for (int skip = 0; skip < n; ++skip) {
    std::vector<std::vector<std::int64_t>> sub;
    sub.reserve(rows.size());
    for (const auto& r : rows) {
      std::vector<std::int64_t> row;
      row.reserve(n - 1);
      for (int j = 0; j < n; ++j)
        if (j != skip) row.push_back(r[j]);
      sub.push_back(std::move(row));
    }
    std::int64_t d = int_det(sub);
    w[skip] = (skip % 2 == 0) ? d : -d;
  }
  return w;
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::vector<std::vector<int>>* sink = &out;
  struct Rec {
    int n, k;
    std::vector<int>* cur;
    std::vector<std::vector<int>>* sink;
    void go(int start) {
      if (static_cast<int>(cur->size()) == k) {
        sink->push_back(*cur);
        return;
      }
      for (int i = start; i < n; ++i) {
        cur->push_back(i);
        go(i + 1);
        cur->pop_back();
      }
    }
  } rec{n, k, &cur, sink};
  rec.go(0);
}

}  // namespace

NewtonRegion::NewtonRegion(const MonomialIdeal& I) : nvars_(I.ring->nvars()) {
  if (I.gens.empty()) throw PreconditionError("Newton region of the zero ideal");
  const int n = nvars_;
  std::vector<std::vector<std::int64_t>> pts;
  for (const auto& g : I.gens) {
    std::vector<std::int64_t> p(n);
    for (int i = 0; i < n; ++i) p[i] = g[i];
    pts.push_back(std::move(p));
  }

  // Candidate facet normals: pick k generator points and n-k coordinate rays
  // whose span is a hyperplane; the region is the set cut out by all valid
  // inequalities obtained this way, since every true facet arises among them.
  std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> found;
  auto add_candidate = [&](std::vector<std::int64_t> w) {
    std::int64_t g = 0;
    for (auto v : w) g = std::gcd(g, std::abs(v));
    if (g == 0) return;
    for (auto& v : w) v /= g;
    bool has_neg = false, has_pos = false;
    for (auto v : w) {
      if (v < 0) has_neg = true;
      if (v > 0) has_pos = true;
    }
    if (has_neg && has_pos) return;
    if (has_neg)
      for (auto& v : w) v = -v;
    std::int64_t c = 0;
    bool first = true;
    for (const auto& p : pts) {
      std::int64_t dot = 0;
      for (int i = 0; i < n; ++i) dot += w[i] * p[i];
      if (first || dot < c) c = dot;
      first = false;
    }
    if (c <= 0) return;  // implied by the orthant constraints
    for (const auto& known : found)
      if (known.first == w && known.second == c) return;
    found.emplace_back(std::move(w), c);
  };

  const int npts = static_cast<int>(pts.size());
  for (int k = 1; k <= std::min(n, npts); ++k) {
    std::vector<std::vector<int>> ptsets, raysets;
    subsets_of_size(npts, k, ptsets);
    subsets_of_size(n, n - k, raysets);
    for (const auto& ps : ptsets) {
      for (const auto& rs : raysets) {
        std::vector<std::vector<std::int64_t>> rows;
        for (size_t i = 1; i < ps.size(); ++i) {
          std::vector<std::int64_t> d(n);
          for (int j = 0; j < n; ++j) d[j] = pts[ps[i]][j] - pts[ps[0]][j];
          rows.push_back(std::move(d));
        }
        for (int r : rs) {
          std::vector<std::int64_t> d(n, 0);
          d[r] = 1;
          rows.push_back(std::move(d));
        }
        add_candidate(hyperplane_normal(rows, n));
      }
    }
  }
  ineqs_ = std::move(found);
}

bool NewtonRegion::contains(const Monomial& m) const {
  for (const auto& [w, c] : ineqs_) {
    std::int64_t dot = 0;
    for (int i = 0; i < nvars_; ++i) dot += w[i] * static_cast<std::int64_t>(m[i]);
    if (dot < c) return false;
  }
  return true;
}

MonomialIdeal monomial_integral_closure(const MonomialIdeal& I) {
  if (I.gens.empty()) return I;
  const int n = I.ring->nvars();
  NewtonRegion region(I);
  // Minimal lattice points all lie in the box bounded by the componentwise
  // maximum of the generators: any point exceeding it in coordinate i stays
  // in the region after subtracting e_i.
  std::vector<std::int32_t> box(n, 0);
  for (const auto& g : I.gens)
    for (int i = 0; i < n; ++i) box[i] = std::max(box[i], g[i]);
  std::vector<Monomial> members;
  Monomial cur(n);
  struct Walk {
    int n;
    const std::vector<std::int32_t>& box;
    const NewtonRegion& region;
    std::vector<Monomial>& members;
    Monomial& cur;
    void go(int i) {
      if (i == n) {
        if (region.contains(cur)) members.push_back(cur);
        return;
      }
      for (std::int32_t v = 0; v <= box[i]; ++v) {
        cur[i] = v;
        go(i + 1);
      }
      cur[i] = 0;
    }
  } walk{n, box, region, members, cur};
  walk.go(0);
  return MonomialIdeal::make(I.ring, std::move(members));
}

RingIdeal integral_closure_power(const RingIdeal& I, int n) {
  if (n <= 0) throw DomainError("closure power wants a positive exponent");
  auto mono = MonomialIdeal::from_ideal(I);
  if (!mono)
    throw PreconditionError("integral closure implemented for monomial ideals only");
  MonomialIdeal closed = monomial_integral_closure(monomial_ideal_power(*mono, n));
  return closed.to_ideal(I.ring());
}

}  // namespace chernlab

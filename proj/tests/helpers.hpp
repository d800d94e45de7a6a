#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "chernlab/bounds.hpp"
#include "chernlab/lab.hpp"
#include "chernlab/modvec.hpp"

namespace chernlab::testing {

inline RingP fp_ring(std::vector<std::string> names, std::vector<int> weights = {}) {
  return PolyRing::make(Field::prime(kDefaultPrime), std::move(names), std::move(weights));
}

inline RingP qq_ring(std::vector<std::string> names, std::vector<int> weights = {}) {
  return PolyRing::make(Field::rationals(), std::move(names), std::move(weights));
}

inline Polynomial pp(const RingP& ring, const std::string& text) {
  return parse_polynomial(ring, text);
}

inline PRingP quot(const RingP& ambient, const std::vector<std::string>& rels) {
  std::vector<Polynomial> v;
  for (const auto& s : rels) v.push_back(pp(ambient, s));
  return PresentedRing::quotient(ambient, std::move(v));
}

inline RingIdeal ideal_in(const PRingP& R, const std::vector<std::string>& gens) {
  return ideal_from_strings(R, gens);
}

inline Monomial random_monomial(int nvars, int maxdeg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dd(0, maxdeg);
  int d = dd(rng);
  Monomial m(nvars);
  std::uniform_int_distribution<int> dv(0, nvars - 1);
  for (int i = 0; i < d; ++i) m[dv(rng)] += 1;
  return m;
}

inline Polynomial random_polynomial(const RingP& ring, int maxdeg, int terms,
                                    std::mt19937_64& rng) {
  const Field& k = ring->field();
  std::uniform_int_distribution<long long> dc(1, 50);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i)
    ts.push_back({k.from_int(dc(rng)), random_monomial(ring->nvars(), maxdeg, rng)});
  return Polynomial::from_terms(ring, std::move(ts));
}

inline Polynomial random_homogeneous(const RingP& ring, int deg, int terms,
                                     std::mt19937_64& rng) {
  const Field& k = ring->field();
  std::uniform_int_distribution<long long> dc(1, 50);
  std::uniform_int_distribution<int> dv(0, ring->nvars() - 1);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m(ring->nvars());
    for (int j = 0; j < deg; ++j) m[dv(rng)] += 1;
    ts.push_back({k.from_int(dc(rng)), m});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

// Random m-primary monomial ideal: one pure power per variable plus extras.
inline std::vector<Monomial> random_mprimary_monomials(int nvars, int maxpow, int extras,
                                                       std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dp(1, maxpow);
  std::vector<Monomial> gens;
  for (int i = 0; i < nvars; ++i) {
    Monomial m(nvars);
    m[i] = dp(rng);
    gens.push_back(m);
  }
  for (int i = 0; i < extras; ++i) {
    Monomial m = random_monomial(nvars, maxpow, rng);
    if (m.is_one()) m[i % nvars] = 1;  // keep the ideal proper
    gens.push_back(m);
  }
  return gens;
}

inline RingIdeal monomials_to_ideal(const PRingP& R, const std::vector<Monomial>& ms) {
  std::vector<Polynomial> gens;
  for (const auto& m : ms)
    gens.push_back(Polynomial::from_monomial(R->ambient(), R->ambient()->field().one(), m));
  return RingIdeal(R, std::move(gens));
}

// Row-echelon accumulator over F_p, independent of the library's arithmetic.
class FpSpan {
public:
  explicit FpSpan(std::uint64_t p) : p_(p) {}

  static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }

  // Reduces v against the stored rows in place; returns true if it vanished.
  bool reduce(std::vector<std::uint64_t>& v) const {
    for (const auto& [lead, row] : rows_) {
      if (v[lead] == 0) continue;
      std::uint64_t c = v[lead];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (p_ - c) * row[j]) % p_;
    }
    for (auto x : v)
      if (x) return false;
    return true;
  }

  // Adds v to the span (no-op when dependent).
  void add(std::vector<std::uint64_t> v) {
    if (reduce(v)) return;
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    std::uint64_t inv = pow_mod(v[lead], p_ - 2, p_);
    for (auto& x : v) x = x * inv % p_;
    rows_[lead] = std::move(v);
  }

  bool member(std::vector<std::uint64_t> v) const { return reduce(v); }

private:
  std::uint64_t p_;
  std::map<std::size_t, std::vector<std::uint64_t>> rows_;  // pivot column -> monic row
};

inline void monomials_of_degree(int nvars, int deg, std::vector<Monomial>& out) {
  std::vector<std::int32_t> e(nvars, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[var] = left;
      out.push_back(Monomial(e));
      return;
    }
    for (int t = 0; t <= left; ++t) {
      e[var] = t;
      self(self, var + 1, left - t);
    }
  };
  rec(rec, 0, deg);
}

// Exact membership oracle for homogeneous ideals: g (homogeneous, deg d) lies
// in (f_1..f_k) iff its coefficient vector lies in the span of all m*f_i of
// degree d.  Works directly on exponent vectors and word arithmetic mod p.
class MacaulayOracle {
public:
  MacaulayOracle(const RingP& ring, const std::vector<Polynomial>& gens, int deg)
      : p_(ring->field().prime_modulus()), span_(p_) {
    monomials_of_degree(ring->nvars(), deg, cols_);
    for (std::size_t j = 0; j < cols_.size(); ++j) index_[cols_[j].exponents()] = j;
    for (const auto& f : gens) {
      if (f.is_zero()) continue;
      const int df = static_cast<int>(f.degree());
      if (df > deg) continue;
      std::vector<Monomial> mults;
      monomials_of_degree(ring->nvars(), deg - df, mults);
      for (const auto& m : mults) {
        std::vector<std::uint64_t> row(cols_.size(), 0);
        for (const auto& t : f.terms()) {
          auto it = index_.find((t.m * m).exponents());
          row[it->second] = (row[it->second] + t.c.fp) % p_;
        }
        span_.add(std::move(row));
      }
    }
  }

  bool member(const Polynomial& g) const {
    std::vector<std::uint64_t> v(cols_.size(), 0);
    for (const auto& t : g.terms()) {
      auto it = index_.find(t.m.exponents());
      if (it == index_.end()) return false;  // wrong degree
      v[it->second] = (v[it->second] + t.c.fp) % p_;
    }
    return span_.member(std::move(v));
  }

private:
  std::uint64_t p_;
  std::vector<Monomial> cols_;
  std::map<std::vector<std::int32_t>, std::size_t> index_;
  FpSpan span_;
};

// Composite of consecutive resolution maps, recomputed from public pieces.
inline bool resolution_is_complex(const FreeResolution& res) {
  const RingP& ring = res.ring;
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i) {
    const auto& A = res.maps[i];
    const auto& B = res.maps[i + 1];
    const int tgt = res.frees[i].rank();
    for (const auto& w : B) {
      std::vector<Polynomial> acc(tgt, Polynomial::zero(ring));
      for (std::size_t c = 0; c < A.size(); ++c) {
        Polynomial wc = mv_component(ring, w, static_cast<int>(c));
        if (wc.is_zero()) continue;
        for (int r = 0; r < tgt; ++r) {
          Polynomial ar = mv_component(ring, A[c], r);
          if (!ar.is_zero()) acc[r] = acc[r] + wc * ar;
        }
      }
      for (const auto& q : acc)
        if (!q.is_zero()) return false;
    }
  }
  return true;
}

inline bool resolution_has_unit_entry(const FreeResolution& res) {
  for (std::size_t i = 0; i < res.maps.size(); ++i)
    for (const auto& col : res.maps[i])
      for (int r = 0; r < res.frees[i].rank(); ++r) {
        Polynomial e = mv_component(res.ring, col, r);
        if (!e.is_zero() && e.is_constant()) return true;
      }
  return false;
}

inline const BoundReport& report_named(const std::vector<BoundReport>& reps,
                                       const std::string& name) {
  for (const auto& r : reps)
    if (r.name == name) return r;
  throw InternalError("missing bound report: " + name);
}

}  // namespace chernlab::testing

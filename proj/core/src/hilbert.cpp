#include "chernlab/hilbert.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <sstream>

namespace chernlab {

std::int64_t small_binomial(std::int64_t n, int k) {
  if (k < 0 || n < 0) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  if (!b.fits_slong_p()) throw ResourceError("binomial coefficient overflow");
  return b.get_si();
}

struct GoodFiltration::Impl {
  std::string kind;
  RingIdeal seed;
  // deque so references handed out by at() survive later materializations
  std::deque<RingIdeal> cache;  // cache[n] = A_n
  std::function<RingIdeal(const RingIdeal&, int)> materialize;

  Impl(std::string k, RingIdeal s) : kind(std::move(k)), seed(std::move(s)) {}
};

GoodFiltration GoodFiltration::adic(RingIdeal I) {
  GoodFiltration F;
  F.impl_ = std::make_shared<Impl>("adic", std::move(I));
  return F;
}

GoodFiltration GoodFiltration::closure_powers(RingIdeal I) {
  if (!MonomialIdeal::from_ideal(I))
    throw PreconditionError("closure filtration implemented for monomial ideals only");
  GoodFiltration F;
  F.impl_ = std::make_shared<Impl>("closure", std::move(I));
  return F;
}

const PRingP& GoodFiltration::ring() const { return impl_->seed.ring(); }
const RingIdeal& GoodFiltration::seed() const { return impl_->seed; }
const std::string& GoodFiltration::kind() const { return impl_->kind; }

const RingIdeal& GoodFiltration::at(int n) const {
  if (n < 0) throw DomainError("negative filtration index");
  auto& cache = impl_->cache;
  if (cache.empty())
    cache.push_back(ideal_power(impl_->seed, 0));  // A_0 = R
  while (static_cast<int>(cache.size()) <= n) {
    int k = static_cast<int>(cache.size());
    if (impl_->kind == "adic") {
      cache.push_back(k == 1 ? impl_->seed : ideal_product(cache[k - 1], impl_->seed));
    } else {
      cache.push_back(integral_closure_power(impl_->seed, k));
    }
  }
  return cache[n];
}

void GoodFiltration::verify_prefix(int N) const {
  for (int n = 1; n <= N; ++n) {
    if (!at(n - 1).contains_ideal(at(n)))
      throw PreconditionError("filtration is not decreasing at index " + std::to_string(n));
  }
  for (int a = 1; a + 1 <= N; ++a) {
    for (int b = a; a + b <= N; ++b) {
      RingIdeal prod = ideal_product(at(a), at(b));
      if (!at(a + b).contains_ideal(prod))
        throw PreconditionError("filtration is not multiplicative at (" + std::to_string(a) +
                                ", " + std::to_string(b) + ")");
    }
  }
}

HilbertSamuelTable hs_table(const GoodFiltration& F, int N) {
  if (!F.at(1).is_m_primary())
    throw PreconditionError(
        "filtration level 1 is not primary for the maximal ideal; lengths are infinite");
  HilbertSamuelTable T;
  T.dim = F.ring()->dim();
  T.lengths.reserve(N + 1);
  for (int n = 0; n <= N; ++n) T.lengths.push_back(F.at(n + 1).length());
  return T;
}

std::int64_t eval_binomial_fit(const std::vector<std::int64_t>& e, int n) {
  const int d = static_cast<int>(e.size()) - 1;
  std::int64_t v = 0;
  for (int i = 0; i <= d; ++i) {
    std::int64_t term = e[i] * small_binomial(n + d - i, d - i);
    v += (i % 2 == 0) ? term : -term;
  }
  return v;
}

std::optional<BinomialFit> fit_binomial(const std::vector<std::int64_t>& H, int d, int guard) {
  const int N = static_cast<int>(H.size()) - 1;
  if (d < 0 || N + 1 < d + 1 + guard) return std::nullopt;
  const int lo = N - d;  // fit window is n = lo..N

  // Exact solve of the (d+1)x(d+1) system in the alternating binomial basis.
  std::vector<std::vector<mpq_class>> A(d + 1, std::vector<mpq_class>(d + 2));
  for (int j = 0; j <= d; ++j) {
    int n = lo + j;
    for (int i = 0; i <= d; ++i) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + d - i),
                   static_cast<unsigned long>(d - i));
      A[j][i] = (i % 2 == 0) ? mpq_class(b) : mpq_class(-b);
    }
    A[j][d + 1] = H[static_cast<size_t>(n)];
  }
  for (int col = 0; col <= d; ++col) {
    int piv = -1;
    for (int r = col; r <= d; ++r)
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(A[col], A[piv]);
    for (int r = 0; r <= d; ++r) {
      if (r == col || A[r][col] == 0) continue;
      mpq_class f = A[r][col] / A[col][col];
      for (int c = col; c <= d + 1; ++c) A[r][c] -= f * A[col][c];
    }
  }
  BinomialFit fit;
  fit.e.resize(d + 1);
  for (int i = 0; i <= d; ++i) {
    mpq_class v = A[i][d + 1] / A[i][i];
    v.canonicalize();
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return std::nullopt;
    fit.e[i] = v.get_num().get_si();
  }

  int n0 = lo;
  while (n0 > 0 && eval_binomial_fit(fit.e, n0 - 1) == H[static_cast<size_t>(n0 - 1)]) --n0;
  if (n0 > lo - guard) return std::nullopt;
  fit.n0 = n0;
  return fit;
}

ChernCoefficients chern_coefficients(const GoodFiltration& F) {
  const int d = std::max(F.ring()->dim(), 0);
  int N = std::max(2 * d + 4, d + kStabilizationGuard + 1);
  HilbertSamuelTable T = hs_table(F, N);
  for (;;) {
    auto fit = fit_binomial(T.lengths, d, kStabilizationGuard);
    if (fit) {
      ChernCoefficients out;
      out.e = std::move(fit->e);
      out.n0 = fit->n0;
      out.table = std::move(T);
      return out;
    }
    if (N >= kMaxTableIndex)
      throw StabilizationError(
          "Hilbert function did not stabilize to a polynomial by index " +
          std::to_string(kMaxTableIndex) +
          "; the filtration may not be good for this ring");
    int grow = std::min(N + 2, kMaxTableIndex);
    for (int n = N + 1; n <= grow; ++n) T.lengths.push_back(F.at(n + 1).length());
    N = grow;
  }
}

FiltrationComparison compare_filtrations(const GoodFiltration& A, const GoodFiltration& B) {
  require_same_presented_ring(A.ring(), B.ring());
  FiltrationComparison cmp;
  cmp.inner = chern_coefficients(A);
  cmp.outer = chern_coefficients(B);
  size_t upto = std::min(cmp.inner.table.lengths.size(), cmp.outer.table.lengths.size());
  cmp.contained = true;
  for (size_t n = 1; n <= upto; ++n)
    if (!B.at(static_cast<int>(n)).contains_ideal(A.at(static_cast<int>(n)))) {
      cmp.contained = false;
      break;
    }
  cmp.first_length_difference = -1;
  for (size_t n = 0; n < upto; ++n) {
    if (cmp.inner.table.lengths[n] != cmp.outer.table.lengths[n]) {
      cmp.first_length_difference = static_cast<int>(n);
      break;
    }
  }
  return cmp;
}

}  // namespace chernlab

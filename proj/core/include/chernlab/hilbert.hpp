#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chernlab/monomial_ideal.hpp"

namespace chernlab {

std::int64_t small_binomial(std::int64_t n, int k);

// Multiplicative decreasing filtration A_0 = R, A_1 supseteq A_2 supseteq ...
// with A_m A_n inside A_{m+n}, materialized lazily with a shared cache.  The
// two built-in families are the I-adic powers and the integral closures of
// the powers of a monomial ideal.
class GoodFiltration {
public:
  static GoodFiltration adic(RingIdeal I);
  static GoodFiltration closure_powers(RingIdeal I);

  const PRingP& ring() const;
  const RingIdeal& seed() const;  // A_1's defining ideal I
  const std::string& kind() const;
  const RingIdeal& at(int n) const;

  // Containment and multiplicativity spot checks on A_1..A_N; throws
  // PreconditionError on the first violation.
  void verify_prefix(int N) const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// lengths[n] = lambda(R/A_{n+1}) for n = 0..N.
struct HilbertSamuelTable {
  std::vector<std::int64_t> lengths;
  int dim = 0;
};

HilbertSamuelTable hs_table(const GoodFiltration& F, int N);

struct BinomialFit {
  std::vector<std::int64_t> e;  // e[0..d], signs as in the alternating binomial basis
  int n0 = 0;                   // earliest n from which the polynomial matches
};

// Evaluates sum_i (-1)^i e[i] C(n + d - i, d - i).
std::int64_t eval_binomial_fit(const std::vector<std::int64_t>& e, int n);

// Fits the last d+1 table entries exactly in the alternating binomial basis
// and demands that the `guard` preceding entries agree as well.  Returns
// nullopt when the table is too short, the guard fails, or the solved
// coefficients are not integers (all signs that the window is still in the
// pre-polynomial regime).
std::optional<BinomialFit> fit_binomial(const std::vector<std::int64_t>& H, int d, int guard);

struct ChernCoefficients {
  std::vector<std::int64_t> e;
  int n0 = 0;
  HilbertSamuelTable table;  // table actually used, after any extension
};

inline constexpr int kStabilizationGuard = 3;
inline constexpr int kMaxTableIndex = 40;

// Chern coefficients e_0..e_d of the filtration, d = dim R.  The table grows
// until the fit stabilizes; StabilizationError reports failure to stabilize
// by index kMaxTableIndex.
ChernCoefficients chern_coefficients(const GoodFiltration& F);

struct FiltrationComparison {
  ChernCoefficients inner;  // coefficients of A
  ChernCoefficients outer;  // coefficients of B
  bool contained = false;   // A_n inside B_n on the inspected range
  int first_length_difference = -1;  // -1 when the tables agree
};

FiltrationComparison compare_filtrations(const GoodFiltration& A, const GoodFiltration& B);

}  // namespace chernlab

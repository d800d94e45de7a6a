#include "chernlab/monomial.hpp"

namespace chernlab {

MonomialOrder MonomialOrder::make_grevlex(std::vector<int> weights) {
  for (int w : weights)
    if (w <= 0) throw DomainError("grading weights must be positive");
  return MonomialOrder(Kind::grevlex, std::move(weights), 0);
}

MonomialOrder MonomialOrder::make_lex(int nvars) {
  return MonomialOrder(Kind::lex, std::vector<int>(nvars, 1), 0);
}

MonomialOrder MonomialOrder::make_block_elimination(std::vector<int> weights, int first_block) {
  if (first_block <= 0 || first_block >= static_cast<int>(weights.size()))
    throw DomainError("elimination block must be a proper nonempty prefix");
  for (int w : weights)
    if (w <= 0) throw DomainError("grading weights must be positive");
  return MonomialOrder(Kind::block, std::move(weights), first_block);
}

namespace {

// Weighted grevlex on the variable range [lo, hi): higher weighted degree
// wins; on ties the last variable with differing exponent decides, the
// smaller exponent winning.
int grevlex_range(const Monomial& a, const Monomial& b, const std::vector<int>& w, int lo,
                  int hi) {
  std::int64_t da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += static_cast<std::int64_t>(a[i]) * w[i];
    db += static_cast<std::int64_t>(b[i]) * w[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const int n = nvars();
  if (a.nvars() != n || b.nvars() != n)
    throw ContextError("monomials compared under an order for a different ring");
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_range(a, b, weights_, 0, n);
    case Kind::lex:
      for (int i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case Kind::block: {
      int c = grevlex_range(a, b, weights_, 0, first_block_);
      if (c) return c;
      return grevlex_range(a, b, weights_, first_block_, n);
    }
  }
  throw InternalError("unknown monomial order kind");
}

}  // namespace chernlab

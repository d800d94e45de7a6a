#include "chernlab/degrees.hpp"

#include <sstream>

namespace chernlab {

namespace {

std::string module_key(const PModule& M) {
  std::ostringstream os;
  for (auto s : M.free().shifts) os << s << ';';
  os << '|';
  for (const auto& v : M.basis().gens) os << mv_to_string(M.ring(), v) << '|';
  return os.str();
}

struct DegreeContext {
  std::optional<RingIdeal> rel;  // lifted multiplicity ideal, over the ambient ring
  std::map<std::string, DegreeNode> memo;

  DegreeNode run(const PModule& M, const std::string& label) {
    std::string key = module_key(M);
    auto hit = memo.find(key);
    if (hit != memo.end()) {
      DegreeNode node = hit->second;
      node.label = label;
      return node;
    }

    DegreeNode node;
    node.label = label;
    node.dim = M.dim();
    if (M.is_zero()) {
      node.finite_length = true;
    } else if (node.dim <= 0) {
      node.finite_length = true;
      node.base = M.length();
      node.hdeg = node.base;
    } else {
      node.base = rel ? module_multiplicity(M, *rel) : module_degree(M);
      node.hdeg = node.base;
      const int d = node.dim;
      const int r = M.ring()->nvars();
      FreeResolution res = free_resolution(M);
      for (int i = r - d + 1; i <= r; ++i) {
        PModule E = ext_module(res, i);
        if (E.is_zero()) continue;
        std::int64_t w = small_binomial(d - 1, i - r + d - 1);
        DegreeNode child = run(E, "Ext^" + std::to_string(i));
        node.hdeg += w * child.hdeg;
        node.ext.emplace_back(w, std::move(child));
      }
    }
    memo.emplace(std::move(key), node);
    return node;
  }
};

RingIdeal lift_to_ambient(const RingIdeal& I) {
  PRingP S = PresentedRing::polynomial_ring(I.ring()->ambient());
  return RingIdeal(std::move(S), I.full_gb().elements());
}

}  // namespace

DegreeReport hdeg_report(const PModule& M) {
  DegreeContext ctx;
  DegreeReport rep;
  rep.root = ctx.run(M, "M");
  rep.deg = rep.root.base;
  rep.hdeg = rep.root.hdeg;
  return rep;
}

DegreeReport hdeg_report(const PModule& M, const RingIdeal& I) {
  if (!I.is_m_primary()) throw PreconditionError("hdeg_I needs an m-primary ideal");
  DegreeContext ctx;
  ctx.rel = lift_to_ambient(I);
  DegreeReport rep;
  rep.relative = true;
  rep.root = ctx.run(M, "M");
  rep.deg = rep.root.base;
  rep.hdeg = rep.root.hdeg;
  return rep;
}

std::int64_t hdeg_value(const PModule& M) { return hdeg_report(M).hdeg; }

std::int64_t hdeg_value(const PModule& M, const RingIdeal& I) { return hdeg_report(M, I).hdeg; }

std::int64_t hdeg_ring(const PRingP& R) { return hdeg_value(PModule::ring_quotient(R)); }

std::int64_t hdeg_ring(const PRingP& R, const RingIdeal& I) {
  return hdeg_value(PModule::ring_quotient(R), I);
}

int ring_depth(const PRingP& R) { return module_depth(PModule::ring_quotient(R)); }

bool is_cm_ring(const PRingP& R) { return ring_depth(R) == R->dim(); }

bool is_cm_module(const PModule& M) {
  if (M.is_zero()) return true;
  return module_depth(M) == std::max(M.dim(), 0);
}

std::optional<std::vector<std::int64_t>> below_top_cohomology(const PRingP& R) {
  PModule M = PModule::ring_quotient(R);
  const int d = R->dim();
  std::vector<std::int64_t> H;
  for (int i = 0; i < d; ++i) {
    auto len = local_cohomology_length(M, i);
    if (!len) return std::nullopt;
    H.push_back(*len);
  }
  return H;
}

bool is_generalized_cm(const PRingP& R) { return below_top_cohomology(R).has_value(); }

std::optional<std::int64_t> t_invariant(const PRingP& R) {
  auto H = below_top_cohomology(R);
  if (!H) return std::nullopt;
  const int d = R->dim();
  std::int64_t T = 0;
  for (int i = 1; i <= d - 1; ++i) T += small_binomial(d - 2, i - 1) * (*H)[i];
  return T;
}

}  // namespace chernlab

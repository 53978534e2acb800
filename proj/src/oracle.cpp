#include "mincirc/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mincirc::oracle {

namespace {

void checkLimit(Var universe, Var limit) {
  if (universe > limit)
    throw std::invalid_argument("universe too large for brute-force oracle (" +
                                std::to_string(universe) + " > " +
                                std::to_string(limit) + ")");
}

// Bit (v-1) of the mask holds variable v; enumerating masks with x1 as the
// most significant bit yields lexicographic order of (x1, ..., xn).
Assignment fromMask(Var universe, std::uint32_t mask) {
  Assignment a(universe);
  for (Var v = 1; v <= universe; ++v)
    a.set(v, (mask >> (universe - v)) & 1);
  return a;
}

}  // namespace

std::vector<Assignment> allModels(const CnfFormula& phi, Var limit) {
  checkLimit(phi.universe(), limit);
  std::vector<Assignment> models;
  std::uint64_t total = std::uint64_t(1) << phi.universe();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Assignment a = fromMask(phi.universe(), static_cast<std::uint32_t>(mask));
    if (evaluate(a, phi)) models.push_back(std::move(a));
  }
  return models;
}

std::vector<Assignment> minimalModels(const CnfFormula& phi, const Partition& part,
                                      Var limit) {
  checkLimit(phi.universe(), limit);
  if (part.universe() != phi.universe())
    throw std::invalid_argument("partition universe mismatch");
  std::vector<Assignment> models = allModels(phi, limit);
  std::vector<Assignment> minimal;
  for (const Assignment& m : models) {
    bool isMin = std::none_of(models.begin(), models.end(), [&](const Assignment& n) {
      return strictlySmaller(n, m, part);
    });
    if (isMin) minimal.push_back(m);
  }
  return minimal;
}

bool entailsMinBf(const CnfFormula& phi, const BoolExpr& psi, const Partition& part,
                  Var limit) {
  Var universe = std::max(phi.universe(), psi.maxVar());
  CnfFormula ext = phi;
  ext.extendUniverse(universe);
  Partition p = part;
  p.extendTo(universe);
  for (const Assignment& m : minimalModels(ext, p, limit))
    if (!evaluate(m, psi)) return false;
  return true;
}

std::vector<Var> ffnBf(const CnfFormula& phi, Var limit) {
  auto minimal = minimalModels(phi, Partition::allMinimized(phi.universe()), limit);
  std::vector<Var> free;
  for (Var v = 1; v <= phi.universe(); ++v) {
    bool alwaysZero = std::none_of(minimal.begin(), minimal.end(),
                                   [&](const Assignment& m) { return m.value(v); });
    if (alwaysZero) free.push_back(v);
  }
  return free;
}

bool gcwaFreeCheckBf(const CnfFormula& phi, Var x, Var limit) {
  checkLimit(phi.universe(), limit);
  if (x < 1 || x > phi.universe())
    throw std::invalid_argument("variable outside formula universe");

  Var n = phi.universe();
  // Models as bitmasks with bit (v-1) for variable v.
  std::vector<std::uint32_t> models;
  std::uint64_t total = std::uint64_t(1) << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Assignment a(n);
    for (Var v = 1; v <= n; ++v) a.set(v, (mask >> (v - 1)) & 1);
    if (evaluate(a, phi)) models.push_back(static_cast<std::uint32_t>(mask));
  }

  auto entailsPositive = [&](std::uint32_t clauseMask) {
    return std::all_of(models.begin(), models.end(),
                       [&](std::uint32_t m) { return (m & clauseMask) != 0; });
  };

  std::uint32_t xBit = std::uint32_t(1) << (x - 1);
  for (std::uint64_t b = 0; b < total; ++b) {
    auto bMask = static_cast<std::uint32_t>(b);
    if (!entailsPositive(bMask) && entailsPositive(bMask | xBit)) return false;
  }
  return true;
}

bool isMinimalModel(const CnfFormula& phi, const Assignment& nu,
                    const Partition& part, Var limit) {
  checkLimit(phi.universe(), limit);
  if (!evaluate(nu, phi))
    throw std::invalid_argument("assignment is not a model of the formula");
  for (const Assignment& m : allModels(phi, limit))
    if (strictlySmaller(m, nu, part)) return false;
  return true;
}

}  // namespace mincirc::oracle

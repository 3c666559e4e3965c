#pragma once

// Change-of-variables total partition function for the flop chain of
// C_{1,n}. The resolutions T = {1}, {2}, ..., {n+1} are linked by flops;
// step r flops edge e_r, which inverts exactly that curve variable.

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "factor_list.hpp"
#include "mmalgebra.hpp"
#include "strip.hpp"

namespace conifold_dt {

/// Images of the local basis variables in the fixed basis Q^o.
struct BasisMap {
  std::vector<LaurentMonomial> images;

  LaurentMonomial apply(const LaurentMonomial& local) const {
    LaurentMonomial out(images.size());
    for (std::size_t k = 0; k < local.size(); ++k)
      if (local.exponents[k] != 0) out *= images[k].pow(local.exponents[k]);
    return out;
  }
};

inline StripDiagram flop_chain_diagram(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "flop chain needs n >= 1");
  return StripDiagram(1, n);
}

inline void require_flop_chain(const StripDiagram& d) {
  if (d.m() != 1)
    throw Error(ErrorKind::unsupported_diagram,
                "variable identification is only known for C_{1,n} chains (got m=" +
                    std::to_string(d.m()) + ")");
  if (d.n() < 1) throw Error(ErrorKind::invalid_argument, "flop chain needs n >= 1");
}

/// Chain position t (0-based) is the resolution T = {t+1}.
inline std::vector<Triangulation> flop_chain(const StripDiagram& d) {
  require_flop_chain(d);
  std::vector<Triangulation> out;
  for (int t = 1; t <= d.faces(); ++t) out.emplace_back(d, std::vector<int>{t});
  return out;
}

inline std::vector<BasisMap> flop_chain_bases(const StripDiagram& d) {
  require_flop_chain(d);
  const auto vars = static_cast<std::size_t>(d.interior_edges());
  BasisMap current;
  for (std::size_t k = 0; k < vars; ++k)
    current.images.push_back(LaurentMonomial::variable(vars, static_cast<int>(k + 1)));

  std::vector<BasisMap> out{current};
  for (std::size_t r = 0; r < vars; ++r) {
    current.images[r] = current.images[r].inverse();
    out.push_back(current);
  }
  return out;
}

inline std::vector<BasisMap> flop_chain_bases(int n) {
  return flop_chain_bases(flop_chain_diagram(n));
}

/// One resolution's topological partition function written in the fixed
/// basis: reduced factors mapped through `basis`, plus M(1,q)^{chi/2}.
inline SignedFactorList flop_contribution(const Triangulation& t, const BasisMap& basis) {
  const auto vars = static_cast<std::size_t>(t.diagram().interior_edges());
  SignedFactorList out(vars);
  const ExponentMap z = reduced_partition(t);
  for (const auto& [p, e] : z.factors())
    out.add(basis.apply(path_monomial(vars, p)), e);
  out.set_m1_power(Rational(BigInt(t.diagram().faces()), BigInt(2)));
  return out;
}

inline std::vector<SignedFactorList> flop_contributions(int n) {
  const StripDiagram d = flop_chain_diagram(n);
  const auto chain = flop_chain(d);
  const auto bases = flop_chain_bases(d);
  std::vector<SignedFactorList> out;
  for (std::size_t t = 0; t < chain.size(); ++t)
    out.push_back(flop_contribution(chain[t], bases[t]));
  return out;
}

/// Z^a_tot(C_{1,n}) after cancellation.
inline SignedFactorList flop_total(int n) {
  SignedFactorList out(static_cast<std::size_t>(flop_chain_diagram(n).interior_edges()));
  for (const auto& c : flop_contributions(n)) out += c;
  return out;
}

}  // namespace conifold_dt

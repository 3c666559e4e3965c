#pragma once

// Independent reference computations used by the verification suite and the
// tests. Each one follows a different route from the production code: plain
// subset filtering instead of combination stepping, the exp/double-sum form
// of the MacMahon function instead of the product form, and so on.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "binomial.hpp"
#include "factor_list.hpp"
#include "mmalgebra.hpp"
#include "partial.hpp"
#include "qseries.hpp"
#include "strip.hpp"

namespace conifold_dt::oracle {

/// All m-subsets of {1..N}, found by scanning every bitmask, sorted
/// lexicographically as tuples.
inline std::vector<std::vector<int>> subsets_bruteforce(int N, int m) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
    if (std::popcount(mask) != m) continue;
    std::vector<int> s;
    for (int k = 1; k <= N; ++k)
      if (mask >> (k - 1) & 1U) s.push_back(k);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Exponent of M(Q_ij) for one top set, multiplying edge types one by one.
inline int path_exponent(const std::vector<int>& top, int i, int j) {
  auto in = [&](int k) { return std::find(top.begin(), top.end(), k) != top.end(); };
  int e = 1;
  for (int k = i; k <= j; ++k) e *= (in(k) == in(k + 1)) ? 1 : -1;
  return e;
}

inline ExponentMap total_partition_bruteforce(const StripDiagram& d) {
  ExponentMap out(d);
  for (const auto& top : subsets_bruteforce(d.faces(), d.m()))
    for (int i = 1; i <= d.interior_edges(); ++i)
      for (int j = i; j <= d.interior_edges(); ++j) out.add({i, j}, path_exponent(top, i, j));
  return out;
}

/// Restricted total by filtering all m-subsets on per-block top counts.
inline ExponentMap restricted_total_bruteforce(const BlockDecomposition& dec) {
  const StripDiagram& d = dec.diagram();
  ExponentMap out(d);
  for (const auto& top : subsets_bruteforce(d.faces(), d.m())) {
    bool ok = true;
    int lo = 0;
    for (std::size_t k = 0; k < dec.size() && ok; ++k) {
      const int hi = lo + dec.blocks()[k].first + dec.blocks()[k].second;
      const auto cnt = std::count_if(top.begin(), top.end(), [&](int t) { return lo < t && t <= hi; });
      ok = cnt == dec.blocks()[k].first;
      lo = hi;
    }
    if (!ok) continue;
    for (int i = 1; i <= d.interior_edges(); ++i)
      for (int j = i; j <= d.interior_edges(); ++j) out.add({i, j}, path_exponent(top, i, j));
  }
  return out;
}

inline std::size_t restricted_count_bruteforce(const BlockDecomposition& dec) {
  std::size_t n = 0;
  for (const auto& top : subsets_bruteforce(dec.diagram().faces(), dec.diagram().m())) {
    int lo = 0;
    bool ok = true;
    for (std::size_t k = 0; k < dec.size() && ok; ++k) {
      const int hi = lo + dec.blocks()[k].first + dec.blocks()[k].second;
      ok = std::count_if(top.begin(), top.end(), [&](int t) { return lo < t && t <= hi; }) ==
           dec.blocks()[k].first;
      lo = hi;
    }
    n += ok ? 1 : 0;
  }
  return n;
}

/// M(x, q) from exp(sum_{i,j>=1} (i/j) x^j q^{ij}), expanded with rational
/// arithmetic through E' = L' E.
inline QSeries macmahon_exp_form(const LaurentMonomial& x, int order) {
  const auto K = static_cast<std::size_t>(order);
  // log[t][j]: coefficient of x^j q^t.
  std::vector<std::vector<Rational>> log(K + 1, std::vector<Rational>(K + 1, Rational(0)));
  for (std::size_t i = 1; i <= K; ++i)
    for (std::size_t j = 1; i * j <= K; ++j) {
      Rational c(BigInt(static_cast<long>(i)), BigInt(static_cast<long>(j)));
      c.canonicalize();
      log[i * j][j] += c;
    }
  std::vector<std::vector<Rational>> ex(K + 1, std::vector<Rational>(K + 1, Rational(0)));
  ex[0][0] = 1;
  for (std::size_t t = 1; t <= K; ++t) {
    for (std::size_t s = 1; s <= t; ++s)
      for (std::size_t a = 0; a <= K; ++a) {
        if (log[s][a] == 0) continue;
        for (std::size_t b = 0; a + b <= K; ++b) {
          if (ex[t - s][b] == 0) continue;
          ex[t][a + b] += Rational(static_cast<long>(s)) * log[s][a] * ex[t - s][b];
        }
      }
    for (auto& c : ex[t]) {
      c /= static_cast<long>(t);
      c.canonicalize();
    }
  }
  QSeries out(order, x.size());
  for (std::size_t t = 0; t <= K; ++t)
    for (std::size_t j = 0; j <= K; ++j) {
      if (ex[t][j] == 0) continue;
      if (ex[t][j].get_den() != 1)
        throw Error(ErrorKind::invalid_argument, "non-integral MacMahon coefficient");
      out.add_term(static_cast<int>(t), x.pow(static_cast<int>(j)), ex[t][j].get_num());
    }
  return out;
}

/// prod_{1 <= i <= j <= N_E} M(Q_ij, q)^degree.
inline QSeries homogeneous_product_series(const StripDiagram& d, const BigInt& degree, int order) {
  const auto vars = static_cast<std::size_t>(d.interior_edges());
  QSeries prod = QSeries::one(order, vars);
  for (const EdgePath& p : edge_path_list(d))
    prod = series_multiply(prod, macmahon_series(path_monomial(vars, p), order));
  return series_power(prod, degree);
}

/// s * M(x, q) and s / M(x, q), one (1 - x q^k) factor at a time.
inline QSeries multiply_by_geometric_product(QSeries s, const LaurentMonomial& x) {
  for (int k = 1; k <= s.order(); ++k) s = multiply_by_geometric(std::move(s), x, k, k);
  return s;
}

inline QSeries multiply_by_binomial_product(QSeries s, const LaurentMonomial& x) {
  for (int k = 1; k <= s.order(); ++k) s = multiply_by_binomial(std::move(s), x, k, k);
  return s;
}

/// prod_T Z'_T as series, never forming the summed exponent map.
inline QSeries per_triangulation_product_series(const StripDiagram& d, int order) {
  const auto vars = static_cast<std::size_t>(d.interior_edges());
  QSeries prod = QSeries::one(order, vars);
  for (const auto& top : subsets_bruteforce(d.faces(), d.m())) {
    for (int i = 1; i <= d.interior_edges(); ++i)
      for (int j = i; j <= d.interior_edges(); ++j) {
        const LaurentMonomial x = path_monomial(vars, {i, j});
        prod = path_exponent(top, i, j) > 0
                   ? multiply_by_geometric_product(std::move(prod), x)
                   : multiply_by_binomial_product(std::move(prod), x);
      }
  }
  return prod;
}

/// Z^a_tot(C_{1,3}) after cancellation, as the reference list gives it:
/// numerator factors carry +1, denominator factors -1, with M(1,q)^8.
inline SignedFactorList flop_c13_reference() {
  SignedFactorList out(3);
  const std::vector<std::pair<std::vector<int>, int>> terms = {
      {{-1, 0, 0}, 1},  {{-1, 1, 0}, 1},   {{-1, 1, 1}, 1},    // M(Q1^-1) M(Q1^-1Q2) M(Q1^-1Q2Q3)
      {{1, 0, 0}, -1},  {{1, 1, 0}, -1},   {{1, 1, 1}, -1},    // / M(Q1) M(Q1Q2) M(Q1Q2Q3)
      {{0, 0, 1}, 1},   {{0, -1, 1}, 1},   {{-1, -1, 1}, 1},   // M(Q3) M(Q2^-1Q3) M(Q1^-1Q2^-1Q3)
      {{0, 0, -1}, -1}, {{0, -1, -1}, -1}, {{-1, -1, -1}, -1}  // / M(Q3^-1) M(Q2^-1Q3^-1) M(Q1^-1Q2^-1Q3^-1)
  };
  for (const auto& [mono, e] : terms) out.add(LaurentMonomial(mono), e);
  out.set_m1_power(8);
  return out;
}

}  // namespace conifold_dt::oracle

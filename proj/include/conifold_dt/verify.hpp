#pragma once

// Invariant sweep behind `verify`: every module property checked against
// an independent oracle for all diagrams up to a size bound.

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "flop.hpp"
#include "mmalgebra.hpp"
#include "oracles.hpp"
#include "partial.hpp"
#include "qseries.hpp"
#include "strip.hpp"

namespace conifold_dt {

struct PropertyResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  int max_size = 10;
  int series_max_size = 5;
  int series_order = 5;
  int macmahon_order = 8;
  ExecutionOptions exec;
};

namespace detail {

inline std::string diag_name(int m, int n) {
  return "C_{" + std::to_string(m) + "," + std::to_string(n) + "}";
}

// Calls fn(StripDiagram) for every m, n >= 0 with lo <= m + n <= hi.
template <class Fn>
void for_each_diagram(int lo, int hi, Fn&& fn) {
  for (int N = std::max(lo, 1); N <= hi; ++N)
    for (int m = 0; m <= N; ++m) fn(StripDiagram(m, N - m));
}

}  // namespace detail

inline std::vector<PropertyResult> run_verification(const VerifyOptions& opt = {}) {
  std::vector<PropertyResult> results;
  auto check = [&](std::string module, std::string name, const std::function<std::string()>& body) {
    PropertyResult r{std::move(module), std::move(name), false, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(std::move(r));
  };
  const int max_n = opt.max_size;
  const int enum_cap = std::min(max_n, 20);

  // strip
  check("strip", "triangulation count equals C(m+n,m)", [&] {
    std::string fail;
    detail::for_each_diagram(1, enum_cap, [&](const StripDiagram& d) {
      const auto ts = enumerate_triangulations(d);
      if (fail.empty() && BigInt(static_cast<unsigned long>(ts.size())) != counts(d).triangulation_count)
        fail = detail::diag_name(d.m(), d.n());
    });
    return fail;
  });
  check("strip", "enumeration matches brute-force subsets in lexicographic order", [&] {
    std::string fail;
    detail::for_each_diagram(1, std::min(enum_cap, 14), [&](const StripDiagram& d) {
      std::vector<std::vector<int>> got;
      for_each_triangulation(d, [&](const Triangulation& t) { got.push_back(t.top_set()); });
      if (fail.empty() && got != oracle::subsets_bruteforce(d.faces(), d.m()))
        fail = detail::diag_name(d.m(), d.n());
    });
    return fail;
  });
  check("strip", "edge types split into m+n-1 signs; complement preserves them", [&] {
    std::string fail;
    detail::for_each_diagram(1, std::min(enum_cap, 12), [&](const StripDiagram& d) {
      for_each_triangulation(d, [&](const Triangulation& t) {
        int plus = 0, minus = 0;
        const Triangulation c = t.complement();
        for (int i = 1; i <= d.interior_edges(); ++i) {
          (edge_type(t, i) > 0 ? plus : minus)++;
          if (edge_type(t, i) != edge_type(c, i) && fail.empty())
            fail = "complement " + detail::diag_name(d.m(), d.n());
        }
        if (plus + minus != d.interior_edges() && fail.empty())
          fail = "sign count " + detail::diag_name(d.m(), d.n());
      });
    });
    return fail;
  });
  check("strip", "enumeration is deterministic", [&] {
    const StripDiagram d(max_n / 2, max_n - max_n / 2);
    return enumerate_triangulations(d) == enumerate_triangulations(d) ? "" : "runs differ";
  });

  // mmalgebra
  check("mmalgebra", "homogeneity theorem with both degree formulas", [&] {
    std::string fail;
    detail::for_each_diagram(2, std::min(max_n, 12), [&](const StripDiagram& d) {
      const auto rep = check_homogeneity(total_partition(d, opt.exec));
      const BigInt a = degree_formula(d), b = degree_probabilistic(d);
      if (fail.empty() && (!rep.is_homogeneous || *rep.degree != a || a != b))
        fail = detail::diag_name(d.m(), d.n());
    });
    return fail;
  });
  check("mmalgebra", "brute-force signature equals closed form at every position", [&] {
    for (int N = 2; N <= max_n; ++N)
      for (int m = 0; m <= N; ++m) {
        const BigInt closed = signature_closed_form(N, m);
        for (int i = 1; i <= N - 1; ++i)
          for (int j = i; j <= N - 1; ++j)
            if (signature_bruteforce(N, m, {i, j}) != closed)
              return "N=" + std::to_string(N) + " m=" + std::to_string(m);
      }
    return std::string();
  });
  check("mmalgebra", "every path exponent of the total equals the signature", [&] {
    std::string fail;
    detail::for_each_diagram(2, max_n, [&](const StripDiagram& d) {
      const auto tot = total_partition(d, opt.exec);
      const BigInt sigma = signature_closed_form(d.faces(), d.m());
      for (const EdgePath& p : edge_path_list(d))
        if (fail.empty() && tot.exponent(p) != sigma) fail = detail::diag_name(d.m(), d.n());
    });
    return fail;
  });
  check("mmalgebra", "parallel total equals brute-force sum of reduced partitions", [&] {
    std::string fail;
    detail::for_each_diagram(1, std::min(max_n, 12), [&](const StripDiagram& d) {
      ExponentMap seq(d);
      for_each_triangulation(d, [&](const Triangulation& t) { seq += reduced_partition(t); });
      const auto par = total_partition(d, ExecutionOptions{4});
      if (fail.empty() && (!(seq == par) || !(seq == oracle::total_partition_bruteforce(d))))
        fail = detail::diag_name(d.m(), d.n());
    });
    return fail;
  });
  check("mmalgebra", "m <-> n symmetry", [&] {
    std::string fail;
    detail::for_each_diagram(2, max_n, [&](const StripDiagram& d) {
      const StripDiagram s(d.n(), d.m());
      if (fail.empty() && (!(total_partition(d, opt.exec).factors() ==
                             total_partition(s, opt.exec).factors()) ||
                           degree_formula(d) != degree_formula(s)))
        fail = detail::diag_name(d.m(), d.n());
    });
    return fail;
  });
  check("mmalgebra", "topological total carries M(1,q)^{C(m+n,m)(m+n)/2}", [&] {
    std::string fail;
    detail::for_each_diagram(1, max_n, [&](const StripDiagram& d) {
      const auto u = unreduced_total(d, opt.exec);
      if (fail.empty() && u.m1_power_times_2() != binomial(d.faces(), d.m()) * d.faces())
        fail = detail::diag_name(d.m(), d.n());
    });
    return fail;
  });

  // flop
  check("flop", "C_{1,3} chain reproduces the reference display", [&] {
    return flop_total(3) == oracle::flop_c13_reference() ? "" : "factor lists differ";
  });
  // The reference display is not closed under x -> x^-1 between numerator
  // and denominator (Q1^-1 Q2 sits upstairs, Q1 Q2^-1 appears nowhere), so
  // only the balance of the two sides is checked here.
  check("flop", "C_{1,3} numerator and denominator hold six factors each", [&] {
    int up = 0, down = 0;
    const auto f = flop_total(3);
    for (const auto& [x, e] : f.factors()) (e > 0 ? up : down) += 1;
    return up == 6 && down == 6 ? std::string() : "up " + std::to_string(up) + ", down " + std::to_string(down);
  });
  check("flop", "C_{1,1} factors pair x with x^-1 at equal exponent", [&] {
    const auto f = flop_total(1);
    for (const auto& [x, e] : f.factors())
      if (f.exponent(x.inverse()) != e) return std::string("unpaired");
    return f.factors().size() == 2 ? std::string() : std::string("expected two factors");
  });
  check("flop", "cancellation equals raw sum of all contributed factors", [&] {
    for (int n = 1; n <= std::max(1, max_n - 1); ++n) {
      std::map<LaurentMonomial, BigInt> raw;
      std::size_t contributed = 0;
      const StripDiagram d(1, n);
      const auto chain = flop_chain(d);
      const auto bases = flop_chain_bases(d);
      for (std::size_t t = 0; t < chain.size(); ++t)
        for (const EdgePath& p : edge_path_list(d)) {
          raw[bases[t].apply(path_monomial(d.interior_edges(), p))] += path_sign(chain[t], p);
          ++contributed;
        }
      if (contributed != static_cast<std::size_t>(n + 1) * n * (n + 1) / 2)
        return "contribution count n=" + std::to_string(n);
      std::erase_if(raw, [](const auto& kv) { return kv.second == 0; });
      const auto tot = flop_total(n);
      if (raw != tot.factors()) return "n=" + std::to_string(n);
      if (tot.m1_power_times_2() != (n + 1) * (n + 1)) return "m1 power n=" + std::to_string(n);
    }
    return std::string();
  });

  // qseries
  check("qseries", "MacMahon product form equals exp double-sum form", [&] {
    for (std::size_t vars : {std::size_t{1}, std::size_t{3}}) {
      std::vector<LaurentMonomial> args{LaurentMonomial(vars), LaurentMonomial::variable(vars, 1),
                                        LaurentMonomial::variable(vars, static_cast<int>(vars)).inverse()};
      for (const auto& x : args)
        if (!(macmahon_series(x, opt.macmahon_order) == oracle::macmahon_exp_form(x, opt.macmahon_order)))
          return "vars=" + std::to_string(vars);
    }
    return std::string();
  });
  check("qseries", "series of total equals homogeneous product and per-resolution product", [&] {
    std::string fail;
    detail::for_each_diagram(2, std::min(max_n, opt.series_max_size), [&](const StripDiagram& d) {
      const QSeries lhs = evaluate_exponent_map(total_partition(d, opt.exec), opt.series_order);
      const QSeries rhs = oracle::homogeneous_product_series(d, degree_formula(d), opt.series_order);
      const QSeries per = oracle::per_triangulation_product_series(d, opt.series_order);
      if (fail.empty() && (!(lhs == rhs) || !(lhs == per))) fail = detail::diag_name(d.m(), d.n());
    });
    return fail;
  });
  check("qseries", "multiplication commutative and associative on random series", [&] {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2);
    auto random_series = [&] {
      QSeries s = QSeries::one(4, 2);
      for (int k = 1; k <= 4; ++k)
        for (int r = 0; r < 3; ++r) s.add_term(k, LaurentMonomial({expo(rng), expo(rng)}), coef(rng));
      return s;
    };
    for (int trial = 0; trial < 20; ++trial) {
      const QSeries a = random_series(), b = random_series(), c = random_series();
      if (!(series_multiply(a, b) == series_multiply(b, a))) return std::string("commutativity");
      if (!(series_multiply(series_multiply(a, b), c) == series_multiply(a, series_multiply(b, c))))
        return std::string("associativity");
    }
    return std::string();
  });

  // partial
  check("partial", "restricted count equals product of block binomials", [&] {
    std::string fail;
    detail::for_each_diagram(1, std::min(max_n, 10), [&](const StripDiagram& d) {
      for (const auto& dec : all_block_decompositions(d)) {
        BigInt expect = 1;
        for (const auto& [mk, nk] : dec.blocks()) expect *= binomial(mk + nk, nk);
        std::size_t got = 0;
        for_each_restricted_triangulation(dec, [&](const Triangulation&) { ++got; });
        if (fail.empty() && BigInt(static_cast<unsigned long>(got)) != expect)
          fail = detail::diag_name(d.m(), d.n());
      }
    });
    return fail;
  });
  check("partial", "factorization identity with boundary-crossing Z''", [&] {
    std::string fail;
    detail::for_each_diagram(1, std::min(max_n, 9), [&](const StripDiagram& d) {
      for (const auto& dec : all_block_decompositions(d)) {
        const Factorization f = factorize(dec, opt.exec);
        ExponentMap rebuilt = f.zpp;
        for (const auto& b : f.block_factors) rebuilt += b.total.scaled(b.multiplicity);
        bool ok = rebuilt == restricted_total(dec);
        for (const auto& [p, e] : f.zpp.factors()) ok = ok && dec.crosses_boundary(p);
        for (const auto& b : f.block_factors) {
          const StripDiagram bd(b.block.first, b.block.second);
          if (bd.faces() < 2) continue;
          const auto rep = check_homogeneity(total_partition(bd, opt.exec));
          ok = ok && rep.is_homogeneous && *rep.degree == degree_formula(bd);
        }
        if (fail.empty() && !ok) fail = detail::diag_name(d.m(), d.n());
      }
    });
    return fail;
  });

  return results;
}

}  // namespace conifold_dt

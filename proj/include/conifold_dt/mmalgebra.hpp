#pragma once

// Partition functions as exponent vectors over MacMahon factors M(Q_ij, q),
// one per edge path, plus a separate power of M(1, q).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "binomial.hpp"
#include "error.hpp"
#include "strip.hpp"

namespace conifold_dt {

/// Sparse map EdgePath -> exponent; absent paths have exponent 0.
class ExponentMap {
 public:
  explicit ExponentMap(const StripDiagram& d) : diagram_(d) {}

  const StripDiagram& diagram() const noexcept { return diagram_; }
  const std::map<EdgePath, BigInt>& factors() const noexcept { return factors_; }

  BigInt exponent(const EdgePath& p) const {
    const auto it = factors_.find(p);
    return it == factors_.end() ? BigInt(0) : it->second;
  }

  void add(const EdgePath& p, const BigInt& e) {
    if (!is_valid_path(diagram_, p))
      throw Error(ErrorKind::invalid_range, "edge path (" + std::to_string(p.i) + "," +
                                                std::to_string(p.j) + ") not in diagram");
    if (e == 0) return;
    auto [it, inserted] = factors_.try_emplace(p, e);
    if (!inserted) {
      it->second += e;
      if (it->second == 0) factors_.erase(it);
    }
  }

  const Rational& m1_power() const noexcept { return m1_power_; }

  void set_m1_power(Rational r) {
    r.canonicalize();
    if (r.get_den() != 1 && r.get_den() != 2)
      throw Error(ErrorKind::invalid_argument, "M(1,q) power must be a multiple of 1/2");
    m1_power_ = std::move(r);
  }

  BigInt m1_power_times_2() const { return BigInt(m1_power_ * 2); }

  ExponentMap& operator+=(const ExponentMap& o) {
    require_same_diagram(o);
    for (const auto& [p, e] : o.factors_) add(p, e);
    set_m1_power(m1_power_ + o.m1_power_);
    return *this;
  }

  ExponentMap& operator-=(const ExponentMap& o) { return *this += o.scaled(-1); }

  ExponentMap scaled(const BigInt& k) const {
    ExponentMap out(diagram_);
    if (k == 0) return out;
    for (const auto& [p, e] : factors_) out.factors_.emplace(p, e * k);
    out.set_m1_power(m1_power_ * Rational(k));
    return out;
  }

  friend ExponentMap operator+(ExponentMap a, const ExponentMap& b) { return a += b; }
  friend ExponentMap operator-(ExponentMap a, const ExponentMap& b) { return a -= b; }

  friend bool operator==(const ExponentMap& a, const ExponentMap& b) {
    return a.diagram_ == b.diagram_ && a.m1_power_ == b.m1_power_ && a.factors_ == b.factors_;
  }

 private:
  void require_same_diagram(const ExponentMap& o) const {
    if (!(diagram_ == o.diagram_))
      throw Error(ErrorKind::invalid_argument, "exponent maps belong to different diagrams");
  }

  StripDiagram diagram_;
  std::map<EdgePath, BigInt> factors_;
  Rational m1_power_ = 0;
};

struct HomogeneityReport {
  bool is_homogeneous = false;
  std::optional<BigInt> degree;
  std::optional<std::pair<EdgePath, EdgePath>> witness;
};

/// Z'_T: each edge path contributes M(Q_ij, q) raised to the product of the
/// edge types along it.
inline ExponentMap reduced_partition(const Triangulation& t) {
  ExponentMap out(t.diagram());
  for (const EdgePath& p : edge_path_list(t.diagram())) out.add(p, path_sign(t, p));
  return out;
}

struct ExecutionOptions {
  /// Worker count; 0 means hardware concurrency.
  unsigned threads = 0;
};

namespace detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Dense per-path sums over a rank range of triangulations. Each partial sum
// is bounded by the number of triangulations visited, so int64 cannot
// overflow for any range that is feasible to enumerate.
inline std::vector<std::int64_t> dense_path_sums(const StripDiagram& d, std::uint64_t first,
                                                 std::uint64_t count) {
  const int ne = d.interior_edges();
  std::vector<std::int64_t> acc(static_cast<std::size_t>(ne) * (ne + 1) / 2, 0);
  for_each_triangulation_in_range(d, first, count, [&](const Triangulation& t) {
    std::size_t idx = 0;
    for (int i = 1; i <= ne; ++i) {
      const bool left = t.is_top(i);
      for (int j = i; j <= ne; ++j) acc[idx++] += (left == t.is_top(j + 1)) ? 1 : -1;
    }
  });
  return acc;
}

}  // namespace detail

/// Z'_tot: componentwise sum of reduced_partition over every triangulation.
/// Rank ranges are summed concurrently and merged in rank order.
inline ExponentMap total_partition(const StripDiagram& d, ExecutionOptions opts = {}) {
  check_enumerable(d);
  const std::uint64_t total = binomial_u64(d.faces(), d.m());
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(detail::resolve_threads(opts.threads), total));

  std::vector<std::vector<std::int64_t>> partial(workers);
  if (workers <= 1) {
    partial.assign(1, detail::dense_path_sums(d, 0, total));
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { partial[w] = detail::dense_path_sums(d, w * chunk, chunk); });
    }
    for (auto& th : pool) th.join();
  }

  ExponentMap out(d);
  const auto paths = edge_path_list(d);
  for (const auto& acc : partial)
    for (std::size_t k = 0; k < acc.size(); ++k)
      if (acc[k] != 0) out.add(paths[k], BigInt(static_cast<long>(acc[k])));
  return out;
}

/// Common exponent of Z'_tot(C_{m,n}):
///   2 C(m+n-2, m-2) + 2 C(m+n-2, n-2) - C(m+n, n).
inline BigInt degree_formula(const StripDiagram& d) {
  if (d.faces() < 2)
    throw Error(ErrorKind::undefined_degree, "C_{" + std::to_string(d.m()) + "," +
                                                 std::to_string(d.n()) +
                                                 "} has no interior edge");
  const int m = d.m(), n = d.n(), N = d.faces();
  return 2 * binomial(N - 2, m - 2) + 2 * binomial(N - 2, n - 2) - binomial(N, n);
}

/// Same degree from the edge-path probabilities p_t = m(m-1)/(N(N-1)) and
/// p_b = n(n-1)/(N(N-1)), scaled by the number of triangulations.
inline BigInt degree_probabilistic(const StripDiagram& d) {
  if (d.faces() < 2)
    throw Error(ErrorKind::invalid_range, "the probabilistic degree needs m + n >= 2");
  const long m = d.m(), n = d.n(), N = d.faces();
  Rational same_row(BigInt(2 * m * (m - 1) + 2 * n * (n - 1)), BigInt(N * (N - 1)));
  same_row.canonicalize();
  const Rational d_rat = (same_row - 1) * Rational(binomial(N, n));
  if (d_rat.get_den() != 1)
    throw Error(ErrorKind::invalid_argument, "non-integral probabilistic degree");
  return d_rat.get_num();
}

inline HomogeneityReport check_homogeneity(const ExponentMap& e) {
  HomogeneityReport report;
  const auto paths = edge_path_list(e.diagram());
  if (paths.empty()) {
    report.is_homogeneous = true;
    report.degree = BigInt(0);
    return report;
  }
  const BigInt first = e.exponent(paths.front());
  for (const EdgePath& p : paths) {
    if (e.exponent(p) != first) {
      report.witness = std::make_pair(paths.front(), p);
      return report;
    }
  }
  report.is_homogeneous = true;
  report.degree = first;
  return report;
}

/// m-signature of a contiguous set: C(N, m) - 4 C(N-2, m-1).
inline BigInt signature_closed_form(int N, int m) {
  if (N < 2 || m < 0 || m > N)
    throw Error(ErrorKind::invalid_range, "signature needs N >= 2 and 0 <= m <= N");
  return binomial(N, m) - 4 * binomial(N - 2, m - 1);
}

/// Literal sum over all m-subsets T of {1..N} of the T-signature of the
/// interior-edge set S = {i..j}: the product of (-1)^b over the difference
/// sequence of T's characteristic function on triangles i..j+1.
inline BigInt signature_bruteforce(int N, int m, const EdgePath& S) {
  if (N < 2 || N > 63 || m < 0 || m > N)
    throw Error(ErrorKind::invalid_range, "signature needs 2 <= N <= 63 and 0 <= m <= N");
  if (S.i < 1 || S.i > S.j || S.j > N - 1)
    throw Error(ErrorKind::invalid_range, "S must be a nonempty contiguous subset of {1..N-1}");
  BigInt sigma = 0;
  std::vector<int> comb(m);
  for (int k = 0; k < m; ++k) comb[k] = k + 1;
  do {
    const std::uint64_t mask = detail::mask_of(comb);
    auto chi = [mask](int k) { return static_cast<int>((mask >> (k - 1)) & 1U); };
    int parity = 0;
    for (int k = S.i; k <= S.j; ++k) parity ^= chi(k) ^ chi(k + 1);
    sigma += parity ? -1 : 1;
  } while (detail::next_combination(comb, N));
  return sigma;
}

/// Product of the topological string partition functions over all
/// resolutions: Z'_tot together with M(1,q)^{C(m+n,m) (m+n)/2}.
inline ExponentMap unreduced_total(const StripDiagram& d, ExecutionOptions opts = {}) {
  ExponentMap out = total_partition(d, opts);
  out.set_m1_power(Rational(BigInt(binomial(d.faces(), d.m()) * d.faces()), BigInt(2)));
  return out;
}

}  // namespace conifold_dt

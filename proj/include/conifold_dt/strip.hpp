#pragma once

// The toric strip C_{m,n}: a height-one trapezoid with m unit segments on
// the top row and n on the bottom. A maximal triangulation is determined by
// which of its m+n triangles (numbered left to right) have their base on the
// top row; interior edge e_i separates triangles i and i+1.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "error.hpp"

namespace conifold_dt {

class StripDiagram {
 public:
  StripDiagram(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0 || m + n < 1)
      throw Error(ErrorKind::invalid_argument,
                  "strip needs m >= 0, n >= 0 and m + n >= 1 (got m=" + std::to_string(m) +
                      ", n=" + std::to_string(n) + ")");
  }

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int faces() const noexcept { return m_ + n_; }
  int interior_edges() const noexcept { return m_ + n_ - 1; }

  friend bool operator==(const StripDiagram&, const StripDiagram&) = default;

 private:
  int m_;
  int n_;
};

struct StripCounts {
  int faces;
  int interior_edges;
  BigInt triangulation_count;
  int euler_char;
};

inline StripCounts counts(const StripDiagram& d) {
  return {d.faces(), d.interior_edges(), binomial(d.faces(), d.m()), d.faces()};
}

/// Contiguous run of interior edges {i, ..., j}, 1-based.
struct EdgePath {
  int i;
  int j;

  int length() const noexcept { return j - i + 1; }
  bool contains(int k) const noexcept { return i <= k && k <= j; }

  friend auto operator<=>(const EdgePath&, const EdgePath&) = default;
};

inline bool is_valid_path(const StripDiagram& d, const EdgePath& p) {
  return 1 <= p.i && p.i <= p.j && p.j <= d.interior_edges();
}

/// All edge paths (i, j), 1 <= i <= j <= N_E, in lexicographic order.
inline std::vector<EdgePath> edge_path_list(const StripDiagram& d) {
  std::vector<EdgePath> out;
  const int ne = d.interior_edges();
  out.reserve(static_cast<std::size_t>(ne) * (ne + 1) / 2);
  for (int i = 1; i <= ne; ++i)
    for (int j = i; j <= ne; ++j) out.push_back({i, j});
  return out;
}

/// Position of `p` in edge_path_list(d).
inline std::size_t path_index(const StripDiagram& d, const EdgePath& p) {
  const int ne = d.interior_edges();
  // Rows 1..i-1 hold ne, ne-1, ..., ne-i+2 paths.
  const std::size_t before = static_cast<std::size_t>(p.i - 1) * ne -
                             static_cast<std::size_t>(p.i - 1) * (p.i - 2) / 2;
  return before + static_cast<std::size_t>(p.j - p.i);
}

class Triangulation {
 public:
  /// Builds from the 1-based set of top-based triangles.
  Triangulation(const StripDiagram& d, const std::vector<int>& top_set) : diagram_(d) {
    if (d.faces() > 63)
      throw Error(ErrorKind::enumeration_range_exceeded,
                  "subset encoding supports at most 63 triangles");
    if (static_cast<int>(top_set.size()) != d.m())
      throw Error(ErrorKind::invalid_argument, "top set must have exactly m = " +
                                                   std::to_string(d.m()) + " elements");
    for (int k : top_set) {
      if (k < 1 || k > d.faces())
        throw Error(ErrorKind::invalid_argument,
                    "top set element " + std::to_string(k) + " outside [1, " +
                        std::to_string(d.faces()) + "]");
      const std::uint64_t bit = std::uint64_t{1} << (k - 1);
      if (mask_ & bit)
        throw Error(ErrorKind::invalid_argument, "duplicate top set element " + std::to_string(k));
      mask_ |= bit;
    }
  }

  static Triangulation from_mask(const StripDiagram& d, std::uint64_t mask) {
    return Triangulation(d, mask, raw_mask{});
  }

  const StripDiagram& diagram() const noexcept { return diagram_; }
  std::uint64_t mask() const noexcept { return mask_; }

  bool is_top(int k) const noexcept { return (mask_ >> (k - 1)) & 1U; }

  std::vector<int> top_set() const {
    std::vector<int> out;
    for (int k = 1; k <= diagram_.faces(); ++k)
      if (is_top(k)) out.push_back(k);
    return out;
  }

  /// The triangulation obtained by swapping the roles of the two rows.
  Triangulation complement() const {
    const StripDiagram swapped(diagram_.n(), diagram_.m());
    const int nf = diagram_.faces();
    const std::uint64_t full = nf == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nf) - 1;
    return Triangulation(swapped, ~mask_ & full, raw_mask{});
  }

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.diagram_ == b.diagram_ && a.mask_ == b.mask_;
  }

 private:
  struct raw_mask {};
  Triangulation(const StripDiagram& d, std::uint64_t mask, raw_mask) : diagram_(d), mask_(mask) {}

  StripDiagram diagram_;
  std::uint64_t mask_ = 0;
};

/// +1 for an O(-2,0) curve (both neighbours on the same row), -1 for an
/// O(-1,-1) curve.
inline int edge_type(const Triangulation& t, int i) {
  if (i < 1 || i > t.diagram().interior_edges())
    throw Error(ErrorKind::invalid_range,
                "edge index " + std::to_string(i) + " outside [1, " +
                    std::to_string(t.diagram().interior_edges()) + "]");
  return t.is_top(i) == t.is_top(i + 1) ? 1 : -1;
}

/// Product of edge types along the path; only the two end triangles matter.
inline int path_sign(const Triangulation& t, const EdgePath& p) {
  return t.is_top(p.i) == t.is_top(p.j + 1) ? 1 : -1;
}

/// Largest m+n accepted for full enumeration. CONIFOLD_DT_MAX_ENUM_BITS may
/// lower it (the bitmask encoding caps it at 63).
inline int enumeration_bit_limit() {
  int limit = 63;
  if (const char* env = std::getenv("CONIFOLD_DT_MAX_ENUM_BITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0') limit = static_cast<int>(std::clamp(v, 0L, 63L));
  }
  return limit;
}

inline void check_enumerable(const StripDiagram& d) {
  const int limit = enumeration_bit_limit();
  if (d.faces() > limit)
    throw Error(ErrorKind::enumeration_range_exceeded,
                "m + n = " + std::to_string(d.faces()) + " exceeds the enumeration limit " +
                    std::to_string(limit));
}

namespace detail {

inline std::uint64_t mask_of(const std::vector<int>& elems) {
  std::uint64_t mask = 0;
  for (int k : elems) mask |= std::uint64_t{1} << (k - 1);
  return mask;
}

// Advances a sorted m-subset of {1..N} to its lexicographic successor.
inline bool next_combination(std::vector<int>& a, int N) {
  const int m = static_cast<int>(a.size());
  int p = m - 1;
  while (p >= 0 && a[p] == N - (m - 1 - p)) --p;
  if (p < 0) return false;
  ++a[p];
  for (int q = p + 1; q < m; ++q) a[q] = a[q - 1] + 1;
  return true;
}

// The rank-th m-subset of {1..N} in lexicographic order.
inline std::vector<int> unrank_combination(int N, int m, std::uint64_t rank) {
  std::vector<int> out;
  out.reserve(m);
  int x = 1;
  for (int left = m; left > 0; --left) {
    for (;; ++x) {
      const std::uint64_t with_x = binomial_u64(N - x, left - 1);
      if (rank < with_x) break;
      rank -= with_x;
    }
    out.push_back(x++);
  }
  return out;
}

}  // namespace detail

/// Visits triangulations with lexicographic rank in [first, first + count).
template <class Fn>
void for_each_triangulation_in_range(const StripDiagram& d, std::uint64_t first,
                                     std::uint64_t count, Fn&& fn) {
  check_enumerable(d);
  const std::uint64_t total = binomial_u64(d.faces(), d.m());
  if (first >= total || count == 0) return;
  count = std::min(count, total - first);
  std::vector<int> comb = detail::unrank_combination(d.faces(), d.m(), first);
  for (std::uint64_t r = 0; r < count; ++r) {
    fn(Triangulation::from_mask(d, detail::mask_of(comb)));
    if (!detail::next_combination(comb, d.faces())) break;
  }
}

/// Visits every triangulation once, in lexicographic order of the top set.
template <class Fn>
void for_each_triangulation(const StripDiagram& d, Fn&& fn) {
  check_enumerable(d);
  for_each_triangulation_in_range(d, 0, binomial_u64(d.faces(), d.m()), std::forward<Fn>(fn));
}

inline std::vector<Triangulation> enumerate_triangulations(const StripDiagram& d) {
  std::vector<Triangulation> out;
  for_each_triangulation(d, [&](const Triangulation& t) { out.push_back(t); });
  return out;
}

}  // namespace conifold_dt

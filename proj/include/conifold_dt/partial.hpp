#pragma once

// Partially resolved strips: C_{m,n} with some interior edges already
// drawn, splitting it into blocks C_{m_k,n_k}. A full triangulation refines
// the partial one exactly when block k holds m_k top-based triangles.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "binomial.hpp"
#include "error.hpp"
#include "mmalgebra.hpp"
#include "strip.hpp"

namespace conifold_dt {

class BlockDecomposition {
 public:
  BlockDecomposition(const StripDiagram& d, std::vector<std::pair<int, int>> blocks)
      : diagram_(d), blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw Error(ErrorKind::invalid_argument, "at least one block is required");
    int sm = 0, sn = 0;
    for (const auto& [mk, nk] : blocks_) {
      if (mk < 0 || nk < 0 || mk + nk < 1)
        throw Error(ErrorKind::invalid_argument,
                    "block (" + std::to_string(mk) + "," + std::to_string(nk) +
                        ") must have m_k, n_k >= 0 and m_k + n_k >= 1");
      sm += mk;
      sn += nk;
      boundaries_.push_back(sm + sn);
    }
    if (sm != d.m() || sn != d.n())
      throw Error(ErrorKind::invalid_argument,
                  "blocks sum to (" + std::to_string(sm) + "," + std::to_string(sn) +
                      "), expected (" + std::to_string(d.m()) + "," + std::to_string(d.n()) + ")");
  }

  const StripDiagram& diagram() const noexcept { return diagram_; }
  const std::vector<std::pair<int, int>>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }

  /// s_k = number of triangles in blocks 1..k; s_P = m + n.
  const std::vector<int>& boundaries() const noexcept { return boundaries_; }

  /// s_{k-1} for 0-based block k.
  int offset(std::size_t k) const { return k == 0 ? 0 : boundaries_.at(k - 1); }

  StripDiagram block_diagram(std::size_t k) const {
    return StripDiagram(blocks_.at(k).first, blocks_.at(k).second);
  }

  /// True when the path runs through one of the pre-drawn interior edges.
  bool crosses_boundary(const EdgePath& p) const {
    for (std::size_t k = 0; k + 1 < boundaries_.size(); ++k)
      if (p.contains(boundaries_[k])) return true;
    return false;
  }

 private:
  StripDiagram diagram_;
  std::vector<std::pair<int, int>> blocks_;
  std::vector<int> boundaries_;
};

/// Every ordered block list (m_k, n_k) with m_k + n_k >= 1 summing to (m, n).
inline std::vector<BlockDecomposition> all_block_decompositions(const StripDiagram& d) {
  std::vector<BlockDecomposition> out;
  std::vector<std::pair<int, int>> current;
  auto recurse = [&](auto&& self, int m_left, int n_left) -> void {
    if (m_left == 0 && n_left == 0) {
      out.emplace_back(d, current);
      return;
    }
    for (int mk = 0; mk <= m_left; ++mk)
      for (int nk = 0; nk <= n_left; ++nk) {
        if (mk + nk == 0) continue;
        current.emplace_back(mk, nk);
        self(self, m_left - mk, n_left - nk);
        current.pop_back();
      }
  };
  recurse(recurse, d.m(), d.n());
  return out;
}

inline bool refines(const BlockDecomposition& d, const Triangulation& t) {
  for (std::size_t k = 0; k < d.size(); ++k) {
    int tops = 0;
    for (int f = d.offset(k) + 1; f <= d.boundaries()[k]; ++f) tops += t.is_top(f) ? 1 : 0;
    if (tops != d.blocks()[k].first) return false;
  }
  return true;
}

/// Triangulations of C_{m,n} refining the decomposition, in lexicographic
/// order of the top set. Built block by block as a product of per-block
/// subsets, so the work is proportional to the output.
template <class Fn>
void for_each_restricted_triangulation(const BlockDecomposition& d, Fn&& fn) {
  check_enumerable(d.diagram());
  const std::size_t P = d.size();
  std::vector<std::vector<std::uint64_t>> choices(P);
  for (std::size_t k = 0; k < P; ++k) {
    const StripDiagram block = d.block_diagram(k);
    const int shift = d.offset(k);
    for_each_triangulation(block, [&](const Triangulation& t) {
      choices[k].push_back(t.mask() << shift);
    });
  }
  // Odometer over blocks; block 0 varies slowest, which keeps lex order
  // because earlier blocks hold smaller triangle indices.
  std::vector<std::size_t> pos(P, 0);
  for (;;) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < P; ++k) mask |= choices[k][pos[k]];
    fn(Triangulation::from_mask(d.diagram(), mask));
    std::size_t k = P;
    while (k > 0) {
      --k;
      if (++pos[k] < choices[k].size()) break;
      pos[k] = 0;
      if (k == 0) return;
    }
  }
}

inline std::vector<Triangulation> restricted_triangulations(const BlockDecomposition& d) {
  std::vector<Triangulation> out;
  for_each_restricted_triangulation(d, [&](const Triangulation& t) { out.push_back(t); });
  return out;
}

/// b_k = prod_{j != k} C(m_j + n_j, n_j).
inline std::vector<BigInt> block_multiplicities(const BlockDecomposition& d) {
  std::vector<BigInt> out;
  for (std::size_t k = 0; k < d.size(); ++k) {
    BigInt b = 1;
    for (std::size_t j = 0; j < d.size(); ++j)
      if (j != k) b *= binomial(d.blocks()[j].first + d.blocks()[j].second, d.blocks()[j].second);
    out.push_back(b);
  }
  return out;
}

inline ExponentMap restricted_total(const BlockDecomposition& d) {
  const int ne = d.diagram().interior_edges();
  std::vector<std::int64_t> acc(static_cast<std::size_t>(ne) * (ne + 1) / 2, 0);
  for_each_restricted_triangulation(d, [&](const Triangulation& t) {
    std::size_t idx = 0;
    for (int i = 1; i <= ne; ++i)
      for (int j = i; j <= ne; ++j) acc[idx++] += path_sign(t, {i, j});
  });
  ExponentMap out(d.diagram());
  const auto paths = edge_path_list(d.diagram());
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (acc[k] != 0) out.add(paths[k], BigInt(static_cast<long>(acc[k])));
  return out;
}

/// Shifts a block's exponent map into the global diagram.
inline ExponentMap embed_block(const ExponentMap& local, const StripDiagram& global, int offset) {
  ExponentMap out(global);
  for (const auto& [p, e] : local.factors()) out.add({p.i + offset, p.j + offset}, e);
  out.set_m1_power(local.m1_power());
  return out;
}

struct BlockFactor {
  std::pair<int, int> block;
  int offset;
  ExponentMap total;  // in global path indices
  BigInt multiplicity;
};

struct Factorization {
  ExponentMap zpp;
  std::vector<BlockFactor> block_factors;
};

/// Z'_tot(X) = Z'' * prod_k Z'_tot(C_{m_k,n_k})^{b_k}, with Z'' obtained by
/// subtraction and then checked to live on boundary-crossing paths only.
inline Factorization factorize(const BlockDecomposition& d, ExecutionOptions opts = {}) {
  const auto mult = block_multiplicities(d);
  Factorization out{restricted_total(d), {}};
  for (std::size_t k = 0; k < d.size(); ++k) {
    ExponentMap block =
        embed_block(total_partition(d.block_diagram(k), opts), d.diagram(), d.offset(k));
    out.zpp -= block.scaled(mult[k]);
    out.block_factors.push_back({d.blocks()[k], d.offset(k), std::move(block), mult[k]});
  }
  for (const auto& [p, e] : out.zpp.factors())
    if (!d.crosses_boundary(p))
      throw Error(ErrorKind::invalid_argument,
                  "inhomogeneous factor has a non-crossing path (" + std::to_string(p.i) + "," +
                      std::to_string(p.j) + ")");
  return out;
}

}  // namespace conifold_dt

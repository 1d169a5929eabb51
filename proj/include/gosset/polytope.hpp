#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gosset/enumerate.hpp"
#include "gosset/kernels.hpp"
#include "gosset/picard.hpp"

namespace gosset {

using VertexIndex = std::uint16_t;

/// The polytope carried by a rank-r surface: vertices are the lines in
/// canonical order, and two vertices are joined exactly when the lines are
/// skew (zero intersection).
struct GossetPolytope {
  Surface surface;
  ClassSet vertices;
  kernels::BitMatrix adjacency;
  kernels::PackedVectors packed;

  int rank() const { return surface.rank(); }
  std::size_t vertex_count() const { return vertices.size(); }
  const DivisorClass& vertex(VertexIndex i) const { return vertices.items[i]; }
  std::size_t degree(VertexIndex i) const;
};

GossetPolytope build_polytope(const Surface& s);

/// Strictly increasing vertex indices, pairwise adjacent in the skew graph.
struct Simplex {
  std::vector<VertexIndex> vertices;
  int dimension() const { return int(vertices.size()) - 1; }
};

/// A ruling together with its antipodal vertex pairs: each pair sums to the
/// ruling, vertices within a pair meet with product 1, across pairs 0.
struct Crosspolytope {
  DivisorClass ruling;
  std::vector<std::pair<VertexIndex, VertexIndex>> pairs;
  std::vector<VertexIndex> vertex_indices() const;
};

/// counts[k] = number of k-dimensional simplexes, 0 <= k <= max_k.
/// Results are independent of the thread count.
std::vector<std::uint64_t> count_simplex_layers(const GossetPolytope& p, int max_k,
                                                unsigned threads = 1);
std::uint64_t count_simplexes(const GossetPolytope& p, int k, unsigned threads = 1);

/// Clique layer counts restricted to a vertex subset.
std::vector<std::uint64_t> count_cliques_within(const GossetPolytope& p,
                                                std::span<const VertexIndex> subset, int max_k);

/// Visits every k-simplex in canonical order.
void for_each_simplex(const GossetPolytope& p, int k,
                      const std::function<void(std::span<const VertexIndex>)>& visit);

/// Dense listing of one layer: record i occupies data[i*(k+1) .. i*(k+1)+k],
/// records in canonical (lexicographic) order.
struct FlatSimplexList {
  int k = 0;
  std::size_t count = 0;
  std::vector<VertexIndex> data;

  std::span<const VertexIndex> record(std::size_t i) const {
    return {data.data() + i * std::size_t(k + 1), std::size_t(k + 1)};
  }
  /// Canonical position of a sorted vertex tuple, or -1.
  std::ptrdiff_t find(std::span<const VertexIndex> verts) const;
};

FlatSimplexList list_simplexes_flat(const GossetPolytope& p, int k, unsigned threads = 1);
std::vector<Simplex> list_simplexes(const GossetPolytope& p, int k);

/// Applies pred to every k-simplex (pred must be pure); reports how many
/// simplexes were seen and whether pred held for all of them.
struct SweepResult {
  std::uint64_t count = 0;
  bool all_ok = true;
};
SweepResult sweep_simplexes(const GossetPolytope& p, int k, unsigned threads,
                            const std::function<bool(std::span<const VertexIndex>)>& pred);

/// One crosspolytope per ruling: vertices are the lines l with f.l = 0,
/// paired by l <-> f-l. Throws logic_error if the structure is not
/// 2(r-1) vertices in r-1 pairs (that would be an implementation bug).
std::vector<Crosspolytope> crosspolytopes(const GossetPolytope& p);

/// Sum of the vertex classes.
DivisorClass simplex_center(const GossetPolytope& p, std::span<const VertexIndex> verts);

/// For a facet simplex (rank-many vertices): (center - K)/3 when integral,
/// which is then an exceptional system; nullopt otherwise.
std::optional<DivisorClass> simplex_to_exceptional_system(const GossetPolytope& p,
                                                          std::span<const VertexIndex> facet);

enum class FaceFamily { simplex, crosspolytope };

/// Subface counts of the regular families, 0 <= k < n:
/// simplexes alpha_n contain C(n+1, k+1) k-faces, crosspolytopes beta_n
/// contain 2^{k+1} * C(n, k+1).
std::uint64_t face_count_formula(FaceFamily family, int n, int k);

/// The verification target per rank: crosspolytope count and the full
/// simplex layer counts (entry k is the alpha_k count; entry 0 is vertices).
struct FaceTable {
  std::uint64_t crosspolytopes = 0;
  std::vector<std::uint64_t> simplexes;
};

FaceTable expected_face_table(int r);

}  // namespace gosset

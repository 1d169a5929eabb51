#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "gosset/enumerate.hpp"
#include "gosset/picard.hpp"
#include "gosset/polytope.hpp"

namespace gosset {

/// l . e_r: the multiplicity of the line at the blown-up point. For e_r
/// itself this returns -1, which marks it as the exceptional class rather
/// than a classified line.
std::int64_t line_degree(const Surface& s, const DivisorClass& line);

/// The rank-(r-1) class D with line = D - m*e_r, obtained by stripping the
/// last exceptional coordinate. Requires rank >= 4 and line != e_r.
///
/// This always contracts e_r. To blow down along an arbitrary line, first
/// move it to e_r with a Weyl element (the action on lines is transitive;
/// compose reflections from orbit search), then strip. Keeping the contracted
/// coordinate fixed keeps the basis semantics of the result unambiguous.
struct BlowDown {
  DivisorClass cls;
  std::int64_t m = 0;
};
BlowDown blow_down_class(const Surface& s, const DivisorClass& line);

/// Lines partitioned by their e_r-degree; e_r itself is excluded.
struct DegreeClassification {
  int rank = 0;
  std::map<std::int64_t, ClassSet> buckets;
};
DegreeClassification classify_line_degrees(const Surface& s);

/// N_k(l) = { l' line : l'.l = k }.
ClassSet n_k(const Surface& s, const DivisorClass& line, std::int64_t k);

/// The line involutions l -> -(K+l) on rank 7 and l -> -(2K+l) on rank 8.
DivisorClass gieser(const Surface& s, const DivisorClass& line);
DivisorClass bertini(const Surface& s, const DivisorClass& line);

/// Image vertex index per vertex index. Built from a class-level map and
/// audited: the map must be a bijection of the vertex set that preserves
/// every pairwise intersection (throws otherwise).
std::vector<VertexIndex> vertex_permutation(
    const GossetPolytope& p, const std::function<DivisorClass(const DivisorClass&)>& line_map);

/// The permutation a vertex symmetry induces on one simplex layer: entry i is
/// the canonical index of the image of simplex i. Every image must land in
/// the layer (throws otherwise), so the result is a bijection.
std::vector<std::uint32_t> induced_simplex_map(const GossetPolytope& p,
                                               const std::vector<VertexIndex>& vertex_perm,
                                               int k, unsigned threads = 1);

/// The permutation induced on crosspolytopes, matched through the image of
/// each ruling (the image of any antipodal pair's sum).
std::vector<std::uint32_t> induced_crosspolytope_map(const GossetPolytope& p,
                                                     const std::vector<VertexIndex>& vertex_perm);

}  // namespace gosset

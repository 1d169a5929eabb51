#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gosset/enumerate.hpp"
#include "gosset/picard.hpp"

namespace gosset {

/// The simple roots d_0 = h-e_1-e_2-e_3 and d_i = e_i-e_{i+1}; their pairwise
/// intersections form the rank-r diagram (chain d_1..d_{r-1}, branch d_0-d_3).
struct RootBasis {
  int rank = 0;
  std::vector<DivisorClass> roots;
};

RootBasis simple_roots(const Surface& s);

/// sigma_d(D) = D + (D.d) d. Involutive, preserves the pairing and K.
/// Throws when d is not a root.
DivisorClass reflect(const DivisorClass& d, const DivisorClass& root);

/// Breadth-first closure of {seed} under the given root reflections, returned
/// in canonical order. Generators default to the simple-root basis.
ClassSet orbit(const Surface& s, const DivisorClass& seed,
               std::span<const DivisorClass> generators);
ClassSet orbit(const Surface& s, const DivisorClass& seed);

/// |W(S_r)| via the vertex-stabilizer chain: |W(S_3)| = 12 and
/// |W(S_r)| = |L_r| * |W(S_{r-1})|, with |L_r| freshly enumerated.
std::int64_t weyl_order(int rank);

}  // namespace gosset

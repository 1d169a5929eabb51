#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gosset/kernels.hpp"
#include "gosset/picard.hpp"

namespace gosset {

enum class ClassKind { lines, roots, rulings, exceptional_systems, generic };

/// A duplicate-free collection of classes of one rank, kept in canonical
/// (lexicographic) order so downstream indices and exports are stable.
struct ClassSet {
  int rank = 0;
  ClassKind kind = ClassKind::generic;
  std::int64_t self_int = 0;
  std::int64_t kdeg = 0;
  std::vector<DivisorClass> items;

  std::size_t size() const { return items.size(); }
  bool contains(const DivisorClass& d) const;
  /// Index in canonical order, or -1 when absent.
  std::ptrdiff_t index_of(const DivisorClass& d) const;
};

/// Exactly the set { D : D^2 = self_int, D.K = kdeg }, enumerated by a
/// depth-first coordinate search with Cauchy-Schwarz pruning. Infeasible
/// parameter pairs yield an empty set. Output is in canonical order.
ClassSet solve_classes(const Surface& s, std::int64_t self_int, std::int64_t kdeg);

ClassSet lines(const Surface& s);                // (-1, -1)
ClassSet roots(const Surface& s);                // (-2,  0)
ClassSet rulings(const Surface& s);              // ( 0, -2)
ClassSet exceptional_systems(const Surface& s);  // ( 1, -3)

/// Classes with D^2 = D.K = -a, 1 <= a <= rank.
ClassSet a_divisors(const Surface& s, int a);

/// The unique decomposition of d into pairwise-skew lines when one exists:
/// the candidate set is { l line : d.l = -1 }, which must be pairwise skew
/// and sum to d. Returns nullopt otherwise.
std::optional<std::vector<DivisorClass>> skew_decompose(const Surface& s, const DivisorClass& d);
std::optional<std::vector<DivisorClass>> skew_decompose(const Surface& s, const DivisorClass& d,
                                                        const ClassSet& line_set,
                                                        const kernels::PackedVectors& packed);

/// Number of vectors of squared norm m in the even unimodular rank-8 lattice:
/// 1 for m = 0, 0 for odd m, 240*sigma3(m/2) otherwise.
std::int64_t e8_theta_coefficient(std::int64_t m);

/// Sum of cubes of divisors (trial division; arguments stay tiny here).
std::int64_t sigma3(std::int64_t n);

/// Coordinate-major int32 pack of a class list for the batch pairing kernel.
kernels::PackedVectors pack_classes(const std::vector<DivisorClass>& items, int rank);

/// products[i] = intersect(query, items[i]) for a packed list.
std::vector<std::int32_t> products_against(const kernels::PackedVectors& packed,
                                           const DivisorClass& query);

}  // namespace gosset

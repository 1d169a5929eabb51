#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "gosset/rational.hpp"

namespace gosset {

inline constexpr int kMinRank = 3;
inline constexpr int kMaxRank = 8;
inline constexpr int kMaxCoords = kMaxRank + 1;

/// A divisor class on a rank-r surface, written in the basis (h, e_1, ..., e_r):
/// coordinate 0 is the h-coefficient, coordinate i >= 1 the e_i-coefficient.
/// The class remembers its rank; mixing ranks is a hard error everywhere.
class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(int rank, std::span<const std::int64_t> coords);
  static DivisorClass zero(int rank);

  int rank() const { return rank_; }
  int size() const { return rank_ + 1; }

  std::int64_t operator[](int i) const { return coords_[std::size_t(i)]; }
  std::int64_t& operator[](int i) { return coords_[std::size_t(i)]; }
  std::span<const std::int64_t> coords() const { return {coords_.data(), std::size_t(size())}; }

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  DivisorClass operator*(std::int64_t scalar) const;
  friend DivisorClass operator*(std::int64_t scalar, const DivisorClass& d) { return d * scalar; }

  bool operator==(const DivisorClass& other) const;
  bool operator!=(const DivisorClass& other) const { return !(*this == other); }
  /// Canonical total order: rank first, then lexicographic on coordinates.
  bool operator<(const DivisorClass& other) const;

  std::int64_t max_abs_coord() const;

  /// "d0,c1,...,cr" with no spaces, e.g. "0,0,0,0,0,0,1" for e_6 at rank 6.
  std::string to_literal() const;

 private:
  int rank_ = 0;
  std::array<std::int64_t, kMaxCoords> coords_{};
};

/// Parses a class literal; the rank is the coordinate count minus one and must
/// land in [3,8].
DivisorClass parse_class_literal(const std::string& text);

struct DivisorClassHash {
  std::size_t operator()(const DivisorClass& d) const;
};

/// Ambient context: the rank r, the degree 9-r, and the canonical class
/// K = -3h + e_1 + ... + e_r.
class Surface {
 public:
  explicit Surface(int rank);

  int rank() const { return rank_; }
  int degree() const { return 9 - rank_; }
  const DivisorClass& canonical_class() const { return k_; }

  DivisorClass h() const;
  DivisorClass e(int i) const;  // 1 <= i <= rank

 private:
  int rank_;
  DivisorClass k_;
};

Surface make_surface(int rank);

/// Intersection pairing of signature (1,-r): d0*d0' - sum_i ci*ci'.
std::int64_t intersect(const DivisorClass& a, const DivisorClass& b);

/// intersect(d, K) = -3*d0 - sum_i ci.
std::int64_t k_degree(const Surface& s, const DivisorClass& d);

bool is_line(const Surface& s, const DivisorClass& d);                // (-1, -1)
bool is_root(const Surface& s, const DivisorClass& d);                // (-2,  0)
bool is_ruling(const Surface& s, const DivisorClass& d);              // ( 0, -2)
bool is_exceptional_system(const Surface& s, const DivisorClass& d);  // ( 1, -3)

/// D^2 - b^2/(9-r) as an exact rational. For a class on the hyperplane
/// -D.K = b this is the squared distance to the section's center.
Rational affine_norm(const Surface& s, const DivisorClass& d, std::int64_t b);

}  // namespace gosset

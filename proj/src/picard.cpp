#include "gosset/picard.hpp"

#include <sstream>
#include <stdexcept>

namespace gosset {

static void check_rank(int rank) {
  if (rank < kMinRank || rank > kMaxRank)
    throw std::invalid_argument("rank out of range [3,8]: " + std::to_string(rank));
}

static void check_same_rank(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                                std::to_string(b.rank()));
}

DivisorClass::DivisorClass(int rank, std::span<const std::int64_t> coords) : rank_(rank) {
  check_rank(rank);
  if (coords.size() != std::size_t(rank + 1))
    throw std::invalid_argument("coordinate count does not match rank");
  for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = coords[i];
}

DivisorClass DivisorClass::zero(int rank) {
  check_rank(rank);
  DivisorClass d;
  d.rank_ = rank;
  return d;
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  check_same_rank(*this, other);
  DivisorClass out = *this;
  for (int i = 0; i <= rank_; ++i) out.coords_[std::size_t(i)] += other[i];
  return out;
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  check_same_rank(*this, other);
  DivisorClass out = *this;
  for (int i = 0; i <= rank_; ++i) out.coords_[std::size_t(i)] -= other[i];
  return out;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass out = *this;
  for (int i = 0; i <= rank_; ++i) out.coords_[std::size_t(i)] = -out.coords_[std::size_t(i)];
  return out;
}

DivisorClass DivisorClass::operator*(std::int64_t scalar) const {
  DivisorClass out = *this;
  for (int i = 0; i <= rank_; ++i) out.coords_[std::size_t(i)] *= scalar;
  return out;
}

bool DivisorClass::operator==(const DivisorClass& other) const {
  if (rank_ != other.rank_) return false;
  for (int i = 0; i <= rank_; ++i)
    if (coords_[std::size_t(i)] != other.coords_[std::size_t(i)]) return false;
  return true;
}

bool DivisorClass::operator<(const DivisorClass& other) const {
  if (rank_ != other.rank_) return rank_ < other.rank_;
  for (int i = 0; i <= rank_; ++i) {
    if (coords_[std::size_t(i)] != other.coords_[std::size_t(i)])
      return coords_[std::size_t(i)] < other.coords_[std::size_t(i)];
  }
  return false;
}

std::int64_t DivisorClass::max_abs_coord() const {
  std::int64_t m = 0;
  for (int i = 0; i <= rank_; ++i) {
    const std::int64_t a = coords_[std::size_t(i)] < 0 ? -coords_[std::size_t(i)]
                                                       : coords_[std::size_t(i)];
    if (a > m) m = a;
  }
  return m;
}

std::string DivisorClass::to_literal() const {
  std::string out;
  for (int i = 0; i <= rank_; ++i) {
    if (i) out.push_back(',');
    out += std::to_string(coords_[std::size_t(i)]);
  }
  return out;
}

DivisorClass parse_class_literal(const std::string& text) {
  std::array<std::int64_t, kMaxCoords> coords{};
  int n = 0;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (n >= kMaxCoords) throw std::invalid_argument("class literal has too many coordinates");
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(piece, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad class literal coordinate: '" + piece + "'");
    }
    while (used < piece.size() && std::isspace(static_cast<unsigned char>(piece[used]))) ++used;
    if (used != piece.size())
      throw std::invalid_argument("bad class literal coordinate: '" + piece + "'");
    coords[std::size_t(n++)] = value;
  }
  if (n < kMinRank + 1 || n > kMaxRank + 1)
    throw std::invalid_argument("class literal must have 4..9 coordinates");
  return DivisorClass(n - 1, {coords.data(), std::size_t(n)});
}

std::size_t DivisorClassHash::operator()(const DivisorClass& d) const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ull;
  };
  mix(std::uint64_t(d.rank()));
  for (int i = 0; i <= d.rank(); ++i) mix(std::uint64_t(d[i]));
  return std::size_t(h);
}

Surface::Surface(int rank) : rank_(rank) {
  check_rank(rank);
  std::array<std::int64_t, kMaxCoords> coords{};
  coords[0] = -3;
  for (int i = 1; i <= rank; ++i) coords[std::size_t(i)] = 1;
  k_ = DivisorClass(rank, {coords.data(), std::size_t(rank + 1)});
}

Surface make_surface(int rank) { return Surface(rank); }

DivisorClass Surface::h() const {
  DivisorClass d = DivisorClass::zero(rank_);
  d[0] = 1;
  return d;
}

DivisorClass Surface::e(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("exceptional index out of range");
  DivisorClass d = DivisorClass::zero(rank_);
  d[i] = 1;
  return d;
}

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
  check_same_rank(a, b);
  std::int64_t total = a[0] * b[0];
  for (int i = 1; i <= a.rank(); ++i) total -= a[i] * b[i];
  return total;
}

std::int64_t k_degree(const Surface& s, const DivisorClass& d) {
  return intersect(d, s.canonical_class());
}

static bool has_signature(const Surface& s, const DivisorClass& d, std::int64_t self_int,
                          std::int64_t kdeg) {
  return intersect(d, d) == self_int && k_degree(s, d) == kdeg;
}

bool is_line(const Surface& s, const DivisorClass& d) { return has_signature(s, d, -1, -1); }
bool is_root(const Surface& s, const DivisorClass& d) { return has_signature(s, d, -2, 0); }
bool is_ruling(const Surface& s, const DivisorClass& d) { return has_signature(s, d, 0, -2); }
bool is_exceptional_system(const Surface& s, const DivisorClass& d) {
  return has_signature(s, d, 1, -3);
}

Rational affine_norm(const Surface& s, const DivisorClass& d, std::int64_t b) {
  if (d.rank() != s.rank()) throw std::invalid_argument("affine_norm: rank mismatch");
  const std::int64_t deg = s.degree();
  return Rational(deg * intersect(d, d) - b * b, deg);
}

}  // namespace gosset

#include "gosset/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gosset {

bool ClassSet::contains(const DivisorClass& d) const {
  return std::binary_search(items.begin(), items.end(), d);
}

std::ptrdiff_t ClassSet::index_of(const DivisorClass& d) const {
  auto it = std::lower_bound(items.begin(), items.end(), d);
  if (it == items.end() || !(*it == d)) return -1;
  return it - items.begin();
}

static std::int64_t isqrt_floor(std::int64_t v) {
  if (v <= 0) return 0;
  auto root = std::int64_t(std::sqrt(double(v)));
  while (root * root > v) --root;
  while ((root + 1) * (root + 1) <= v) ++root;
  return root;
}

// Enumerated sets stay inside this coordinate bound; the pairing arithmetic
// below is overflow-free as long as it holds, so violations are hard errors.
static constexpr std::int64_t kCoordAudit = 64;

ClassSet solve_classes(const Surface& s, std::int64_t self_int, std::int64_t kdeg) {
  const int r = s.rank();
  const std::int64_t deg = s.degree();
  const std::int64_t b = -kdeg;

  ClassSet out;
  out.rank = r;
  out.self_int = self_int;
  out.kdeg = kdeg;

  // Hodge feasibility: (D.K)^2 >= D^2 K^2 for every class.
  if (b * b < self_int * deg) return out;

  // Writing sum = c_1+...+c_r and sq = c_1^2+...+c_r^2, the constraints force
  // sum = b - 3*d0 and sq = d0^2 - self_int, and sum^2 <= r*sq bounds d0 by
  //   deg*d0^2 - 6*b*d0 + (b^2 + r*self_int) <= 0.
  auto d0_feasible = [&](std::int64_t d0) {
    return deg * d0 * d0 - 6 * b * d0 + (b * b + r * self_int) <= 0;
  };
  const std::int64_t disc = 36 * b * b - 4 * deg * (b * b + r * self_int);
  if (disc < 0) return out;
  const double sq_disc = std::sqrt(double(disc));
  auto lo = std::int64_t(std::floor((6.0 * double(b) - sq_disc) / (2.0 * double(deg)))) - 1;
  auto hi = std::int64_t(std::ceil((6.0 * double(b) + sq_disc) / (2.0 * double(deg)))) + 1;

  std::array<std::int64_t, kMaxCoords> coords{};
  // Chooses coordinate `idx` (1-based); `sum` and `sq` are what the remaining
  // coordinates idx..r must still contribute.
  auto search = [&](auto&& self, int idx, std::int64_t sum, std::int64_t sq) -> void {
    const int remaining = r - idx + 1;
    if (remaining == 1) {
      if (sum * sum == sq) {
        coords[std::size_t(idx)] = sum;
        out.items.emplace_back(r, std::span<const std::int64_t>{coords.data(), std::size_t(r + 1)});
      }
      return;
    }
    const std::int64_t cmax = isqrt_floor(sq);
    for (std::int64_t c = -cmax; c <= cmax; ++c) {
      const std::int64_t sum2 = sum - c;
      const std::int64_t sq2 = sq - c * c;
      if (sum2 * sum2 > std::int64_t(remaining - 1) * sq2) continue;
      coords[std::size_t(idx)] = c;
      self(self, idx + 1, sum2, sq2);
    }
  };

  for (std::int64_t d0 = lo; d0 <= hi; ++d0) {
    if (!d0_feasible(d0)) continue;
    const std::int64_t sum = b - 3 * d0;
    const std::int64_t sq = d0 * d0 - self_int;
    if (sq < 0) continue;
    if (sum * sum > std::int64_t(r) * sq) continue;
    coords[0] = d0;
    search(search, 1, sum, sq);
  }

  // Ascending d0 with ascending coordinates at every level emits canonical
  // order directly.
  for (const auto& d : out.items) {
    if (d.max_abs_coord() > kCoordAudit)
      throw std::logic_error("solve_classes: coordinate audit bound exceeded");
  }
  return out;
}

static ClassSet tagged(ClassSet set, ClassKind kind) {
  set.kind = kind;
  return set;
}

ClassSet lines(const Surface& s) { return tagged(solve_classes(s, -1, -1), ClassKind::lines); }
ClassSet roots(const Surface& s) { return tagged(solve_classes(s, -2, 0), ClassKind::roots); }
ClassSet rulings(const Surface& s) { return tagged(solve_classes(s, 0, -2), ClassKind::rulings); }
ClassSet exceptional_systems(const Surface& s) {
  return tagged(solve_classes(s, 1, -3), ClassKind::exceptional_systems);
}

ClassSet a_divisors(const Surface& s, int a) {
  if (a < 1 || a > s.rank()) throw std::invalid_argument("a_divisors: a out of range [1,rank]");
  return solve_classes(s, -a, -a);
}

kernels::PackedVectors pack_classes(const std::vector<DivisorClass>& items, int rank) {
  auto packed = kernels::make_packed(rank + 1, items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& d = items[i];
    if (d.rank() != rank) throw std::invalid_argument("pack_classes: rank mismatch");
    if (d.max_abs_coord() > 15000) throw std::logic_error("pack_classes: coordinate too large");
    for (int j = 0; j <= rank; ++j) packed.column(j)[i] = std::int32_t(d[j]);
  }
  return packed;
}

std::vector<std::int32_t> products_against(const kernels::PackedVectors& packed,
                                           const DivisorClass& query) {
  if (query.rank() + 1 != packed.dims)
    throw std::invalid_argument("products_against: rank mismatch");
  std::array<std::int32_t, kMaxCoords> q{};
  for (int j = 0; j <= query.rank(); ++j) q[std::size_t(j)] = std::int32_t(query[j]);
  std::vector<std::int32_t> out(packed.stride);
  kernels::signature_products(packed, q.data(), out.data());
  out.resize(packed.count);
  return out;
}

std::optional<std::vector<DivisorClass>> skew_decompose(const Surface& s, const DivisorClass& d,
                                                        const ClassSet& line_set,
                                                        const kernels::PackedVectors& packed) {
  const auto prods = products_against(packed, d);
  std::vector<DivisorClass> picked;
  for (std::size_t i = 0; i < prods.size(); ++i)
    if (prods[i] == -1) picked.push_back(line_set.items[i]);
  if (picked.empty()) return std::nullopt;

  DivisorClass sum = DivisorClass::zero(s.rank());
  for (const auto& l : picked) sum = sum + l;
  if (!(sum == d)) return std::nullopt;
  for (std::size_t i = 0; i < picked.size(); ++i)
    for (std::size_t j = i + 1; j < picked.size(); ++j)
      if (intersect(picked[i], picked[j]) != 0) return std::nullopt;
  return picked;
}

std::optional<std::vector<DivisorClass>> skew_decompose(const Surface& s, const DivisorClass& d) {
  const ClassSet line_set = lines(s);
  const auto packed = pack_classes(line_set.items, s.rank());
  return skew_decompose(s, d, line_set, packed);
}

std::int64_t sigma3(std::int64_t n) {
  if (n <= 0) return 0;
  std::int64_t total = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) total += d * d * d;
  return total;
}

std::int64_t e8_theta_coefficient(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("e8_theta_coefficient: negative index");
  if (m == 0) return 1;
  if (m % 2 != 0) return 0;
  return 240 * sigma3(m / 2);
}

}  // namespace gosset

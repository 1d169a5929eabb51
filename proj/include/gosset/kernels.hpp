#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gosset::kernels {

/// Symmetric adjacency storage: packed 64-bit rows, bit j of row i set when
/// vertices i and j are joined.
struct BitMatrix {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t size)
      : n(size), words((size + 63) / 64), bits(size * ((size + 63) / 64), 0) {}

  std::uint64_t* row(std::size_t i) { return bits.data() + i * words; }
  const std::uint64_t* row(std::size_t i) const { return bits.data() + i * words; }

  void set(std::size_t i, std::size_t j) { row(i)[j >> 6] |= std::uint64_t(1) << (j & 63); }
  bool get(std::size_t i, std::size_t j) const { return (row(i)[j >> 6] >> (j & 63)) & 1; }
};

/// Coordinate-major pack of small integer vectors. Column j holds coordinate j
/// of every vector, zero-padded to a lane multiple so the vector kernels never
/// need a tail loop.
struct PackedVectors {
  int dims = 0;
  std::size_t count = 0;
  std::size_t stride = 0;
  std::vector<std::int32_t> lanes;

  const std::int32_t* column(int j) const { return lanes.data() + std::size_t(j) * stride; }
  std::int32_t* column(int j) { return lanes.data() + std::size_t(j) * stride; }
};

PackedVectors make_packed(int dims, std::size_t count);

// Runtime kernel selection. All entry points dispatch to the widest variant
// the CPU supports; set_force_scalar(true) pins the scalar reference path.
void set_force_scalar(bool v);
bool force_scalar_enabled();
bool avx2_supported();
std::string active_path();  // "avx2" or "scalar"

/// dst = a & b over nwords words.
void row_and(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
             std::size_t nwords);

/// popcount(a & b) without materializing the intersection.
int row_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);

/// Minkowski pairing of one query against every packed vector:
///   out[i] = q[0]*col0[i] - q[1]*col1[i] - ... - q[dims-1]*col_{dims-1}[i].
/// Writes stride entries (the padding lanes produce zeros).
void signature_products(const PackedVectors& v, const std::int32_t* query, std::int32_t* out);

// Scalar reference implementations. These stay callable so the test suite can
// check the dispatched variants for exact agreement.
namespace scalar {
void row_and(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
             std::size_t nwords);
int row_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
void signature_products(const PackedVectors& v, const std::int32_t* query, std::int32_t* out);
}  // namespace scalar

}  // namespace gosset::kernels

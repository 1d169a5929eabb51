#include "gosset/kernels.hpp"

#include <atomic>
#include <bit>

#if defined(__x86_64__) || defined(__i386__)
#define GOSSET_X86 1
#include <immintrin.h>
#endif

namespace gosset::kernels {

static std::atomic<bool> g_force_scalar{false};

void set_force_scalar(bool v) { g_force_scalar.store(v, std::memory_order_relaxed); }
bool force_scalar_enabled() { return g_force_scalar.load(std::memory_order_relaxed); }

bool avx2_supported() {
#if defined(GOSSET_X86) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

static bool use_simd() { return avx2_supported() && !force_scalar_enabled(); }

std::string active_path() { return use_simd() ? "avx2" : "scalar"; }

PackedVectors make_packed(int dims, std::size_t count) {
  PackedVectors v;
  v.dims = dims;
  v.count = count;
  v.stride = (count + 7) / 8 * 8;
  if (v.stride == 0) v.stride = 8;
  v.lanes.assign(std::size_t(dims) * v.stride, 0);
  return v;
}

// ---------------------------------------------------------------------------
// Scalar reference kernels
// ---------------------------------------------------------------------------

namespace scalar {

void row_and(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
             std::size_t nwords) {
  for (std::size_t i = 0; i < nwords; ++i) dst[i] = a[i] & b[i];
}

int row_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
  int total = 0;
  for (std::size_t i = 0; i < nwords; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

void signature_products(const PackedVectors& v, const std::int32_t* query, std::int32_t* out) {
  const std::size_t s = v.stride;
  const std::int32_t* c0 = v.column(0);
  for (std::size_t i = 0; i < s; ++i) out[i] = query[0] * c0[i];
  for (int j = 1; j < v.dims; ++j) {
    const std::int32_t* cj = v.column(j);
    const std::int32_t qj = query[j];
    for (std::size_t i = 0; i < s; ++i) out[i] -= qj * cj[i];
  }
}

}  // namespace scalar

// ---------------------------------------------------------------------------
// AVX2 variants
// ---------------------------------------------------------------------------

#if defined(GOSSET_X86) && (defined(__GNUC__) || defined(__clang__))

__attribute__((target("avx2"))) static void row_and_avx2(const std::uint64_t* a,
                                                         const std::uint64_t* b,
                                                         std::uint64_t* dst,
                                                         std::size_t nwords) {
  std::size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(va, vb));
  }
  for (; i < nwords; ++i) dst[i] = a[i] & b[i];
}

__attribute__((target("avx2"))) static int row_and_popcount_avx2(const std::uint64_t* a,
                                                                 const std::uint64_t* b,
                                                                 std::size_t nwords) {
  int total = 0;
  std::size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i vand = _mm256_and_si256(va, vb);
    total += std::popcount(std::uint64_t(_mm256_extract_epi64(vand, 0)));
    total += std::popcount(std::uint64_t(_mm256_extract_epi64(vand, 1)));
    total += std::popcount(std::uint64_t(_mm256_extract_epi64(vand, 2)));
    total += std::popcount(std::uint64_t(_mm256_extract_epi64(vand, 3)));
  }
  for (; i < nwords; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

__attribute__((target("avx2"))) static void signature_products_avx2(const PackedVectors& v,
                                                                    const std::int32_t* query,
                                                                    std::int32_t* out) {
  const std::size_t s = v.stride;
  const std::int32_t* c0 = v.column(0);
  const __m256i q0 = _mm256_set1_epi32(query[0]);
  for (std::size_t i = 0; i < s; i += 8) {
    __m256i col = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c0 + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_mullo_epi32(q0, col));
  }
  for (int j = 1; j < v.dims; ++j) {
    const std::int32_t* cj = v.column(j);
    const __m256i qj = _mm256_set1_epi32(query[j]);
    for (std::size_t i = 0; i < s; i += 8) {
      __m256i col = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cj + i));
      __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
      acc = _mm256_sub_epi32(acc, _mm256_mullo_epi32(qj, col));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
    }
  }
}

#endif  // GOSSET_X86

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

void row_and(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* dst,
             std::size_t nwords) {
#if defined(GOSSET_X86) && (defined(__GNUC__) || defined(__clang__))
  if (use_simd()) {
    row_and_avx2(a, b, dst, nwords);
    return;
  }
#endif
  scalar::row_and(a, b, dst, nwords);
}

int row_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
#if defined(GOSSET_X86) && (defined(__GNUC__) || defined(__clang__))
  if (use_simd()) return row_and_popcount_avx2(a, b, nwords);
#endif
  return scalar::row_and_popcount(a, b, nwords);
}

void signature_products(const PackedVectors& v, const std::int32_t* query, std::int32_t* out) {
#if defined(GOSSET_X86) && (defined(__GNUC__) || defined(__clang__))
  if (use_simd()) {
    signature_products_avx2(v, query, out);
    return;
  }
#endif
  scalar::signature_products(v, query, out);
}

}  // namespace gosset::kernels

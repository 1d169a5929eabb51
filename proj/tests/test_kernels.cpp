#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "gosset/kernels.hpp"

using namespace gosset::kernels;

namespace {

struct ScalarGuard {
  explicit ScalarGuard(bool v) { set_force_scalar(v); }
  ~ScalarGuard() { set_force_scalar(false); }
};

}  // namespace

TEST_CASE("bit matrix set/get") {
  BitMatrix m(130);
  CHECK(m.words == 3);
  m.set(0, 129);
  m.set(129, 0);
  CHECK(m.get(0, 129));
  CHECK(m.get(129, 0));
  CHECK_FALSE(m.get(0, 128));
}

TEST_CASE("dispatched row kernels agree with the scalar reference") {
  std::mt19937_64 rng(7);
  for (std::size_t nwords = 0; nwords <= 9; ++nwords) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::uint64_t> a(nwords), b(nwords);
      for (auto& w : a) w = rng();
      for (auto& w : b) w = rng();

      std::vector<std::uint64_t> want(nwords), got(nwords);
      scalar::row_and(a.data(), b.data(), want.data(), nwords);
      row_and(a.data(), b.data(), got.data(), nwords);
      CHECK(want == got);

      const int want_pop = scalar::row_and_popcount(a.data(), b.data(), nwords);
      CHECK(want_pop == row_and_popcount(a.data(), b.data(), nwords));

      int direct = 0;
      for (std::size_t i = 0; i < nwords; ++i) direct += std::popcount(a[i] & b[i]);
      CHECK(want_pop == direct);
    }
  }
}

TEST_CASE("dispatched pairing kernel agrees with scalar and direct evaluation") {
  std::mt19937_64 rng(11);
  for (int dims = 4; dims <= 9; ++dims) {
    for (std::size_t count : {std::size_t(1), std::size_t(7), std::size_t(8), std::size_t(241)}) {
      PackedVectors packed = make_packed(dims, count);
      CHECK(packed.stride % 8 == 0);
      for (int j = 0; j < dims; ++j)
        for (std::size_t i = 0; i < count; ++i)
          packed.column(j)[i] = std::int32_t(rng() % 41) - 20;

      std::vector<std::int32_t> query(static_cast<std::size_t>(dims));
      for (auto& q : query) q = std::int32_t(rng() % 41) - 20;

      std::vector<std::int32_t> want(packed.stride), got(packed.stride);
      scalar::signature_products(packed, query.data(), want.data());
      signature_products(packed, query.data(), got.data());
      CHECK(want == got);

      for (std::size_t i = 0; i < count; ++i) {
        std::int64_t direct = std::int64_t(query[0]) * packed.column(0)[i];
        for (int j = 1; j < dims; ++j) direct -= std::int64_t(query[std::size_t(j)]) * packed.column(j)[i];
        CHECK(std::int64_t(want[i]) == direct);
      }
    }
  }
}

TEST_CASE("force_scalar pins the scalar path") {
  {
    ScalarGuard guard(true);
    CHECK(active_path() == "scalar");
    std::uint64_t a = 0xF0F0F0F0F0F0F0F0ull, b = 0xFF00FF00FF00FF00ull, dst = 0;
    row_and(&a, &b, &dst, 1);
    CHECK(dst == (a & b));
  }
  // after the guard, the dispatcher may pick the wide path again
  CHECK((active_path() == "avx2" || active_path() == "scalar"));
}

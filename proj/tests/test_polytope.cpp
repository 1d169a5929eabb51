#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gosset/polytope.hpp"

using namespace gosset;

TEST_CASE("polytope construction") {
  const auto p6 = build_polytope(Surface(6));
  REQUIRE(p6.vertex_count() == 27);
  for (std::size_t i = 0; i < 27; ++i) CHECK(p6.degree(VertexIndex(i)) == 16);

  const auto p3 = build_polytope(Surface(3));
  REQUIRE(p3.vertex_count() == 6);
  CHECK(count_simplexes(p3, 1) == 9);
  for (std::size_t i = 0; i < 6; ++i) CHECK(p3.degree(VertexIndex(i)) == 3);

  for (std::size_t i = 0; i < p3.vertex_count(); ++i) {
    CHECK_FALSE(p3.adjacency.get(i, i));
    for (std::size_t j = 0; j < p3.vertex_count(); ++j)
      CHECK(p3.adjacency.get(i, j) == p3.adjacency.get(j, i));
  }
}

TEST_CASE("clique layer counts reproduce the face tables") {
  for (int r = 3; r <= 7; ++r) {
    const auto p = build_polytope(Surface(r));
    const FaceTable table = expected_face_table(r);
    const auto layers = count_simplex_layers(p, r - 1, 2);
    REQUIRE(layers.size() == table.simplexes.size());
    for (std::size_t k = 0; k < layers.size(); ++k) CHECK(layers[k] == table.simplexes[k]);
    CHECK(crosspolytopes(p).size() == table.crosspolytopes);
  }
}

TEST_CASE("spot counts") {
  CHECK(count_simplexes(build_polytope(Surface(6)), 5) == 72);
  CHECK(count_simplexes(build_polytope(Surface(7)), 3) == 10080);
  CHECK_THROWS_AS(count_simplexes(build_polytope(Surface(6)), 6), std::invalid_argument);
  CHECK_THROWS_AS(count_simplexes(build_polytope(Surface(6)), -1), std::invalid_argument);
}

TEST_CASE("listing matches counting and is canonical") {
  const auto p = build_polytope(Surface(5));
  for (int k = 0; k <= 4; ++k) {
    const auto flat = list_simplexes_flat(p, k, 2);
    CHECK(flat.count == count_simplexes(p, k));

    std::vector<VertexIndex> previous;
    std::size_t seen = 0;
    for_each_simplex(p, k, [&](std::span<const VertexIndex> rec) {
      const std::vector<VertexIndex> current(rec.begin(), rec.end());
      CHECK(std::is_sorted(current.begin(), current.end()));
      if (!previous.empty()) CHECK(previous < current);
      const auto stored = flat.record(seen);
      CHECK(std::equal(stored.begin(), stored.end(), current.begin()));
      CHECK(flat.find(current) == std::ptrdiff_t(seen));
      previous = current;
      ++seen;
    });
    CHECK(seen == flat.count);

    const auto materialized = list_simplexes(p, k);
    REQUIRE(materialized.size() == flat.count);
    for (std::size_t i = 0; i < materialized.size(); ++i) {
      CHECK(materialized[i].dimension() == k);
      const auto rec = flat.record(i);
      CHECK(std::equal(rec.begin(), rec.end(), materialized[i].vertices.begin()));
    }

    const auto sweep = sweep_simplexes(p, k, 2, [&](std::span<const VertexIndex> rec) {
      for (std::size_t i = 0; i < rec.size(); ++i)
        for (std::size_t j = i + 1; j < rec.size(); ++j)
          if (!p.adjacency.get(rec[i], rec[j])) return false;
      return true;
    });
    CHECK(sweep.count == flat.count);
    CHECK(sweep.all_ok);
  }
}

TEST_CASE("crosspolytope of a named ruling at rank 6") {
  const Surface s6(6);
  const auto p = build_polytope(s6);
  const auto crosses = crosspolytopes(p);
  REQUIRE(crosses.size() == 27);

  const DivisorClass f = s6.h() - s6.e(6);
  const auto it = std::find_if(crosses.begin(), crosses.end(),
                               [&](const Crosspolytope& c) { return c.ruling == f; });
  REQUIRE(it != crosses.end());
  REQUIRE(it->pairs.size() == 5);
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& [a, b] : it->pairs) {
    std::string first = p.vertex(a).to_literal();
    std::string second = p.vertex(b).to_literal();
    if (second < first) std::swap(first, second);
    got.insert({first, second});
  }
  for (int i = 1; i <= 5; ++i) {
    std::string ei = s6.e(i).to_literal();
    std::string partner = (s6.h() - s6.e(i) - s6.e(6)).to_literal();
    if (partner < ei) std::swap(ei, partner);
    CHECK(got.count({ei, partner}) == 1);
  }
}

TEST_CASE("rank-3 crosspolytopes are the three squares") {
  const Surface s3(3);
  const auto p = build_polytope(s3);
  const auto crosses = crosspolytopes(p);
  REQUIRE(crosses.size() == 3);
  for (const auto& c : crosses) CHECK(c.pairs.size() == 2);

  const DivisorClass f = s3.h() - s3.e(1);
  const auto it = std::find_if(crosses.begin(), crosses.end(),
                               [&](const Crosspolytope& c) { return c.ruling == f; });
  REQUIRE(it != crosses.end());
  std::set<std::string> members;
  for (const VertexIndex v : it->vertex_indices()) members.insert(p.vertex(v).to_literal());
  CHECK(members == std::set<std::string>{s3.e(2).to_literal(), s3.e(3).to_literal(),
                                         (s3.h() - s3.e(1) - s3.e(2)).to_literal(),
                                         (s3.h() - s3.e(1) - s3.e(3)).to_literal()});
}

TEST_CASE("crosspolytope interior: adjacency exactly off the antipode") {
  const auto p = build_polytope(Surface(6));
  for (const auto& cp : crosspolytopes(p)) {
    const auto members = cp.vertex_indices();
    auto antipodal = [&](VertexIndex a, VertexIndex b) {
      for (const auto& [x, y] : cp.pairs)
        if ((x == a && y == b) || (x == b && y == a)) return true;
      return false;
    };
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        CHECK(p.adjacency.get(members[i], members[j]) == !antipodal(members[i], members[j]));

    const auto internal = count_cliques_within(p, members, 4);
    for (int k = 0; k <= 4; ++k)
      CHECK(internal[std::size_t(k)] == face_count_formula(FaceFamily::crosspolytope, 5, k));
    CHECK(internal[4] == 32);  // the facet simplexes of a 5-crosspolytope
  }
}

TEST_CASE("centers") {
  const Surface s6(6);
  const auto p = build_polytope(s6);
  const std::ptrdiff_t i1 = p.vertices.index_of(s6.e(1));
  const std::ptrdiff_t i2 = p.vertices.index_of(s6.e(2));
  REQUIRE(i1 >= 0);
  REQUIRE(i2 >= 0);
  std::vector<VertexIndex> pair = {VertexIndex(std::min(i1, i2)), VertexIndex(std::max(i1, i2))};
  CHECK(simplex_center(p, pair) == s6.e(1) + s6.e(2));
}

TEST_CASE("facet centers are distinct and recover their vertex sets") {
  for (int r = 3; r <= 5; ++r) {
    const Surface s(r);
    const auto p = build_polytope(s);
    const auto packed = pack_classes(p.vertices.items, r);
    for (int k = 0; k <= r - 1; ++k) {
      const auto flat = list_simplexes_flat(p, k);
      std::vector<DivisorClass> centers;
      for (std::size_t i = 0; i < flat.count; ++i) {
        const auto rec = flat.record(i);
        const DivisorClass center = simplex_center(p, rec);
        centers.push_back(center);
        const auto parts = skew_decompose(s, center, p.vertices, packed);
        REQUIRE(parts.has_value());
        REQUIRE(parts->size() == rec.size());
        for (std::size_t j = 0; j < rec.size(); ++j) CHECK((*parts)[j] == p.vertex(rec[j]));
      }
      std::sort(centers.begin(), centers.end());
      CHECK(std::adjacent_find(centers.begin(), centers.end()) == centers.end());
    }
  }
}

TEST_CASE("facet simplexes correspond to exceptional systems") {
  const Surface s6(6);
  const auto p = build_polytope(s6);
  std::vector<VertexIndex> exceptional_facet;
  for (int i = 1; i <= 6; ++i) {
    const std::ptrdiff_t pos = p.vertices.index_of(s6.e(i));
    REQUIRE(pos >= 0);
    exceptional_facet.push_back(VertexIndex(pos));
  }
  std::sort(exceptional_facet.begin(), exceptional_facet.end());
  const auto image = simplex_to_exceptional_system(p, exceptional_facet);
  REQUIRE(image.has_value());
  CHECK(*image == s6.h());

  CHECK_THROWS_AS(
      simplex_to_exceptional_system(p, std::span<const VertexIndex>(exceptional_facet.data(), 3)),
      std::invalid_argument);

  // full bijection at rank 5
  const Surface s5(5);
  const auto p5 = build_polytope(s5);
  const auto facets = list_simplexes_flat(p5, 4);
  const ClassSet esys = exceptional_systems(s5);
  std::vector<DivisorClass> images;
  for (std::size_t i = 0; i < facets.count; ++i) {
    const auto inv = simplex_to_exceptional_system(p5, facets.record(i));
    REQUIRE(inv.has_value());
    images.push_back(*inv);
  }
  std::sort(images.begin(), images.end());
  CHECK(images.size() == esys.size());
  CHECK(std::equal(images.begin(), images.end(), esys.items.begin()));
}

TEST_CASE("rank-3 facets: two triangles mapping onto the two systems") {
  const Surface s3(3);
  const auto p = build_polytope(s3);
  const auto facets = list_simplexes_flat(p, 2);
  REQUIRE(facets.count == 2);
  std::vector<std::string> images;
  for (std::size_t i = 0; i < facets.count; ++i) {
    const auto inv = simplex_to_exceptional_system(p, facets.record(i));
    REQUIRE(inv.has_value());
    images.push_back(inv->to_literal());
  }
  std::sort(images.begin(), images.end());
  CHECK(images == std::vector<std::string>{"1,0,0,0", "2,-1,-1,-1"});
}

TEST_CASE("face count formulas") {
  CHECK(face_count_formula(FaceFamily::simplex, 3, 1) == 6);
  for (int n = 1; n <= 8; ++n)
    CHECK(face_count_formula(FaceFamily::crosspolytope, n, 0) == std::uint64_t(2 * n));
  CHECK(face_count_formula(FaceFamily::crosspolytope, 5, 4) == 32);
  CHECK_THROWS_AS(face_count_formula(FaceFamily::simplex, 3, 3), std::invalid_argument);
}

TEST_CASE("expected face tables, spot rows") {
  const FaceTable t7 = expected_face_table(7);
  CHECK(t7.crosspolytopes == 126);
  CHECK(t7.simplexes == std::vector<std::uint64_t>{56, 756, 4032, 10080, 12096, 6048, 576});
  const FaceTable t4 = expected_face_table(4);
  CHECK(t4.crosspolytopes == 5);
  CHECK(t4.simplexes == std::vector<std::uint64_t>{10, 30, 30, 5});
  const FaceTable t5 = expected_face_table(5);
  CHECK(t5.crosspolytopes == 10);
  CHECK(t5.simplexes == std::vector<std::uint64_t>{16, 80, 160, 120, 16});
  CHECK_THROWS_AS(expected_face_table(9), std::invalid_argument);
}

TEST_CASE("five skew lines pairing into one ruling") {
  const Surface s6(6);
  const auto p = build_polytope(s6);
  const DivisorClass f = s6.h() - s6.e(6);
  for (int i = 1; i <= 5; ++i) {
    const DivisorClass li = s6.h() - s6.e(i) - s6.e(6);
    CHECK(p.vertices.contains(li));
    CHECK(li + s6.e(i) == f);
    for (int j = i + 1; j <= 5; ++j)
      CHECK(intersect(li, s6.h() - s6.e(j) - s6.e(6)) == 0);
  }
}

TEST_CASE("restricting the clique search to the full vertex set changes nothing") {
  const auto p = build_polytope(Surface(4));
  std::vector<VertexIndex> all;
  for (std::size_t i = 0; i < p.vertex_count(); ++i) all.push_back(VertexIndex(i));
  CHECK(count_cliques_within(p, all, 3) == count_simplex_layers(p, 3));
}

TEST_CASE("the scalar kernel path builds the same polytope") {
  const auto wide = build_polytope(Surface(6));
  const auto wide_layers = count_simplex_layers(wide, 5, 2);

  kernels::set_force_scalar(true);
  const auto narrow = build_polytope(Surface(6));
  const auto narrow_layers = count_simplex_layers(narrow, 5, 2);
  kernels::set_force_scalar(false);

  CHECK(wide.adjacency.bits == narrow.adjacency.bits);
  CHECK(wide_layers == narrow_layers);
}

#include "gosset/transforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "gosset/parallel.hpp"

namespace gosset {

static void require_line(const Surface& s, const DivisorClass& line, const char* who) {
  if (line.rank() != s.rank())
    throw std::invalid_argument(std::string(who) + ": rank mismatch");
  if (!is_line(s, line)) throw std::invalid_argument(std::string(who) + ": class is not a line");
}

std::int64_t line_degree(const Surface& s, const DivisorClass& line) {
  require_line(s, line, "line_degree");
  return intersect(line, s.e(s.rank()));
}

BlowDown blow_down_class(const Surface& s, const DivisorClass& line) {
  require_line(s, line, "blow_down_class");
  if (s.rank() < 4) throw std::invalid_argument("blow_down_class: rank must be at least 4");
  if (line == s.e(s.rank()))
    throw std::invalid_argument("blow_down_class: e_r has no strict transform");
  const std::int64_t m = line_degree(s, line);
  std::vector<std::int64_t> coords(line.coords().begin(), line.coords().end() - 1);
  return BlowDown{DivisorClass(s.rank() - 1, coords), m};
}

DegreeClassification classify_line_degrees(const Surface& s) {
  DegreeClassification out;
  out.rank = s.rank();
  const DivisorClass exceptional = s.e(s.rank());
  for (const auto& l : lines(s).items) {
    if (l == exceptional) continue;
    const std::int64_t m = intersect(l, exceptional);
    auto [it, fresh] = out.buckets.try_emplace(m);
    if (fresh) {
      it->second.rank = s.rank();
      it->second.kind = ClassKind::lines;
      it->second.self_int = -1;
      it->second.kdeg = -1;
    }
    it->second.items.push_back(l);
  }
  // lines(s) is canonical, so each bucket inherits sorted order
  return out;
}

ClassSet n_k(const Surface& s, const DivisorClass& line, std::int64_t k) {
  require_line(s, line, "n_k");
  ClassSet out;
  out.rank = s.rank();
  out.kind = ClassKind::lines;
  out.self_int = -1;
  out.kdeg = -1;
  for (const auto& l : lines(s).items)
    if (!(l == line) && intersect(l, line) == k) out.items.push_back(l);
  return out;
}

DivisorClass gieser(const Surface& s, const DivisorClass& line) {
  if (s.rank() != 7) throw std::invalid_argument("gieser: defined on rank 7 only");
  require_line(s, line, "gieser");
  return -(s.canonical_class() + line);
}

DivisorClass bertini(const Surface& s, const DivisorClass& line) {
  if (s.rank() != 8) throw std::invalid_argument("bertini: defined on rank 8 only");
  require_line(s, line, "bertini");
  return -(s.canonical_class() * 2 + line);
}

std::vector<VertexIndex> vertex_permutation(
    const GossetPolytope& p, const std::function<DivisorClass(const DivisorClass&)>& line_map) {
  const std::size_t n = p.vertex_count();
  std::vector<VertexIndex> perm(n, 0);
  std::vector<char> hit(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const DivisorClass image = line_map(p.vertex(VertexIndex(i)));
    const std::ptrdiff_t pos = p.vertices.index_of(image);
    if (pos < 0) throw std::invalid_argument("vertex map: image is not a vertex");
    if (hit[std::size_t(pos)]) throw std::invalid_argument("vertex map: not a bijection");
    hit[std::size_t(pos)] = 1;
    perm[i] = VertexIndex(pos);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto products = products_against(p.packed, p.vertex(VertexIndex(i)));
    const auto image_products = products_against(p.packed, p.vertex(perm[i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (products[j] != image_products[perm[j]])
        throw std::invalid_argument("vertex map: intersections are not preserved");
    }
  }
  return perm;
}

std::vector<std::uint32_t> induced_simplex_map(const GossetPolytope& p,
                                               const std::vector<VertexIndex>& vertex_perm,
                                               int k, unsigned threads) {
  if (vertex_perm.size() != p.vertex_count())
    throw std::invalid_argument("induced_simplex_map: permutation size mismatch");
  const auto layer = list_simplexes_flat(p, k, threads);
  const std::size_t width = std::size_t(k + 1);

  std::vector<std::uint32_t> out(layer.count, 0);
  std::vector<char> ok(layer.count, 1);
  parallel_for(layer.count, threads, [&](std::size_t i) {
    std::vector<VertexIndex> image(width);
    const auto rec = layer.record(i);
    for (std::size_t j = 0; j < width; ++j) image[j] = vertex_perm[rec[j]];
    std::sort(image.begin(), image.end());
    const std::ptrdiff_t pos = layer.find(image);
    if (pos < 0) {
      ok[i] = 0;
      return;
    }
    out[i] = std::uint32_t(pos);
  });
  for (const char flag : ok)
    if (!flag) throw std::logic_error("induced_simplex_map: image is not a face of the layer");
  return out;
}

std::vector<std::uint32_t> induced_crosspolytope_map(const GossetPolytope& p,
                                                     const std::vector<VertexIndex>& vertex_perm) {
  if (vertex_perm.size() != p.vertex_count())
    throw std::invalid_argument("induced_crosspolytope_map: permutation size mismatch");
  const ClassSet ruling_set = rulings(p.surface);
  std::vector<std::uint32_t> out(ruling_set.size(), 0);
  std::vector<char> hit(ruling_set.size(), 0);
  for (std::size_t i = 0; i < ruling_set.size(); ++i) {
    // Any antipodal pair determines the image ruling; take a line on the
    // crosspolytope and its partner.
    const DivisorClass& f = ruling_set.items[i];
    const auto products = products_against(p.packed, f);
    std::ptrdiff_t member = -1;
    for (std::size_t j = 0; j < p.vertex_count(); ++j)
      if (products[j] == 0) {
        member = std::ptrdiff_t(j);
        break;
      }
    if (member < 0) throw std::logic_error("induced_crosspolytope_map: empty crosspolytope");
    const DivisorClass partner = f - p.vertex(VertexIndex(member));
    const std::ptrdiff_t partner_pos = p.vertices.index_of(partner);
    if (partner_pos < 0) throw std::logic_error("induced_crosspolytope_map: missing antipode");
    const DivisorClass image =
        p.vertex(vertex_perm[std::size_t(member)]) + p.vertex(vertex_perm[std::size_t(partner_pos)]);
    const std::ptrdiff_t pos = ruling_set.index_of(image);
    if (pos < 0) throw std::logic_error("induced_crosspolytope_map: image is not a ruling");
    if (hit[std::size_t(pos)])
      throw std::logic_error("induced_crosspolytope_map: not a bijection");
    hit[std::size_t(pos)] = 1;
    out[i] = std::uint32_t(pos);
  }
  return out;
}

}  // namespace gosset

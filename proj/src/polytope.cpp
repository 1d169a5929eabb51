#include "gosset/polytope.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "gosset/parallel.hpp"

namespace gosset {

namespace {

std::uint64_t popcount_row(const std::uint64_t* row, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::uint64_t(std::popcount(row[i]));
  return total;
}

// dst = cand & row, with bits <= w cleared.
void and_above(const std::uint64_t* cand, const std::uint64_t* row, std::size_t w,
               std::uint64_t* dst, std::size_t words) {
  kernels::row_and(cand, row, dst, words);
  const std::size_t wi = w >> 6;
  for (std::size_t i = 0; i < wi && i < words; ++i) dst[i] = 0;
  if (wi < words) {
    const unsigned off = unsigned(w & 63);
    dst[wi] &= (off == 63) ? 0ull : ~((std::uint64_t(1) << (off + 1)) - 1);
  }
}

// dst = row with bits <= w cleared.
void mask_above(const std::uint64_t* row, std::size_t w, std::uint64_t* dst, std::size_t words) {
  and_above(row, row, w, dst, words);
}

template <typename Fn>
void for_each_bit(const std::uint64_t* row, std::size_t words, Fn&& fn) {
  for (std::size_t wi = 0; wi < words; ++wi) {
    std::uint64_t word = row[wi];
    while (word) {
      const int bit = std::countr_zero(word);
      word &= word - 1;
      fn((wi << 6) + std::size_t(bit));
    }
  }
}

// Counts every clique that strictly extends the current one (of size `size`)
// up to max_size vertices; cand holds the admissible extensions (all greater
// than the current maximum vertex and adjacent to every member).
void count_extend(const kernels::BitMatrix& adj, const std::uint64_t* cand, int size,
                  int max_size, std::uint64_t* counts_by_size, std::uint64_t* depth_buf) {
  const std::size_t words = adj.words;
  const std::uint64_t extensions = popcount_row(cand, words);
  if (extensions == 0 || size + 1 > max_size) return;
  counts_by_size[size + 1] += extensions;
  if (size + 2 > max_size) return;
  for_each_bit(cand, words, [&](std::size_t v) {
    and_above(cand, adj.row(v), v, depth_buf, words);
    count_extend(adj, depth_buf, size + 1, max_size, counts_by_size, depth_buf + words);
  });
}

// Emits cliques of exactly target_size vertices in lexicographic order.
template <typename Sink>
void list_extend(const kernels::BitMatrix& adj, const std::uint64_t* cand, int depth,
                 int target_size, VertexIndex* stack, std::uint64_t* depth_buf, Sink&& sink) {
  const std::size_t words = adj.words;
  for_each_bit(cand, words, [&](std::size_t v) {
    stack[depth] = VertexIndex(v);
    if (depth + 1 == target_size) {
      sink(std::span<const VertexIndex>{stack, std::size_t(target_size)});
    } else {
      and_above(cand, adj.row(v), v, depth_buf, words);
      list_extend(adj, depth_buf, depth + 1, target_size, stack, depth_buf + words,
                  std::forward<Sink>(sink));
    }
  });
}

std::vector<std::uint64_t> full_mask(std::size_t n, std::size_t words) {
  std::vector<std::uint64_t> mask(words, 0);
  for (std::size_t i = 0; i < n; ++i) mask[i >> 6] |= std::uint64_t(1) << (i & 63);
  return mask;
}

void check_layer(const GossetPolytope& p, int k) {
  if (k < 0 || k > p.rank() - 1)
    throw std::invalid_argument("simplex dimension out of range [0,rank-1]");
}

}  // namespace

std::size_t GossetPolytope::degree(VertexIndex i) const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < adjacency.words; ++w)
    total += std::size_t(std::popcount(adjacency.row(i)[w]));
  return total;
}

GossetPolytope build_polytope(const Surface& s) {
  GossetPolytope p{s, lines(s), kernels::BitMatrix(), kernels::PackedVectors()};
  const std::size_t n = p.vertices.size();
  p.adjacency = kernels::BitMatrix(n);
  p.packed = pack_classes(p.vertices.items, s.rank());
  for (std::size_t i = 0; i < n; ++i) {
    const auto products = products_against(p.packed, p.vertices.items[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && products[j] == 0) p.adjacency.set(i, j);
  }
  return p;
}

std::vector<std::uint64_t> count_simplex_layers(const GossetPolytope& p, int max_k,
                                                unsigned threads) {
  check_layer(p, max_k);
  const std::size_t n = p.vertex_count();
  const std::size_t words = p.adjacency.words;
  const int max_size = max_k + 1;

  std::vector<std::vector<std::uint64_t>> slots(n);
  parallel_for(n, threads, [&](std::size_t v) {
    std::vector<std::uint64_t> counts(std::size_t(max_size) + 1, 0);
    if (max_size >= 2) {
      std::vector<std::uint64_t> buffers(std::size_t(max_size + 1) * words, 0);
      mask_above(p.adjacency.row(v), v, buffers.data(), words);
      count_extend(p.adjacency, buffers.data(), 1, max_size, counts.data(),
                   buffers.data() + words);
    }
    slots[v] = std::move(counts);
  });

  std::vector<std::uint64_t> by_size(std::size_t(max_size) + 1, 0);
  by_size[1] = n;
  for (const auto& slot : slots)
    for (std::size_t i = 0; i < slot.size(); ++i) by_size[i] += slot[i];

  std::vector<std::uint64_t> by_dim(std::size_t(max_k) + 1, 0);
  for (int k = 0; k <= max_k; ++k) by_dim[std::size_t(k)] = by_size[std::size_t(k) + 1];
  return by_dim;
}

std::uint64_t count_simplexes(const GossetPolytope& p, int k, unsigned threads) {
  check_layer(p, k);
  return count_simplex_layers(p, k, threads)[std::size_t(k)];
}

std::vector<std::uint64_t> count_cliques_within(const GossetPolytope& p,
                                                std::span<const VertexIndex> subset, int max_k) {
  check_layer(p, max_k);
  const std::size_t words = p.adjacency.words;
  const int max_size = max_k + 1;
  std::vector<std::uint64_t> mask(words, 0);
  for (const VertexIndex v : subset) mask[v >> 6] |= std::uint64_t(1) << (v & 63);

  std::vector<std::uint64_t> by_size(std::size_t(max_size) + 1, 0);
  std::vector<std::uint64_t> buffers(std::size_t(max_size + 2) * words, 0);
  count_extend(p.adjacency, mask.data(), 0, max_size, by_size.data(), buffers.data());
  std::vector<std::uint64_t> by_dim(std::size_t(max_k) + 1, 0);
  for (int k = 0; k <= max_k; ++k) by_dim[std::size_t(k)] = by_size[std::size_t(k) + 1];
  return by_dim;
}

void for_each_simplex(const GossetPolytope& p, int k,
                      const std::function<void(std::span<const VertexIndex>)>& visit) {
  check_layer(p, k);
  const std::size_t words = p.adjacency.words;
  const int target = k + 1;
  std::vector<std::uint64_t> buffers(std::size_t(target + 1) * words, 0);
  std::vector<VertexIndex> stack(std::size_t(target), 0);
  const auto everything = full_mask(p.vertex_count(), words);
  list_extend(p.adjacency, everything.data(), 0, target, stack.data(), buffers.data(), visit);
}

std::ptrdiff_t FlatSimplexList::find(std::span<const VertexIndex> verts) const {
  if (verts.size() != std::size_t(k + 1)) return -1;
  const std::size_t width = std::size_t(k + 1);
  std::size_t lo = 0, hi = count;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const VertexIndex* rec = data.data() + mid * width;
    int cmp = 0;
    for (std::size_t i = 0; i < width; ++i) {
      if (rec[i] != verts[i]) {
        cmp = rec[i] < verts[i] ? -1 : 1;
        break;
      }
    }
    if (cmp < 0)
      lo = mid + 1;
    else if (cmp > 0)
      hi = mid;
    else
      return std::ptrdiff_t(mid);
  }
  return -1;
}

FlatSimplexList list_simplexes_flat(const GossetPolytope& p, int k, unsigned threads) {
  check_layer(p, k);
  const std::size_t n = p.vertex_count();
  const std::size_t words = p.adjacency.words;
  const int target = k + 1;

  FlatSimplexList out;
  out.k = k;
  if (target == 1) {
    out.count = n;
    out.data.resize(n);
    for (std::size_t v = 0; v < n; ++v) out.data[v] = VertexIndex(v);
    return out;
  }

  // Per-root listings concatenated in root order reproduce canonical order.
  std::vector<std::vector<VertexIndex>> slots(n);
  parallel_for(n, threads, [&](std::size_t v) {
    std::vector<std::uint64_t> buffers(std::size_t(target + 1) * words, 0);
    std::vector<VertexIndex> stack(std::size_t(target), 0);
    stack[0] = VertexIndex(v);
    mask_above(p.adjacency.row(v), v, buffers.data(), words);
    std::vector<VertexIndex> local;
    list_extend(p.adjacency, buffers.data(), 1, target, stack.data(), buffers.data() + words,
                [&local](std::span<const VertexIndex> rec) {
                  local.insert(local.end(), rec.begin(), rec.end());
                });
    slots[v] = std::move(local);
  });

  std::size_t total = 0;
  for (const auto& slot : slots) total += slot.size();
  out.data.reserve(total);
  for (const auto& slot : slots) out.data.insert(out.data.end(), slot.begin(), slot.end());
  out.count = out.data.size() / std::size_t(target);
  return out;
}

std::vector<Simplex> list_simplexes(const GossetPolytope& p, int k) {
  const auto flat = list_simplexes_flat(p, k);
  std::vector<Simplex> out;
  out.reserve(flat.count);
  for (std::size_t i = 0; i < flat.count; ++i) {
    const auto rec = flat.record(i);
    out.push_back(Simplex{std::vector<VertexIndex>(rec.begin(), rec.end())});
  }
  return out;
}

SweepResult sweep_simplexes(const GossetPolytope& p, int k, unsigned threads,
                            const std::function<bool(std::span<const VertexIndex>)>& pred) {
  check_layer(p, k);
  const std::size_t n = p.vertex_count();
  const std::size_t words = p.adjacency.words;
  const int target = k + 1;

  std::vector<std::uint64_t> counts(n, 0);
  std::vector<char> ok(n, 1);
  parallel_for(n, threads, [&](std::size_t v) {
    std::uint64_t local_count = 0;
    bool local_ok = true;
    if (target == 1) {
      VertexIndex idx = VertexIndex(v);
      ++local_count;
      local_ok = pred(std::span<const VertexIndex>{&idx, 1});
    } else {
      std::vector<std::uint64_t> buffers(std::size_t(target + 1) * words, 0);
      std::vector<VertexIndex> stack(std::size_t(target), 0);
      stack[0] = VertexIndex(v);
      mask_above(p.adjacency.row(v), v, buffers.data(), words);
      list_extend(p.adjacency, buffers.data(), 1, target, stack.data(), buffers.data() + words,
                  [&](std::span<const VertexIndex> rec) {
                    ++local_count;
                    if (local_ok && !pred(rec)) local_ok = false;
                  });
    }
    counts[v] = local_count;
    ok[v] = local_ok ? 1 : 0;
  });

  SweepResult result;
  for (std::size_t v = 0; v < n; ++v) {
    result.count += counts[v];
    if (!ok[v]) result.all_ok = false;
  }
  return result;
}

std::vector<VertexIndex> Crosspolytope::vertex_indices() const {
  std::vector<VertexIndex> out;
  out.reserve(pairs.size() * 2);
  for (const auto& [a, b] : pairs) {
    out.push_back(a);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Crosspolytope> crosspolytopes(const GossetPolytope& p) {
  const int r = p.rank();
  const ClassSet ruling_set = rulings(p.surface);
  std::vector<Crosspolytope> out;
  out.reserve(ruling_set.size());

  for (const auto& f : ruling_set.items) {
    const auto products = products_against(p.packed, f);
    std::vector<VertexIndex> members;
    for (std::size_t i = 0; i < p.vertex_count(); ++i)
      if (products[i] == 0) members.push_back(VertexIndex(i));
    if (members.size() != std::size_t(2 * (r - 1)))
      throw std::logic_error("crosspolytope: vertex count is not 2(r-1)");

    Crosspolytope cp{f, {}};
    std::vector<char> used(members.size(), 0);
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (used[a]) continue;
      const DivisorClass partner = f - p.vertex(members[a]);
      const std::ptrdiff_t partner_pos = p.vertices.index_of(partner);
      if (partner_pos < 0) throw std::logic_error("crosspolytope: antipode is not a line");
      bool matched = false;
      for (std::size_t c = a + 1; c < members.size(); ++c) {
        if (!used[c] && members[c] == VertexIndex(partner_pos)) {
          used[a] = used[c] = 1;
          cp.pairs.emplace_back(members[a], members[c]);
          matched = true;
          break;
        }
      }
      if (!matched) throw std::logic_error("crosspolytope: unpaired vertex");
    }
    if (cp.pairs.size() != std::size_t(r - 1))
      throw std::logic_error("crosspolytope: pair count is not r-1");
    out.push_back(std::move(cp));
  }
  return out;
}

DivisorClass simplex_center(const GossetPolytope& p, std::span<const VertexIndex> verts) {
  DivisorClass sum = DivisorClass::zero(p.rank());
  for (const VertexIndex v : verts) sum = sum + p.vertex(v);
  return sum;
}

std::optional<DivisorClass> simplex_to_exceptional_system(const GossetPolytope& p,
                                                          std::span<const VertexIndex> facet) {
  if (facet.size() != std::size_t(p.rank()))
    throw std::invalid_argument("facet simplex must have rank-many vertices");
  const DivisorClass shifted = simplex_center(p, facet) - p.surface.canonical_class();
  DivisorClass out = DivisorClass::zero(p.rank());
  for (int i = 0; i <= p.rank(); ++i) {
    if (shifted[i] % 3 != 0) return std::nullopt;
    out[i] = shifted[i] / 3;
  }
  if (!is_exceptional_system(p.surface, out))
    throw std::logic_error("facet image is integral but not an exceptional system");
  return out;
}

static std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * std::uint64_t(n - k + i) / std::uint64_t(i);
  return result;
}

std::uint64_t face_count_formula(FaceFamily family, int n, int k) {
  if (k < 0 || k >= n) throw std::invalid_argument("face_count_formula: need 0 <= k < n");
  if (family == FaceFamily::simplex) return binomial(n + 1, k + 1);
  return (std::uint64_t(1) << (k + 1)) * binomial(n, k + 1);
}

FaceTable expected_face_table(int r) {
  switch (r) {
    case 3:
      return {3, {6, 9, 2}};
    case 4:
      return {5, {10, 30, 30, 5}};
    case 5:
      return {10, {16, 80, 160, 120, 16}};
    case 6:
      return {27, {27, 216, 720, 1080, 648, 72}};
    case 7:
      return {126, {56, 756, 4032, 10080, 12096, 6048, 576}};
    case 8:
      return {2160, {240, 6720, 60480, 241920, 483840, 483840, 207360, 17280}};
    default:
      throw std::invalid_argument("expected_face_table: rank out of range [3,8]");
  }
}

}  // namespace gosset

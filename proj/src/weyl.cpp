#include "gosset/weyl.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace gosset {

RootBasis simple_roots(const Surface& s) {
  RootBasis basis;
  basis.rank = s.rank();
  DivisorClass d0 = s.h() - s.e(1) - s.e(2) - s.e(3);
  basis.roots.push_back(d0);
  for (int i = 1; i <= s.rank() - 1; ++i) basis.roots.push_back(s.e(i) - s.e(i + 1));
  return basis;
}

DivisorClass reflect(const DivisorClass& d, const DivisorClass& root) {
  if (root.rank() != d.rank()) throw std::invalid_argument("reflect: rank mismatch");
  const Surface s(root.rank());
  if (!is_root(s, root)) throw std::invalid_argument("reflect: reflector is not a root");
  return d + root * intersect(d, root);
}

ClassSet orbit(const Surface& s, const DivisorClass& seed,
               std::span<const DivisorClass> generators) {
  if (seed.rank() != s.rank()) throw std::invalid_argument("orbit: seed rank mismatch");
  for (const auto& g : generators)
    if (!is_root(s, g)) throw std::invalid_argument("orbit: generator is not a root");

  std::unordered_set<DivisorClass, DivisorClassHash> seen{seed};
  std::deque<DivisorClass> frontier{seed};
  while (!frontier.empty()) {
    const DivisorClass current = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      DivisorClass next = current + g * intersect(current, g);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }

  ClassSet out;
  out.rank = s.rank();
  out.self_int = intersect(seed, seed);
  out.kdeg = k_degree(s, seed);
  out.items.assign(seen.begin(), seen.end());
  std::sort(out.items.begin(), out.items.end());
  return out;
}

ClassSet orbit(const Surface& s, const DivisorClass& seed) {
  return orbit(s, seed, simple_roots(s).roots);
}

std::int64_t weyl_order(int rank) {
  if (rank < kMinRank || rank > kMaxRank)
    throw std::invalid_argument("weyl_order: rank out of range [3,8]");
  std::int64_t order = 12;  // rank 3: A_2 x A_1
  for (int r = 4; r <= rank; ++r)
    order *= std::int64_t(lines(Surface(r)).size());
  return order;
}

}  // namespace gosset

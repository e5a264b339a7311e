#pragma once

#include <cstdint>
#include <map>
#include <utility>

namespace walsh::testing {

// Unlabelled toroidal crowns counted by brute force: for each cycle length c,
// every pattern of substituted edges whose unsubstituted edges are pairwise
// non-adjacent, taken up to rotation and reflection of the cycle. A pattern
// with s substituted edges gives c + 3s vertices and (c - s) + 9s edges.
inline std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> crown_counts(std::uint32_t max_vertices) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> out;
  for (std::uint32_t c = 3; c + 3 * ((c + 1) / 2) <= max_vertices; ++c) {
    const std::uint64_t full = (std::uint64_t{1} << c) - 1;
    auto rotate = [&](std::uint64_t m, std::uint32_t r) { return ((m << r) | (m >> (c - r))) & full; };
    auto mirror = [&](std::uint64_t m) {
      std::uint64_t r = 0;
      for (std::uint32_t i = 0; i < c; ++i)
        if (m >> i & 1) r |= std::uint64_t{1} << (c - 1 - i);
      return r;
    };
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      const std::uint64_t kept = ~mask & full;  // bit i: edge i left as a plain edge
      if (kept & rotate(kept, 1)) continue;     // two plain edges side by side
      // Count the pattern only when it is the smallest in its dihedral orbit.
      bool smallest = true;
      const std::uint64_t flipped = mirror(mask);
      for (std::uint32_t r = 0; r < c && smallest; ++r)
        if (rotate(mask, r) < mask || rotate(flipped, r) < mask) smallest = false;
      if (!smallest) continue;
      const auto s = static_cast<std::uint32_t>(__builtin_popcountll(mask));
      const std::uint32_t n = c + 3 * s;
      if (n <= max_vertices) ++out[{n, c - s + 9 * s}];
    }
  }
  return out;
}

}  // namespace walsh::testing

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gosset/polytope.hpp"

namespace gosset {

/// Face-lattice export:
///   {"r": .., "vertices": [[..]..], "edges": [[i,j]..],
///    "simplexes": {"2": [[..]..], ..}, "crosspolytopes": [{"ruling": [..],
///    "pairs": [[i,j]..]}..]}
/// All index lists canonical; output is byte-identical across runs and
/// thread counts.
std::string export_json(const GossetPolytope& p, unsigned threads = 1);

/// Same data, one face per row: kind,k,indices,coords (indices and coords
/// space-separated within their cell).
std::string export_csv(const GossetPolytope& p, unsigned threads = 1);

void write_text_file(const std::string& path, std::string_view content);

std::uint64_t fnv1a64(std::string_view text);

}  // namespace gosset

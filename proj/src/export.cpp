#include "gosset/export.hpp"

#include <fstream>
#include <stdexcept>

namespace gosset {

namespace {

void append_int(std::string& out, std::int64_t v) { out += std::to_string(v); }

void append_class_array(std::string& out, const DivisorClass& d) {
  out.push_back('[');
  for (int i = 0; i <= d.rank(); ++i) {
    if (i) out.push_back(',');
    append_int(out, d[i]);
  }
  out.push_back(']');
}

void append_index_array(std::string& out, std::span<const VertexIndex> verts) {
  out.push_back('[');
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (i) out.push_back(',');
    append_int(out, verts[i]);
  }
  out.push_back(']');
}

void append_indices_spaced(std::string& out, std::span<const VertexIndex> verts) {
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (i) out.push_back(' ');
    append_int(out, verts[i]);
  }
}

void append_coords_spaced(std::string& out, const DivisorClass& d) {
  for (int i = 0; i <= d.rank(); ++i) {
    if (i) out.push_back(' ');
    append_int(out, d[i]);
  }
}

}  // namespace

std::string export_json(const GossetPolytope& p, unsigned threads) {
  const int r = p.rank();
  std::string out;
  out.reserve(1 << 20);

  out += "{\n\"r\": ";
  append_int(out, r);
  out += ",\n\"vertices\": [\n";
  for (std::size_t i = 0; i < p.vertex_count(); ++i) {
    if (i) out += ",\n";
    append_class_array(out, p.vertex(VertexIndex(i)));
  }
  out += "\n],\n\"edges\": [\n";
  bool first = true;
  for_each_simplex(p, 1, [&](std::span<const VertexIndex> rec) {
    if (!first) out += ",\n";
    first = false;
    append_index_array(out, rec);
  });
  out += "\n],\n\"simplexes\": {";
  for (int k = 2; k <= r - 1; ++k) {
    if (k > 2) out += ",";
    out += "\n\"";
    append_int(out, k);
    out += "\": [\n";
    const auto layer = list_simplexes_flat(p, k, threads);
    for (std::size_t i = 0; i < layer.count; ++i) {
      if (i) out += ",\n";
      append_index_array(out, layer.record(i));
    }
    out += "\n]";
  }
  out += "\n},\n\"crosspolytopes\": [\n";
  const auto crosses = crosspolytopes(p);
  for (std::size_t i = 0; i < crosses.size(); ++i) {
    if (i) out += ",\n";
    out += "{\"ruling\": ";
    append_class_array(out, crosses[i].ruling);
    out += ", \"pairs\": [";
    for (std::size_t j = 0; j < crosses[i].pairs.size(); ++j) {
      if (j) out += ",";
      out.push_back('[');
      append_int(out, crosses[i].pairs[j].first);
      out.push_back(',');
      append_int(out, crosses[i].pairs[j].second);
      out.push_back(']');
    }
    out += "]}";
  }
  out += "\n]\n}\n";
  return out;
}

std::string export_csv(const GossetPolytope& p, unsigned threads) {
  const int r = p.rank();
  std::string out;
  out.reserve(1 << 20);
  out += "kind,k,indices,coords\n";

  for (std::size_t i = 0; i < p.vertex_count(); ++i) {
    out += "vertex,0,";
    append_int(out, std::int64_t(i));
    out.push_back(',');
    append_coords_spaced(out, p.vertex(VertexIndex(i)));
    out.push_back('\n');
  }
  for_each_simplex(p, 1, [&](std::span<const VertexIndex> rec) {
    out += "edge,1,";
    append_indices_spaced(out, rec);
    out += ",\n";
  });
  for (int k = 2; k <= r - 1; ++k) {
    const auto layer = list_simplexes_flat(p, k, threads);
    for (std::size_t i = 0; i < layer.count; ++i) {
      out += "simplex,";
      append_int(out, k);
      out.push_back(',');
      append_indices_spaced(out, layer.record(i));
      out += ",\n";
    }
  }
  for (const auto& cp : crosspolytopes(p)) {
    out += "crosspolytope,";
    append_int(out, r - 1);
    out.push_back(',');
    bool first = true;
    for (const auto& [a, b] : cp.pairs) {
      if (!first) out.push_back(' ');
      first = false;
      append_int(out, a);
      out.push_back(' ');
      append_int(out, b);
    }
    out.push_back(',');
    append_coords_spaced(out, cp.ruling);
    out.push_back('\n');
  }
  return out;
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for writing: " + path);
  file.write(content.data(), std::streamsize(content.size()));
  if (!file) throw std::runtime_error("write failed: " + path);
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : text) {
    h ^= std::uint64_t(static_cast<unsigned char>(c));
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace gosset

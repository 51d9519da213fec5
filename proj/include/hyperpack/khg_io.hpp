#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperpack/hypergraph.hpp"

namespace hyperpack {

// ".khg": first non-comment line "k n", then one edge per line as k
// whitespace-separated 0-based ids. '#' starts a comment.
Hypergraph read_khg(std::istream& in);
Hypergraph read_khg_file(const std::filesystem::path& path);

// Canonical serialisation: header, then edges in sorted order. Byte-stable.
void write_khg(std::ostream& out, const Hypergraph& h);
std::string to_khg_string(const Hypergraph& h);
void write_khg_file(const std::filesystem::path& path, const Hypergraph& h);

// Partition files hold one class per line (whitespace-separated ids).
std::vector<VertexSet> read_classes(std::istream& in);
std::vector<VertexSet> read_classes_file(const std::filesystem::path& path);
void write_classes(std::ostream& out, const std::vector<VertexSet>& classes);

}  // namespace hyperpack

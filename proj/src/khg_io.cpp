#include "hyperpack/khg_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "hyperpack/error.hpp"

namespace hyperpack {

namespace {

// Splits a line into integer tokens after stripping comments. Returns false
// for blank or comment-only lines.
bool tokenize(const std::string& raw, std::size_t line_no, std::vector<std::uint64_t>& out) {
  out.clear();
  std::string_view line(raw);
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) {
      throw ParseError(line_no, "expected a non-negative integer, got '" +
                                    std::string(line.substr(i, j - i)) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return !out.empty();
}

}  // namespace

Hypergraph read_khg(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::vector<std::uint64_t> tokens;
  bool have_header = false;
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  std::vector<Hypergraph::Edge> edges;
  std::set<Hypergraph::Edge> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (!tokenize(raw, line_no, tokens)) continue;
    if (!have_header) {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'k n'");
      k = tokens[0];
      n = tokens[1];
      if (k < 1) throw ParseError(line_no, "uniformity must be at least 1");
      have_header = true;
      continue;
    }
    if (tokens.size() != k) {
      throw ParseError(line_no, "edge has " + std::to_string(tokens.size()) +
                                    " vertices, expected " + std::to_string(k));
    }
    Hypergraph::Edge e;
    for (auto t : tokens) {
      if (t >= n) {
        throw ParseError(line_no, "vertex " + std::to_string(t) + " outside 0.." +
                                      std::to_string(n == 0 ? 0 : n - 1));
      }
      e.push_back(static_cast<Vertex>(t));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw ParseError(line_no, "edge repeats a vertex");
    }
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(std::move(e));
  }
  if (!have_header) throw ParseError(line_no, "missing 'k n' header");
  if (k > n && !edges.empty()) throw ParseError(line_no, "k exceeds n");
  return Hypergraph(static_cast<unsigned>(k), n, std::move(edges));
}

Hypergraph read_khg_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  return read_khg(in);
}

void write_khg(std::ostream& out, const Hypergraph& h) {
  out << h.uniformity() << ' ' << h.order() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

std::string to_khg_string(const Hypergraph& h) {
  std::ostringstream out;
  write_khg(out, h);
  return out.str();
}

void write_khg_file(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  write_khg(out, h);
}

std::vector<VertexSet> read_classes(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::vector<std::uint64_t> tokens;
  std::vector<VertexSet> classes;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!tokenize(raw, line_no, tokens)) continue;
    std::vector<Vertex> members(tokens.begin(), tokens.end());
    try {
      classes.emplace_back(std::move(members));
    } catch (const InvalidArgument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return classes;
}

std::vector<VertexSet> read_classes_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  return read_classes(in);
}

void write_classes(std::ostream& out, const std::vector<VertexSet>& classes) {
  for (const auto& c : classes) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << '\n';
  }
}

}  // namespace hyperpack

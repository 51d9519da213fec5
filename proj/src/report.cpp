#include "hyperpack/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "hyperpack/error.hpp"

namespace hyperpack {

void RunReport::set(const std::string& key, std::string value) {
  if (key.empty() || key.find_first_of("=\n") != std::string::npos) {
    throw InvalidArgument("bad report key '" + key + "'");
  }
  std::replace(value.begin(), value.end(), '\n', ' ');
  for (auto& f : fields_)
    if (f.first == key) {
      f.second = std::move(value);
      return;
    }
  fields_.emplace_back(key, std::move(value));
}

void RunReport::set_time(const std::string& stage, double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", seconds);
  set("time." + stage, std::string(buf));
}

std::optional<std::string> RunReport::get(const std::string& key) const {
  for (const auto& f : fields_)
    if (f.first == key) return f.second;
  return std::nullopt;
}

std::string RunReport::machine() const {
  std::string out;
  for (const auto& [k, v] : fields_) out += k + "=" + v + "\n";
  return out;
}

std::string RunReport::machine_without_timing() const {
  std::string out;
  for (const auto& [k, v] : fields_)
    if (!k.starts_with("time.")) out += k + "=" + v + "\n";
  return out;
}

std::string RunReport::human() const {
  std::size_t width = 0;
  for (const auto& f : fields_) width = std::max(width, f.first.size());
  std::string out;
  for (const auto& [k, v] : fields_) out += k + std::string(width - k.size(), ' ') + " : " + v + "\n";
  return out;
}

RunReport parse_machine(const std::string& text) {
  RunReport r;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError(line_no, "expected key=value");
    r.set(line.substr(0, eq), line.substr(eq + 1));
  }
  return r;
}

std::string join_vertices(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out;
}

void add_decision(RunReport& report, const Decision& d, const std::string& prefix) {
  auto key = [&](const std::string& k) { return prefix + k; };
  report.set(key("verdict"), to_string(d.verdict));
  report.set(key("route"), d.route.empty() ? "-" : d.route);
  if (!d.precondition.empty()) report.set(key("precondition"), d.precondition);
  if (!d.detail.empty()) report.set(key("detail"), d.detail);
  if (d.oracle_substituted) report.set(key("oracle_substituted"), true);
  if (d.partition) {
    const auto& part = d.partition->partition;
    report.set(key("partition.r"), part.size());
    for (std::size_t i = 0; i < part.size(); ++i)
      report.set(key("partition.class." + std::to_string(i + 1)), join_vertices(part.classes[i]));
    std::string w;
    for (auto v : d.partition->witnesses) w += (w.empty() ? "" : " ") + std::to_string(v);
    report.set(key("partition.witnesses"), w.empty() ? "-" : w);
    report.set(key("partition.reassigned"), d.partition->reassigned);
    report.set(key("partition.fallback"), d.partition->fallback_reassigned);
  }
  if (d.index_set) {
    std::string s;
    for (const auto& [v, c] : d.index_set->counts) {
      s += (s.empty() ? "" : " ") + to_string(v) + ":" + std::to_string(c);
      if (!d.index_set->vectors.count(v)) s += "(below)";
    }
    report.set(key("index_set"), s);
    report.set(key("index_set.threshold"), d.index_set->threshold);
  }
  if (d.lattice) {
    std::string b;
    for (Eigen::Index r = 0; r < d.lattice->hnf_basis.rows(); ++r) {
      b += r ? " " : "";
      b += "(";
      for (Eigen::Index c = 0; c < d.lattice->hnf_basis.cols(); ++c)
        b += (c ? "," : "") + d.lattice->hnf_basis(r, c).str();
      b += ")";
    }
    report.set(key("lattice.basis"), b.empty() ? "-" : b);
  }
  if (d.coset) {
    report.set(key("coset.order"), d.coset->finite ? d.coset->order.str() : std::string("INFINITE"));
    std::string dv;
    for (const auto& x : d.coset->divisors) dv += (dv.empty() ? "" : " ") + x.str();
    report.set(key("coset.divisors"), dv.empty() ? "-" : dv);
  }
  if (!d.full_vector.empty()) report.set(key("index.full"), to_string(d.full_vector));
  if (d.full_residue) report.set(key("residue.full"), *d.full_residue);
  if (d.coset && d.coset->finite && d.index_set) {
    std::string rs;
    for (auto r : d.copy_residues) rs += (rs.empty() ? "" : " ") + std::to_string(r);
    report.set(key("residue.copies"), rs.empty() ? "-" : rs);
  }
  if (d.q) report.set(key("q"), d.q);
  if (d.solution) {
    report.set(key("solution.size"), d.solution->packing.size());
    std::string s;
    for (const auto& c : d.solution->packing) s += (s.empty() ? "" : " | ") + join_vertices(c);
    report.set(key("solution.copies"), s.empty() ? "-" : s);
    report.set(key("solution.leftover"), to_string(d.solution->leftover));
  }
  if (d.obstruction) {
    report.set(key("obstruction.coordinate"), d.obstruction->coordinate + 1);
    report.set(key("obstruction.modulus"), d.obstruction->modulus);
    report.set(key("obstruction.value"), d.obstruction->value);
  }
  if (d.oracle_packing) {
    std::string s;
    for (const auto& c : *d.oracle_packing) s += (s.empty() ? "" : " | ") + join_vertices(c);
    report.set(key("packing"), s);
  }
  for (const auto& [stage, secs] : d.timings) report.set_time(prefix + stage, secs);
}

}  // namespace hyperpack

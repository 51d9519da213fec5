#include "hyperpack/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "hyperpack/decide.hpp"
#include "hyperpack/error.hpp"
#include "hyperpack/gen.hpp"
#include "hyperpack/khg_io.hpp"
#include "hyperpack/report.hpp"

namespace hyperpack {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return kExitYes;
    case Verdict::No:
      return kExitNo;
    case Verdict::PreconditionUnmet:
      return kExitUnmet;
  }
  return kExitUsage;
}

// Flag values as typed; fractions are parsed after CLI11 is done.
struct Flags {
  unsigned l = 0;
  std::string delta = "3/5";
  std::string mode = "exact";
  std::string beta = "1/100";
  std::uint64_t reach_count = 1;
  std::string cascade = "1";
  bool fastpath = false;
  std::string mu = "1/1000";
  std::uint64_t mu_count = 1;
  std::string eta = "1/20";
  std::string alpha = "1/100";
  std::string gamma = "1/20";
  std::uint64_t q = 0;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::string format = "machine";
  bool no_oracle = false;
  std::string pattern;

  PipelineConfig config() const {
    PipelineConfig c;
    c.l = l;
    c.delta = parse_fraction(delta);
    auto m = parse_threshold_mode(mode);
    c.reach.mode = m;
    c.reach.beta = parse_fraction(beta);
    c.reach.explicit_count = reach_count;
    c.reach.cascade = parse_fraction(cascade);
    c.reach.fastpath = fastpath;
    c.mu.mode = m;
    c.mu.mu = parse_fraction(mu);
    c.mu.explicit_count = mu_count;
    c.eta = parse_fraction(eta);
    c.alpha = parse_fraction(alpha);
    c.gamma = parse_fraction(gamma);
    if (q > 0) c.q = q;
    c.oracle_cap = oracle_cap;
    c.reach.validate();
    return c;
  }
};

void add_threshold_flags(CLI::App* app, Flags& f) {
  app->add_option("--mode", f.mode, "threshold mode: exact or density")->check(CLI::IsMember({"exact", "density"}));
  app->add_option("--beta", f.beta, "reachability density (density mode)");
  app->add_option("--reach-count", f.reach_count, "reachable sets needed (exact mode)");
  app->add_option("--cascade", f.cascade, "density factor per doubling of depth");
  app->add_flag("--fastpath", f.fastpath, "try the common-link test before counting");
  app->add_option("--mu", f.mu, "copy density for index vectors (density mode)");
  app->add_option("--mu-count", f.mu_count, "copies needed per index vector (exact mode)");
}

void add_pipeline_flags(CLI::App* app, Flags& f) {
  app->add_option("--delta", f.delta, "degree fraction");
  app->add_option("--eta", f.eta, "small reachable neighbourhood cut-off");
  app->add_option("--alpha", f.alpha, "reassignment constant");
  app->add_option("--gamma", f.gamma, "slack above the degree threshold");
  app->add_option("--q", f.q, "override the solubility budget");
  app->add_option("--oracle-cap", f.oracle_cap, "largest host for the exact search");
  app->add_flag("--no-oracle", f.no_oracle, "skip the exact cross-check");
  add_threshold_flags(app, f);
}

void add_format_flag(CLI::App* app, Flags& f) {
  app->add_option("--format", f.format, "machine or human")->check(CLI::IsMember({"machine", "human"}));
}

void emit(std::ostream& out, const RunReport& r, const Flags& f) {
  out << (f.format == "human" ? r.human() : r.machine());
}

void describe_instance(RunReport& r, const Hypergraph& h) {
  r.set("n", h.order());
  r.set("k", h.uniformity());
  r.set("edges", h.edge_count());
  for (unsigned l = 1; l < h.uniformity(); ++l) r.set("min_degree." + std::to_string(l), min_degree(h, l));
}

void describe_config(RunReport& r, const PipelineConfig& c, unsigned l) {
  if (l) r.set("param.l", l);
  r.set("param.delta", to_string(c.delta));
  r.set("param.mode", to_string(c.reach.mode));
  if (c.reach.mode == ThresholdMode::ExactRobust) {
    r.set("param.reach_count", c.reach.explicit_count);
    r.set("param.mu_count", c.mu.explicit_count);
  } else {
    r.set("param.beta", to_string(c.reach.beta));
    r.set("param.cascade", to_string(c.reach.cascade));
    r.set("param.mu", to_string(c.mu.mu));
  }
  r.set("param.eta", to_string(c.eta));
  r.set("param.alpha", to_string(c.alpha));
  r.set("param.gamma", to_string(c.gamma));
  r.set("param.oracle_cap", c.oracle_cap);
}

Decision dispatch_pack(const Hypergraph& h, const Pattern& p, const PipelineConfig& c) {
  return h.uniformity() == 2 ? decide_pack_graph(h, p, c) : decide_pack_partite(h, p, c);
}

// Cross-checks against the exact search when the host is small enough.
void add_oracle(RunReport& r, const Hypergraph& h, const Pattern& p, const Decision& d, const Flags& f,
                const std::string& prefix = "") {
  if (f.no_oracle || h.order() > f.oracle_cap) {
    r.set(prefix + "oracle", "SKIPPED");
    return;
  }
  auto t0 = Clock::now();
  bool yes = oracle_decide(h, p, f.oracle_cap);
  r.set(prefix + "oracle", yes ? "YES" : "NO");
  if (d.verdict == Verdict::PreconditionUnmet) {
    r.set(prefix + "oracle.agrees", "n/a");
  } else {
    r.set(prefix + "oracle.agrees", (d.verdict == Verdict::Yes) == yes);
  }
  r.set_time(prefix + "oracle", seconds_since(t0));
}

Pattern edge_pattern(unsigned k) { return pattern_from_spec("edge:" + std::to_string(k)); }

int cmd_decide(const std::string& which, const std::string& file, const Flags& f, std::ostream& out) {
  auto t0 = Clock::now();
  auto h = read_khg_file(file);
  auto cfg = f.config();
  RunReport r;
  r.set("command", which);
  r.set("input", file);
  describe_instance(r, h);
  Pattern p = which == "decide-pm" ? edge_pattern(h.uniformity())
                                   : pattern_from_spec(f.pattern.empty() ? "edge:" + std::to_string(h.uniformity())
                                                                         : f.pattern);
  r.set("pattern", p.name());
  unsigned l = which == "decide-pm" ? (cfg.l ? cfg.l : h.uniformity() - 1) : 0;
  describe_config(r, cfg, l);
  Decision d = which == "decide-pm" ? decide_pm(h, cfg) : dispatch_pack(h, p, cfg);
  add_decision(r, d);
  auto problem = verify_certificate(h, p, d);
  r.set("certificate", problem.empty() ? "ok" : problem);
  add_oracle(r, h, p, d, f);
  r.set_time("total", seconds_since(t0));
  emit(out, r, f);
  return exit_for(d.verdict);
}

int cmd_oracle(const std::string& file, const Flags& f, std::ostream& out) {
  auto t0 = Clock::now();
  auto h = read_khg_file(file);
  Pattern p = f.pattern.empty() ? edge_pattern(h.uniformity()) : pattern_from_spec(f.pattern);
  RunReport r;
  r.set("command", "oracle");
  r.set("input", file);
  describe_instance(r, h);
  r.set("pattern", p.name());
  auto packing = oracle_packing(h, p, f.oracle_cap);
  r.set("verdict", packing ? "YES" : "NO");
  if (packing) {
    std::string s;
    for (const auto& c : *packing) s += (s.empty() ? "" : " | ") + join_vertices(c);
    r.set("packing", s.empty() ? "-" : s);
  }
  r.set_time("total", seconds_since(t0));
  emit(out, r, f);
  return packing ? kExitYes : kExitNo;
}

struct PartitionFlags {
  unsigned c_cap = 2;
  std::string delta_prime = "1/20";
  std::string output;
};

int cmd_partition(const std::string& file, const Flags& f, const PartitionFlags& pf, std::ostream& out) {
  auto t0 = Clock::now();
  auto h = read_khg_file(file);
  Pattern p = f.pattern.empty() ? edge_pattern(h.uniformity()) : pattern_from_spec(f.pattern);
  auto cfg = f.config();
  auto dp = parse_fraction(pf.delta_prime);
  RunReport r;
  r.set("command", "partition");
  r.set("input", file);
  describe_instance(r, h);
  r.set("pattern", p.name());
  r.set("param.c_cap", pf.c_cap);
  r.set("param.delta_prime", to_string(dp));
  r.set("param.mode", to_string(cfg.reach.mode));
  r.set("param.alpha", to_string(cfg.alpha));
  ReachParams rp = cfg.reach;
  rp.depth = 1;
  ReachabilityOracle oracle(h, p, rp, cfg.oracle_cap);
  ClosedPartition cp;
  try {
    cp = find_closed_partition(oracle, VertexSet::range(h.order()), pf.c_cap, dp, cfg.alpha);
  } catch (const PreconditionViolation& e) {
    r.set("verdict", "PRECONDITION_UNMET");
    r.set("precondition", e.which());
    r.set("detail", e.what());
    emit(out, r, f);
    return kExitUnmet;
  }
  const unsigned t = 1u << (pf.c_cap - 1);
  const Rational c = std::max(Rational(0), dp - cfg.alpha);
  auto cert = certify_goodness(oracle, cp.partition, t, c);
  r.set("partition.r", cp.partition.size());
  for (std::size_t i = 0; i < cp.partition.size(); ++i)
    r.set("partition.class." + std::to_string(i + 1), join_vertices(cp.partition.classes[i]));
  std::string w;
  for (auto v : cp.witnesses) w += (w.empty() ? "" : " ") + std::to_string(v);
  r.set("partition.witnesses", w.empty() ? "-" : w);
  r.set("partition.fallback", cp.fallback_reassigned);
  r.set("certificate.t", t);
  r.set("certificate.c", to_string(c));
  for (std::size_t i = 0; i < cp.partition.size(); ++i) {
    auto key = "certificate.class." + std::to_string(i + 1);
    std::string v = std::string(cert.closed[i] ? "closed" : "open") + " size=" + std::to_string(cert.sizes[i]) +
                    (cert.large[i] ? "" : " small");
    if (cert.failures[i]) {
      v += " pair=" + std::to_string(cert.failures[i]->first) + "," + std::to_string(cert.failures[i]->second);
    }
    r.set(key, v);
  }
  r.set("certificate.valid", cert.valid());
  if (!pf.output.empty()) {
    std::ofstream o(pf.output, std::ios::binary);
    if (!o) throw InvalidArgument("cannot write " + pf.output);
    write_classes(o, cp.partition.classes);
  }
  r.set_time("total", seconds_since(t0));
  emit(out, r, f);
  return cert.valid() ? kExitYes : kExitNo;
}

int cmd_lattice(const std::string& file, const std::string& part_file, const Flags& f, std::ostream& out) {
  auto t0 = Clock::now();
  auto h = read_khg_file(file);
  Pattern p = f.pattern.empty() ? edge_pattern(h.uniformity()) : pattern_from_spec(f.pattern);
  auto cfg = f.config();
  Partition part{read_classes_file(part_file)};
  part.class_of(h.order());
  if (part.universe() != VertexSet::range(h.order())) throw InvalidArgument("partition does not cover every vertex");
  RunReport r;
  r.set("command", "lattice");
  r.set("input", file);
  r.set("partition", part_file);
  describe_instance(r, h);
  r.set("pattern", p.name());
  r.set("param.mode", to_string(cfg.mu.mode));
  Decision d;
  d.index_set = robust_index_set(h, p, part, cfg.mu);
  d.lattice = lattice_from(*d.index_set);
  d.full_vector = index_vector(part, VertexSet::range(h.order()));
  int code = kExitYes;
  try {
    d.coset = coset_group(*d.lattice, p.order());
    if (d.coset->finite && lmax_member(p.order(), d.full_vector)) {
      d.full_residue = residue(*d.coset, d.full_vector);
      std::set<std::uint64_t> res;
      for (const auto& v : d.index_set->counts) res.insert(residue(*d.coset, v.first));
      d.copy_residues.assign(res.begin(), res.end());
    }
  } catch (const LatticeError& e) {
    r.set("error", e.what());
    code = kExitUnmet;
  }
  if (d.index_set) {
    std::string s;
    for (const auto& [v, c] : d.index_set->counts) {
      s += (s.empty() ? "" : " ") + to_string(v) + ":" + std::to_string(c);
      if (!d.index_set->vectors.count(v)) s += "(below)";
    }
    r.set("index_set", s.empty() ? "-" : s);
    r.set("index_set.threshold", d.index_set->threshold);
  }
  RunReport tmp;
  d.verdict = Verdict::Yes;
  add_decision(tmp, d);
  for (const auto& [k, v] : tmp.fields())
    if (k.starts_with("lattice.") || k.starts_with("coset.") || k.starts_with("residue.") || k == "index.full")
      r.set(k, v);
  r.set("member.full", member(*d.lattice, d.full_vector));
  r.set_time("total", seconds_since(t0));
  emit(out, r, f);
  return code;
}

struct GenFlags {
  std::size_t n = 0;
  unsigned k = 3;
  std::size_t a = 0;
  std::size_t core = 0;
  std::string input;
  std::string gamma = "3/10";
  double p = 0.5;
  std::uint64_t seed = 1;
  std::uint64_t floor = 0;
  unsigned l = 0;
  unsigned attempts = 1000;
  std::string output;
};

Hypergraph generate(const std::string& family, const GenFlags& g, const Flags& f, RunReport& r) {
  if (family == "div-barrier") return gen_divisibility_barrier(g.n, g.k, g.a);
  if (family == "space-barrier") return gen_space_barrier(g.n, g.k, g.core);
  if (family == "random") {
    RandomSpec spec{g.n, g.k, g.p, g.seed, g.floor, g.l, g.attempts};
    return gen_random_dense(spec);
  }
  if (g.input.empty()) throw InvalidArgument(family + " needs --input");
  auto h = read_khg_file(g.input);
  if (family == "lin-uplift") return reduce_lin_uplift(h);
  if (f.pattern.empty()) throw InvalidArgument(family + " needs --pattern");
  auto k = pattern_from_spec(f.pattern);
  if (family == "edge-blowup") return reduce_edge_blowup(h, k);
  if (family == "degree-pad") {
    auto padded = reduce_degree_padding(h, k, parse_fraction(g.gamma));
    r.set("a_size", padded.a_size);
    r.set("b_size", padded.b_size);
    r.set("codegree", padded.codegree);
    return padded.graph;
  }
  throw InvalidArgument("unknown family '" + family + "'");
}

int cmd_gen(const std::string& family, const GenFlags& g, const Flags& f, std::ostream& out) {
  RunReport r;
  r.set("command", "gen");
  r.set("family", family);
  auto h = generate(family, g, f, r);
  if (g.output.empty()) {
    write_khg(out, h);
    return kExitYes;
  }
  write_khg_file(g.output, h);
  r.set("output", g.output);
  describe_instance(r, h);
  emit(out, r, f);
  return kExitYes;
}

Hypergraph load_instance(const nlohmann::json& inst, const fs::path& base) {
  if (inst.contains("file")) {
    auto path = base / inst.at("file").get<std::string>();
    if (!fs::exists(path)) throw InvalidArgument("missing instance file " + path.string());
    return read_khg_file(path);
  }
  if (!inst.contains("gen")) throw InvalidArgument("instance needs 'file' or 'gen'");
  const auto& g = inst.at("gen");
  auto family = g.at("family").get<std::string>();
  GenFlags gf;
  gf.n = g.value("n", std::size_t{0});
  gf.k = g.value("k", 3u);
  gf.a = g.value("a", std::size_t{0});
  gf.core = g.value("core", std::size_t{0});
  gf.p = g.value("p", 0.5);
  gf.seed = g.value("seed", std::uint64_t{1});
  gf.floor = g.value("floor", std::uint64_t{0});
  gf.l = g.value("l", 0u);
  gf.gamma = g.value("gamma", std::string("3/10"));
  if (g.contains("input")) gf.input = (base / g.at("input").get<std::string>()).string();
  Flags f;
  f.pattern = g.value("pattern", std::string());
  RunReport ignored;
  return generate(family, gf, f, ignored);
}

int cmd_corpus(const std::string& manifest, const Flags& defaults, std::ostream& out) {
  auto t0 = Clock::now();
  auto entries = load_corpus(manifest, defaults.config());
  RunReport r;
  r.set("command", "corpus");
  r.set("manifest", manifest);
  std::map<std::string, std::size_t> matrix;
  std::size_t disagreements = 0;
  std::size_t index = 0;
  for (const auto& e : entries) {
    ++index;
    const std::string pre = "inst." + std::to_string(index) + ".";
    auto t1 = Clock::now();
    const auto& h = e.graph;
    const auto& p = e.pattern;
    r.set(pre + "name", e.name);
    r.set(pre + "pipeline", e.pipeline);
    r.set(pre + "n", h.order());
    r.set(pre + "k", h.uniformity());
    r.set(pre + "pattern", p.name());
    Decision d = run_corpus_entry(e);
    r.set(pre + "verdict", to_string(d.verdict));
    r.set(pre + "route", d.route.empty() ? "-" : d.route);
    if (!d.precondition.empty()) r.set(pre + "precondition", d.precondition);
    if (d.partition) r.set(pre + "r", d.partition->partition.size());
    if (d.coset) r.set(pre + "coset.order", d.coset->finite ? d.coset->order.str() : std::string("INFINITE"));
    if (d.full_residue) r.set(pre + "residue.full", *d.full_residue);
    const bool certified = e.pipeline != "oracle";
    auto problem = certified ? verify_certificate(h, p, d) : std::string();
    r.set(pre + "certificate", !certified ? "none" : problem.empty() ? "ok" : problem);
    bool bad = !problem.empty();
    std::string oracle = "SKIPPED";
    if (!defaults.no_oracle && h.order() <= e.config.oracle_cap) {
      oracle = oracle_decide(h, p, e.config.oracle_cap) ? "YES" : "NO";
    }
    r.set(pre + "oracle", oracle);
    if (oracle != "SKIPPED" && d.verdict != Verdict::PreconditionUnmet && oracle != to_string(d.verdict)) bad = true;
    if (e.expect) {
      r.set(pre + "expect", *e.expect);
      if (*e.expect != to_string(d.verdict)) bad = true;
    }
    r.set(pre + "agree", !bad);
    if (bad) ++disagreements;
    ++matrix[to_string(d.verdict) + "." + oracle];
    r.set_time(pre + "total", seconds_since(t1));
  }
  r.set("instances", index);
  for (const auto& [k, v] : matrix) r.set("matrix." + k, v);
  r.set("disagreements", disagreements);
  r.set_time("total", seconds_since(t0));
  emit(out, r, defaults);
  return disagreements == 0 ? kExitYes : kExitNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect matching and packing decisions for dense hypergraphs", "hyperpack"};
  app.require_subcommand(1);
  Flags f;
  std::string file;

  auto* pm = app.add_subcommand("decide-pm", "perfect matching pipeline (k >= 3)");
  pm->add_option("file", file, ".khg instance")->required();
  pm->add_option("--l", f.l, "degree index (default k-1)");
  add_pipeline_flags(pm, f);
  add_format_flag(pm, f);

  auto* pack = app.add_subcommand("decide-pack", "perfect F-packing pipeline");
  pack->add_option("file", file, ".khg instance")->required();
  pack->add_option("--pattern", f.pattern, "pattern name or .khg file")->required();
  add_pipeline_flags(pack, f);
  add_format_flag(pack, f);

  PartitionFlags pf;
  auto* part = app.add_subcommand("partition", "closed partition of the vertex set");
  part->add_option("file", file, ".khg instance")->required();
  part->add_option("--pattern", f.pattern, "pattern name or .khg file");
  part->add_option("--c-cap", pf.c_cap, "largest number of classes")->check(CLI::Range(1u, 64u));
  part->add_option("--delta-prime", pf.delta_prime, "reachable-neighbour fraction");
  part->add_option("--alpha", f.alpha, "reassignment constant");
  part->add_option("--oracle-cap", f.oracle_cap, "largest reachable-set size");
  part->add_option("-o", pf.output, "write the classes to this file");
  add_threshold_flags(part, f);
  add_format_flag(part, f);

  std::string part_file;
  auto* lat = app.add_subcommand("lattice", "index vectors, lattice and coset group");
  lat->add_option("file", file, ".khg instance")->required();
  lat->add_option("--pattern", f.pattern, "pattern name or .khg file");
  lat->add_option("--partition", part_file, "partition file")->required();
  add_threshold_flags(lat, f);
  add_format_flag(lat, f);

  auto* orc = app.add_subcommand("oracle", "exact perfect packing search");
  orc->add_option("file", file, ".khg instance")->required();
  orc->add_option("--pattern", f.pattern, "pattern name or .khg file");
  orc->add_option("--oracle-cap", f.oracle_cap, "largest host accepted");
  add_format_flag(orc, f);

  GenFlags g;
  std::string family;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("family", family, "div-barrier, space-barrier, lin-uplift, edge-blowup, degree-pad, random")
      ->required()
      ->check(CLI::IsMember({"div-barrier", "space-barrier", "lin-uplift", "edge-blowup", "degree-pad", "random"}));
  gen->add_option("--n", g.n, "vertices");
  gen->add_option("--k", g.k, "uniformity");
  gen->add_option("--a", g.a, "|A| for div-barrier");
  gen->add_option("--core", g.core, "core size for space-barrier");
  gen->add_option("--input", g.input, "input .khg for reductions");
  gen->add_option("--pattern", f.pattern, "pattern K for edge-blowup and degree-pad");
  gen->add_option("--gamma", g.gamma, "padding parameter for degree-pad");
  gen->add_option("--p", g.p, "edge probability for random");
  gen->add_option("--seed", g.seed, "seed for random");
  gen->add_option("--floor", g.floor, "minimum degree floor for random");
  gen->add_option("--l", g.l, "degree index for the floor (default k-1)");
  gen->add_option("--attempts", g.attempts, "resampling budget");
  gen->add_option("-o", g.output, "output .khg");
  add_format_flag(gen, f);

  std::string manifest;
  auto* corpus = app.add_subcommand("corpus", "run every instance of a manifest");
  corpus->add_option("manifest", manifest, "manifest .json")->required();
  corpus->add_option("--oracle-cap", f.oracle_cap, "largest host for the exact cross-check");
  corpus->add_flag("--no-oracle", f.no_oracle, "skip the exact cross-check");
  add_format_flag(corpus, f);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    if (code == 0) return kExitYes;
    RunReport r;
    r.set("command", args.empty() ? std::string("-") : args.front());
    r.set("error", e.what());
    out << r.machine();
    return kExitUsage;
  }
  try {
    if (pm->parsed()) return cmd_decide("decide-pm", file, f, out);
    if (pack->parsed()) return cmd_decide("decide-pack", file, f, out);
    if (part->parsed()) return cmd_partition(file, f, pf, out);
    if (lat->parsed()) return cmd_lattice(file, part_file, f, out);
    if (orc->parsed()) return cmd_oracle(file, f, out);
    if (gen->parsed()) return cmd_gen(family, g, f, out);
    if (corpus->parsed()) return cmd_corpus(manifest, f, out);
  } catch (const std::exception& e) {
    err << "hyperpack: " << e.what() << "\n";
    RunReport r;
    r.set("command", app.get_subcommands().front()->get_name());
    r.set("error", e.what());
    emit(out, r, f);
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& manifest,
                                     const PipelineConfig& base) {
  std::ifstream in(manifest);
  if (!in) throw InvalidArgument("cannot open " + manifest.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("manifest: ") + e.what());
  }
  const fs::path dir = manifest.parent_path();
  std::vector<CorpusEntry> out;
  if (!doc.contains("instances")) return out;
  for (const auto& inst : doc.at("instances")) {
    auto h = load_instance(inst, dir);
    auto spec = inst.value("pattern", std::string());
    Pattern p = spec.empty() ? edge_pattern(h.uniformity()) : pattern_from_spec(spec);
    PipelineConfig c = base;
    if (inst.contains("l")) c.l = inst.at("l").get<unsigned>();
    if (inst.contains("delta")) c.delta = parse_fraction(inst.at("delta").get<std::string>());
    if (inst.contains("gamma")) c.gamma = parse_fraction(inst.at("gamma").get<std::string>());
    std::optional<std::string> expect;
    if (inst.contains("expect")) expect = inst.at("expect").get<std::string>();
    auto pipeline = inst.value("pipeline", std::string("pm"));
    if (pipeline != "pm" && pipeline != "pack" && pipeline != "oracle") {
      throw InvalidArgument("unknown pipeline '" + pipeline + "'");
    }
    out.push_back({inst.value("name", std::to_string(out.size() + 1)), pipeline, std::move(h),
                   std::move(p), c, expect});
  }
  return out;
}

Decision run_corpus_entry(const CorpusEntry& e) {
  if (e.pipeline == "pm") return decide_pm(e.graph, e.config);
  if (e.pipeline == "pack") return dispatch_pack(e.graph, e.pattern, e.config);
  Decision d;
  d.verdict = oracle_decide(e.graph, e.pattern, e.config.oracle_cap) ? Verdict::Yes : Verdict::No;
  d.route = "oracle";
  return d;
}

}  // namespace hyperpack

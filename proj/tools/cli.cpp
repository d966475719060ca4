#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "sepcover/coloring.hpp"
#include "sepcover/covers.hpp"
#include "sepcover/errors.hpp"
#include "sepcover/fusion.hpp"
#include "sepcover/generator.hpp"
#include "sepcover/graph_io.hpp"
#include "sepcover/graph_sequence.hpp"
#include "sepcover/growth.hpp"
#include "sepcover/hierarchy.hpp"
#include "sepcover/involution_io.hpp"
#include "sepcover/reduction.hpp"

namespace sepcover::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kTraceFormatVersion = "fusion-trace v1";
constexpr std::size_t kMaxBookkeepingStages = 24;

struct Globals {
  std::string report;
  std::string csv;
  std::uint64_t seed = 0;
};

struct Outcome {
  Json config = Json::object();
  Json formats = Json::object();
  Json result = Json::object();
  int status = kOk;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write " + path);
  file << text;
  if (!file) throw ConfigError("cannot write " + path);
}

Json set_json(Mask m) { return mask_elements(m); }

// Whitespace-separated vertex ids forming a permutation of [0, n).
std::vector<VertexId> read_order_file(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::vector<VertexId> order;
  std::vector<bool> seen(n, false);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line.substr(0, line.find('#')));
    std::string tok;
    while (tokens >> tok) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok.front() == '-') {
        throw ParseError(path, line_number, line.find(tok) + 1, "expected a vertex id, got '" + tok + "'");
      }
      if (v >= n || seen[v]) {
        throw ParseError(path, line_number, line.find(tok) + 1, "vertex " + tok + " out of range or repeated");
      }
      seen[v] = true;
      order.push_back(static_cast<VertexId>(v));
    }
  }
  if (order.size() != n) throw ParseError(path, line_number, 0, "order lists " + std::to_string(order.size()) +
                                                                  " of " + std::to_string(n) + " vertices");
  return order;
}

GraphSequence load_graph(const std::string& path, Json& formats) {
  GraphSequence g = read_graph_file(path);
  formats["graph"] = kGraphFormatVersion;
  const ValidationReport report = validate(g);
  if (!report.valid()) {
    throw InvariantViolation("graph_core", report.violations.front().describe() + " (" +
                                               std::to_string(report.violations.size()) + " violation(s))");
  }
  return g;
}

GrowthFunction load_growth(const std::string& spec, Stage horizon, Json& formats) {
  GrowthFunction f = parse_growth_spec(spec, horizon);
  if (spec.rfind("file:", 0) == 0) formats["growth"] = kGrowthFormatVersion;
  return f;
}

// --- stage series ------------------------------------------------------------------

struct StageCounts {
  std::vector<std::size_t> captured;
  std::vector<std::size_t> uncaptured;
};

StageCounts capture_by_stage(const CaptureReport& capture, Stage last) {
  StageCounts out;
  std::vector<std::int64_t> cap(last + 2, 0);
  std::vector<std::int64_t> born(last + 2, 0);
  for (const EdgeCapture& e : capture.edges) {
    if (e.birth <= last) ++born[e.birth];
    if (e.witness && *e.witness <= last) ++cap[*e.witness];
  }
  std::int64_t c = 0;
  std::int64_t b = 0;
  for (Stage n = 0; n <= last; ++n) {
    c += cap[n];
    b += born[n];
    out.captured.push_back(static_cast<std::size_t>(c));
    out.uncaptured.push_back(static_cast<std::size_t>(b - c));
  }
  return out;
}

void write_stage_csv(const std::string& path, const Hierarchy& h, const CaptureReport& capture) {
  const StageCounts counts = capture_by_stage(capture, h.last_stage());
  std::ostringstream csv;
  csv << "stage,f,components,max_diameter,captured,uncaptured\n";
  for (const StageCertificate& c : h.certificates()) {
    csv << c.stage << ',' << format_growth_value(c.bound) << ',' << c.component_count << ',' << c.max_diameter
        << ',' << counts.captured[c.stage] << ',' << counts.uncaptured[c.stage] << '\n';
  }
  write_text(path, csv.str());
}

// --- shared hierarchy inputs ---------------------------------------------------------

struct HierarchyArgs {
  std::string graph;
  std::string f_spec = "canonical:0";
  std::string covers;
  std::size_t m = 1;
  std::size_t sweeps = 1;
};

void add_hierarchy_options(CLI::App* sub, HierarchyArgs& a) {
  sub->add_option("--graph", a.graph, "Graph sequence file")->required();
  sub->add_option("--f", a.f_spec, "canonical:<f0> or file:<path>");
  sub->add_option("--covers", a.covers, "Cover file (default: full-cycle covers built from the graph)");
  sub->add_option("--m", a.m, "Coverage threshold for the base set")->check(CLI::PositiveNumber);
  sub->add_option("--sweeps", a.sweeps, "Minimum number of full-cycle sweeps when building covers");
}

struct Inputs {
  GraphSequence g;
  GrowthFunction f;
  CoverSequence covers;
};

Inputs load_inputs(const HierarchyArgs& a, Outcome& o) {
  o.config["graph"] = a.graph;
  o.config["f"] = a.f_spec;
  o.config["covers"] = a.covers.empty() ? Json(nullptr) : Json(a.covers);
  o.config["m"] = a.m;
  o.config["sweeps"] = a.sweeps;
  GraphSequence g = load_graph(a.graph, o.formats);
  GrowthFunction f = load_growth(a.f_spec, g.horizon(), o.formats);
  CoverSequence covers;
  if (!a.covers.empty()) {
    covers = read_covers_file(a.covers, g.universe_size());
    o.formats["covers"] = kCoverFormatVersion;
  } else {
    FullCycleOptions options;
    options.final_sweep_from = g.max_birth();
    covers = build_covers_full_cycle(g, f, a.sweeps, options);
  }
  return {std::move(g), std::move(f), std::move(covers)};
}

Json stage_summary(const StageCertificate& c) {
  return Json{{"stage", c.stage},
              {"f", format_growth_value(c.bound)},
              {"edges", c.edge_count},
              {"components", c.component_count},
              {"singletons", c.singleton_count},
              {"max_diameter", c.max_diameter}};
}

Json capture_json(const CaptureReport& capture) {
  return Json{{"base_edges", capture.base_edges},
              {"captured", capture.captured},
              {"horizon_uncaptured", capture.horizon_uncaptured},
              {"witness_mismatches", capture.witness_mismatches},
              {"connectivity_consistent", capture.connectivity_consistent}};
}

// --- commands ------------------------------------------------------------------------

struct GenArgs {
  std::size_t vertices = 0;
  std::size_t degree = 1;
  std::size_t stages = 1;
  std::optional<std::size_t> edges;
  std::optional<Stage> horizon;
  std::string out;
};

Outcome cmd_gen(const Globals& gl, const GenArgs& a, std::ostream& out) {
  Outcome o;
  o.config = {{"seed", gl.seed}, {"vertices", a.vertices}, {"degree", a.degree}, {"stages", a.stages},
              {"edges", a.edges ? Json(*a.edges) : Json(nullptr)},
              {"horizon", a.horizon ? Json(*a.horizon) : Json(nullptr)},
              {"out", a.out.empty() ? Json(nullptr) : Json(a.out)}};
  o.formats["graph"] = kGraphFormatVersion;
  GeneratorParams p;
  p.seed = gl.seed;
  p.vertices = a.vertices;
  p.degree_bound = a.degree;
  p.stages = a.stages;
  p.edges = a.edges;
  p.horizon = a.horizon;
  const GraphSequence g = gen_random(p);
  std::ostringstream text;
  write_graph_sequence(text, g);
  if (a.out.empty()) {
    out << text.str();
  } else {
    write_text(a.out, text.str());
  }
  o.result = {{"vertices", g.universe_size()}, {"edges", g.edges().size()}, {"horizon", g.horizon()},
              {"max_birth", g.max_birth()}};
  return o;
}

struct ColorArgs {
  std::string graph;
  Stage stage = 0;
  Radius radius = 0;
  std::string order = "identity";
  std::string out;
};

Outcome cmd_color(const Globals& gl, const ColorArgs& a) {
  Outcome o;
  o.config = {{"seed", gl.seed}, {"graph", a.graph}, {"stage", a.stage}, {"radius", a.radius},
              {"order", a.order}, {"out", a.out.empty() ? Json(nullptr) : Json(a.out)}};
  const GraphSequence g = load_graph(a.graph, o.formats);
  g.check_stage(a.stage);
  auto order = identity_order(g.universe_size());
  if (a.order == "random") {
    std::mt19937_64 rng(gl.seed);
    std::shuffle(order.begin(), order.end(), rng);
  } else if (a.order != "identity") {
    order = read_order_file(a.order, g.universe_size());
  }
  const Coloring coloring = color_power_graph({&g, a.stage, a.radius}, order);
  const auto classes = coloring.classes();
  const std::size_t degree = power_graph_degree(g, a.stage, a.radius);
  std::size_t bad = 0;
  for (const auto& c : classes) {
    if (!verify_separated(g, a.stage, a.radius, c)) ++bad;
  }
  if (!a.out.empty()) {
    std::ostringstream text;
    write_indexed_sets(text, "class", classes);
    write_text(a.out, text.str());
  }
  o.result = {{"colors", coloring.num_colors}, {"power_graph_degree", degree},
              {"color_bound", degree + 1}, {"within_bound", coloring.num_colors <= degree + 1},
              {"non_separated_classes", bad}};
  if (bad != 0 || coloring.num_colors > degree + 1) o.status = kInvariantError;
  return o;
}

struct CoversArgs {
  std::string graph;
  std::string f_spec = "canonical:0";
  std::string mode = "cycle";
  std::size_t sweeps = 1;
  Stage final_from = 0;
  std::string regions;
  std::size_t stages = 0;
  std::size_t m = 1;
  std::string out;
};

Outcome cmd_covers(const Globals& gl, const CoversArgs& a) {
  Outcome o;
  o.config = {{"seed", gl.seed}, {"graph", a.graph}, {"f", a.f_spec}, {"mode", a.mode}, {"sweeps", a.sweeps},
              {"final_from", a.final_from}, {"regions", a.regions.empty() ? Json(nullptr) : Json(a.regions)},
              {"stages", a.stages}, {"m", a.m}, {"out", a.out.empty() ? Json(nullptr) : Json(a.out)}};
  const GraphSequence g = load_graph(a.graph, o.formats);
  const GrowthFunction f = load_growth(a.f_spec, g.horizon(), o.formats);
  if (!validate_f(f)) {
    throw InvariantViolation("schedule", "f(" + std::to_string(*first_growth_violation(f) + 1) +
                                             ") violates the growth recurrence");
  }
  CoverSequence covers;
  std::optional<RegionSweepPlan> plan;
  if (a.mode == "sweep") {
    if (a.regions.empty()) throw ConfigError("sweep mode needs --regions");
    plan.emplace(read_regions_file(a.regions, g.universe_size()));
    o.formats["regions"] = kRegionFormatVersion;
    covers = build_covers_sweep(g, f, *plan, a.stages);
  } else {
    FullCycleOptions options;
    options.final_sweep_from = a.final_from;
    covers = build_covers_full_cycle(g, f, a.sweeps, options);
  }
  if (!a.out.empty()) {
    std::ostringstream text;
    write_covers(text, covers);
    write_text(a.out, text.str());
  }
  const CoverageReport cov = coverage(covers, a.m);
  const auto violation = find_cover_violation(g, f, covers);
  o.result["covers"] = covers.size();
  o.result["min_coverage"] = cov.min_count();
  o.result["base_size"] = cov.threshold_set.size();
  o.result["separation_violation"] =
      violation ? Json{{"index", violation->index}, {"x", violation->x}, {"y", violation->y}} : Json(nullptr);
  if (!covers.sweeps.empty()) {
    Json sweeps = Json::array();
    for (const SweepRecord& s : covers.sweeps) {
      sweeps.push_back({{"first", s.first}, {"last", s.last}, {"colored_at", s.colored_at}});
    }
    o.result["sweeps"] = sweeps;
  }
  if (plan) {
    Json touches = Json::array();
    bool all = true;
    for (const RegionTouch& t : region_touches(covers, *plan)) {
      touches.push_back({{"region", t.region}, {"nonempty", t.nonempty}, {"touched", t.touched},
                         {"stages_assigned", t.stages_assigned}});
      if (t.nonempty && !t.touched) all = false;
    }
    o.result["regions"] = touches;
    o.result["all_nonempty_regions_touched"] = all;
    o.result["pairing_prefix_ok"] = verify_pairing_prefix(*plan, a.stages);
  }
  if (!gl.csv.empty()) {
    std::map<std::size_t, std::size_t> histogram;
    for (const std::size_t c : cov.counts) ++histogram[c];
    std::ostringstream csv;
    csv << "coverage,vertices\n";
    for (const auto& [c, n] : histogram) csv << c << ',' << n << '\n';
    write_text(gl.csv, csv.str());
  }
  if (violation) o.status = kInvariantError;
  return o;
}

struct HierarchyCmdArgs {
  HierarchyArgs in;
  bool certificates = false;
};

Outcome cmd_hierarchy(const Globals& gl, const HierarchyCmdArgs& a) {
  Outcome o;
  o.config["seed"] = gl.seed;
  Inputs in = load_inputs(a.in, o);
  o.config["certificates"] = a.certificates;
  const Hierarchy h = build_hierarchy(in.g, in.f, in.covers, a.in.m);
  const CaptureReport capture = verify_capture(in.g, h);
  const auto violations = diameter_claim_violations(h);

  Json stages = Json::array();
  for (const StageCertificate& c : h.certificates()) {
    Json s = stage_summary(c);
    if (a.certificates) {
      Json comps = Json::array();
      for (const ComponentCertificate& comp : c.components) {
        comps.push_back({{"representative", comp.representative}, {"size", comp.size},
                         {"diameter", comp.diameter}, {"members", comp.members}});
      }
      s["components_detail"] = comps;
    }
    stages.push_back(s);
  }
  o.result["base_size"] = h.base_set().size();
  o.result["last_stage"] = h.last_stage();
  o.result["diameter_violations"] = violations.size();
  o.result["capture"] = capture_json(capture);
  o.result["unique_cover_point"] = verify_unique_cover_point(h, in.covers);
  o.result["stages"] = stages;
  if (!gl.csv.empty()) write_stage_csv(gl.csv, h, capture);
  if (!violations.empty()) o.status = kInvariantError;
  return o;
}

struct ReduceArgs {
  HierarchyArgs in;
  std::string codes;
};

Outcome cmd_reduce(const Globals& gl, const ReduceArgs& a) {
  Outcome o;
  o.config["seed"] = gl.seed;
  Inputs in = load_inputs(a.in, o);
  o.config["out"] = a.codes.empty() ? Json(nullptr) : Json(a.codes);
  const Hierarchy h = build_hierarchy(in.g, in.f, in.covers, a.in.m);
  const LabelCode code = label_sequences(h);
  const auto bits = encode_binary(code);
  std::vector<std::string> sorted = bits;
  std::sort(sorted.begin(), sorted.end());
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!a.codes.empty()) {
    std::ostringstream text;
    for (VertexId x = 0; x < bits.size(); ++x) text << "code " << x << ": " << bits[x] << '\n';
    write_text(a.codes, text.str());
  }
  o.result["vertices"] = code.universe_size();
  o.result["stages"] = code.stages();
  o.result["block_width"] = code.block_width();
  o.result["injective"] = injective;
  o.result["base_size"] = h.base_set().size();
  if (h.base_set().size() <= kReductionPairLimit) {
    const ReductionReport r = verify_reduction(in.g, h, code);
    o.result["verification"] = {{"pairs_checked", r.pairs_checked}, {"label_mismatches", r.label_mismatches},
                                {"bit_mismatches", r.bit_mismatches}, {"oracle_mismatches", r.oracle_mismatches},
                                {"code_invariant_violations", r.code_invariant_violations}, {"ok", r.ok()}};
    if (!r.ok()) o.status = kInvariantError;
  } else {
    o.result["verification"] = "skipped: base set exceeds " + std::to_string(kReductionPairLimit) + " vertices";
  }
  if (!injective) o.status = kInvariantError;
  if (!gl.csv.empty()) write_stage_csv(gl.csv, h, verify_capture(in.g, h));
  return o;
}

struct VerifyArgs {
  HierarchyArgs in;
  std::size_t bfs_stages = 200;
};

Outcome cmd_verify(const Globals& gl, const VerifyArgs& a, std::ostream& err) {
  Outcome o;
  o.config["seed"] = gl.seed;
  Inputs in = load_inputs(a.in, o);
  o.config["bfs_stages"] = a.bfs_stages;
  Json checks = Json::object();
  bool ok = true;
  auto record = [&](const std::string& name, const std::string& module, bool pass, Json detail) {
    detail["pass"] = pass;
    checks[name] = detail;
    if (!pass) {
      ok = false;
      err << "[" << module << "] check '" << name << "' failed\n";
    }
  };

  const auto growth = first_growth_violation(in.f);
  record("growth", "schedule", !growth, {{"first_violation", growth ? Json(*growth) : Json(nullptr)}});
  const auto sep = find_cover_violation(in.g, in.f, in.covers);
  record("separation", "coloring", !sep,
         {{"violation", sep ? Json{{"index", sep->index}, {"x", sep->x}, {"y", sep->y}} : Json(nullptr)}});

  BuildOptions options;
  options.validate_inputs = false;
  const Hierarchy h = build_hierarchy(in.g, in.f, in.covers, a.in.m, options);
  const auto claims = diameter_claim_violations(h);
  record("diameter_claim", "hierarchy", claims.empty(), {{"violations", claims.size()}});

  // Certified diameters against all-pairs BFS: stages where edges entered, then the last one.
  std::vector<Stage> stages;
  for (const HierarchyEdge& e : h.edges()) {
    if (stages.empty() || stages.back() != e.entered) stages.push_back(e.entered);
  }
  if (stages.size() > a.bfs_stages) stages.resize(a.bfs_stages);
  if (stages.empty() || stages.back() != h.last_stage()) stages.push_back(h.last_stage());
  std::size_t mismatched = 0;
  for (const Stage n : stages) {
    std::uint64_t measured = 0;
    for (const ComponentDiameter& c : component_diameters(h, n)) measured = std::max(measured, c.diameter);
    if (measured != h.certificate(n).max_diameter) ++mismatched;
  }
  record("certificates", "hierarchy", mismatched == 0,
         {{"stages_checked", stages.size()}, {"mismatched_stages", mismatched}});

  const CaptureReport capture = verify_capture(in.g, h);
  Json cap = capture_json(capture);
  record("capture", "hierarchy", capture.witness_mismatches == 0 && capture.connectivity_consistent, cap);
  record("unique_cover_point", "hierarchy", verify_unique_cover_point(h, in.covers), Json::object());

  if (h.base_set().size() <= kReductionPairLimit) {
    const ReductionReport r = verify_reduction(in.g, h, label_sequences(h));
    record("reduction", "e0_reduction", r.ok(),
           {{"pairs_checked", r.pairs_checked}, {"label_mismatches", r.label_mismatches},
            {"bit_mismatches", r.bit_mismatches}, {"oracle_mismatches", r.oracle_mismatches},
            {"code_invariant_violations", r.code_invariant_violations}});
  } else {
    checks["reduction"] = {{"pass", nullptr}, {"skipped", "base set exceeds the all-pairs limit"}};
  }
  o.result["checks"] = checks;
  o.result["all_passed"] = ok;
  if (!gl.csv.empty()) write_stage_csv(gl.csv, h, capture);
  if (!ok) o.status = kInvariantError;
  return o;
}

struct PipelineArgs {
  std::string invs;
  std::vector<std::size_t> targets;
  std::string trace;
};

Outcome cmd_pipeline(const Globals& gl, const PipelineArgs& a) {
  Outcome o;
  o.config = {{"seed", gl.seed}, {"invs", a.invs}, {"targets", a.targets},
              {"trace", a.trace.empty() ? Json(nullptr) : Json(a.trace)}};
  const InvolutionFamily invs = read_involutions_file(a.invs);
  o.formats["involutions"] = kInvolutionFormatVersion;
  const PipelineResult r = fusion_pipeline(invs, a.targets);

  Json states = Json::array();
  for (const FusionState& s : r.trace) {
    states.push_back({{"stage", s.stage}, {"reservoir", set_json(s.reservoir)}, {"frozen", set_json(s.frozen)}});
  }
  Json outcomes = Json::array();
  for (const StageOutcome& s : r.stages) {
    outcomes.push_back({{"stage", s.stage}, {"stem", set_json(s.stem)}, {"target", s.target},
                        {"involution_edges", s.involution_edges}, {"star_edges", s.star_edges},
                        {"star_max_degree", s.star_max_degree}, {"colors", s.colors}, {"found", s.found}});
  }
  const Mask limit = fusion_limit(r.trace);
  const PipelineCheck check = verify_pipeline(invs, r.trace);
  if (r.success() && !check.ok()) {
    throw InvariantViolation("ellentuck", std::to_string(check.violations) +
                                              " involution edge(s) leave the stem in the final reservoir");
  }
  Json result = {{"outcome", r.success() ? "FOUND" : "NOT-FOUND"},
                 {"failed_stage", r.failed_stage ? Json(*r.failed_stage) : Json(nullptr)},
                 {"ground", invs.ground()},
                 {"depth", invs.depth()},
                 {"involutions", invs.size()},
                 {"final_reservoir", set_json(r.final_reservoir())},
                 {"limit", set_json(limit)},
                 {"verification", {{"edges_checked", check.edges_checked}, {"violations", check.violations}}},
                 {"stages", outcomes}};
  if (!a.trace.empty()) {
    Json trace = {{"format", kTraceFormatVersion}, {"states", states}, {"result", result}};
    write_text(a.trace, trace.dump(2) + "\n");
    o.formats["trace"] = kTraceFormatVersion;
  }
  result["states"] = states;
  o.result = result;
  return o;
}

struct BookkeepingArgs {
  std::size_t stages = 0;
  std::optional<std::size_t> ground;
  std::optional<std::size_t> show_stage;
};

Outcome cmd_bookkeeping(const Globals& gl, const BookkeepingArgs& a) {
  Outcome o;
  const std::size_t ground = a.ground.value_or(std::max<std::size_t>(a.stages, 1));
  o.config = {{"seed", gl.seed}, {"stages", a.stages}, {"ground", ground},
              {"show_stage", a.show_stage ? Json(*a.show_stage) : Json(nullptr)}};
  if (a.stages > kMaxBookkeepingStages) {
    throw ConfigError("at most " + std::to_string(kMaxBookkeepingStages) + " stages");
  }
  if (ground > kMaxGround || (a.stages > 0 && ground < a.stages - 1)) {
    throw ConfigError("ground size must lie in [stages - 1, 64]");
  }
  const Bookkeeping b = kn_bookkeeping(constant_trace(ground_mask(ground), a.stages));
  bool closed_form = true;
  for (std::size_t n = 0; n < b.k.size(); ++n) {
    if (b.k[n] != (std::uint64_t{1} << n) - 1) closed_form = false;
  }
  Json stages = Json::array();
  for (const StageEnumeration& e : b.stages) {
    Json s = {{"stage", e.stage}, {"prefix", set_json(e.prefix)}, {"subsets", e.subsets.size()},
              {"first_cover_index", e.first_cover_index}};
    if (a.show_stage && *a.show_stage == e.stage) {
      Json sets = Json::array();
      for (const Mask m : e.subsets) sets.push_back(set_json(m));
      s["enumeration"] = sets;
    }
    stages.push_back(s);
  }
  o.result = {{"k", b.k}, {"matches_power_of_two_minus_one", closed_form}, {"stages", stages}};
  if (!closed_form) o.status = kInvariantError;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separated covers, bounded-diameter hierarchies and Ellentuck-space simulations"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--report", gl.report, "Write the JSON report here instead of standard output");
  app.add_option("--csv", gl.csv, "Write the CSV series here");
  app.add_option("--seed", gl.seed, "Seed for random choices");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random graph sequence");
  gen_cmd->add_option("--vertices", gen.vertices)->required();
  gen_cmd->add_option("--degree", gen.degree)->required();
  gen_cmd->add_option("--stages", gen.stages)->required();
  gen_cmd->add_option("--edges", gen.edges);
  gen_cmd->add_option("--horizon", gen.horizon);
  gen_cmd->add_option("--out", gen.out, "Graph output (default: standard output)");

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Greedy colouring of a power graph G_n^k");
  color_cmd->add_option("--graph", color.graph)->required();
  color_cmd->add_option("--stage", color.stage)->required();
  color_cmd->add_option("--k,--radius", color.radius, "Separation radius")->required();
  color_cmd->add_option("--order", color.order, "identity, random (uses --seed), or a file listing a vertex permutation");
  color_cmd->add_option("--out", color.out, "Write the colour classes here");

  CoversArgs cov;
  auto* covers_cmd = app.add_subcommand("covers", "Build a separated cover sequence");
  covers_cmd->add_option("--graph", cov.graph)->required();
  covers_cmd->add_option("--f", cov.f_spec);
  covers_cmd->add_option("--mode", cov.mode)->check(CLI::IsMember({"cycle", "sweep"}));
  covers_cmd->add_option("--sweeps", cov.sweeps);
  covers_cmd->add_option("--final-from", cov.final_from, "Sweep until a sweep starts at or after this index");
  covers_cmd->add_option("--regions", cov.regions);
  covers_cmd->add_option("--stages", cov.stages, "Number of covers in sweep mode");
  covers_cmd->add_option("--m", cov.m)->check(CLI::PositiveNumber);
  covers_cmd->add_option("--out", cov.out, "Write the covers here");

  HierarchyCmdArgs hier;
  auto* hier_cmd = app.add_subcommand("hierarchy", "Build and certify the hierarchy H_0 ⊆ ... ⊆ H_N");
  add_hierarchy_options(hier_cmd, hier.in);
  hier_cmd->add_flag("--certificates", hier.certificates, "Include per-component certificates");

  ReduceArgs red;
  auto* reduce_cmd = app.add_subcommand("reduce", "Label codes reducing connectivity to eventual equality");
  add_hierarchy_options(reduce_cmd, red.in);
  reduce_cmd->add_option("--out", red.codes, "Write the binary codes here");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run the brute-force verifier suite");
  add_hierarchy_options(verify_cmd, ver.in);
  verify_cmd->add_option("--bfs-stages", ver.bfs_stages, "Stages re-measured by all-pairs BFS");

  auto* ell_cmd = app.add_subcommand("ellentuck", "Finite Ellentuck-space simulations");
  ell_cmd->require_subcommand(1);
  PipelineArgs pipe;
  auto* pipe_cmd = ell_cmd->add_subcommand("pipeline", "Fusion pipeline over an involution family");
  pipe_cmd->add_option("--invs", pipe.invs)->required();
  pipe_cmd->add_option("--target", pipe.targets, "|A_{n+1}| per stage: one value or a comma list")
      ->required()
      ->delimiter(',');
  pipe_cmd->add_option("--trace", pipe.trace, "Write the fusion trace (JSON) here");
  BookkeepingArgs book;
  auto* book_cmd = ell_cmd->add_subcommand("bookkeeping", "Cover-index bookkeeping k_n");
  book_cmd->add_option("--stages", book.stages)->required();
  book_cmd->add_option("--ground", book.ground);
  book_cmd->add_option("--show-stage", book.show_stage, "List the subsets enumerated at this stage");

  for (auto* sub : {gen_cmd, color_cmd, covers_cmd, hier_cmd, reduce_cmd, verify_cmd, ell_cmd}) sub->fallthrough();
  pipe_cmd->fallthrough();
  book_cmd->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  std::string command;
  try {
    Outcome o;
    if (*gen_cmd) {
      command = "gen";
      o = cmd_gen(gl, gen, out);
    } else if (*color_cmd) {
      command = "color";
      o = cmd_color(gl, color);
    } else if (*covers_cmd) {
      command = "covers";
      o = cmd_covers(gl, cov);
    } else if (*hier_cmd) {
      command = "hierarchy";
      o = cmd_hierarchy(gl, hier);
    } else if (*reduce_cmd) {
      command = "reduce";
      o = cmd_reduce(gl, red);
    } else if (*verify_cmd) {
      command = "verify";
      o = cmd_verify(gl, ver, err);
    } else if (*pipe_cmd) {
      command = "ellentuck pipeline";
      o = cmd_pipeline(gl, pipe);
    } else {
      command = "ellentuck bookkeeping";
      o = cmd_bookkeeping(gl, book);
    }
    const Json report = {{"tool", "sepcover"}, {"command", command}, {"status", o.status},
                         {"config", o.config}, {"formats", o.formats}, {"result", o.result}};
    if (!gl.report.empty()) {
      write_text(gl.report, report.dump(2) + "\n");
    } else if (command != "gen") {
      out << report.dump(2) << '\n';
    }
    return o.status;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantError;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kInvariantError;
  } catch (const EncodingError& e) {
    err << "[e0_reduction] " << e.what() << '\n';
    return kInvariantError;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvariantError;
  } catch (const std::out_of_range& e) {
    err << "out of range: " << e.what() << '\n';
    return kInvariantError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace sepcover::cli

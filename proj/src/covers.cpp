#include "sepcover/covers.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>

#include "sepcover/coloring.hpp"
#include "sepcover/errors.hpp"
#include "text_lines.hpp"

namespace sepcover {

std::vector<VertexId> CoverageReport::limsup_set(std::size_t m) const {
  std::vector<VertexId> out;
  for (VertexId x = 0; x < counts.size(); ++x) {
    if (counts[x] >= m) out.push_back(x);
  }
  return out;
}

std::size_t CoverageReport::min_count() const {
  if (counts.empty()) return 0;
  return *std::min_element(counts.begin(), counts.end());
}

CoverageReport coverage(const CoverSequence& covers, std::size_t m) {
  CoverageReport report;
  report.cover_count = covers.size();
  report.counts.assign(covers.universe_size, 0);
  for (const auto& cover : covers.covers) {
    for (const VertexId x : cover) ++report.counts.at(x);
  }
  report.threshold = m;
  report.threshold_set = report.limsup_set(m);
  return report;
}

RegionSweepPlan::RegionSweepPlan(std::vector<std::vector<VertexId>> r)
    : regions(std::move(r)), pairing(regions.empty() ? 1 : regions.size()) {
  if (regions.empty()) throw ConfigError("region sweep needs at least one region");
  for (auto& region : regions) {
    std::sort(region.begin(), region.end());
    region.erase(std::unique(region.begin(), region.end()), region.end());
  }
}

bool verify_pairing_prefix(const RegionSweepPlan& plan, std::uint64_t stages) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::size_t> per_region(plan.regions.size(), 0);
  for (std::uint64_t n = 0; n < stages; ++n) {
    const auto pair = plan.pairing(n);
    if (pair.first >= plan.regions.size()) return false;
    if (!seen.insert(pair).second) return false;
    ++per_region[pair.first];
  }
  // Injective with per-region counts c_k: the prefix is onto iff it is {(k, j) : j < c_k}.
  for (const auto& [region, sweep] : seen) {
    if (sweep >= per_region[region]) return false;
  }
  return true;
}

namespace {

void check_stage_budget(const GraphSequence& g, const GrowthFunction& f, std::size_t stages) {
  const std::size_t limit = std::min<std::size_t>(g.horizon(), f.horizon()) + 1;
  if (stages > limit) {
    throw ConfigError("requested " + std::to_string(stages) + " stages but graph/f horizons allow " +
                      std::to_string(limit));
  }
}

}  // namespace

CoverSequence build_covers_sweep(const GraphSequence& g, const GrowthFunction& f,
                                 const RegionSweepPlan& plan, std::size_t stages) {
  check_stage_budget(g, f, stages);
  std::vector<std::vector<bool>> in_region;
  for (const auto& region : plan.regions) {
    std::vector<bool> mark(g.universe_size(), false);
    for (const VertexId x : region) mark.at(x) = true;
    in_region.push_back(std::move(mark));
  }

  CoverSequence out;
  out.universe_size = g.universe_size();
  for (Stage n = 0; n < stages; ++n) {
    const auto [region, sweep] = plan.pairing(n);
    const Coloring coloring = color_power_graph({&g, n, f(n)});
    auto classes = coloring.classes();
    std::size_t best = 0;
    std::size_t best_hits = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto hits = static_cast<std::size_t>(std::count_if(
          classes[c].begin(), classes[c].end(), [&](VertexId x) { return in_region[region][x]; }));
      if (hits > best_hits) {
        best = c;
        best_hits = hits;
      }
    }
    CoverProvenance prov;
    prov.source = CoverProvenance::Source::Coloring;
    prov.colored_at = n;
    prov.radius = f(n);
    prov.color = static_cast<std::uint32_t>(best);
    prov.sweep = sweep;
    prov.region = region;
    out.covers.push_back(classes.empty() ? std::vector<VertexId>{} : std::move(classes[best]));
    out.provenance.push_back(prov);
  }
  return out;
}

CoverSequence build_covers_full_cycle(const GraphSequence& g, const GrowthFunction& f,
                                      std::size_t sweeps, const FullCycleOptions& options) {
  const Stage limit = std::min(g.horizon(), f.horizon());
  CoverSequence out;
  out.universe_size = g.universe_size();
  for (Stage n = 0; n < options.first_index; ++n) {
    out.covers.emplace_back();
    out.provenance.emplace_back();
  }

  Stage start = options.first_index;
  std::size_t done = 0;
  auto need_more = [&] {
    if (done < sweeps) return true;
    if (options.final_sweep_from == 0) return false;
    return done == 0 || out.sweeps.back().first < options.final_sweep_from;
  };
  while (need_more()) {
    Stage colored_at = start;
    std::vector<std::vector<VertexId>> classes;
    for (;;) {
      if (colored_at > limit) {
        throw ConfigError("horizon " + std::to_string(limit) +
                          " too short for a full sweep starting at index " + std::to_string(start));
      }
      classes = color_power_graph({&g, colored_at, f(colored_at)}).classes();
      if (classes.empty()) classes.emplace_back();  // empty universe: one empty cover
      const std::uint64_t last = static_cast<std::uint64_t>(start) + classes.size() - 1;
      if (last <= colored_at) break;
      colored_at = static_cast<Stage>(std::min<std::uint64_t>(last, static_cast<std::uint64_t>(limit) + 1));
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      CoverProvenance prov;
      prov.source = CoverProvenance::Source::Coloring;
      prov.colored_at = colored_at;
      prov.radius = f(colored_at);
      prov.color = static_cast<std::uint32_t>(c);
      prov.sweep = done;
      out.covers.push_back(std::move(classes[c]));
      out.provenance.push_back(prov);
    }
    out.sweeps.push_back({start, static_cast<Stage>(start + classes.size() - 1), colored_at});
    start = static_cast<Stage>(start + classes.size());
    ++done;
  }
  return out;
}

std::optional<CoverViolation> find_cover_violation(const GraphSequence& g, const GrowthFunction& f,
                                                   const CoverSequence& covers) {
  for (Stage n = 0; n < covers.size(); ++n) {
    if (auto pair = find_separation_violation(g, n, f(n), covers.covers[n])) {
      return CoverViolation{n, pair->first, pair->second};
    }
  }
  return std::nullopt;
}

std::vector<RegionTouch> region_touches(const CoverSequence& covers, const RegionSweepPlan& plan) {
  std::vector<RegionTouch> out;
  for (std::size_t k = 0; k < plan.regions.size(); ++k) {
    out.push_back({k, !plan.regions[k].empty(), false, 0});
  }
  for (Stage n = 0; n < covers.size(); ++n) {
    const std::size_t k = plan.pairing(n).first;
    ++out[k].stages_assigned;
    const auto& region = plan.regions[k];
    for (const VertexId x : covers.covers[n]) {
      if (std::binary_search(region.begin(), region.end(), x)) {
        out[k].touched = true;
        break;
      }
    }
  }
  return out;
}

std::vector<std::vector<VertexId>> read_indexed_sets(std::istream& in, const std::string& source,
                                                     const std::string& keyword,
                                                     std::size_t universe_size) {
  std::vector<std::vector<VertexId>> out;
  std::size_t line_number = 0;
  detail::Line line;
  while (detail::next_line(in, line_number, line)) {
    if (line.tokens[0].text != keyword) {
      throw ParseError(source, line.number, line.tokens[0].column,
                       "unknown directive '" + std::string(line.tokens[0].text) + "'");
    }
    if (line.tokens.size() < 2 || !line.tokens[1].text.ends_with(':')) {
      throw ParseError(source, line.number, line.tokens.size() < 2 ? 0 : line.tokens[1].column,
                       "expected '" + keyword + " <index>:'");
    }
    detail::Token index_tok = line.tokens[1];
    index_tok.text.remove_suffix(1);
    const auto index = detail::parse_count(source, line, index_tok);
    if (index != out.size()) {
      throw ParseError(source, line.number, index_tok.column,
                       "expected index " + std::to_string(out.size()) + ", got " + std::to_string(index));
    }
    std::vector<VertexId> set;
    for (std::size_t i = 2; i < line.tokens.size(); ++i) {
      const auto v = detail::parse_count(source, line, line.tokens[i]);
      if (v >= universe_size) {
        throw ParseError(source, line.number, line.tokens[i].column, "vertex out of range");
      }
      set.push_back(static_cast<VertexId>(v));
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw ParseError(source, line.number, 0, "repeated vertex");
    }
    out.push_back(std::move(set));
  }
  return out;
}

void write_indexed_sets(std::ostream& out, const std::string& keyword,
                        const std::vector<std::vector<VertexId>>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out << keyword << ' ' << i << ':';
    for (const VertexId v : sets[i]) out << ' ' << v;
    out << '\n';
  }
}

CoverSequence read_covers(std::istream& in, const std::string& source, std::size_t universe_size) {
  CoverSequence out;
  out.universe_size = universe_size;
  out.covers = read_indexed_sets(in, source, "cover", universe_size);
  CoverProvenance prov;
  prov.source = CoverProvenance::Source::UserSupplied;
  out.provenance.assign(out.covers.size(), prov);
  return out;
}

CoverSequence read_covers_file(const std::filesystem::path& path, std::size_t universe_size) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
  return read_covers(in, path.string(), universe_size);
}

void write_covers(std::ostream& out, const CoverSequence& covers) {
  write_indexed_sets(out, "cover", covers.covers);
}

std::vector<std::vector<VertexId>> read_regions_file(const std::filesystem::path& path,
                                                     std::size_t universe_size) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
  return read_indexed_sets(in, path.string(), "region", universe_size);
}

}  // namespace sepcover

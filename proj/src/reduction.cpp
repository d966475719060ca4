#include "sepcover/reduction.hpp"

#include <algorithm>

#include "union_find.hpp"

namespace sepcover {

namespace {

std::size_t bits_for(std::size_t universe_size) {
  std::size_t width = 1;
  while (width < 64 && (std::uint64_t{1} << width) < universe_size) ++width;
  return width;
}

// Component index of every vertex by BFS over an adjacency list.
std::vector<std::size_t> bfs_components(const std::vector<std::vector<VertexId>>& adj) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(adj.size(), kUnset);
  std::vector<VertexId> queue;
  std::size_t next = 0;
  for (VertexId s = 0; s < adj.size(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const VertexId w : adj[queue[head]]) {
        if (comp[w] == kUnset) {
          comp[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace

LabelCode::LabelCode(std::size_t universe_size, std::size_t stages)
    : universe_size_(universe_size),
      stages_(stages),
      block_width_(bits_for(universe_size)),
      reps_(universe_size * stages, 0) {}

std::vector<VertexId> LabelCode::sequence(VertexId x) const {
  std::vector<VertexId> out(stages_);
  for (std::size_t n = 0; n < stages_; ++n) out[n] = rep(static_cast<Stage>(n), x);
  return out;
}

LabelCode label_sequences(const Hierarchy& h) {
  const std::size_t universe = h.universe_size();
  LabelCode code(universe, static_cast<std::size_t>(h.last_stage()) + 1);
  detail::UnionFind uf(universe);
  std::vector<VertexId> least(universe);
  for (VertexId x = 0; x < universe; ++x) least[x] = x;
  const auto edges = h.edges();
  std::size_t next = 0;
  for (Stage n = 0; n <= h.last_stage(); ++n) {
    for (; next < edges.size() && edges[next].entered <= n; ++next) {
      const std::size_t a = uf.find(edges[next].u);
      const std::size_t b = uf.find(edges[next].v);
      if (a == b) continue;
      const VertexId low = std::min(least[a], least[b]);
      least[uf.unite(a, b)] = low;
    }
    for (VertexId x = 0; x < universe; ++x) code.set_rep(n, x, least[uf.find(x)]);
  }
  return code;
}

std::string encode_sequence(std::span<const VertexId> reps, std::size_t block_width) {
  if (block_width == 0) throw EncodingError("block width must be positive");
  std::string out;
  out.reserve(reps.size() * block_width);
  for (const VertexId r : reps) {
    if (block_width < 64 && (static_cast<std::uint64_t>(r) >> block_width) != 0) {
      throw EncodingError("representative " + std::to_string(r) + " does not fit in " +
                          std::to_string(block_width) + " bits");
    }
    for (std::size_t bit = block_width; bit-- > 0;) {
      out.push_back(bit < 64 && ((static_cast<std::uint64_t>(r) >> bit) & 1U) ? '1' : '0');
    }
  }
  return out;
}

std::vector<std::string> encode_binary(const LabelCode& code, std::size_t block_width) {
  std::vector<std::string> out;
  out.reserve(code.universe_size());
  for (VertexId x = 0; x < code.universe_size(); ++x) {
    out.push_back(encode_sequence(code.sequence(x), block_width));
  }
  return out;
}

std::vector<std::string> encode_binary(const LabelCode& code) {
  return encode_binary(code, code.block_width());
}

std::optional<std::size_t> agreement_start(std::span<const VertexId> a, std::span<const VertexId> b) {
  const std::size_t len = std::min(a.size(), b.size());
  std::size_t start = len;
  while (start > 0 && a[start - 1] == b[start - 1]) --start;
  if (start == len && len > 0) return std::nullopt;
  return start;
}

ReductionReport verify_reduction(const GraphSequence& g, const Hierarchy& h, const LabelCode& code) {
  const auto base = h.base_set();
  if (base.size() > kReductionPairLimit) {
    throw ConfigError("base set of " + std::to_string(base.size()) +
                      " vertices exceeds the all-pairs limit of " + std::to_string(kReductionPairLimit));
  }
  const Stage last = h.last_stage();
  ReductionReport report;
  report.base_size = base.size();

  const auto h_comp = bfs_components(h.adjacency(last));

  // Oracle: G restricted to B, keeping edges that some cover B_k (k >= max(birth, 1)) touches.
  std::vector<std::vector<bool>> covered_at(g.universe_size());
  for (VertexId x = 0; x < g.universe_size(); ++x) covered_at[x].assign(last + 1, false);
  for (Stage k = 1; k <= last; ++k) {
    for (const VertexId x : h.covers().covers[k]) covered_at[x][k] = true;
  }
  std::vector<std::vector<VertexId>> oracle_adj(g.universe_size());
  for (const Edge& e : g.edges()) {
    if (e.u == e.v || !h.in_base(e.u) || !h.in_base(e.v)) continue;
    bool reached = false;
    for (Stage k = std::max<Stage>(e.birth, 1); k <= last && !reached; ++k) {
      reached = covered_at[e.u][k] || covered_at[e.v][k];
    }
    if (reached) {
      oracle_adj[e.u].push_back(e.v);
      oracle_adj[e.v].push_back(e.u);
    }
  }
  const auto g_comp = bfs_components(oracle_adj);

  // rep_n(x) lies in x's H_n-component.
  {
    detail::UnionFind uf(h.universe_size());
    const auto edges = h.edges();
    std::size_t next = 0;
    for (Stage n = 0; n <= last; ++n) {
      for (; next < edges.size() && edges[next].entered <= n; ++next) uf.unite(edges[next].u, edges[next].v);
      for (const VertexId x : base) {
        if (uf.find(code.rep(n, x)) != uf.find(x)) ++report.code_invariant_violations;
      }
    }
  }

  const std::size_t width = code.block_width();
  std::vector<std::vector<VertexId>> seqs;
  std::vector<std::string> bits;
  for (const VertexId x : base) {
    seqs.push_back(code.sequence(x));
    bits.push_back(encode_sequence(seqs.back(), width));
  }
  const std::size_t stages = code.stages();
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      ++report.pairs_checked;
      const VertexId x = base[i];
      const VertexId y = base[j];
      const bool connected = h_comp[x] == h_comp[y];
      const bool same_final = seqs[i].back() == seqs[j].back();
      if (connected != same_final) ++report.label_mismatches;
      if (connected != (g_comp[x] == g_comp[y])) ++report.oracle_mismatches;

      // once equal, always equal
      std::size_t first_equal = stages;
      for (std::size_t n = 0; n < stages; ++n) {
        if (seqs[i][n] == seqs[j][n]) {
          first_equal = n;
          break;
        }
      }
      for (std::size_t n = first_equal; n < stages; ++n) {
        if (seqs[i][n] != seqs[j][n]) {
          ++report.code_invariant_violations;
          break;
        }
      }

      // agree from stage s  <=>  agree from bit s * width
      const std::size_t s = agreement_start(seqs[i], seqs[j]).value_or(stages);
      std::size_t b = bits[i].size();
      while (b > 0 && bits[i][b - 1] == bits[j][b - 1]) --b;
      if ((b + width - 1) / width != s) ++report.bit_mismatches;
    }
  }
  return report;
}

}  // namespace sepcover

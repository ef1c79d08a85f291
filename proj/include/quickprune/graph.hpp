// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Graph storage, SNAP-style edge list ingestion, knapsack cost assignment and
// synthetic instance generators.

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quickprune/common.hpp"

namespace qprune {

using Edge = std::pair<ElementId, ElementId>;

// Immutable compressed adjacency. Undirected graphs store each edge in both
// directions; directed graphs additionally keep the reverse (in-arc) lists.
class Graph {
 public:
  Graph() = default;

  // Builds from an arc list over nodes [0, n). Self-loops are dropped and
  // duplicate edges collapsed ("0 1" and "1 0" are the same undirected edge).
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          bool directed = false) {
    Graph g;
    g.n_ = n;
    g.directed_ = directed;
    std::vector<Edge> arcs;
    arcs.reserve(directed ? edges.size() : 2 * edges.size());
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw InputError("edge endpoint out of range: " + std::to_string(u) +
                         " " + std::to_string(v));
      if (u == v) continue;
      arcs.emplace_back(u, v);
      if (!directed) arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    g.out_ = Csr::build(n, arcs);
    if (directed) {
      for (auto& [u, v] : arcs) std::swap(u, v);
      std::sort(arcs.begin(), arcs.end());
      g.in_ = Csr::build(n, arcs);
      g.m_ = g.out_.targets.size();
    } else {
      g.m_ = g.out_.targets.size() / 2;
    }
    g.costs_.assign(n, 1.0);
    g.labels_.resize(n);
    std::iota(g.labels_.begin(), g.labels_.end(), std::int64_t{0});
    return g;
  }

  std::size_t num_nodes() const noexcept { return n_; }
  // Undirected edges are counted once.
  std::size_t num_edges() const noexcept { return m_; }
  bool directed() const noexcept { return directed_; }

  std::span<const ElementId> neighbors(ElementId v) const {
    return out_.row(v);
  }
  std::span<const ElementId> in_neighbors(ElementId v) const {
    return directed_ ? in_.row(v) : out_.row(v);
  }
  std::size_t degree(ElementId v) const { return out_.row(v).size(); }

  CostView costs() const noexcept { return costs_; }
  double cost(ElementId v) const { return costs_[v]; }

  // Original label of each dense id, as read from the input file.
  std::span<const std::int64_t> labels() const noexcept { return labels_; }

  Graph with_costs(std::vector<double> costs) const {
    if (costs.size() != n_)
      throw InputError("cost vector size " + std::to_string(costs.size()) +
                       " does not match node count " + std::to_string(n_));
    for (double c : costs)
      if (!(c > 0.0)) throw InputError("costs must be strictly positive");
    Graph g = *this;
    g.costs_ = std::move(costs);
    return g;
  }

  Graph with_labels(std::vector<std::int64_t> labels) const {
    if (labels.size() != n_) throw InputError("label vector size mismatch");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
  }

  // Canonical edge list: (u, v) with u < v for undirected graphs.
  std::vector<Edge> edges() const {
    std::vector<Edge> result;
    result.reserve(m_);
    for (ElementId u = 0; u < n_; ++u)
      for (ElementId v : neighbors(u))
        if (directed_ || u < v) result.emplace_back(u, v);
    return result;
  }

 private:
  struct Csr {
    std::vector<std::uint64_t> offsets;
    std::vector<ElementId> targets;

    static Csr build(std::size_t n, const std::vector<Edge>& sorted_arcs) {
      Csr csr;
      csr.offsets.assign(n + 1, 0);
      for (auto [u, v] : sorted_arcs) ++csr.offsets[u + 1];
      std::partial_sum(csr.offsets.begin(), csr.offsets.end(),
                       csr.offsets.begin());
      csr.targets.reserve(sorted_arcs.size());
      for (auto [u, v] : sorted_arcs) csr.targets.push_back(v);
      return csr;
    }

    std::span<const ElementId> row(ElementId v) const {
      return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
    }
  };

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  bool directed_ = false;
  Csr out_;
  Csr in_;
  std::vector<double> costs_;
  std::vector<std::int64_t> labels_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline bool parse_label(std::string_view token, std::int64_t& out) {
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size() && out >= 0;
}

}  // namespace detail

// Parses whitespace-separated "u v" lines. Blank lines and lines starting with
// '#' or '%' are skipped. Node labels are re-indexed densely in order of first
// appearance; Graph::labels() holds the mapping back to the input labels.
inline Graph parse_edge_list(std::istream& in, bool directed = false) {
  std::unordered_map<std::int64_t, ElementId> ids;
  std::vector<std::int64_t> labels;
  std::vector<Edge> edges;
  auto intern = [&](std::int64_t label) {
    auto [it, inserted] =
        ids.try_emplace(label, static_cast<ElementId>(labels.size()));
    if (inserted) {
      if (labels.size() >= std::numeric_limits<ElementId>::max())
        throw InputError("too many nodes");
      labels.push_back(label);
    }
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = detail::trim(line);
    if (body.empty() || body.front() == '#' || body.front() == '%') continue;

    std::string_view tokens[2];
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos < body.size()) {
      const auto start = body.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      const auto end = std::min(body.find_first_of(" \t", start), body.size());
      if (count == 2) throw ParseError(line_no, "expected exactly two ids");
      tokens[count++] = body.substr(start, end - start);
      pos = end;
    }
    if (count != 2) throw ParseError(line_no, "expected exactly two ids");

    std::int64_t u = 0;
    std::int64_t v = 0;
    if (!detail::parse_label(tokens[0], u) || !detail::parse_label(tokens[1], v))
      throw ParseError(line_no, "node ids must be non-negative integers");
    const ElementId a = intern(u);
    const ElementId b = intern(v);
    edges.emplace_back(a, b);
  }
  return Graph::from_edges(labels.size(), edges, directed)
      .with_labels(std::move(labels));
}

inline Graph parse_edge_list(std::string_view text, bool directed = false) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, directed);
}

// Reads an edge list file; a ".gz" suffix is decompressed transparently.
inline Graph read_edge_list_file(const std::string& path,
                                 bool directed = false) {
  if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
    gzFile file = gzopen(path.c_str(), "rb");
    if (file == nullptr) throw IoError("cannot open " + path);
    std::string text;
    char buffer[1 << 16];
    int got = 0;
    while ((got = gzread(file, buffer, sizeof buffer)) > 0)
      text.append(buffer, static_cast<std::size_t>(got));
    const bool failed = got < 0;
    gzclose(file);
    if (failed) throw IoError("corrupt gzip stream in " + path);
    return parse_edge_list(text, directed);
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_edge_list(in, directed);
}

// Writes dense ids, one edge per line. Isolated nodes are not representable.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes " << g.num_nodes() << " edges " << g.num_edges()
      << (g.directed() ? " directed" : " undirected") << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

enum class CostMode { unit, degree };

// Degree-proportional knapsack costs: c(v) = cost_beta / |V| * (|N(v)| -
// cost_alpha), where cost_beta is the smallest normaliser giving min_v c(v) = 1,
// i.e. c(v) = (|N(v)| - cost_alpha) / (min_u |N(u)| - cost_alpha).
// CostMode::unit yields the cardinality-constraint special case.
inline Graph assign_knapsack_costs(const Graph& g, double cost_alpha = 1.0 / 20,
                                   CostMode mode = CostMode::degree) {
  const std::size_t n = g.num_nodes();
  if (mode == CostMode::unit) return g.with_costs(std::vector<double>(n, 1.0));
  if (n == 0) return g;

  double min_shifted = std::numeric_limits<double>::infinity();
  for (ElementId v = 0; v < n; ++v) {
    const double shifted = static_cast<double>(g.degree(v)) - cost_alpha;
    if (!(shifted > 0.0))
      throw InputError("node " + std::to_string(g.labels()[v]) +
                       " has degree " + std::to_string(g.degree(v)) +
                       " <= cost_alpha; cost would be non-positive");
    min_shifted = std::min(min_shifted, shifted);
  }
  std::vector<double> costs(n);
  for (ElementId v = 0; v < n; ++v)
    costs[v] = (static_cast<double>(g.degree(v)) - cost_alpha) / min_shifted;
  return g.with_costs(std::move(costs));
}

enum class GraphKind { erdos_renyi, barabasi_albert, star, path };

struct GeneratorParams {
  double edge_probability = 0.0;  // erdos_renyi
  std::size_t attach = 1;         // barabasi_albert: edges per new node
};

// Synthetic graphs, reproducible under `seed`. Star node 0 is the centre.
inline Graph generate(GraphKind kind, std::size_t n,
                      const GeneratorParams& params, std::uint64_t seed) {
  if (n == 0) throw InputError("graph must have at least one node");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  switch (kind) {
    case GraphKind::star:
      for (ElementId v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case GraphKind::path:
      for (ElementId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      break;
    case GraphKind::erdos_renyi: {
      const double p = params.edge_probability;
      if (!(p >= 0.0 && p <= 1.0))
        throw InputError("edge probability must lie in [0, 1]");
      std::uniform_real_distribution<double> coin(0.0, 1.0);
      for (ElementId u = 0; u < n; ++u)
        for (ElementId v = u + 1; v < n; ++v)
          if (coin(rng) < p) edges.emplace_back(u, v);
      break;
    }
    case GraphKind::barabasi_albert: {
      const std::size_t m = params.attach;
      if (m == 0 || m >= n)
        throw InputError("barabasi_albert needs 1 <= attach < n");
      // Seed clique over the first m + 1 nodes, then preferential attachment
      // through a list holding each node once per incident edge.
      std::vector<ElementId> endpoints;
      for (ElementId u = 0; u <= m; ++u)
        for (ElementId v = u + 1; v <= m; ++v) {
          edges.emplace_back(u, v);
          endpoints.push_back(u);
          endpoints.push_back(v);
        }
      std::vector<ElementId> chosen;
      for (auto v = static_cast<ElementId>(m + 1); v < n; ++v) {
        chosen.clear();
        std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
        while (chosen.size() < m) {
          const ElementId target = endpoints[pick(rng)];
          if (std::find(chosen.begin(), chosen.end(), target) == chosen.end())
            chosen.push_back(target);
        }
        for (ElementId target : chosen) {
          edges.emplace_back(target, v);
          endpoints.push_back(target);
          endpoints.push_back(v);
        }
      }
      break;
    }
  }
  return Graph::from_edges(n, edges, false);
}

}  // namespace qprune

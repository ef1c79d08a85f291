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

#include <zlib.h>

#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "quickprune/graph.hpp"

namespace qprune {
namespace {

TEST(ParseEdgeList, PathOfThree) {
  const Graph g = parse_edge_list("0 1\n1 2");
  EXPECT_EQ(g.num_nodes(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(ParseEdgeList, CommentsAndReindexing) {
  const Graph g = parse_edge_list("# comment\n5 7");
  EXPECT_EQ(g.num_nodes(), 2u);
  EXPECT_EQ(g.num_edges(), 1u);
  ASSERT_EQ(g.labels().size(), 2u);
  EXPECT_EQ(g.labels()[0], 5);
  EXPECT_EQ(g.labels()[1], 7);
}

TEST(ParseEdgeList, DuplicateUndirectedEdgesCollapse) {
  const Graph g = parse_edge_list("0 1\n1 0\n0 1\n");
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.degree(0), 1u);
}

TEST(ParseEdgeList, DirectedKeepsBothArcs) {
  const Graph g = parse_edge_list("0 1\n1 0\n", true);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.in_neighbors(0).size(), 1u);
}

TEST(ParseEdgeList, SelfLoopsDropped) {
  const Graph g = parse_edge_list("0 0\n0 1\n");
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.degree(0), 1u);
}

TEST(ParseEdgeList, MalformedLineReportsLineNumber) {
  try {
    parse_edge_list("0 1\n\nfoo bar\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_edge_list("0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("-1 2\n"), ParseError);
}

TEST(ParseEdgeList, ReadsGzipFiles) {
  const auto path =
      std::filesystem::temp_directory_path() / "qprune_test_edges.txt.gz";
  gzFile out = gzopen(path.c_str(), "wb");
  ASSERT_NE(out, nullptr);
  const std::string text = "# gz\n10 20\n20 30\n";
  gzwrite(out, text.data(), static_cast<unsigned>(text.size()));
  gzclose(out);
  const Graph g = read_edge_list_file(path.string());
  EXPECT_EQ(g.num_nodes(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  std::filesystem::remove(path);
  EXPECT_THROW(read_edge_list_file("/nonexistent/file.txt"), IoError);
}

TEST(ParseEdgeList, RoundTripUpToIdMapping) {
  const Graph g =
      generate(GraphKind::barabasi_albert, 300, {.attach = 3}, 11);
  std::ostringstream out;
  write_edge_list(out, g);
  const Graph back = parse_edge_list(out.str());
  ASSERT_EQ(back.num_nodes(), g.num_nodes());
  ASSERT_EQ(back.num_edges(), g.num_edges());
  std::set<Edge> original;
  for (auto e : g.edges()) original.insert(e);
  std::set<Edge> mapped;
  for (auto [a, b] : back.edges()) {
    auto u = static_cast<ElementId>(back.labels()[a]);
    auto v = static_cast<ElementId>(back.labels()[b]);
    mapped.insert({std::min(u, v), std::max(u, v)});
  }
  EXPECT_EQ(mapped, original);
}

TEST(KnapsackCosts, RegularGraphHasUnitCosts) {
  std::vector<Edge> cycle;
  for (ElementId v = 0; v < 10; ++v) cycle.emplace_back(v, (v + 1) % 10);
  const Graph g = assign_knapsack_costs(Graph::from_edges(10, cycle));
  for (double c : g.costs()) EXPECT_EQ(c, 1.0);
}

TEST(KnapsackCosts, StarLeafAndCentre) {
  const Graph g = assign_knapsack_costs(generate(GraphKind::star, 6, {}, 0));
  EXPECT_EQ(g.cost(1), 1.0);
  EXPECT_DOUBLE_EQ(g.cost(0), (5.0 - 0.05) / (1.0 - 0.05));
  EXPECT_NEAR(g.cost(0), 5.2105, 1e-4);
}

TEST(KnapsackCosts, UnitModeAndFloor) {
  const Graph star = generate(GraphKind::star, 6, {}, 0);
  const Graph unit = assign_knapsack_costs(star, 0.05, CostMode::unit);
  for (double c : unit.costs()) EXPECT_EQ(c, 1.0);
  const Graph ba = assign_knapsack_costs(
      generate(GraphKind::barabasi_albert, 500, {.attach = 4}, 3));
  const auto costs = ba.costs();
  EXPECT_EQ(*std::min_element(costs.begin(), costs.end()), 1.0);
}

TEST(KnapsackCosts, IsolatedNodeIsRejected) {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}});
  EXPECT_THROW(assign_knapsack_costs(g), InputError);
}

TEST(Generate, Star) {
  const Graph g = generate(GraphKind::star, 8, {}, 0);
  EXPECT_EQ(g.degree(0), 7u);
  for (ElementId v = 1; v < 8; ++v) EXPECT_EQ(g.degree(v), 1u);
}

TEST(Generate, ErdosRenyiEdgelessAndDeterministic) {
  EXPECT_EQ(generate(GraphKind::erdos_renyi, 50, {.edge_probability = 0.0}, 1)
                .num_edges(),
            0u);
  const auto a = generate(GraphKind::erdos_renyi, 100, {.edge_probability = 0.1}, 9);
  const auto b = generate(GraphKind::erdos_renyi, 100, {.edge_probability = 0.1}, 9);
  EXPECT_EQ(a.edges(), b.edges());
  EXPECT_GT(a.num_edges(), 0u);
}

TEST(Generate, BarabasiAlbertEdgeCount) {
  const std::size_t n = 1000;
  const std::size_t m = 5;
  const Graph g = generate(GraphKind::barabasi_albert, n, {.attach = m}, 2);
  EXPECT_EQ(g.num_edges(), m * (m + 1) / 2 + m * (n - m - 1));
  for (ElementId v = 0; v < n; ++v) EXPECT_GE(g.degree(v), m);
}

TEST(Generate, InvalidParameters) {
  EXPECT_THROW(generate(GraphKind::erdos_renyi, 5, {.edge_probability = 1.5}, 0),
               InputError);
  EXPECT_THROW(generate(GraphKind::barabasi_albert, 5, {.attach = 5}, 0),
               InputError);
  EXPECT_THROW(generate(GraphKind::path, 0, {}, 0), InputError);
}

TEST(Graph, WithCostsValidates) {
  const Graph g = generate(GraphKind::path, 3, {}, 0);
  EXPECT_THROW(g.with_costs({1.0, 2.0}), InputError);
  EXPECT_THROW(g.with_costs({1.0, 0.0, 1.0}), InputError);
}

}  // namespace
}  // namespace qprune

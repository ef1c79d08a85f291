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

// Value oracles for monotone set functions. Every objective is wrapped in an
// Oracle that normalises f(empty) = 0 and counts queries; algorithms only ever
// see f through that wrapper.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quickprune/common.hpp"
#include "quickprune/graph.hpp"

namespace qprune {

enum class OracleKind { coverage, cut, influence, simgraphcut, custom };

inline const char* to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::coverage: return "coverage";
    case OracleKind::cut: return "cut";
    case OracleKind::influence: return "influence";
    case OracleKind::simgraphcut: return "simgraphcut";
    case OracleKind::custom: return "custom";
  }
  return "unknown";
}

// An objective supplies a from-scratch evaluation and an incremental State
// supporting gain(e) = f(S + e) - f(S) and insert(e). gain() of a member is 0
// and insert() of a member is a no-op.
template <class O>
concept objective = requires(const O& obj, std::span<const ElementId> set,
                             typename O::State& state,
                             const typename O::State& cstate, ElementId e) {
  { O::kind } -> std::convertible_to<OracleKind>;
  { obj.ground_size() } -> std::convertible_to<std::size_t>;
  { obj.value(set) } -> std::convertible_to<double>;
  { obj.make_state() } -> std::same_as<typename O::State>;
  { cstate.gain(e) } -> std::convertible_to<double>;
  { state.insert(e) };
  { cstate.value() } -> std::convertible_to<double>;
};

template <objective O>
class Oracle {
 public:
  using Objective = O;

  explicit Oracle(O objective)
      : objective_(std::move(objective)),
        offset_(objective_.value(std::span<const ElementId>{})) {}

  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;
  Oracle(Oracle&& other) noexcept
      : objective_(std::move(other.objective_)),
        offset_(other.offset_),
        queries_(other.queries_.load()) {}

  static constexpr OracleKind kind = O::kind;

  std::size_t ground_size() const { return objective_.ground_size(); }
  const O& objective() const noexcept { return objective_; }

  // f(S) - f(empty). One query.
  double eval(std::span<const ElementId> set) const {
    for (ElementId e : set) check_id(e);
    count();
    return objective_.value(set) - offset_;
  }

  double eval(std::initializer_list<ElementId> set) const {
    return eval(std::span<const ElementId>(set.begin(), set.size()));
  }

  // f(S + e) - f_set, where f_set is the caller's cached f(S). One query.
  double marginal(ElementId e, std::span<const ElementId> set,
                  double f_set) const {
    check_id(e);
    std::vector<ElementId> with(set.begin(), set.end());
    if (std::find(with.begin(), with.end(), e) == with.end()) with.push_back(e);
    return eval(with) - f_set;
  }

  // Incremental view of f over a growing set. gain() costs one query;
  // insert() updates the state with no additional query.
  class Accumulator {
   public:
    double gain(ElementId e) const {
      oracle_->check_id(e);
      oracle_->count();
      ++queries_;
      return state_.gain(e);
    }

    void insert(ElementId e) {
      oracle_->check_id(e);
      state_.insert(e);
    }

    double value() const { return state_.value() - oracle_->offset_; }

    // Queries issued through this accumulator (including its construction).
    std::uint64_t queries() const noexcept { return queries_; }

   private:
    friend class Oracle;
    explicit Accumulator(const Oracle& oracle)
        : oracle_(&oracle), state_(oracle.objective_.make_state()) {}

    const Oracle* oracle_;
    typename O::State state_;
    mutable std::uint64_t queries_ = 0;
  };

  Accumulator accumulator() const { return Accumulator(*this); }

  // Accumulator positioned at `set`; counts as one evaluation of f(set).
  Accumulator accumulator(std::span<const ElementId> set) const {
    Accumulator acc(*this);
    for (ElementId e : set) acc.insert(e);
    count();
    acc.queries_ = 1;
    return acc;
  }

  std::uint64_t queries() const noexcept {
    return queries_.load(std::memory_order_relaxed);
  }
  void reset_queries() noexcept { queries_.store(0); }

  void check_id(ElementId e) const {
    if (e >= objective_.ground_size())
      throw InputError("element id " + std::to_string(e) +
                       " outside ground set of size " +
                       std::to_string(objective_.ground_size()));
  }

 private:
  void count() const { queries_.fetch_add(1, std::memory_order_relaxed); }

  O objective_;
  double offset_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

// ---------------------------------------------------------------------------
// Maximum coverage: f(S) = |S union N(S)|, N = out-neighbours.

class CoverageObjective {
 public:
  static constexpr OracleKind kind = OracleKind::coverage;

  explicit CoverageObjective(std::shared_ptr<const Graph> graph)
      : graph_(std::move(graph)) {}

  std::size_t ground_size() const { return graph_->num_nodes(); }
  const Graph& graph() const { return *graph_; }

  double value(std::span<const ElementId> set) const {
    std::vector<ElementId> covered;
    for (ElementId v : set) {
      covered.push_back(v);
      const auto nbrs = graph_->neighbors(v);
      covered.insert(covered.end(), nbrs.begin(), nbrs.end());
    }
    std::sort(covered.begin(), covered.end());
    return static_cast<double>(
        std::unique(covered.begin(), covered.end()) - covered.begin());
  }

  class State {
   public:
    double gain(ElementId e) const {
      std::size_t fresh = covered_[e] ? 0 : 1;
      for (ElementId u : graph_->neighbors(e))
        if (!covered_[u] && u != e) ++fresh;
      return static_cast<double>(fresh);
    }
    void insert(ElementId e) {
      mark(e);
      for (ElementId u : graph_->neighbors(e)) mark(u);
    }
    double value() const { return static_cast<double>(count_); }

   private:
    friend class CoverageObjective;
    explicit State(const Graph* graph)
        : graph_(graph), covered_(graph->num_nodes(), 0) {}
    void mark(ElementId v) {
      if (!covered_[v]) {
        covered_[v] = 1;
        ++count_;
      }
    }

    const Graph* graph_;
    std::vector<char> covered_;
    std::size_t count_ = 0;
  };

  State make_state() const { return State(graph_.get()); }

 private:
  std::shared_ptr<const Graph> graph_;
};

// ---------------------------------------------------------------------------
// Cut: number of arcs (u, v) with v in S and u outside S. For undirected
// graphs this is the number of edges with exactly one endpoint in S. The cut
// function is submodular but not monotone (f(V) = 0).

class CutObjective {
 public:
  static constexpr OracleKind kind = OracleKind::cut;

  explicit CutObjective(std::shared_ptr<const Graph> graph)
      : graph_(std::move(graph)) {}

  std::size_t ground_size() const { return graph_->num_nodes(); }
  const Graph& graph() const { return *graph_; }

  double value(std::span<const ElementId> set) const {
    std::vector<ElementId> members(set.begin(), set.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto inside = [&](ElementId v) {
      return std::binary_search(members.begin(), members.end(), v);
    };
    std::size_t cut = 0;
    for (ElementId v : members)
      for (ElementId u : graph_->in_neighbors(v))
        if (!inside(u)) ++cut;
    return static_cast<double>(cut);
  }

  class State {
   public:
    double gain(ElementId e) const {
      if (in_set_[e]) return 0.0;
      // Arcs into e from outside become cut; arcs from e into S stop being cut.
      long long delta = 0;
      for (ElementId u : graph_->in_neighbors(e)) delta += in_set_[u] ? 0 : 1;
      for (ElementId v : graph_->neighbors(e)) delta -= in_set_[v] ? 1 : 0;
      return static_cast<double>(delta);
    }
    void insert(ElementId e) {
      if (in_set_[e]) return;
      value_ += gain(e);
      in_set_[e] = 1;
    }
    double value() const { return value_; }

   private:
    friend class CutObjective;
    explicit State(const Graph* graph)
        : graph_(graph), in_set_(graph->num_nodes(), 0) {}

    const Graph* graph_;
    std::vector<char> in_set_;
    double value_ = 0.0;
  };

  State make_state() const { return State(graph_.get()); }

 private:
  std::shared_ptr<const Graph> graph_;
};

// ---------------------------------------------------------------------------
// Independent-cascade influence, estimated over a frozen pool of live-edge
// samples so that f is a deterministic function of S.

class LiveEdgeSamplePool {
 public:
  // Each undirected edge (or directed arc) is live in a sample independently
  // with probability p. A live undirected edge propagates both ways.
  LiveEdgeSamplePool(const Graph& graph, double p, std::size_t samples,
                     std::uint64_t seed)
      : n_(graph.num_nodes()), p_(p), seed_(seed) {
    if (!(p >= 0.0 && p <= 1.0))
      throw InputError("edge probability must lie in [0, 1]");
    if (samples == 0) throw InputError("sample count must be positive");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution live(p);
    const auto edges = graph.edges();
    std::vector<Edge> arcs;
    samples_.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
      arcs.clear();
      for (auto [u, v] : edges) {
        if (!live(rng)) continue;
        arcs.emplace_back(u, v);
        if (!graph.directed()) arcs.emplace_back(v, u);
      }
      std::sort(arcs.begin(), arcs.end());
      Sample sample;
      sample.offsets.assign(n_ + 1, 0);
      for (auto [u, v] : arcs) ++sample.offsets[u + 1];
      for (std::size_t i = 0; i < n_; ++i)
        sample.offsets[i + 1] += sample.offsets[i];
      sample.targets.reserve(arcs.size());
      for (auto [u, v] : arcs) sample.targets.push_back(v);
      samples_.push_back(std::move(sample));
    }
  }

  std::size_t num_nodes() const noexcept { return n_; }
  std::size_t num_samples() const noexcept { return samples_.size(); }
  double probability() const noexcept { return p_; }
  std::uint64_t seed() const noexcept { return seed_; }

  std::span<const ElementId> live_out(std::size_t sample, ElementId v) const {
    const Sample& s = samples_[sample];
    return {s.targets.data() + s.offsets[v],
            s.targets.data() + s.offsets[v + 1]};
  }

  std::size_t live_arcs(std::size_t sample) const {
    return samples_[sample].targets.size();
  }

 private:
  struct Sample {
    std::vector<std::uint64_t> offsets;
    std::vector<ElementId> targets;
  };

  std::size_t n_;
  double p_;
  std::uint64_t seed_;
  std::vector<Sample> samples_;
};

class InfluenceObjective {
 public:
  static constexpr OracleKind kind = OracleKind::influence;

  explicit InfluenceObjective(std::shared_ptr<const LiveEdgeSamplePool> pool)
      : pool_(std::move(pool)) {}

  std::size_t ground_size() const { return pool_->num_nodes(); }
  const LiveEdgeSamplePool& pool() const { return *pool_; }

  // Mean number of nodes reachable from S over the pooled samples.
  double value(std::span<const ElementId> set) const {
    const std::size_t n = pool_->num_nodes();
    std::vector<std::uint32_t> mark(n, 0);
    std::vector<ElementId> queue;
    std::uint64_t reached = 0;
    for (std::size_t s = 0; s < pool_->num_samples(); ++s) {
      const auto stamp = static_cast<std::uint32_t>(s + 1);
      queue.clear();
      for (ElementId v : set)
        if (mark[v] != stamp) {
          mark[v] = stamp;
          queue.push_back(v);
        }
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (ElementId w : pool_->live_out(s, queue[head]))
          if (mark[w] != stamp) {
            mark[w] = stamp;
            queue.push_back(w);
          }
      reached += queue.size();
    }
    return static_cast<double>(reached) /
           static_cast<double>(pool_->num_samples());
  }

  class State {
   public:
    double gain(ElementId e) const {
      std::uint64_t fresh = 0;
      for (std::size_t s = 0; s < pool_->num_samples(); ++s)
        if (!visited(s, e)) fresh += explore(s, e, false);
      return static_cast<double>(fresh) /
             static_cast<double>(pool_->num_samples());
    }

    void insert(ElementId e) {
      for (std::size_t s = 0; s < pool_->num_samples(); ++s)
        if (!visited(s, e)) reached_ += explore(s, e, true);
    }

    double value() const {
      return static_cast<double>(reached_) /
             static_cast<double>(pool_->num_samples());
    }

   private:
    friend class InfluenceObjective;
    explicit State(const LiveEdgeSamplePool* pool)
        : pool_(pool),
          visited_(pool->num_nodes() * pool->num_samples(), 0),
          stamp_(pool->num_nodes(), 0) {}

    bool visited(std::size_t s, ElementId v) const {
      return visited_[s * pool_->num_nodes() + v] != 0;
    }

    // Counts nodes reachable from `root` in sample s that are not yet
    // visited; marks them visited when `commit` is set.
    std::uint64_t explore(std::size_t s, ElementId root, bool commit) const {
      if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
      }
      queue_.clear();
      queue_.push_back(root);
      stamp_[root] = epoch_;
      for (std::size_t head = 0; head < queue_.size(); ++head)
        for (ElementId w : pool_->live_out(s, queue_[head]))
          if (stamp_[w] != epoch_ && !visited(s, w)) {
            stamp_[w] = epoch_;
            queue_.push_back(w);
          }
      if (commit)
        for (ElementId v : queue_) visited_[s * pool_->num_nodes() + v] = 1;
      return queue_.size();
    }

    const LiveEdgeSamplePool* pool_;
    mutable std::vector<char> visited_;
    std::uint64_t reached_ = 0;
    mutable std::vector<std::uint32_t> stamp_;
    mutable std::uint32_t epoch_ = 0;
    mutable std::vector<ElementId> queue_;
  };

  State make_state() const { return State(pool_.get()); }

 private:
  std::shared_ptr<const LiveEdgeSamplePool> pool_;
};

// ---------------------------------------------------------------------------
// Retrieval objective over a similarity kernel:
//   f(S) = lambda * sum_{q in Q} sum_{j in S} s(q, j) - sum_{i in S} sum_{j in S} s(i, j)
// The second sum runs over ordered pairs including i = j. Ground-set ids index
// the candidate list (kernel rows that are not queries), in row order.

class SimilarityKernel {
 public:
  SimilarityKernel(std::size_t size, std::vector<double> matrix,
                   std::vector<ElementId> queries, double lambda = 10.0)
      : size_(size),
        matrix_(std::move(matrix)),
        queries_(std::move(queries)),
        lambda_(lambda) {
    if (matrix_.size() != size_ * size_)
      throw InputError("similarity matrix must be square");
    if (!(lambda_ >= 2.0)) throw InputError("lambda must be >= 2");
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) {
        const double s = at(i, j);
        if (!(s >= -1.0 && s <= 1.0))
          throw InputError("similarity outside [-1, 1]");
        if (std::abs(s - at(j, i)) > 1e-9)
          throw InputError("similarity matrix is not symmetric");
      }
    std::vector<char> is_query(size_, 0);
    for (ElementId q : queries_) {
      if (q >= size_) throw InputError("query id out of range");
      is_query[q] = 1;
    }
    for (ElementId i = 0; i < size_; ++i)
      if (!is_query[i]) candidates_.push_back(i);
  }

  std::size_t size() const noexcept { return size_; }
  double lambda() const noexcept { return lambda_; }
  double at(std::size_t i, std::size_t j) const {
    return matrix_[i * size_ + j];
  }
  std::span<const ElementId> queries() const noexcept { return queries_; }
  std::span<const ElementId> candidates() const noexcept { return candidates_; }

  SimilarityKernel with_lambda(double lambda) const {
    return SimilarityKernel(size_, matrix_, queries_, lambda);
  }

 private:
  std::size_t size_;
  std::vector<double> matrix_;
  std::vector<ElementId> queries_;
  std::vector<ElementId> candidates_;
  double lambda_;
};

// Row-major CSV of floats (one kernel row per line) plus a file of query row
// ids, one per line.
inline SimilarityKernel load_similarity_kernel(const std::string& csv_path,
                                               const std::string& query_path,
                                               double lambda = 10.0) {
  std::ifstream csv(csv_path);
  if (!csv) throw IoError("cannot open " + csv_path);
  std::vector<double> matrix;
  std::size_t rows = 0;
  std::size_t width = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(csv, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    std::stringstream row(line);
    std::string cell;
    std::size_t cols = 0;
    while (std::getline(row, cell, ',')) {
      const auto token = detail::trim(cell);
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() ||
          token.empty())
        throw ParseError(line_no, "not a number: '" + std::string(token) + "'");
      matrix.push_back(value);
      ++cols;
    }
    if (rows == 0) width = cols;
    if (cols != width) throw ParseError(line_no, "ragged similarity row");
    ++rows;
  }
  if (rows != width) throw ParseError(line_no, "similarity matrix not square");

  std::ifstream qin(query_path);
  if (!qin) throw IoError("cannot open " + query_path);
  std::vector<ElementId> queries;
  line_no = 0;
  while (std::getline(qin, line)) {
    ++line_no;
    const auto token = detail::trim(line);
    if (token.empty() || token.front() == '#') continue;
    std::int64_t id = 0;
    if (!detail::parse_label(token, id))
      throw ParseError(line_no, "bad query id");
    queries.push_back(static_cast<ElementId>(id));
  }
  return SimilarityKernel(rows, std::move(matrix), std::move(queries), lambda);
}

class SimGraphCutObjective {
 public:
  static constexpr OracleKind kind = OracleKind::simgraphcut;

  explicit SimGraphCutObjective(std::shared_ptr<const SimilarityKernel> kernel)
      : kernel_(std::move(kernel)) {
    const auto cands = kernel_->candidates();
    query_affinity_.resize(cands.size(), 0.0);
    for (std::size_t c = 0; c < cands.size(); ++c)
      for (ElementId q : kernel_->queries())
        query_affinity_[c] += kernel_->at(q, cands[c]);
  }

  std::size_t ground_size() const { return kernel_->candidates().size(); }
  const SimilarityKernel& kernel() const { return *kernel_; }

  double value(std::span<const ElementId> set) const {
    std::vector<ElementId> members(set.begin(), set.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    double relevance = 0.0;
    double redundancy = 0.0;
    for (ElementId i : members) {
      relevance += query_affinity_[i];
      for (ElementId j : members) redundancy += sim(i, j);
    }
    return kernel_->lambda() * relevance - redundancy;
  }

  class State {
   public:
    double gain(ElementId e) const {
      if (in_set_[e]) return 0.0;
      return owner_->kernel_->lambda() * owner_->query_affinity_[e] -
             2.0 * sim_to_set_[e] - owner_->sim(e, e);
    }
    void insert(ElementId e) {
      if (in_set_[e]) return;
      value_ += gain(e);
      in_set_[e] = 1;
      for (ElementId c = 0; c < sim_to_set_.size(); ++c)
        sim_to_set_[c] += owner_->sim(c, e);
    }
    double value() const { return value_; }

   private:
    friend class SimGraphCutObjective;
    explicit State(const SimGraphCutObjective* owner)
        : owner_(owner),
          in_set_(owner->ground_size(), 0),
          sim_to_set_(owner->ground_size(), 0.0) {}

    const SimGraphCutObjective* owner_;
    std::vector<char> in_set_;
    std::vector<double> sim_to_set_;
    double value_ = 0.0;
  };

  State make_state() const { return State(this); }

 private:
  double sim(ElementId a, ElementId b) const {
    const auto cands = kernel_->candidates();
    return kernel_->at(cands[a], cands[b]);
  }

  std::shared_ptr<const SimilarityKernel> kernel_;
  std::vector<double> query_affinity_;
};

// ---------------------------------------------------------------------------
// Arbitrary set function given as a callable. The incremental state re-evaluates
// the callable on S + e, so it is only suitable for small instances.

class FunctionObjective {
 public:
  static constexpr OracleKind kind = OracleKind::custom;
  using Function = std::function<double(std::span<const ElementId>)>;

  FunctionObjective(std::size_t ground_size, Function fn)
      : ground_size_(ground_size), fn_(std::move(fn)) {}

  std::size_t ground_size() const { return ground_size_; }
  double value(std::span<const ElementId> set) const { return fn_(set); }

  class State {
   public:
    double gain(ElementId e) const {
      if (in_set_[e]) return 0.0;
      std::vector<ElementId> with = members_;
      with.push_back(e);
      return owner_->fn_(with) - value_;
    }
    void insert(ElementId e) {
      if (in_set_[e]) return;
      in_set_[e] = 1;
      members_.push_back(e);
      value_ = owner_->fn_(members_);
    }
    double value() const { return value_; }

   private:
    friend class FunctionObjective;
    explicit State(const FunctionObjective* owner)
        : owner_(owner),
          in_set_(owner->ground_size_, 0),
          value_(owner->fn_(std::span<const ElementId>{})) {}

    const FunctionObjective* owner_;
    std::vector<char> in_set_;
    std::vector<ElementId> members_;
    double value_;
  };

  State make_state() const { return State(this); }

 private:
  std::size_t ground_size_;
  Function fn_;
};

using CoverageOracle = Oracle<CoverageObjective>;
using CutOracle = Oracle<CutObjective>;
using InfluenceOracle = Oracle<InfluenceObjective>;
using SimGraphCutOracle = Oracle<SimGraphCutObjective>;
using FunctionOracle = Oracle<FunctionObjective>;

inline CoverageOracle make_coverage_oracle(std::shared_ptr<const Graph> g) {
  return CoverageOracle(CoverageObjective(std::move(g)));
}
inline CutOracle make_cut_oracle(std::shared_ptr<const Graph> g) {
  return CutOracle(CutObjective(std::move(g)));
}
inline InfluenceOracle make_influence_oracle(const Graph& g, double p,
                                             std::size_t samples,
                                             std::uint64_t seed) {
  return InfluenceOracle(InfluenceObjective(
      std::make_shared<const LiveEdgeSamplePool>(g, p, samples, seed)));
}
inline SimGraphCutOracle make_simgraphcut_oracle(SimilarityKernel kernel) {
  return SimGraphCutOracle(SimGraphCutObjective(
      std::make_shared<const SimilarityKernel>(std::move(kernel))));
}
inline FunctionOracle make_function_oracle(std::size_t n,
                                           FunctionObjective::Function fn) {
  return FunctionOracle(FunctionObjective(n, std::move(fn)));
}

// Submodularity ratio by exhaustive search over a small set U:
//   min over S subset T subset U, x in U \ T with gain(x|T) > 0 of
//   gain(x|S) / gain(x|T), clamped to [0, 1].
// Evaluates f on all 2^|U| subsets (that many queries). Gains that agree to
// within a relative 1e-9 count as equal so rounding in real-valued
// objectives cannot report a spurious ratio below 1.
template <objective O>
double estimate_gamma(const Oracle<O>& oracle, std::span<const ElementId> set) {
  constexpr std::size_t kMaxSize = 12;
  if (set.size() > kMaxSize)
    throw InputError("estimate_gamma supports at most 12 elements, got " +
                     std::to_string(set.size()));
  const std::size_t u = set.size();
  const std::size_t subsets = std::size_t{1} << u;
  std::vector<double> f(subsets);
  std::vector<ElementId> members;
  double scale = 1.0;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    members.clear();
    for (std::size_t i = 0; i < u; ++i)
      if (mask >> i & 1) members.push_back(set[i]);
    f[mask] = oracle.eval(members);
    scale = std::max(scale, std::abs(f[mask]));
  }
  const double tolerance = 1e-9 * scale;

  double gamma = 1.0;
  for (std::size_t x = 0; x < u; ++x) {
    const std::size_t xbit = std::size_t{1} << x;
    for (std::size_t t = 0; t < subsets; ++t) {
      if (t & xbit) continue;
      const double gain_t = f[t | xbit] - f[t];
      if (!(gain_t > tolerance)) continue;
      for (std::size_t s = t;; s = (s - 1) & t) {
        const double gain_s = f[s | xbit] - f[s];
        if (gain_s < gain_t - tolerance)
          gamma = std::min(gamma, gain_s / gain_t);
        if (s == 0) break;
      }
    }
  }
  return std::clamp(gamma, 0.0, 1.0);
}

}  // namespace qprune

// Copyright 2026 The pcslpa Authors
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

#ifndef PCSLPA_CONSTRAINTS_H_
#define PCSLPA_CONSTRAINTS_H_

#include <compare>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pcslpa/cover.h"
#include "pcslpa/graph.h"
#include "pcslpa/rng.h"

namespace pcslpa {

// Unordered node pair stored low id first.
struct NodePair {
  NodeId first;
  NodeId second;

  static NodePair Of(NodeId u, NodeId v) {
    return u < v ? NodePair{u, v} : NodePair{v, u};
  }
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

enum class Relation { kMustLink, kCannotLink };

// Must-link and cannot-link pair sets. Every inserted pair counts as one
// oracle query, so queries_used() >= must_links().size() +
// cannot_links().size() always holds.
class ConstraintStore {
 public:
  ConstraintStore() = default;

  // Rejects u == v, negative ids, and pairs that are already stored
  // (either relation).
  absl::Status Insert(NodeId u, NodeId v, Relation relation);

  std::optional<Relation> Find(NodeId u, NodeId v) const;
  bool Contains(NodeId u, NodeId v) const { return Find(u, v).has_value(); }

  const std::set<NodePair>& must_links() const { return must_links_; }
  const std::set<NodePair>& cannot_links() const { return cannot_links_; }
  int64_t size() const {
    return static_cast<int64_t>(must_links_.size() + cannot_links_.size());
  }
  bool empty() const { return size() == 0; }
  int64_t queries_used() const { return queries_used_; }

  // Largest node id referenced plus one.
  NodeId node_bound() const { return node_bound_; }

 private:
  std::set<NodePair> must_links_;
  std::set<NodePair> cannot_links_;
  int64_t queries_used_ = 0;
  NodeId node_bound_ = 0;
};

// Per-node partner lists over a fixed node range for fast lookups during
// propagation.
class ConstraintIndex {
 public:
  // Fails if the store references a node >= num_nodes.
  static absl::StatusOr<ConstraintIndex> Build(const ConstraintStore& store,
                                               NodeId num_nodes);

  std::span<const NodeId> MustLinkPartners(NodeId v) const {
    return must_[v];
  }
  std::span<const NodeId> CannotLinkPartners(NodeId v) const {
    return cannot_[v];
  }
  bool IsCannotLink(NodeId u, NodeId v) const;

 private:
  std::vector<std::vector<NodeId>> must_;
  std::vector<std::vector<NodeId>> cannot_;
};

// Source of supervision.
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual absl::StatusOr<Relation> Answer(NodeId u, NodeId v) const = 0;
  // Nodes the oracle can answer about, ascending.
  virtual std::vector<NodeId> EligibleNodes() const = 0;
};

// Must-link iff the nodes share at least one ground-truth community.
absl::StatusOr<Relation> OracleAnswer(const Cover& truth, NodeId u, NodeId v);

class GroundTruthOracle : public Oracle {
 public:
  explicit GroundTruthOracle(const Cover& truth) : truth_(truth) {}
  absl::StatusOr<Relation> Answer(NodeId u, NodeId v) const override {
    return OracleAnswer(truth_, u, v);
  }
  std::vector<NodeId> EligibleNodes() const override {
    return truth_.CoveredNodes();
  }

 private:
  const Cover& truth_;
};

// Query budget as a fraction of all node pairs.
struct Budget {
  double pct = 0.0;
  int64_t max_queries = 0;

  // max_queries = floor(pct * n (n - 1) / 2).
  static absl::StatusOr<Budget> ForPairs(double pct, NodeId num_nodes);
};

// Every pair (b, c) with (a, b) and (a, c) must-linked for some a and no
// stored relation between b and c. Sorted, duplicate free.
std::vector<NodePair> FindForbiddenTriads(const ConstraintStore& store);

struct SelectionOptions {
  // Share of the budget spent on the first random batch. Later random
  // batches, taken whenever triad closure runs dry, spend the same share of
  // the remaining budget (at least one query).
  double init_fraction = 0.5;
};

struct SelectionReport {
  int64_t random_queries = 0;
  int64_t triad_queries = 0;
  int64_t rounds = 0;
  // True when every eligible pair was queried before the budget ran out.
  bool pairs_exhausted = false;
};

struct Selection {
  ConstraintStore store;
  SelectionReport report;
  // Pairs in the order they were queried.
  std::vector<NodePair> query_log;
};

// Random seeding followed by forbidden-triad closure, alternating until the
// budget is spent or no eligible pair is left. Only nodes below
// g.num_nodes() that the oracle lists as eligible are queried.
absl::StatusOr<Selection> SelectConstraints(const Graph& g,
                                            const Oracle& oracle,
                                            const Budget& budget,
                                            const SelectionOptions& options,
                                            Rng& rng);

// Constraint file: one "u v ML|CL" line per pair, canonical order, using
// external node tokens.
void WriteConstraints(const ConstraintStore& store, const IdMap& ids,
                      std::ostream& out);
absl::StatusOr<ConstraintStore> LoadConstraints(std::istream& in,
                                                const IdMap& ids);
absl::StatusOr<ConstraintStore> LoadConstraintsFile(const std::string& path,
                                                    const IdMap& ids);

}  // namespace pcslpa

#endif  // PCSLPA_CONSTRAINTS_H_

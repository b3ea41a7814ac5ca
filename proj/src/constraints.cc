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

#include "pcslpa/constraints.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <utility>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"

namespace pcslpa {

absl::Status ConstraintStore::Insert(NodeId u, NodeId v, Relation relation) {
  if (u < 0 || v < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("negative node id in pair (", u, ", ", v, ")"));
  }
  if (u == v) {
    return absl::InvalidArgumentError(
        absl::StrCat("constraint pair (", u, ", ", v, ") is a self pair"));
  }
  const NodePair p = NodePair::Of(u, v);
  if (must_links_.contains(p) || cannot_links_.contains(p)) {
    return absl::AlreadyExistsError(
        absl::StrCat("pair (", p.first, ", ", p.second, ") already stored"));
  }
  (relation == Relation::kMustLink ? must_links_ : cannot_links_).insert(p);
  ++queries_used_;
  node_bound_ = std::max(node_bound_, p.second + 1);
  return absl::OkStatus();
}

std::optional<Relation> ConstraintStore::Find(NodeId u, NodeId v) const {
  const NodePair p = NodePair::Of(u, v);
  if (must_links_.contains(p)) return Relation::kMustLink;
  if (cannot_links_.contains(p)) return Relation::kCannotLink;
  return std::nullopt;
}

absl::StatusOr<ConstraintIndex> ConstraintIndex::Build(
    const ConstraintStore& store, NodeId num_nodes) {
  if (store.node_bound() > num_nodes) {
    return absl::OutOfRangeError(
        absl::StrCat("constraints reference node ", store.node_bound() - 1,
                     " but the graph has ", num_nodes, " nodes"));
  }
  ConstraintIndex index;
  index.must_.resize(num_nodes);
  index.cannot_.resize(num_nodes);
  for (const NodePair& p : store.must_links()) {
    index.must_[p.first].push_back(p.second);
    index.must_[p.second].push_back(p.first);
  }
  for (const NodePair& p : store.cannot_links()) {
    index.cannot_[p.first].push_back(p.second);
    index.cannot_[p.second].push_back(p.first);
  }
  for (auto& list : index.must_) std::sort(list.begin(), list.end());
  for (auto& list : index.cannot_) std::sort(list.begin(), list.end());
  return index;
}

bool ConstraintIndex::IsCannotLink(NodeId u, NodeId v) const {
  if (u < 0 || u >= static_cast<NodeId>(cannot_.size())) return false;
  return std::binary_search(cannot_[u].begin(), cannot_[u].end(), v);
}

absl::StatusOr<Relation> OracleAnswer(const Cover& truth, NodeId u, NodeId v) {
  if (u == v) {
    return absl::InvalidArgumentError(
        absl::StrCat("oracle asked about self pair (", u, ", ", v, ")"));
  }
  const auto mu = truth.Memberships(u);
  const auto mv = truth.Memberships(v);
  if (mu.empty() || mv.empty()) {
    return absl::FailedPreconditionError(absl::StrCat(
        "node ", mu.empty() ? u : v, " has no ground-truth community"));
  }
  auto a = mu.begin();
  auto b = mv.begin();
  while (a != mu.end() && b != mv.end()) {
    if (*a == *b) return Relation::kMustLink;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return Relation::kCannotLink;
}

absl::StatusOr<Budget> Budget::ForPairs(double pct, NodeId num_nodes) {
  if (!(pct >= 0.0 && pct <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("budget fraction must lie in [0, 1], got ", pct));
  }
  if (num_nodes < 0) return absl::InvalidArgumentError("negative node count");
  const int64_t n = num_nodes;
  const int64_t pairs = n * (n - 1) / 2;
  // The relative slack absorbs representation error in decimal fractions
  // such as 0.29 * 100, which evaluates to 28.999999999999996.
  const double raw = pct * static_cast<double>(pairs);
  const int64_t max_queries =
      std::min<int64_t>(pairs, static_cast<int64_t>(std::floor(raw * (1.0 + 1e-12))));
  return Budget{pct, max_queries};
}

std::vector<NodePair> FindForbiddenTriads(const ConstraintStore& store) {
  std::map<NodeId, std::vector<NodeId>> partners;
  for (const NodePair& p : store.must_links()) {
    partners[p.first].push_back(p.second);
    partners[p.second].push_back(p.first);
  }
  std::vector<NodePair> open;
  for (auto& [hub, list] : partners) {
    std::sort(list.begin(), list.end());
    for (size_t i = 0; i < list.size(); ++i) {
      for (size_t j = i + 1; j < list.size(); ++j) {
        if (!store.Contains(list[i], list[j])) {
          open.push_back(NodePair{list[i], list[j]});
        }
      }
    }
  }
  std::sort(open.begin(), open.end());
  open.erase(std::unique(open.begin(), open.end()), open.end());
  return open;
}

namespace {

class Selector {
 public:
  Selector(const Oracle& oracle, std::vector<NodeId> eligible,
           int64_t max_queries, Rng& rng)
      : oracle_(oracle),
        eligible_(std::move(eligible)),
        max_queries_(max_queries),
        rng_(rng) {
    const int64_t e = static_cast<int64_t>(eligible_.size());
    total_pairs_ = e * (e - 1) / 2;
  }

  int64_t remaining() const { return max_queries_ - sel_.store.queries_used(); }
  int64_t unqueried() const { return total_pairs_ - sel_.store.size(); }

  absl::Status Query(NodePair p, bool from_triad) {
    auto answer = oracle_.Answer(p.first, p.second);
    if (!answer.ok()) return answer.status();
    if (absl::Status s = sel_.store.Insert(p.first, p.second, *answer);
        !s.ok()) {
      return s;
    }
    sel_.query_log.push_back(p);
    ++(from_triad ? sel_.report.triad_queries : sel_.report.random_queries);
    return absl::OkStatus();
  }

  // Queries `want` distinct random eligible pairs not yet stored (fewer if
  // the eligible pairs run out).
  absl::Status RandomBatch(int64_t want) {
    want = std::min({want, remaining(), unqueried()});
    if (want <= 0) return absl::OkStatus();
    if (2 * want > unqueried()) {
      // Dense request: enumerate the complement and shuffle it.
      std::vector<NodePair> free_pairs;
      free_pairs.reserve(unqueried());
      for (size_t i = 0; i < eligible_.size(); ++i) {
        for (size_t j = i + 1; j < eligible_.size(); ++j) {
          if (!sel_.store.Contains(eligible_[i], eligible_[j])) {
            free_pairs.push_back(NodePair::Of(eligible_[i], eligible_[j]));
          }
        }
      }
      std::shuffle(free_pairs.begin(), free_pairs.end(), rng_);
      for (int64_t k = 0; k < want; ++k) {
        if (absl::Status s = Query(free_pairs[k], false); !s.ok()) return s;
      }
      return absl::OkStatus();
    }
    std::uniform_int_distribution<size_t> pick(0, eligible_.size() - 1);
    for (int64_t got = 0; got < want;) {
      const NodeId a = eligible_[pick(rng_)];
      const NodeId b = eligible_[pick(rng_)];
      if (a == b || sel_.store.Contains(a, b)) continue;
      if (absl::Status s = Query(NodePair::Of(a, b), false); !s.ok()) return s;
      ++got;
    }
    return absl::OkStatus();
  }

  // Resolves open triads until none remain or the budget is spent.
  absl::Status CloseTriads() {
    while (remaining() > 0) {
      const std::vector<NodePair> open = FindForbiddenTriads(sel_.store);
      if (open.empty()) break;
      for (const NodePair& p : open) {
        if (remaining() == 0) break;
        if (absl::Status s = Query(p, true); !s.ok()) return s;
      }
    }
    return absl::OkStatus();
  }

  Selection& selection() { return sel_; }

 private:
  const Oracle& oracle_;
  std::vector<NodeId> eligible_;
  int64_t max_queries_;
  int64_t total_pairs_ = 0;
  Rng& rng_;
  Selection sel_;
};

}  // namespace

absl::StatusOr<Selection> SelectConstraints(const Graph& g,
                                            const Oracle& oracle,
                                            const Budget& budget,
                                            const SelectionOptions& options,
                                            Rng& rng) {
  if (!(options.init_fraction > 0.0 && options.init_fraction <= 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "init_fraction must lie in (0, 1], got ", options.init_fraction));
  }
  std::vector<NodeId> eligible = oracle.EligibleNodes();
  std::erase_if(eligible, [&g](NodeId v) { return v < 0 || v >= g.num_nodes(); });

  Selector selector(oracle, std::move(eligible), budget.max_queries, rng);
  int64_t batch = static_cast<int64_t>(
      std::floor(options.init_fraction * static_cast<double>(budget.max_queries)));
  while (selector.remaining() > 0 && selector.unqueried() > 0) {
    ++selector.selection().report.rounds;
    if (absl::Status s = selector.RandomBatch(batch); !s.ok()) return s;
    if (absl::Status s = selector.CloseTriads(); !s.ok()) return s;
    batch = std::max<int64_t>(
        1, static_cast<int64_t>(std::floor(
               options.init_fraction *
               static_cast<double>(selector.remaining()))));
  }
  selector.selection().report.pairs_exhausted =
      selector.unqueried() == 0 && selector.remaining() > 0;
  return std::move(selector.selection());
}

void WriteConstraints(const ConstraintStore& store, const IdMap& ids,
                      std::ostream& out) {
  std::vector<std::pair<NodePair, Relation>> all;
  all.reserve(store.size());
  for (const NodePair& p : store.must_links()) {
    all.emplace_back(p, Relation::kMustLink);
  }
  for (const NodePair& p : store.cannot_links()) {
    all.emplace_back(p, Relation::kCannotLink);
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [p, rel] : all) {
    out << ids.External(p.first) << ' ' << ids.External(p.second) << ' '
        << (rel == Relation::kMustLink ? "ML" : "CL") << '\n';
  }
}

absl::StatusOr<ConstraintStore> LoadConstraints(std::istream& in,
                                                const IdMap& ids) {
  ConstraintStore store;
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const absl::string_view stripped = absl::StripAsciiWhitespace(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    std::vector<absl::string_view> tokens =
        absl::StrSplit(stripped, absl::ByAnyChar(" \t"), absl::SkipEmpty());
    if (tokens.size() != 3 || (tokens[2] != "ML" && tokens[2] != "CL")) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_number, ": expected 'u v ML|CL'"));
    }
    const auto u = ids.Find(tokens[0]);
    const auto v = ids.Find(tokens[1]);
    if (!u.has_value() || !v.has_value()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_number, ": unknown node token '",
          u.has_value() ? tokens[1] : tokens[0], "'"));
    }
    const Relation rel =
        tokens[2] == "ML" ? Relation::kMustLink : Relation::kCannotLink;
    if (absl::Status s = store.Insert(*u, *v, rel); !s.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_number, ": ", s.message()));
    }
  }
  return store;
}

absl::StatusOr<ConstraintStore> LoadConstraintsFile(const std::string& path,
                                                    const IdMap& ids) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  auto store = LoadConstraints(in, ids);
  if (!store.ok()) {
    return absl::Status(store.status().code(),
                        absl::StrCat(path, ": ", store.status().message()));
  }
  return store;
}

}  // namespace pcslpa

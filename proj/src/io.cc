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

#include "pcslpa/io.h"

#include <algorithm>
#include <fstream>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"

namespace pcslpa {
namespace {

bool IsSkippable(absl::string_view line) {
  const absl::string_view stripped = absl::StripLeadingAsciiWhitespace(line);
  return stripped.empty() || stripped.front() == '#';
}

std::vector<absl::string_view> Tokens(absl::string_view line) {
  return absl::StrSplit(line, absl::ByAnyChar(" \t\r\v\f"),
                        absl::SkipEmpty());
}

absl::Status WithPath(const absl::Status& status, const std::string& path) {
  return absl::Status(status.code(), absl::StrCat(path, ": ", status.message()));
}

}  // namespace

absl::StatusOr<LoadedGraph> LoadEdgeList(std::istream& in) {
  LoadedGraph loaded;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsSkippable(line)) continue;
    const auto tokens = Tokens(line);
    if (tokens.size() != 2) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_number, ": expected 2 node tokens, got ",
                       tokens.size()));
    }
    const NodeId u = loaded.ids.Intern(tokens[0]);
    const NodeId v = loaded.ids.Intern(tokens[1]);
    edges.emplace_back(u, v);
  }
  if (edges.empty()) return absl::InvalidArgumentError("empty edge list");
  auto graph = Graph::FromEdges(loaded.ids.size(), edges,
                                &loaded.dropped_self_loops,
                                &loaded.dropped_duplicates);
  if (!graph.ok()) return graph.status();
  loaded.graph = *std::move(graph);
  return loaded;
}

absl::StatusOr<LoadedGraph> LoadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  auto loaded = LoadEdgeList(in);
  if (!loaded.ok()) return WithPath(loaded.status(), path);
  return loaded;
}

void WriteEdgeList(const Graph& g, const IdMap& ids, std::ostream& out) {
  for (auto [u, v] : g.Edges()) {
    out << ids.External(u) << ' ' << ids.External(v) << '\n';
  }
}

absl::StatusOr<Cover> LoadCover(std::istream& in, const IdMap& ids,
                                const CoverLoadOptions& options,
                                CoverLoadStats* stats) {
  CoverLoadStats local;
  std::vector<Cover::Community> communities;
  std::string line;
  while (std::getline(in, line)) {
    if (IsSkippable(line)) continue;
    ++local.lines;
    Cover::Community community;
    for (absl::string_view token : Tokens(line)) {
      const auto id = ids.Find(token);
      if (!id.has_value()) {
        if (options.unknown_tokens == UnknownTokenPolicy::kStrict) {
          return absl::InvalidArgumentError(absl::StrCat(
              "line ", local.lines, ": unknown node token '", token, "'"));
        }
        ++local.skipped_tokens;
        continue;
      }
      community.push_back(*id);
    }
    std::sort(community.begin(), community.end());
    community.erase(std::unique(community.begin(), community.end()),
                    community.end());
    if (static_cast<int64_t>(community.size()) < options.min_size ||
        community.empty()) {
      ++local.dropped_small;
      continue;
    }
    communities.push_back(std::move(community));
  }
  if (local.lines == 0) return absl::InvalidArgumentError("no communities");
  const int64_t before = static_cast<int64_t>(communities.size());
  Cover cover(std::move(communities));
  local.collapsed_duplicates = before - cover.size();
  if (stats != nullptr) *stats = local;
  return cover;
}

absl::StatusOr<Cover> LoadCoverFile(const std::string& path, const IdMap& ids,
                                    const CoverLoadOptions& options,
                                    CoverLoadStats* stats) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  auto cover = LoadCover(in, ids, options, stats);
  if (!cover.ok()) return WithPath(cover.status(), path);
  return cover;
}

absl::StatusOr<Cover> LoadCoverInterning(std::istream& in, IdMap& ids,
                                         int64_t min_size) {
  std::vector<Cover::Community> communities;
  std::string line;
  int64_t lines = 0;
  while (std::getline(in, line)) {
    if (IsSkippable(line)) continue;
    ++lines;
    Cover::Community community;
    for (absl::string_view token : Tokens(line)) {
      community.push_back(ids.Intern(token));
    }
    std::sort(community.begin(), community.end());
    community.erase(std::unique(community.begin(), community.end()),
                    community.end());
    if (static_cast<int64_t>(community.size()) >= min_size) {
      communities.push_back(std::move(community));
    }
  }
  if (lines == 0) return absl::InvalidArgumentError("no communities");
  return Cover(std::move(communities));
}

void WriteCover(const Cover& cover, const IdMap& ids, std::ostream& out) {
  for (const auto& community : cover.communities()) {
    out << absl::StrJoin(community, " ",
                         [&ids](std::string* s, NodeId v) {
                           s->append(ids.External(v));
                         })
        << '\n';
  }
}

absl::Status WriteCoverFile(const Cover& cover, const IdMap& ids,
                            const std::string& path) {
  std::ofstream out(path);
  if (!out) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  WriteCover(cover, ids, out);
  return out.good() ? absl::OkStatus()
                    : absl::DataLossError(absl::StrCat("write failed: ", path));
}

}  // namespace pcslpa

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

#ifndef PCSLPA_IO_H_
#define PCSLPA_IO_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "absl/status/statusor.h"
#include "pcslpa/cover.h"
#include "pcslpa/graph.h"

namespace pcslpa {

// Edge list: one "u v" pair per line, whitespace separated, lines whose first
// non-blank character is '#' are comments. Node tokens are arbitrary strings.
struct LoadedGraph {
  Graph graph;
  IdMap ids;
  int64_t dropped_self_loops = 0;
  int64_t dropped_duplicates = 0;
};

absl::StatusOr<LoadedGraph> LoadEdgeList(std::istream& in);
absl::StatusOr<LoadedGraph> LoadEdgeListFile(const std::string& path);

void WriteEdgeList(const Graph& g, const IdMap& ids, std::ostream& out);

enum class UnknownTokenPolicy {
  kStrict,  // an unmapped token is an error
  kSkip,    // drop the token and count it
};

struct CoverLoadOptions {
  // Communities with fewer members are dropped after token mapping.
  int64_t min_size = 1;
  UnknownTokenPolicy unknown_tokens = UnknownTokenPolicy::kStrict;
};

struct CoverLoadStats {
  int64_t lines = 0;
  int64_t skipped_tokens = 0;
  int64_t dropped_small = 0;
  int64_t collapsed_duplicates = 0;
};

// Cover format: one community per line, whitespace separated member tokens.
// Blank lines and '#' comments are ignored. Input with no community lines is
// an error.
absl::StatusOr<Cover> LoadCover(std::istream& in, const IdMap& ids,
                                const CoverLoadOptions& options = {},
                                CoverLoadStats* stats = nullptr);
absl::StatusOr<Cover> LoadCoverFile(const std::string& path, const IdMap& ids,
                                    const CoverLoadOptions& options = {},
                                    CoverLoadStats* stats = nullptr);

// Like LoadCover, but unknown tokens are added to `ids`. Used when no graph
// is available to define the id space.
absl::StatusOr<Cover> LoadCoverInterning(std::istream& in, IdMap& ids,
                                         int64_t min_size = 1);

void WriteCover(const Cover& cover, const IdMap& ids, std::ostream& out);
absl::Status WriteCoverFile(const Cover& cover, const IdMap& ids,
                            const std::string& path);

}  // namespace pcslpa

#endif  // PCSLPA_IO_H_

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

#include "pcslpa/report.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>
#include <utility>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"

namespace pcslpa {
namespace {

// Orders columns: external methods (by name), SLPA, then PC-SLPA by budget.
struct ColumnKey {
  int kind;
  double pct;
  std::string algorithm;

  static ColumnKey Of(const RunResult& r) {
    if (r.algorithm == "slpa") return {1, 0.0, r.algorithm};
    if (r.algorithm == "pcslpa") return {2, r.pct, r.algorithm};
    return {0, 0.0, r.algorithm};
  }
  friend bool operator<(const ColumnKey& a, const ColumnKey& b) {
    return std::tie(a.kind, a.pct, a.algorithm) <
           std::tie(b.kind, b.pct, b.algorithm);
  }
  std::string Name() const { return ColumnName(algorithm, pct); }
};

using Grouped = std::map<std::string, std::map<ColumnKey, std::vector<double>>>;

Grouped Group(const std::vector<RunResult>& results) {
  Grouped grouped;
  for (const RunResult& r : results) {
    grouped[r.network][ColumnKey::Of(r)].push_back(r.nmi);
  }
  // Summation order must not depend on input order.
  for (auto& [network, columns] : grouped) {
    for (auto& [key, values] : columns) std::sort(values.begin(), values.end());
  }
  return grouped;
}

std::pair<double, double> MeanAndStddev(const std::vector<double>& values) {
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

}  // namespace

std::string ColumnName(const std::string& algorithm, double pct) {
  if (algorithm == "pcslpa") {
    return absl::StrFormat("PCSLPA%%%g", pct * 100.0);
  }
  return absl::AsciiStrToUpper(algorithm);
}

std::vector<CellSummary> Summarize(const std::vector<RunResult>& results) {
  std::vector<CellSummary> out;
  for (const auto& [network, columns] : Group(results)) {
    for (const auto& [key, values] : columns) {
      const auto [mean, stddev] = MeanAndStddev(values);
      out.push_back({network, key.Name(),
                     static_cast<int64_t>(values.size()), mean, stddev});
    }
  }
  return out;
}

std::string SweepReportCsv(const std::vector<RunResult>& results) {
  const Grouped grouped = Group(results);
  std::vector<ColumnKey> columns;
  for (const auto& [network, cells] : grouped) {
    for (const auto& [key, values] : cells) columns.push_back(key);
  }
  std::sort(columns.begin(), columns.end());
  columns.erase(std::unique(columns.begin(), columns.end(),
                            [](const ColumnKey& a, const ColumnKey& b) {
                              return !(a < b) && !(b < a);
                            }),
                columns.end());

  std::string out = "network";
  for (const ColumnKey& c : columns) absl::StrAppend(&out, ",", c.Name());
  out += '\n';
  for (const auto& [network, cells] : grouped) {
    out += network;
    for (const ColumnKey& c : columns) {
      out += ',';
      auto it = cells.find(c);
      if (it != cells.end()) {
        absl::StrAppendFormat(&out, "%.4f", MeanAndStddev(it->second).first);
      }
    }
    out += '\n';
  }
  return out;
}

std::string SummaryCsv(const std::vector<RunResult>& results) {
  std::string out = "network,column,runs,mean,stddev\n";
  for (const CellSummary& s : Summarize(results)) {
    absl::StrAppendFormat(&out, "%s,%s,%d,%.6f,%.6f\n", s.network, s.column,
                          s.runs, s.mean, s.stddev);
  }
  return out;
}

absl::StatusOr<NmiMatrix> ParseSweepReport(std::istream& in) {
  NmiMatrix m;
  std::string line;
  if (!std::getline(in, line)) return absl::InvalidArgumentError("empty report");
  std::vector<std::string> header = absl::StrSplit(line, ',');
  if (header.size() < 2 || header[0] != "network") {
    return absl::InvalidArgumentError("report header must start with 'network'");
  }
  m.algorithms.assign(header.begin() + 1, header.end());
  m.values.assign(m.algorithms.size(), {});
  int64_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    std::vector<std::string> f = absl::StrSplit(line, ',');
    if (f.size() != header.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("report line ", line_number, ": expected ",
                       header.size(), " fields, got ", f.size()));
    }
    m.networks.push_back(f[0]);
    for (size_t a = 0; a < m.algorithms.size(); ++a) {
      double v = 0.0;
      if (!absl::SimpleAtod(f[a + 1], &v)) {
        return absl::InvalidArgumentError(
            absl::StrCat("report line ", line_number, ": bad value for ",
                         m.algorithms[a], " '", f[a + 1], "'"));
      }
      m.values[a].push_back(v);
    }
  }
  return m;
}

absl::StatusOr<WinLossTable> ComputeWinLoss(const NmiMatrix& nmi) {
  const size_t algs = nmi.algorithms.size();
  if (algs < 2) return absl::InvalidArgumentError("need at least 2 algorithms");
  if (nmi.values.size() != algs) {
    return absl::InvalidArgumentError("value rows do not match algorithms");
  }
  const size_t nets = nmi.values.front().size();
  if (nets == 0) return absl::InvalidArgumentError("need at least 1 network");
  for (const auto& row : nmi.values) {
    if (row.size() != nets) {
      return absl::InvalidArgumentError("ragged NMI matrix");
    }
  }

  WinLossTable t;
  t.algorithms = nmi.algorithms;
  t.networks = static_cast<int64_t>(nets);
  t.wins.assign(algs, std::vector<int64_t>(algs, 0));
  t.ties.assign(algs, std::vector<int64_t>(algs, 0));
  t.total_wins.assign(algs, 0);
  for (size_t i = 0; i < algs; ++i) {
    for (size_t j = 0; j < algs; ++j) {
      if (i == j) continue;
      for (size_t k = 0; k < nets; ++k) {
        const double a = nmi.values[i][k];
        const double b = nmi.values[j][k];
        if (a > b) {
          ++t.wins[i][j];
        } else if (!(a < b)) {
          ++t.ties[i][j];
        }
      }
      t.total_wins[i] += t.wins[i][j];
    }
  }
  const double denom = static_cast<double>(nets * (algs - 1));
  for (size_t i = 0; i < algs; ++i) {
    t.rank_score.push_back(static_cast<double>(t.total_wins[i]) / denom);
  }
  t.order.resize(algs);
  std::iota(t.order.begin(), t.order.end(), 0);
  std::stable_sort(t.order.begin(), t.order.end(), [&](int a, int b) {
    return t.total_wins[a] > t.total_wins[b];
  });
  t.rank.assign(algs, 0);
  for (size_t pos = 0; pos < algs; ++pos) {
    const int i = t.order[pos];
    t.rank[i] = (pos > 0 && t.total_wins[i] == t.total_wins[t.order[pos - 1]])
                    ? t.rank[t.order[pos - 1]]
                    : static_cast<int>(pos) + 1;
  }
  return t;
}

std::string WinLossCsv(const WinLossTable& t) {
  const int64_t denom =
      t.networks * static_cast<int64_t>(t.algorithms.size() - 1);
  std::string out = "winner";
  for (int j : t.order) absl::StrAppend(&out, ",", t.algorithms[j]);
  absl::StrAppend(&out, ",total_wins,denominator,rank_score,rank\n");
  for (int i : t.order) {
    out += t.algorithms[i];
    for (int j : t.order) absl::StrAppend(&out, ",", t.wins[i][j]);
    absl::StrAppendFormat(&out, ",%d,%d,%.4f,%d\n", t.total_wins[i], denom,
                          t.rank_score[i], t.rank[i]);
  }
  return out;
}

std::string WinLossText(const WinLossTable& t) {
  const int64_t denom =
      t.networks * static_cast<int64_t>(t.algorithms.size() - 1);
  size_t name_width = 6;
  for (const auto& a : t.algorithms) name_width = std::max(name_width, a.size());
  std::vector<std::string> totals(t.algorithms.size());
  size_t total_width = 10;
  for (size_t i = 0; i < t.algorithms.size(); ++i) {
    totals[i] = absl::StrFormat("%d/%d (%.1f%%)", t.total_wins[i], denom,
                                100.0 * t.rank_score[i]);
    total_width = std::max(total_width, totals[i].size());
  }
  const int w = static_cast<int>(name_width);
  const int tw = static_cast<int>(total_width);
  std::string out = absl::StrFormat("%-*s", w, "winner");
  for (int j : t.order) absl::StrAppendFormat(&out, "  %*s", w, t.algorithms[j]);
  absl::StrAppendFormat(&out, "  %-*s  %s\n", tw, "total wins", "rank");
  for (int i : t.order) {
    absl::StrAppendFormat(&out, "%-*s", w, t.algorithms[i]);
    for (int j : t.order) absl::StrAppendFormat(&out, "  %*d", w, t.wins[i][j]);
    absl::StrAppendFormat(&out, "  %-*s  %d\n", tw, totals[i], t.rank[i]);
  }
  return out;
}

}  // namespace pcslpa

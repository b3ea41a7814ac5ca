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

#ifndef PCSLPA_REPORT_H_
#define PCSLPA_REPORT_H_

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "pcslpa/experiment.h"

namespace pcslpa {

// Mean and sample standard deviation of NMI for one (network, column) cell.
struct CellSummary {
  std::string network;
  std::string column;
  int64_t runs = 0;
  double mean = 0.0;
  double stddev = 0.0;  // n - 1 denominator; 0 for a single run
};

// "SLPA", "PCSLPA%3" for pct 0.03, or the upper-cased external name.
std::string ColumnName(const std::string& algorithm, double pct);

// Cells sorted by network, then column order (external methods by name,
// then SLPA, then PC-SLPA by increasing budget).
std::vector<CellSummary> Summarize(const std::vector<RunResult>& results);

// Networks as rows, algorithm/budget cells as columns, mean NMI to four
// decimals. Missing cells are left empty. Output depends only on the
// multiset of results.
std::string SweepReportCsv(const std::vector<RunResult>& results);

// network,column,runs,mean,stddev
std::string SummaryCsv(const std::vector<RunResult>& results);

// Mean NMI per algorithm (row) and network (column).
struct NmiMatrix {
  std::vector<std::string> algorithms;
  std::vector<std::string> networks;
  std::vector<std::vector<double>> values;  // [algorithm][network]
};

// Reads a sweep report (networks as rows); every cell must be present.
absl::StatusOr<NmiMatrix> ParseSweepReport(std::istream& in);

struct WinLossTable {
  std::vector<std::string> algorithms;
  int64_t networks = 0;
  // wins[i][j]: networks on which algorithm i scores strictly above j.
  std::vector<std::vector<int64_t>> wins;
  std::vector<std::vector<int64_t>> ties;
  std::vector<int64_t> total_wins;
  // total_wins / (networks * (algorithms - 1)).
  std::vector<double> rank_score;
  // Competition rank by total wins, 1 = best.
  std::vector<int> rank;
  // Algorithm indices by descending total wins (stable).
  std::vector<int> order;
};

absl::StatusOr<WinLossTable> ComputeWinLoss(const NmiMatrix& nmi);

// Rows and columns follow `order`; last columns are total wins and rank.
std::string WinLossCsv(const WinLossTable& table);
std::string WinLossText(const WinLossTable& table);

}  // namespace pcslpa

#endif  // PCSLPA_REPORT_H_

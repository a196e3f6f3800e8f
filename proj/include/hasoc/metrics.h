// Copyright 2026 The Hasoc Joint Authors.
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

#ifndef HASOC_METRICS_H_
#define HASOC_METRICS_H_

#include <ostream>
#include <string>
#include <vector>

namespace hasoc::metrics {

// Rows are gold labels, columns are predictions.
struct ConfusionMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> counts;

  std::size_t total() const;
};

// Throws LengthMismatch or UnknownLabel.
ConfusionMatrix confusion(const std::vector<std::string> &golds,
                          const std::vector<std::string> &preds,
                          const std::vector<std::string> &labels);
ConfusionMatrix confusion(const std::vector<std::size_t> &golds,
                          const std::vector<std::size_t> &preds,
                          const std::vector<std::string> &labels);

struct ClassScore {
  std::string label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

// Zero denominators contribute 0.
std::vector<ClassScore> per_class(const ConfusionMatrix &m);

// Unweighted mean of per-class F1 over the whole vocabulary, including
// classes absent from the data.
double macro_f1(const ConfusionMatrix &m);

double accuracy(const ConfusionMatrix &m);

struct EvalReport {
  std::string model;
  std::string mode;      // mono | multi
  std::string backend;
  std::string task;      // 1a | 1b
  std::string language;  // en | hi | mr
  std::vector<ClassScore> classes;
  double macro_f1 = 0.0;
  double accuracy = 0.0;
  std::size_t examples = 0;
};

EvalReport make_report(const ConfusionMatrix &m);

// The model x (language, task) comparison grid.
struct ReportGrid {
  struct Column {
    std::string language;
    std::string task;
  };
  struct RowKey {
    std::string model;
    std::string mode;
  };

  std::vector<RowKey> rows;
  std::vector<Column> columns;
  // cells[r][c] indexes into reports, or -1 when the pair was not evaluated.
  std::vector<std::vector<long>> cells;
  // best[c] is the row holding the highest macro-F1 in column c (ties go to
  // the earlier row), or -1 for an empty column.
  std::vector<long> best;
  std::vector<EvalReport> reports;
};

ReportGrid build_grid(const std::vector<EvalReport> &reports);

// Aligned text table; the best cell per column is marked with '*'.
void write_grid_text(std::ostream &out, const ReportGrid &grid);

// model, mode, language, task, macro_f1, accuracy, then <label>_precision,
// <label>_recall, <label>_f1 for every label seen across the reports.
void write_report_csv(std::ostream &out, const std::vector<EvalReport> &reports);

}  // namespace hasoc::metrics

#endif  // HASOC_METRICS_H_

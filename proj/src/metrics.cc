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

#include "hasoc/metrics.h"

#include <algorithm>
#include <cstdio>
#include <map>

#include "hasoc/common.h"
#include "hasoc/corpus.h"

namespace hasoc::metrics {

std::size_t ConfusionMatrix::total() const {
  std::size_t n = 0;
  for (const auto &row : counts) {
    for (std::size_t c : row) n += c;
  }
  return n;
}

ConfusionMatrix confusion(const std::vector<std::size_t> &golds,
                          const std::vector<std::size_t> &preds,
                          const std::vector<std::string> &labels) {
  if (golds.size() != preds.size()) {
    throw Error(Errc::kLengthMismatch,
                std::to_string(golds.size()) + " golds vs " +
                    std::to_string(preds.size()) + " predictions");
  }
  ConfusionMatrix m;
  m.labels = labels;
  m.counts.assign(labels.size(), std::vector<std::size_t>(labels.size(), 0));
  for (std::size_t i = 0; i < golds.size(); ++i) {
    if (golds[i] >= labels.size() || preds[i] >= labels.size()) {
      throw Error(Errc::kUnknownLabel, "label index out of range");
    }
    ++m.counts[golds[i]][preds[i]];
  }
  return m;
}

ConfusionMatrix confusion(const std::vector<std::string> &golds,
                          const std::vector<std::string> &preds,
                          const std::vector<std::string> &labels) {
  if (golds.size() != preds.size()) {
    throw Error(Errc::kLengthMismatch,
                std::to_string(golds.size()) + " golds vs " +
                    std::to_string(preds.size()) + " predictions");
  }
  auto index = [&](const std::string &s) {
    auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end()) throw Error(Errc::kUnknownLabel, "label '" + s + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::vector<std::size_t> g;
  std::vector<std::size_t> p;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    g.push_back(index(golds[i]));
    p.push_back(index(preds[i]));
  }
  return confusion(g, p, labels);
}

std::vector<ClassScore> per_class(const ConfusionMatrix &m) {
  const std::size_t n = m.labels.size();
  std::vector<ClassScore> out;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t tp = m.counts[c][c];
    std::size_t predicted = 0;
    std::size_t actual = 0;
    for (std::size_t k = 0; k < n; ++k) {
      predicted += m.counts[k][c];
      actual += m.counts[c][k];
    }
    ClassScore s;
    s.label = m.labels[c];
    s.support = actual;
    s.precision = predicted == 0 ? 0.0 : static_cast<double>(tp) / predicted;
    s.recall = actual == 0 ? 0.0 : static_cast<double>(tp) / actual;
    const double denom = s.precision + s.recall;
    s.f1 = denom == 0.0 ? 0.0 : 2.0 * s.precision * s.recall / denom;
    out.push_back(s);
  }
  return out;
}

double macro_f1(const ConfusionMatrix &m) {
  if (m.labels.empty()) return 0.0;
  double sum = 0.0;
  for (const ClassScore &s : per_class(m)) sum += s.f1;
  return sum / static_cast<double>(m.labels.size());
}

double accuracy(const ConfusionMatrix &m) {
  const std::size_t n = m.total();
  if (n == 0) return 0.0;
  std::size_t correct = 0;
  for (std::size_t c = 0; c < m.labels.size(); ++c) correct += m.counts[c][c];
  return static_cast<double>(correct) / static_cast<double>(n);
}

EvalReport make_report(const ConfusionMatrix &m) {
  EvalReport r;
  r.classes = per_class(m);
  r.macro_f1 = macro_f1(m);
  r.accuracy = accuracy(m);
  r.examples = m.total();
  return r;
}

ReportGrid build_grid(const std::vector<EvalReport> &reports) {
  ReportGrid grid;
  grid.reports = reports;
  auto row_of = [&](const EvalReport &r) {
    for (std::size_t i = 0; i < grid.rows.size(); ++i) {
      if (grid.rows[i].model == r.model && grid.rows[i].mode == r.mode) return i;
    }
    grid.rows.push_back({r.model, r.mode});
    return grid.rows.size() - 1;
  };
  auto col_of = [&](const EvalReport &r) {
    for (std::size_t i = 0; i < grid.columns.size(); ++i) {
      if (grid.columns[i].language == r.language && grid.columns[i].task == r.task) {
        return i;
      }
    }
    grid.columns.push_back({r.language, r.task});
    return grid.columns.size() - 1;
  };
  std::vector<std::pair<std::size_t, std::size_t>> where;
  for (const EvalReport &r : reports) where.emplace_back(row_of(r), col_of(r));

  grid.cells.assign(grid.rows.size(), std::vector<long>(grid.columns.size(), -1));
  for (std::size_t i = 0; i < where.size(); ++i) {
    grid.cells[where[i].first][where[i].second] = static_cast<long>(i);
  }
  grid.best.assign(grid.columns.size(), -1);
  for (std::size_t c = 0; c < grid.columns.size(); ++c) {
    double best = -1.0;
    for (std::size_t r = 0; r < grid.rows.size(); ++r) {
      const long idx = grid.cells[r][c];
      if (idx >= 0 && reports[idx].macro_f1 > best) {
        best = reports[idx].macro_f1;
        grid.best[c] = static_cast<long>(r);
      }
    }
  }
  return grid;
}

void write_grid_text(std::ostream &out, const ReportGrid &grid) {
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header = {"Model", "Mode"};
  for (const auto &col : grid.columns) {
    header.push_back(col.language + "/" + col.task);
  }
  table.push_back(header);
  for (std::size_t r = 0; r < grid.rows.size(); ++r) {
    std::vector<std::string> line = {grid.rows[r].model, grid.rows[r].mode};
    for (std::size_t c = 0; c < grid.columns.size(); ++c) {
      const long idx = grid.cells[r][c];
      if (idx < 0) {
        line.push_back("-");
        continue;
      }
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.4f%s", grid.reports[idx].macro_f1,
                    grid.best[c] == static_cast<long>(r) ? "*" : "");
      line.push_back(buf);
    }
    table.push_back(line);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto &line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  for (const auto &line : table) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) out << "  ";
      out << line[i];
      if (i + 1 < line.size()) out << std::string(width[i] - line[i].size(), ' ');
    }
    out << '\n';
  }
}

void write_report_csv(std::ostream &out, const std::vector<EvalReport> &reports) {
  std::vector<std::string> labels;
  for (const EvalReport &r : reports) {
    for (const ClassScore &s : r.classes) {
      if (std::find(labels.begin(), labels.end(), s.label) == labels.end()) {
        labels.push_back(s.label);
      }
    }
  }
  std::vector<std::string> header = {"model", "mode", "language", "task",
                                     "macro_f1", "accuracy"};
  for (const std::string &l : labels) {
    header.push_back(l + "_precision");
    header.push_back(l + "_recall");
    header.push_back(l + "_f1");
  }
  corpus::write_csv_row(out, header);

  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::string(buf);
  };
  for (const EvalReport &r : reports) {
    std::vector<std::string> line = {r.model, r.mode, r.language, r.task,
                                     fmt(r.macro_f1), fmt(r.accuracy)};
    for (const std::string &l : labels) {
      auto it = std::find_if(r.classes.begin(), r.classes.end(),
                             [&](const ClassScore &s) { return s.label == l; });
      if (it == r.classes.end()) {
        line.insert(line.end(), {"", "", ""});
      } else {
        line.insert(line.end(), {fmt(it->precision), fmt(it->recall), fmt(it->f1)});
      }
    }
    corpus::write_csv_row(out, line);
  }
}

}  // namespace hasoc::metrics

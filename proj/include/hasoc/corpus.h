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

#ifndef HASOC_CORPUS_H_
#define HASOC_CORPUS_H_

#include <array>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hasoc/common.h"

namespace hasoc::corpus {

enum class Task { k1A, k1B };

// Label vocabularies in index order.
// 1A: NOT, HOF.  1B: NONE, HATE, OFFN, PRFN.
enum class Task1Label { kNot, kHof };
enum class Task2Label { kNone, kHate, kOffn, kPrfn };

std::string_view to_string(Task task);
std::optional<Task> parse_task(std::string_view s);  // "1a" / "1b"

const std::vector<std::string> &label_names(Task task);

std::optional<Task1Label> parse_task1(std::string_view s);
std::optional<Task2Label> parse_task2(std::string_view s);
std::string_view to_string(Task1Label label);
std::string_view to_string(Task2Label label);

struct Row {
  std::string hasoc_id;
  std::string tweet_id;
  std::string text;
  Task1Label task_1 = Task1Label::kNot;
  std::optional<Task2Label> task_2;
  Language language = Language::EN;  // the language of the source file
};

// Index into label_names(task), or nullopt when the row has no label for
// the task (task 2 on Marathi data).
std::optional<std::size_t> label_index(const Row &row, Task task);

struct LabeledDataset {
  Language language = Language::EN;
  std::vector<Row> rows;
  std::vector<std::string> provenance;

  std::size_t size() const { return rows.size(); }
};

// Accepted header names per logical column.
struct ColumnAliases {
  std::vector<std::string> id = {"hasoc_id", "_id"};
  std::vector<std::string> tweet_id = {"tweet_id"};
  std::vector<std::string> text = {"text"};
  std::vector<std::string> task_1 = {"task_1"};
  std::vector<std::string> task_2 = {"task_2"};
};

// RFC-4180 reader. Each record carries the 1-based line it starts on.
struct CsvRecord {
  std::size_t line;
  std::vector<std::string> fields;
};
std::vector<CsvRecord> parse_csv(std::string_view content, char delimiter);

// Chooses tab when the header line (outside quotes) holds more tabs than
// commas, comma otherwise.
char detect_delimiter(std::string_view content);

void write_csv_row(std::ostream &out, const std::vector<std::string> &fields,
                   char delimiter = ',');

// Parses a HASOC-schema table. An empty input yields an empty dataset.
// Throws MissingColumn, BadLabel(row) or EncodingError(row); row numbers
// count data rows from 1.
LabeledDataset read_dataset(std::string_view content, Language language,
                            const std::string &source = "<memory>",
                            const ColumnAliases &aliases = {},
                            const WarningSink &warn = default_warning_sink());

LabeledDataset load_dataset(const std::string &path, Language language,
                            const ColumnAliases &aliases = {},
                            const WarningSink &warn = default_warning_sink());

// Writes hasoc_id, tweet_id, text, task_1, task_2.
void write_dataset(std::ostream &out, const LabeledDataset &dataset);
void save_dataset(const std::string &path, const LabeledDataset &dataset);

struct ClassStats {
  std::array<std::size_t, 2> task_1{};  // NOT, HOF
  std::array<std::size_t, 4> task_2{};  // NONE, HATE, OFFN, PRFN
  std::size_t task_2_absent = 0;
  std::size_t total = 0;

  std::size_t count(Task1Label label) const {
    return task_1[static_cast<std::size_t>(label)];
  }
  std::size_t count(Task2Label label) const {
    return task_2[static_cast<std::size_t>(label)];
  }

  // Counts sum to total in both tasks, and NONE equals NOT when every row
  // carries a task 2 label.
  bool consistent() const;

  // "HOF 1433 / NOT 3161" followed by the task 2 breakdown when present.
  std::string summary() const;
};

ClassStats class_stats(const LabeledDataset &dataset);

// Stratified by the task label. Falls back to an unstratified split with a
// ClassTooSmall warning when some label has fewer than two rows. Both parts
// keep the input's row order.
std::pair<LabeledDataset, LabeledDataset> split(
    const LabeledDataset &dataset, double val_fraction, std::uint64_t seed,
    Task task = Task::k1A, const WarningSink &warn = default_warning_sink());

// Concatenation in argument order. More than one input gives MULTI.
LabeledDataset combine(const std::vector<LabeledDataset> &datasets);

using RowEmbedder =
    std::function<std::vector<std::vector<double>>(const std::vector<Row> &)>;

// Similarity-based over/undersampling to mean class size. Minority classes
// repeat their rows in descending cosine similarity to the class centroid;
// majority classes repeatedly drop one row of their most similar pair.
// Throws DegenerateClass when a label of the task has no rows.
LabeledDataset soup_resample(const LabeledDataset &dataset, Task task,
                             const RowEmbedder &embed, std::uint64_t seed);

// The same resampling as row indices into dataset.rows: survivors in input
// order followed by the duplicates. vectors[i] belongs to rows[i].
std::vector<std::size_t> soup_resample_indices(
    const LabeledDataset &dataset, Task task,
    std::vector<std::vector<double>> vectors, std::uint64_t seed);

}  // namespace hasoc::corpus

#endif  // HASOC_CORPUS_H_

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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "hasoc/corpus.h"
#include "hasoc/utf8.h"

namespace hasoc::corpus {

std::string_view to_string(Task task) {
  return task == Task::k1A ? "1a" : "1b";
}

std::optional<Task> parse_task(std::string_view s) {
  if (s == "1a" || s == "1A") return Task::k1A;
  if (s == "1b" || s == "1B") return Task::k1B;
  return std::nullopt;
}

const std::vector<std::string> &label_names(Task task) {
  static const std::vector<std::string> k1A = {"NOT", "HOF"};
  static const std::vector<std::string> k1B = {"NONE", "HATE", "OFFN", "PRFN"};
  return task == Task::k1A ? k1A : k1B;
}

std::optional<Task1Label> parse_task1(std::string_view s) {
  if (s == "NOT") return Task1Label::kNot;
  if (s == "HOF") return Task1Label::kHof;
  return std::nullopt;
}

std::optional<Task2Label> parse_task2(std::string_view s) {
  if (s == "NONE") return Task2Label::kNone;
  if (s == "HATE") return Task2Label::kHate;
  if (s == "OFFN") return Task2Label::kOffn;
  if (s == "PRFN") return Task2Label::kPrfn;
  return std::nullopt;
}

std::string_view to_string(Task1Label label) {
  return label_names(Task::k1A)[static_cast<std::size_t>(label)];
}

std::string_view to_string(Task2Label label) {
  return label_names(Task::k1B)[static_cast<std::size_t>(label)];
}

std::optional<std::size_t> label_index(const Row &row, Task task) {
  if (task == Task::k1A) return static_cast<std::size_t>(row.task_1);
  if (!row.task_2) return std::nullopt;
  return static_cast<std::size_t>(*row.task_2);
}

std::vector<CsvRecord> parse_csv(std::string_view content, char delimiter) {
  if (content.substr(0, 3) == "\xef\xbb\xbf") content.remove_prefix(3);
  std::vector<CsvRecord> records;
  CsvRecord current{1, {}};
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  std::size_t quote_line = 0;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    // A bare empty line is not a record.
    if (!(current.fields.size() == 1 && current.fields[0].empty())) {
      records.push_back(std::move(current));
    }
    current = CsvRecord{line, {}};
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && !field_started) {
      in_quotes = true;
      field_started = true;
      quote_line = line;
    } else if (c == delimiter) {
      end_field();
    } else if (c == '\r' && i + 1 < content.size() && content[i + 1] == '\n') {
      // CRLF: the '\n' ends the record.
    } else if (c == '\n') {
      ++line;
      end_record();
    } else {
      field.push_back(c);
      field_started = true;
    }
  }
  if (in_quotes) {
    throw Error(Errc::kMalformedRow, "unterminated quoted field", quote_line);
  }
  if (field_started || !current.fields.empty() || !field.empty()) end_record();
  return records;
}

char detect_delimiter(std::string_view content) {
  std::size_t tabs = 0;
  std::size_t commas = 0;
  bool in_quotes = false;
  for (char c : content) {
    if (c == '"') in_quotes = !in_quotes;
    if (in_quotes) continue;
    if (c == '\n') break;
    if (c == '\t') ++tabs;
    if (c == ',') ++commas;
  }
  return tabs > commas ? '\t' : ',';
}

void write_csv_row(std::ostream &out, const std::vector<std::string> &fields,
                   char delimiter) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << delimiter;
    const std::string &f = fields[i];
    const bool quote = f.find_first_of(std::string("\"\r\n") + delimiter) !=
                       std::string::npos;
    if (!quote) {
      out << f;
      continue;
    }
    out << '"';
    for (char c : f) {
      if (c == '"') out << '"';
      out << c;
    }
    out << '"';
  }
  out << '\n';
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::optional<std::size_t> find_column(const std::vector<std::string> &header,
                                       const std::vector<std::string> &names) {
  for (const std::string &name : names) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (lower(trim(header[i])) == lower(name)) return i;
    }
  }
  return std::nullopt;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

LabeledDataset read_dataset(std::string_view content, Language language,
                            const std::string &source,
                            const ColumnAliases &aliases,
                            const WarningSink &warn) {
  LabeledDataset dataset;
  dataset.language = language;
  if (blank(content)) {
    dataset.provenance.push_back(source + " (empty)");
    return dataset;
  }

  const char delimiter = detect_delimiter(content);
  dataset.provenance.push_back(
      source + (delimiter == '\t' ? " (delimiter=tab)" : " (delimiter=comma)"));

  const std::vector<CsvRecord> records = parse_csv(content, delimiter);
  const std::vector<std::string> &header = records.front().fields;
  auto require = [&](const std::vector<std::string> &names) {
    auto idx = find_column(header, names);
    if (!idx) throw Error(Errc::kMissingColumn, "no column named " + names.front());
    return *idx;
  };
  const std::size_t id_col = require(aliases.id);
  const std::size_t tweet_col = require(aliases.tweet_id);
  const std::size_t text_col = require(aliases.text);
  const std::size_t task1_col = require(aliases.task_1);
  const std::optional<std::size_t> task2_col = find_column(header, aliases.task_2);
  std::size_t needed = std::max({id_col, tweet_col, text_col, task1_col});
  if (task2_col) needed = std::max(needed, *task2_col);

  std::unordered_map<std::string, std::size_t> seen_ids;
  std::size_t duplicates = 0;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const std::vector<std::string> &f = records[r].fields;
    if (f.size() <= needed) {
      throw Error(Errc::kMalformedRow,
                  "expected at least " + std::to_string(needed + 1) +
                      " fields, got " + std::to_string(f.size()),
                  r);
    }
    Row row;
    row.language = language;
    row.hasoc_id = trim(f[id_col]);
    row.tweet_id = trim(f[tweet_col]);
    row.text = f[text_col];
    if (row.hasoc_id.empty() || row.tweet_id.empty()) {
      throw Error(Errc::kMalformedRow, "empty id", r);
    }
    if (!utf8::is_valid(row.text)) {
      throw Error(Errc::kEncoding, "text is not valid UTF-8", r);
    }
    const std::string t1 = trim(f[task1_col]);
    auto task1 = parse_task1(t1);
    if (!task1) throw Error(Errc::kBadLabel, "task_1 '" + t1 + "'", r);
    row.task_1 = *task1;
    if (task2_col) {
      const std::string t2 = trim(f[*task2_col]);
      if (!t2.empty()) {
        auto task2 = parse_task2(t2);
        if (!task2) throw Error(Errc::kBadLabel, "task_2 '" + t2 + "'", r);
        row.task_2 = *task2;
      }
    }
    if (row.task_1 == Task1Label::kNot && row.task_2 &&
        *row.task_2 != Task2Label::kNone) {
      throw Error(Errc::kBadLabel, "task_1 NOT requires task_2 NONE", r);
    }
    if (++seen_ids[row.tweet_id] == 2) ++duplicates;
    dataset.rows.push_back(std::move(row));
  }
  if (duplicates > 0 && warn) {
    warn(source + ": " + std::to_string(duplicates) + " duplicated tweet_id value(s)");
  }
  return dataset;
}

LabeledDataset load_dataset(const std::string &path, Language language,
                            const ColumnAliases &aliases,
                            const WarningSink &warn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIo, "cannot open dataset " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_dataset(buf.str(), language, path, aliases, warn);
}

void write_dataset(std::ostream &out, const LabeledDataset &dataset) {
  write_csv_row(out, {"hasoc_id", "tweet_id", "text", "task_1", "task_2"});
  for (const Row &row : dataset.rows) {
    write_csv_row(out, {row.hasoc_id, row.tweet_id, row.text,
                        std::string(to_string(row.task_1)),
                        row.task_2 ? std::string(to_string(*row.task_2)) : ""});
  }
}

void save_dataset(const std::string &path, const LabeledDataset &dataset) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kIo, "cannot write " + path);
  write_dataset(out, dataset);
}

bool ClassStats::consistent() const {
  const std::size_t t1 = task_1[0] + task_1[1];
  std::size_t t2 = task_2_absent;
  for (std::size_t c : task_2) t2 += c;
  if (t1 != total || t2 != total) return false;
  if (task_2_absent == 0 && task_2[0] != task_1[0]) return false;
  return true;
}

std::string ClassStats::summary() const {
  std::ostringstream out;
  out << "HOF " << task_1[1] << " / NOT " << task_1[0];
  if (task_2_absent < total) {
    out << "\nHATE " << task_2[1] << " / OFFN " << task_2[2] << " / PRFN "
        << task_2[3] << " / NONE " << task_2[0];
  }
  out << "\nTOTAL " << total;
  return out.str();
}

ClassStats class_stats(const LabeledDataset &dataset) {
  ClassStats stats;
  for (const Row &row : dataset.rows) {
    ++stats.task_1[static_cast<std::size_t>(row.task_1)];
    if (row.task_2) {
      ++stats.task_2[static_cast<std::size_t>(*row.task_2)];
    } else {
      ++stats.task_2_absent;
    }
    ++stats.total;
  }
  return stats;
}

LabeledDataset combine(const std::vector<LabeledDataset> &datasets) {
  if (datasets.empty()) {
    throw Error(Errc::kInvalidArgument, "combine needs at least one dataset");
  }
  if (datasets.size() == 1) return datasets.front();
  LabeledDataset out;
  out.language = Language::MULTI;
  for (const LabeledDataset &d : datasets) {
    out.rows.insert(out.rows.end(), d.rows.begin(), d.rows.end());
    out.provenance.insert(out.provenance.end(), d.provenance.begin(),
                          d.provenance.end());
  }
  return out;
}

}  // namespace hasoc::corpus

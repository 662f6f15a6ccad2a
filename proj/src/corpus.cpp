// SPDX-License-Identifier: Apache-2.0
#include "sxd/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace sxd {

const std::array<std::string, kTask1ClassCount>& task1_class_names() {
  static const std::array<std::string, kTask1ClassCount> names = {"sexist", "non-sexist"};
  return names;
}

const std::array<std::string, kTask2ClassCount>& task2_class_names() {
  static const std::array<std::string, kTask2ClassCount> names = {
      "ideological-inequality",      "objectification",
      "stereotyping-dominance",      "misogyny-non-sexual-violence",
      "sexual-violence",             "non-sexist",
  };
  return names;
}

int class_count(Task task) { return task == Task::Task1 ? kTask1ClassCount : kTask2ClassCount; }

const std::string& class_name(Task task, int index) {
  if (index < 0 || index >= class_count(task)) fail("class index out of range: " + std::to_string(index));
  return task == Task::Task1 ? task1_class_names()[static_cast<std::size_t>(index)]
                             : task2_class_names()[static_cast<std::size_t>(index)];
}

int class_index(Task task, const std::string& name) {
  int n = class_count(task);
  for (int i = 0; i < n; ++i) {
    if (class_name(task, i) == name) return i;
  }
  fail("unknown " + to_string(task) + " label: '" + name + "'");
}

const std::string& to_string(Source v) {
  static const std::array<std::string, 3> names = {"twitter", "gab", "external"};
  return names[static_cast<std::size_t>(v)];
}

const std::string& to_string(Language v) {
  static const std::array<std::string, 2> names = {"en", "es"};
  return names[static_cast<std::size_t>(v)];
}

const std::string& to_string(Provenance v) {
  static const std::array<std::string, 3> names = {"original", "translated", "external"};
  return names[static_cast<std::size_t>(v)];
}

const std::string& to_string(Task v) {
  static const std::array<std::string, 2> names = {"task1", "task2"};
  return names[static_cast<std::size_t>(v)];
}

const std::string& to_string(Task1Label v) {
  return task1_class_names()[static_cast<std::size_t>(v)];
}

const std::string& to_string(Task2Label v) {
  return task2_class_names()[static_cast<std::size_t>(v)];
}

Source parse_source(const std::string& s) {
  if (s == "twitter") return Source::Twitter;
  if (s == "gab") return Source::Gab;
  if (s == "external") return Source::External;
  fail("unknown source: '" + s + "'");
}

Language parse_language(const std::string& s) {
  if (s == "en") return Language::En;
  if (s == "es") return Language::Es;
  fail("unknown language: '" + s + "'");
}

Provenance parse_provenance(const std::string& s) {
  if (s == "original") return Provenance::Original;
  if (s == "translated") return Provenance::Translated;
  if (s == "external") return Provenance::External;
  fail("unknown provenance: '" + s + "'");
}

Task parse_task(const std::string& s) {
  if (s == "task1") return Task::Task1;
  if (s == "task2") return Task::Task2;
  fail("unknown task: '" + s + "' (expected task1 or task2)");
}

Task1Label parse_task1_label(const std::string& s) {
  return static_cast<Task1Label>(class_index(Task::Task1, s));
}

Task2Label parse_task2_label(const std::string& s) {
  return static_cast<Task2Label>(class_index(Task::Task2, s));
}

void validate(const Post& post) {
  if (trim(post.text).empty()) fail("post '" + post.id + "': text is empty");
  if (post.task2.has_value() && post.task1.has_value()) {
    bool sexist2 = *post.task2 != Task2Label::NonSexist;
    bool sexist1 = *post.task1 == Task1Label::Sexist;
    if (sexist1 != sexist2) {
      fail("post '" + post.id + "': task1 label '" + to_string(*post.task1) +
           "' inconsistent with task2 label '" + to_string(*post.task2) + "'");
    }
  }
}

void validate(const LabeledDataset& ds) {
  std::unordered_set<std::string> seen;
  seen.reserve(ds.posts.size());
  for (const Post& post : ds.posts) {
    validate(post);
    if (!seen.insert(post.id).second) fail("dataset '" + ds.name + "': duplicate id '" + post.id + "'");
  }
}

TsvSchema parse_schema(const std::string& s) {
  if (s == "exist") return TsvSchema::Exist;
  if (s == "generic") return TsvSchema::Generic;
  fail("unknown schema: '" + s + "' (expected exist or generic)");
}

std::string escape_tsv_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape_tsv_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out += s[i];
      continue;
    }
    ++i;
    switch (s[i]) {
      case '\\': out += '\\'; break;
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      default: out += '\\'; out += s[i];
    }
  }
  return out;
}

namespace {

std::vector<std::string> split_lines(std::string_view content) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t pos = content.find('\n', start);
    if (pos == std::string_view::npos) {
      if (start < content.size()) lines.emplace_back(content.substr(start));
      break;
    }
    std::string line(content.substr(start, pos - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = pos + 1;
  }
  return lines;
}

const std::vector<std::string>& exist_base_header() {
  static const std::vector<std::string> h = {"test_case", "id", "source", "language", "text"};
  return h;
}

const std::vector<std::string>& generic_header() {
  static const std::vector<std::string> h = {"id", "language", "text"};
  return h;
}

// Allowed headers are the base columns plus, in order, optional task1,
// task2 and provenance suffix columns (exist schema only).
void check_header(const std::vector<std::string>& header, TsvSchema schema, bool& has_task1,
                  bool& has_task2, bool& has_provenance) {
  const std::vector<std::string>& base =
      schema == TsvSchema::Exist ? exist_base_header() : generic_header();
  has_task1 = has_task2 = has_provenance = false;
  std::vector<std::string> expected = base;
  auto matches = [&]() { return header == expected; };
  if (matches()) return;
  if (schema == TsvSchema::Generic) fail("header does not match generic schema (id, language, text)");
  expected.push_back("task1");
  if (matches()) { has_task1 = true; return; }
  expected.push_back("task2");
  if (matches()) { has_task1 = has_task2 = true; return; }
  expected.push_back("provenance");
  if (matches()) { has_task1 = has_task2 = has_provenance = true; return; }
  fail("header does not match exist schema (test_case, id, source, language, text[, task1[, task2[, provenance]]])");
}

}  // namespace

LabeledDataset load_tsv(const std::string& path, TsvSchema schema) {
  std::string content = read_file(path);
  std::vector<std::string> lines = split_lines(content);
  if (lines.empty()) fail(path + ": missing header row");

  bool has_task1 = false, has_task2 = false, has_provenance = false;
  std::vector<std::string> header = split(lines[0], '\t');
  check_header(header, schema, has_task1, has_task2, has_provenance);

  LabeledDataset ds;
  ds.name = std::filesystem::path(path).stem().string();
  ds.posts.reserve(lines.size() > 0 ? lines.size() - 1 : 0);

  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (lines[li].empty()) continue;
    std::vector<std::string> cols = split(lines[li], '\t');
    if (cols.size() != header.size()) {
      fail(path + ": line " + std::to_string(li + 1) + ": expected " +
           std::to_string(header.size()) + " columns, got " + std::to_string(cols.size()));
    }
    for (std::string& c : cols) c = unescape_tsv_field(c);

    Post post;
    std::size_t i = 0;
    try {
      if (schema == TsvSchema::Exist) {
        const std::string& test_case = cols[i++];
        if (ds.posts.empty()) ds.name = test_case;
        post.id = cols[i++];
        post.source = parse_source(cols[i++]);
        post.language = parse_language(cols[i++]);
        post.text = cols[i++];
        if (has_task1) {
          const std::string& s = cols[i++];
          if (!s.empty()) post.task1 = parse_task1_label(s);
        }
        if (has_task2) {
          const std::string& s = cols[i++];
          if (!s.empty()) post.task2 = parse_task2_label(s);
        }
        if (has_provenance) {
          post.provenance = parse_provenance(cols[i++]);
        }
      } else {
        post.id = cols[i++];
        post.language = parse_language(cols[i++]);
        post.text = cols[i++];
        post.source = Source::External;
        post.provenance = Provenance::External;
      }
      validate(post);
    } catch (const Error& e) {
      fail(path + ": line " + std::to_string(li + 1) + ": " + e.what());
    }
    ds.posts.push_back(std::move(post));
  }
  validate(ds);
  return ds;
}

std::string to_tsv_string(const LabeledDataset& ds) {
  std::ostringstream out;
  out << "test_case\tid\tsource\tlanguage\ttext\ttask1\ttask2\tprovenance\n";
  for (const Post& post : ds.posts) {
    out << escape_tsv_field(ds.name) << '\t' << escape_tsv_field(post.id) << '\t'
        << to_string(post.source) << '\t' << to_string(post.language) << '\t'
        << escape_tsv_field(post.text) << '\t'
        << (post.task1 ? to_string(*post.task1) : "") << '\t'
        << (post.task2 ? to_string(*post.task2) : "") << '\t'
        << to_string(post.provenance) << '\n';
  }
  return out.str();
}

void write_tsv(const LabeledDataset& ds, const std::string& path) {
  write_file(path, to_tsv_string(ds));
}

Task1Label derive_task1(Task2Label label2) {
  return label2 == Task2Label::NonSexist ? Task1Label::NonSexist : Task1Label::Sexist;
}

std::array<double, 2> derive_task1_probs(const std::array<double, 6>& p) {
  double sum = 0.0;
  for (double v : p) {
    if (v < 0.0) fail("derive_task1_probs: negative probability " + std::to_string(v));
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-6) {
    fail("derive_task1_probs: probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
  double sexist = (((p[0] + p[1]) + p[2]) + p[3]) + p[4];
  return {sexist, p[5]};
}

std::vector<double> derive_task1_probs(const std::vector<double>& p) {
  if (p.size() != 6) fail("derive_task1_probs: expected 6 entries, got " + std::to_string(p.size()));
  std::array<double, 6> a;
  std::copy(p.begin(), p.end(), a.begin());
  std::array<double, 2> r = derive_task1_probs(a);
  return {r[0], r[1]};
}

namespace {

std::string stratum_key(const Post& post) {
  if (post.task2) return to_string(*post.task2);
  if (post.task1) return to_string(*post.task1);
  return "";
}

}  // namespace

SplitResult split_dataset(const LabeledDataset& ds, double val_fraction, std::uint64_t seed,
                          bool stratified) {
  std::size_t n = ds.posts.size();
  if (n == 0) fail("split: dataset '" + ds.name + "' is empty");
  if (!(val_fraction > 0.0 && val_fraction < 1.0)) fail("split: val_fraction must be in (0,1)");
  std::size_t n_val = static_cast<std::size_t>(std::llround(val_fraction * static_cast<double>(n)));
  if (n_val == 0) fail("split: validation set would be empty");
  if (n_val >= n) fail("split: training set would be empty");

  Rng rng(seed);
  std::vector<char> in_val(n, 0);

  if (!stratified) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    rng.shuffle(idx);
    for (std::size_t i = 0; i < n_val; ++i) in_val[idx[i]] = 1;
  } else {
    // Group by class, apportion the validation quota with largest remainders.
    std::map<std::string, std::vector<std::size_t>> strata;
    for (std::size_t i = 0; i < n; ++i) strata[stratum_key(ds.posts[i])].push_back(i);

    std::vector<std::pair<std::string, double>> remainders;
    std::map<std::string, std::size_t> take;
    std::size_t assigned = 0;
    for (const auto& [key, members] : strata) {
      double quota = val_fraction * static_cast<double>(members.size());
      std::size_t base = static_cast<std::size_t>(quota);
      take[key] = base;
      assigned += base;
      remainders.emplace_back(key, quota - static_cast<double>(base));
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    std::size_t extra = n_val > assigned ? n_val - assigned : 0;
    for (const auto& [key, rem] : remainders) {
      if (extra == 0) break;
      if (take[key] < strata[key].size()) {
        ++take[key];
        --extra;
      }
    }
    for (auto& [key, members] : strata) {
      rng.shuffle(members);
      for (std::size_t i = 0; i < take[key] && i < members.size(); ++i) in_val[members[i]] = 1;
    }
  }

  SplitResult result;
  result.train.name = ds.name + "-train";
  result.val.name = ds.name + "-val";
  for (std::size_t i = 0; i < n; ++i) {
    (in_val[i] ? result.val : result.train).posts.push_back(ds.posts[i]);
  }
  return result;
}

LabeledDataset merge_datasets(const std::vector<LabeledDataset>& datasets, bool rename_collisions) {
  if (datasets.empty()) fail("merge: need at least one dataset");
  LabeledDataset out;
  std::unordered_set<std::string> seen;
  for (std::size_t d = 0; d < datasets.size(); ++d) {
    if (d > 0) out.name += "+";
    out.name += datasets[d].name;
    for (const Post& post : datasets[d].posts) {
      Post copy = post;
      if (rename_collisions) copy.id = datasets[d].name + ":" + post.id;
      if (!seen.insert(copy.id).second) fail("merge: duplicate id '" + copy.id + "'");
      out.posts.push_back(std::move(copy));
    }
  }
  return out;
}

}  // namespace sxd

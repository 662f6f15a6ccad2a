// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sxd/common.hpp"

namespace sxd {

enum class Source { Twitter, Gab, External };
enum class Language { En, Es };
enum class Provenance { Original, Translated, External };
enum class Task { Task1, Task2 };

/// Binary sexism label. Canonical order: sexist i=0, non-sexist i=1.
enum class Task1Label { Sexist, NonSexist };

/// Six-way sexism category. The declaration order is the canonical class
/// order (index 0..5) used everywhere probabilities are vectorized.
enum class Task2Label {
  IdeologicalInequality,
  Objectification,
  StereotypingDominance,
  MisogynyNonSexualViolence,
  SexualViolence,
  NonSexist,
};

inline constexpr int kTask1ClassCount = 2;
inline constexpr int kTask2ClassCount = 6;

const std::array<std::string, kTask1ClassCount>& task1_class_names();
const std::array<std::string, kTask2ClassCount>& task2_class_names();

int class_count(Task task);
const std::string& class_name(Task task, int index);
int class_index(Task task, const std::string& name);

const std::string& to_string(Source v);
const std::string& to_string(Language v);
const std::string& to_string(Provenance v);
const std::string& to_string(Task v);
const std::string& to_string(Task1Label v);
const std::string& to_string(Task2Label v);

Source parse_source(const std::string& s);
Language parse_language(const std::string& s);
Provenance parse_provenance(const std::string& s);
Task parse_task(const std::string& s);
Task1Label parse_task1_label(const std::string& s);
Task2Label parse_task2_label(const std::string& s);

/// One social-media post with optional task labels.
struct Post {
  std::string id;
  Source source = Source::Twitter;
  Language language = Language::En;
  std::string text;
  std::optional<Task1Label> task1;
  std::optional<Task2Label> task2;
  Provenance provenance = Provenance::Original;

  bool operator==(const Post&) const = default;
};

void validate(const Post& post);

/// Ordered collection of posts; ids are unique, iteration order is insertion
/// order.
struct LabeledDataset {
  std::string name;
  std::vector<Post> posts;

  std::size_t size() const { return posts.size(); }
  bool empty() const { return posts.empty(); }
  bool operator==(const LabeledDataset&) const = default;
};

void validate(const LabeledDataset& ds);

enum class TsvSchema { Exist, Generic };

TsvSchema parse_schema(const std::string& s);

// TSV escaping for text fields: backslash, tab, newline and carriage return
// become \\, \t, \n, \r. Everything written by write_tsv round-trips through
// load_tsv byte-identically.
std::string escape_tsv_field(std::string_view s);
std::string unescape_tsv_field(std::string_view s);

LabeledDataset load_tsv(const std::string& path, TsvSchema schema);
void write_tsv(const LabeledDataset& ds, const std::string& path);
std::string to_tsv_string(const LabeledDataset& ds);

/// Collapse the six-way taxonomy onto the binary one: everything except
/// non-sexist maps to sexist.
Task1Label derive_task1(Task2Label label2);

/// Aggregate a six-class probability vector into (sexist, non-sexist).
/// P(sexist) is the sum of the five sexist categories.
std::array<double, 2> derive_task1_probs(const std::array<double, 6>& p);
std::vector<double> derive_task1_probs(const std::vector<double>& p);

struct SplitResult {
  LabeledDataset train;
  LabeledDataset val;
};

/// Deterministic train/validation partition. |val| = round(fraction * n).
/// Stratified mode keeps per-class counts in val within one instance of the
/// exact proportional quota (classes taken from task2, falling back to task1).
SplitResult split_dataset(const LabeledDataset& ds, double val_fraction,
                          std::uint64_t seed, bool stratified);

/// Concatenate datasets in order. Duplicate ids are an error unless
/// rename_collisions is set, in which case every id is prefixed with its
/// dataset name.
LabeledDataset merge_datasets(const std::vector<LabeledDataset>& datasets,
                              bool rename_collisions);

}  // namespace sxd

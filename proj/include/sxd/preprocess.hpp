// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sxd/corpus.hpp"

namespace sxd {

/// The four normalization pipelines, in increasing intensity:
///   P1 removes whole hashtag tokens,
///   P2 removes ASCII punctuation characters,
///   P3 removes mention tokens, hashtag tokens and links,
///   P4 = P3 plus digits, punctuation and (diacritic-folded) non-ASCII.
enum class PipelineId { HashtagsOnly, PunctOnly, MentionsHashtagsLinks, Full };

PipelineId parse_pipeline(const std::string& s);  // "p1".."p4"
const std::string& pipeline_name(PipelineId id);

/// Apply one pipeline to a single text. Deterministic and idempotent;
/// whitespace runs collapse to single spaces and the result is trimmed.
/// Empty output is legal.
std::string preprocess(PipelineId pipeline, std::string_view text);

struct PreprocessDatasetResult {
  LabeledDataset dataset;
  std::size_t dropped = 0;  // posts whose text became empty
};

PreprocessDatasetResult preprocess_dataset(PipelineId pipeline, const LabeledDataset& ds);

// Token-class rules, exposed for tests. A "word character" is ASCII
// alphanumeric, '_' or any code point above 127.
bool is_word_char(char32_t cp);
bool is_ascii_punct(char32_t cp);  // the 32 ASCII punctuation characters
bool is_ascii_space(char32_t cp);

/// Canonical decomposition for the Latin-1 Supplement / Latin Extended-A
/// ranges with combining marks deleted (a-acute -> a, n-tilde -> n).
/// Code points without a known base letter are passed through unchanged.
std::string fold_diacritics(std::string_view text);

// Minimal UTF-8 codec. Invalid bytes decode to their byte value (and thus
// count as non-ASCII code points downstream).
std::vector<char32_t> decode_utf8(std::string_view text);
std::string encode_utf8(const std::vector<char32_t>& cps);

}  // namespace sxd

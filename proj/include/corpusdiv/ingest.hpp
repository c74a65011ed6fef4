// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Manifest production: word counting for raw text and bracketed treebank
// files, and the manifest TSV interchange format.

#ifndef CORPUSDIV_INGEST_HPP
#define CORPUSDIV_INGEST_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "corpusdiv/corpus_model.hpp"

namespace corpusdiv {

// One terminal of a parsed tree. is_empty_category is true when the
// preterminal tag is -NONE- (trace/null element), which raw-word counts
// exclude.
struct TreeToken {
  std::string surface;
  bool is_empty_category = false;

  friend bool operator==(const TreeToken&, const TreeToken&) = default;
};

struct ParsedTree {
  std::vector<TreeToken> tokens;  // leaves, left to right

  friend bool operator==(const ParsedTree&, const ParsedTree&) = default;
};

// Number of maximal runs of non-whitespace characters, with Unicode
// whitespace as the delimiter. Bytes that do not decode as UTF-8 are
// treated as non-whitespace.
std::int64_t count_words_raw(std::string_view text);

// Parses a sequence of balanced-parenthesis bracketed trees. A leaf is
// "(TAG surface)"; a node with child groups is internal and may carry a
// leading tag. Tags and surfaces are runs of characters other than
// whitespace and parentheses. Empty input yields an empty list.
//
// Throws Errc::unbalanced_parens with the byte offset on bracket mismatch,
// Errc::malformed_tree for structural defects (leafless groups, stray
// atoms, mixed leaf/internal nodes).
std::vector<ParsedTree> parse_trees(std::string_view text);

// Number of non-empty-category leaves across all trees in the text.
std::int64_t count_words_tree(std::string_view text);

enum class ContentKind { raw, tree };

struct DocumentInput {
  std::string name;
  std::string content;
  ContentKind kind = ContentKind::raw;
};

// Builds a manifest with one record per input, word_count computed by the
// kind-appropriate counter, genre attached when mapped. Counter errors are
// rethrown tagged with the offending document name.
CorpusManifest build_manifest(std::string corpus_id,
                              const std::vector<DocumentInput>& inputs,
                              const std::map<std::string, std::string>& genre_map = {});

// Manifest TSV: one record per line, "name<TAB>word_count[<TAB>genre]",
// UTF-8, no header. Lines starting with '#' are comments and blank lines
// are ignored; neither survives a round trip. write_manifest emits the
// canonical form (no comments, counts without leading zeros), so
// write(load(text)) is byte-identical for canonical text modulo the
// trailing newline, and load(write(m)) == m for every valid manifest.
CorpusManifest load_manifest(std::string_view tsv, std::string corpus_id = {});
std::string write_manifest(const CorpusManifest& manifest);

}  // namespace corpusdiv

#endif  // CORPUSDIV_INGEST_HPP

// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0

#include "corpusdiv/ingest.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <set>

#include "corpusdiv/error.hpp"
#include "tsv_lines.hpp"

namespace corpusdiv {

namespace {

constexpr std::string_view kEmptyCategoryTag = "-NONE-";

bool is_unicode_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
    case 0x20: case 0x85: case 0xA0: case 0x1680:
    case 0x2000: case 0x2001: case 0x2002: case 0x2003: case 0x2004:
    case 0x2005: case 0x2006: case 0x2007: case 0x2008: case 0x2009:
    case 0x200A: case 0x2028: case 0x2029: case 0x202F: case 0x205F:
    case 0x3000:
      return true;
    default:
      return false;
  }
}

// Decodes one UTF-8 code point at `pos`, advancing it. Bytes that do not
// form a valid sequence are consumed one at a time and returned as-is,
// which makes them non-whitespace.
char32_t next_code_point(std::string_view text, size_t& pos) {
  const auto byte = [&](size_t i) { return static_cast<unsigned char>(text[i]); };
  const unsigned char lead = byte(pos);
  size_t len = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    pos += 1;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    pos += 1;
    return lead;
  }
  if (pos + len > text.size()) {
    pos += 1;
    return lead;
  }
  for (size_t i = 1; i < len; ++i) {
    if ((byte(pos + i) & 0xC0) != 0x80) {
      pos += 1;
      return lead;
    }
    cp = (cp << 6) | (byte(pos + i) & 0x3F);
  }
  pos += len;
  return cp;
}

}  // namespace

std::int64_t count_words_raw(std::string_view text) {
  std::int64_t words = 0;
  bool in_token = false;
  size_t pos = 0;
  while (pos < text.size()) {
    const bool space = is_unicode_space(next_code_point(text, pos));
    if (!space && !in_token) ++words;
    in_token = !space;
  }
  return words;
}

namespace {

struct TreeFrame {
  std::string tag;
  std::string surface;
  bool has_tag = false;
  bool has_surface = false;
  int child_count = 0;
};

std::string offset_context(std::string_view text, size_t offset) {
  size_t line = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return "offset " + std::to_string(offset) + " (line " + std::to_string(line) + ")";
}

bool is_tree_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

std::vector<ParsedTree> parse_trees(std::string_view text) {
  std::vector<ParsedTree> trees;
  std::vector<TreeFrame> stack;
  ParsedTree current;

  size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (is_tree_space(c)) {
      ++pos;
    } else if (c == '(') {
      if (!stack.empty() && stack.back().has_surface)
        throw Error(Errc::malformed_tree,
                    "leaf node cannot have children at " + offset_context(text, pos));
      if (!stack.empty()) ++stack.back().child_count;
      stack.push_back({});
      ++pos;
    } else if (c == ')') {
      if (stack.empty())
        throw Error(Errc::unbalanced_parens, "stray ')' at " + offset_context(text, pos));
      TreeFrame frame = std::move(stack.back());
      stack.pop_back();
      if (frame.child_count == 0) {
        // innermost group: must be a (TAG surface) leaf
        if (!frame.has_tag || !frame.has_surface)
          throw Error(Errc::malformed_tree,
                      "leafless group closed at " + offset_context(text, pos));
        current.tokens.push_back({std::move(frame.surface), frame.tag == kEmptyCategoryTag});
      }
      if (stack.empty()) {
        trees.push_back(std::move(current));
        current = {};
      }
      ++pos;
    } else {
      const size_t start = pos;
      while (pos < text.size() && !is_tree_space(text[pos]) && text[pos] != '(' && text[pos] != ')')
        ++pos;
      std::string_view atom = text.substr(start, pos - start);
      if (stack.empty())
        throw Error(Errc::malformed_tree,
                    "token outside any tree at " + offset_context(text, start));
      TreeFrame& frame = stack.back();
      if (frame.child_count > 0)
        throw Error(Errc::malformed_tree,
                    "token after a subtree at " + offset_context(text, start));
      if (!frame.has_tag) {
        frame.tag.assign(atom);
        frame.has_tag = true;
      } else if (!frame.has_surface) {
        frame.surface.assign(atom);
        frame.has_surface = true;
      } else {
        throw Error(Errc::malformed_tree,
                    "too many tokens in one node at " + offset_context(text, start));
      }
    }
  }
  if (!stack.empty())
    throw Error(Errc::unbalanced_parens,
                "unclosed '(' at end of input, depth " + std::to_string(stack.size()));
  return trees;
}

std::int64_t count_words_tree(std::string_view text) {
  std::int64_t words = 0;
  for (const ParsedTree& tree : parse_trees(text))
    for (const TreeToken& token : tree.tokens)
      if (!token.is_empty_category) ++words;
  return words;
}

CorpusManifest build_manifest(std::string corpus_id,
                              const std::vector<DocumentInput>& inputs,
                              const std::map<std::string, std::string>& genre_map) {
  CorpusManifest manifest;
  manifest.corpus_id = std::move(corpus_id);
  std::set<std::string> seen;
  for (const DocumentInput& input : inputs) {
    if (!seen.insert(input.name).second)
      throw Error(Errc::duplicate_name, "'" + input.name + "'");
    DocumentRecord doc;
    doc.name = input.name;
    try {
      doc.word_count = input.kind == ContentKind::tree ? count_words_tree(input.content)
                                                       : count_words_raw(input.content);
    } catch (const Error& e) {
      throw Error(e.code(), "document '" + input.name + "': " + e.what());
    }
    if (auto it = genre_map.find(input.name); it != genre_map.end()) doc.genre = it->second;
    manifest.documents.push_back(std::move(doc));
  }
  return manifest;
}

namespace {

bool is_canonical_count(std::string_view field) {
  if (field.empty()) return false;
  if (field.size() > 1 && field[0] == '0') return false;  // no leading zeros
  for (char c : field)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

CorpusManifest load_manifest(std::string_view tsv, std::string corpus_id) {
  CorpusManifest manifest;
  manifest.corpus_id = std::move(corpus_id);
  std::set<std::string> seen;

  detail::for_each_tsv_line(tsv, [&](std::string_view line, size_t line_no) {
    const std::vector<std::string_view> fields = detail::split_tabs(line);
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty() ||
        (fields.size() == 3 && fields[2].empty()))
      throw Error(Errc::malformed_line, "line " + std::to_string(line_no));
    const std::string_view name = fields[0];
    const std::string_view count_field = fields[1];
    std::optional<std::string_view> genre;
    if (fields.size() == 3) genre = fields[2];
    if (!is_canonical_count(count_field))
      throw Error(Errc::malformed_line,
                  "line " + std::to_string(line_no) + ": bad word count '" +
                      std::string(count_field) + "'");
    std::int64_t count = 0;
    auto [ptr, ec] =
        std::from_chars(count_field.data(), count_field.data() + count_field.size(), count);
    if (ec != std::errc())
      throw Error(Errc::malformed_line,
                  "line " + std::to_string(line_no) + ": word count out of range");
    if (!seen.insert(std::string(name)).second)
      throw Error(Errc::duplicate_name,
                  "'" + std::string(name) + "' at line " + std::to_string(line_no));

    DocumentRecord doc;
    doc.name.assign(name);
    doc.word_count = count;
    if (genre) doc.genre = std::string(*genre);
    manifest.documents.push_back(std::move(doc));
  });
  return manifest;
}

std::string write_manifest(const CorpusManifest& manifest) {
  std::string out;
  for (const auto& doc : manifest.documents) {
    if (doc.name.empty() || doc.name.front() == '#' ||
        doc.name.find('\t') != std::string::npos || doc.name.find('\n') != std::string::npos)
      throw Error(Errc::invalid_name, "'" + doc.name + "' cannot be written as TSV");
    if (doc.word_count < 0)
      throw Error(Errc::invalid_name, "'" + doc.name + "' has a negative word count");
    out += doc.name;
    out += '\t';
    out += std::to_string(doc.word_count);
    if (doc.genre && !doc.genre->empty()) {
      out += '\t';
      out += *doc.genre;
    }
    out += '\n';
  }
  return out;
}

}  // namespace corpusdiv

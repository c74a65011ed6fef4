// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0

#include "corpusdiv/corpus_model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace corpusdiv {

std::int64_t CorpusManifest::total_word_count() const {
  std::int64_t total = 0;
  for (const auto& doc : documents) total += doc.word_count;
  return total;
}

namespace {

bool iequals_ascii(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::toupper(static_cast<unsigned char>(a[i])) !=
        std::toupper(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

}  // namespace

DivisionLabel::DivisionLabel(std::string_view value) : value_(value) {
  // Canonical labels fold to upper case; everything else stays verbatim.
  for (std::string_view canonical : {"DEV", "TRAIN", "TEST"}) {
    if (iequals_ascii(value_, canonical)) {
      value_.assign(canonical);
      break;
    }
  }
}

bool DivisionLabel::is_canonical() const noexcept {
  return value_ == "DEV" || value_ == "TRAIN" || value_ == "TEST";
}

std::vector<DocumentRecord> sort_documents(const CorpusManifest& manifest) {
  std::vector<DocumentRecord> docs = manifest.documents;
  // std::string's operator< compares as unsigned char, i.e. bytewise.
  std::stable_sort(docs.begin(), docs.end(),
                   [](const DocumentRecord& a, const DocumentRecord& b) { return a.name < b.name; });
  for (size_t i = 1; i < docs.size(); ++i) {
    if (docs[i - 1].name == docs[i].name)
      throw Error(Errc::duplicate_name, "'" + docs[i].name + "'");
  }
  return docs;
}

std::vector<ManifestViolation> validate_manifest(const CorpusManifest& manifest) {
  std::vector<ManifestViolation> out;
  std::map<std::string, int> seen;
  for (const auto& doc : manifest.documents) {
    if (doc.name.empty())
      out.push_back({doc.name, "empty document name"});
    if (doc.name.find('\t') != std::string::npos)
      out.push_back({doc.name, "document name contains a tab"});
    if (doc.name.find('\n') != std::string::npos)
      out.push_back({doc.name, "document name contains a newline"});
    if (!doc.name.empty() && doc.name.front() == '#')
      out.push_back({doc.name, "document name starts with '#' and cannot survive a TSV round trip"});
    if (doc.word_count < 0)
      out.push_back({doc.name, "negative word count (" + std::to_string(doc.word_count) + ")"});
    if (++seen[doc.name] == 2)  // report each duplicated name once
      out.push_back({doc.name, "duplicate document name"});
  }
  return out;
}

std::map<DivisionLabel, LabelStats> compute_stats(const DivisionAssignment& assignment,
                                                  const CorpusManifest& manifest) {
  std::map<DivisionLabel, LabelStats> stats;
  size_t matched = 0;
  for (const auto& doc : manifest.documents) {
    auto it = assignment.entries.find(doc.name);
    if (it == assignment.entries.end())
      throw Error(Errc::universe_mismatch, "document '" + doc.name + "' has no assignment entry");
    auto& s = stats[it->second];
    s.doc_count += 1;
    s.word_count += doc.word_count;
    ++matched;
  }
  if (matched != assignment.entries.size()) {
    // entries hold names absent from the manifest; find one to report
    std::set<std::string> names;
    for (const auto& doc : manifest.documents) names.insert(doc.name);
    for (const auto& [name, label] : assignment.entries) {
      if (!names.count(name))
        throw Error(Errc::universe_mismatch, "assignment entry '" + name + "' is not in the manifest");
    }
  }
  return stats;
}

}  // namespace corpusdiv

// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Core domain types for corpus division work: document metadata, manifests,
// division labels and assignments. Everything here is an immutable value
// after construction and every operation is a pure function, so concurrent
// use needs no synchronization.

#ifndef CORPUSDIV_CORPUS_MODEL_HPP
#define CORPUSDIV_CORPUS_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corpusdiv/error.hpp"

namespace corpusdiv {

// One corpus document: unique name, raw word count, optional genre tag.
// Names are treated verbatim (never normalized) and must survive a TSV
// round trip: no tab, no newline, and no leading '#' (comment marker).
struct DocumentRecord {
  std::string name;
  std::int64_t word_count = 0;
  std::optional<std::string> genre;

  friend bool operator==(const DocumentRecord&, const DocumentRecord&) = default;
};

// A named collection of documents. Member order is whatever the producer
// supplied; canonical order is obtained with sort_documents().
struct CorpusManifest {
  std::string corpus_id;
  std::vector<DocumentRecord> documents;

  std::int64_t total_word_count() const;

  friend bool operator==(const CorpusManifest&, const CorpusManifest&) = default;
};

// A division label. The canonical labels DEV, TRAIN and TEST compare
// case-insensitively (they are folded to upper case at construction);
// any other label is preserved verbatim, e.g. DEVTEST, TUNE or the
// genre-namespaced "NW:DEV" used by stratified splits.
class DivisionLabel {
 public:
  DivisionLabel() = default;
  explicit DivisionLabel(std::string_view value);

  static DivisionLabel dev() { return DivisionLabel("DEV"); }
  static DivisionLabel train() { return DivisionLabel("TRAIN"); }
  static DivisionLabel test() { return DivisionLabel("TEST"); }

  const std::string& value() const noexcept { return value_; }
  bool is_canonical() const noexcept;  // DEV, TRAIN or TEST

  friend auto operator<=>(const DivisionLabel&, const DivisionLabel&) = default;

 private:
  std::string value_;
};

struct LabelStats {
  std::int64_t doc_count = 0;
  std::int64_t word_count = 0;

  friend bool operator==(const LabelStats&, const LabelStats&) = default;
};

// Total mapping from document name to division label. Per-label statistics
// are always derived from the entries plus a manifest (compute_stats), so
// they can never drift out of sync with the entries.
struct DivisionAssignment {
  std::string corpus_id;
  std::map<std::string, DivisionLabel> entries;

  friend bool operator==(const DivisionAssignment&, const DivisionAssignment&) = default;
};

// Documents in ascending bytewise (unsigned char) lexicographic order of
// name. Deterministic and locale-independent; the input manifest is not
// modified. Throws Errc::duplicate_name if two documents share a name.
std::vector<DocumentRecord> sort_documents(const CorpusManifest& manifest);

struct ManifestViolation {
  std::string document;  // offending document name (may be empty)
  std::string message;

  friend bool operator==(const ManifestViolation&, const ManifestViolation&) = default;
};

// Reports duplicate names, empty names, names that cannot survive the TSV
// format (tab, newline, leading '#'), and negative word counts. An empty
// report means the manifest satisfies all invariants. Violations are data,
// not failures: this never throws.
std::vector<ManifestViolation> validate_manifest(const CorpusManifest& manifest);

// Per-label doc/word counts recomputed from entries plus the manifest.
// Throws Errc::universe_mismatch unless the entries and the manifest cover
// exactly the same document names.
std::map<DivisionLabel, LabelStats> compute_stats(const DivisionAssignment& assignment,
                                                  const CorpusManifest& manifest);

}  // namespace corpusdiv

#endif  // CORPUSDIV_CORPUS_MODEL_HPP

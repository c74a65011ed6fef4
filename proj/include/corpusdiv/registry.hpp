// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Built-in registry of published reference divisions for the LDC Arabic
// treebanks (ATB1-ATB12, ARZ1-ARZ8, spoken Levantine), transcribed verbatim
// from their published tables, plus operations to resolve them against
// user-supplied manifests.
//
// Schemes:
//   "10-80-10"     front/back greedy DEV/TRAIN/TEST for every treebank.
//                  ATB6 is multi-genre and is stored as the sub-treebanks
//                  ATB6/NW, ATB6/NG and ATB6/WL, never aggregated.
//   "zitouni"      ATB3 as TRAIN + a combined DEVTEST.
//   "mada"         ATB1/ATB2 entirely TRAIN; ATB3 as TRAIN/DEV/TEST.
//   "jhu-stanford" no rows: its DEVTEST was drawn randomly, so it cannot be
//                  expressed as sorted-order ranges. Compare it through
//                  explicitly supplied file lists (compare_assignments).

#ifndef CORPUSDIV_REGISTRY_HPP
#define CORPUSDIV_REGISTRY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corpusdiv/compat.hpp"
#include "corpusdiv/corpus_model.hpp"

namespace corpusdiv {

// One registry row: a division of one treebank under one scheme, with its
// printed document/word counts and first/last document names in sorted
// order. Values are stored exactly as published, including suffix-spelling
// quirks; a transcription never "fixes" its source.
struct ReferenceDivision {
  std::string scheme;
  std::string treebank;
  DivisionLabel label;
  std::int64_t n_docs = 0;
  std::int64_t n_words = 0;
  std::string first_doc;
  std::string last_doc;

  friend bool operator==(const ReferenceDivision&, const ReferenceDivision&) = default;
};

struct TreebankMeta {
  std::string treebank;
  std::string version;
  std::string ldc_catalog;  // LDC<year><letter><number>
};

// Full embedded tables, in scheme/table order.
const std::vector<ReferenceDivision>& reference_divisions();
const std::vector<TreebankMeta>& treebank_metadata();

std::vector<std::string> registry_schemes();
std::optional<std::string> scheme_note(std::string_view scheme);

// All rows of one scheme, optionally narrowed to one treebank, in
// sorted-range order. Throws Errc::unknown_scheme / Errc::unknown_treebank.
std::vector<ReferenceDivision> list_reference(std::string_view scheme,
                                              std::optional<std::string_view> treebank = {});

// Converts one complete (scheme, treebank) row set into half-open index
// intervals by cumulative document counts, starting at 0. Throws
// Errc::incomplete_scheme when the rows are not the full registry row set
// for their key (they would not tile the corpus).
std::vector<IntervalDivision> to_intervals(const std::vector<ReferenceDivision>& rows);

// to_intervals wrapped with the registry lookup, as a named scheme.
IntervalScheme reference_intervals(std::string_view scheme, std::string_view treebank);

// Resolves registry rows against a concrete manifest of the same treebank:
// sorts the manifest, assigns every document with first_doc <= name <=
// last_doc (bytewise) each row's label, and verifies the outcome.
//
// Throws Errc::ranges_overlap_or_gap when the located ranges do not tile
// the sorted manifest, Errc::count_mismatch when a label's document or word
// count disagrees with the row (the signature of a manifest from a
// different corpus version), and Errc::boundary_not_found when a row's
// boundary document is absent. Count verification runs before boundary
// presence: a missing interior document surfaces as the count mismatch it
// causes, not as a missing boundary.
DivisionAssignment resolve_assignment(const CorpusManifest& manifest,
                                      const std::vector<ReferenceDivision>& rows);

enum class CheckSeverity { failure, info };

struct RegistryCheck {
  CheckSeverity severity = CheckSeverity::failure;
  std::string message;
};

// Arithmetic consistency of the embedded data: strict 10% exceedance of
// every 10-80-10 DEV and TEST row against its treebank total, bytewise
// ordering of every document range, catalog-number shape, and the
// cross-scheme identities tying zitouni and mada to the 10-80-10 tables.
// Known typographical oddities (e.g. a numeric gap between two adjacent
// ranges) are reported as info, not failures. The shipped data yields no
// failures.
std::vector<RegistryCheck> registry_selfcheck();

// TSV exports for auditing.
// Divisions: scheme<TAB>treebank<TAB>label<TAB>n_docs<TAB>n_words<TAB>first_doc<TAB>last_doc
// Meta:      treebank<TAB>version<TAB>catalog
std::string export_divisions_tsv();
std::string export_meta_tsv();

}  // namespace corpusdiv

#endif  // CORPUSDIV_REGISTRY_HPP

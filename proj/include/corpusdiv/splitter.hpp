// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0
//
// The deterministic front/back greedy division procedure.
//
// Documents are sorted by name. DEV is the shortest prefix of the sorted
// list whose word sum strictly exceeds dev_fraction of the corpus total;
// TEST is the shortest suffix whose word sum strictly exceeds test_fraction
// of the total; TRAIN is everything in between. Whole documents only, no
// randomness, thresholds computed against the full corpus total for both
// ends. "Exceeds" is strict: a sum equal to the threshold does not stop
// the greedy.

#ifndef CORPUSDIV_SPLITTER_HPP
#define CORPUSDIV_SPLITTER_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "corpusdiv/corpus_model.hpp"
#include "corpusdiv/fraction.hpp"

namespace corpusdiv {

struct SplitPolicy {
  Fraction dev_fraction = Fraction::of(1, 10);
  Fraction test_fraction = Fraction::of(1, 10);
  bool stratify_by_genre = false;

  // Throws Errc::invalid_fraction unless 0 < dev, 0 < test, dev + test < 1.
  void validate() const;
};

// Divides the manifest into DEV / TRAIN / TEST per the greedy procedure.
//
// Throws Errc::empty_corpus when the total word count is 0, and
// Errc::division_infeasible when the DEV prefix and TEST suffix would
// overlap or leave TRAIN empty (corpus too small or too skewed for the
// policy). Infeasibility is an error, never a best-effort fallback.
DivisionAssignment split(const CorpusManifest& manifest, const SplitPolicy& policy = {});

// Partitions the manifest by genre and applies split independently to each
// genre sub-manifest, keyed by genre. Every document must carry a genre tag
// (Errc::missing_genre otherwise); per-genre infeasibility errors carry the
// genre in their message.
std::map<std::string, DivisionAssignment> split_stratified(const CorpusManifest& manifest,
                                                           const SplitPolicy& policy);

// Carves an extra division out of TRAIN: reassigns the shortest prefix of
// TRAIN's sorted document range whose word sum strictly exceeds
// target_fraction of the corpus total to new_label. DEV and TEST entries
// are untouched, byte for byte. Taking from the front of TRAIN keeps the
// new division maximally distant from TEST.
//
// Throws Errc::label_clash if new_label already exists (this includes the
// canonical DEV/TRAIN/TEST names), Errc::invalid_fraction unless
// 0 < target_fraction < 1, and Errc::insufficient_train when TRAIN cannot
// supply the target without emptying itself.
DivisionAssignment carve_extra(const DivisionAssignment& assignment,
                               const CorpusManifest& manifest,
                               const DivisionLabel& new_label,
                               Fraction target_fraction);

// Checks an assignment against every property the greedy guarantees:
// partition of the manifest, expected labels, contiguity (DEV block, then
// TRAIN, then TEST in sorted order), strict threshold exceedance, and
// minimality (dropping DEV's last or TEST's first document falls to or
// below the threshold). Returns one message per violated property; empty
// means the assignment equals the rule-generated split. With
// policy.stratify_by_genre the checks run per genre family over
// "GENRE:LABEL" entries.
std::vector<std::string> verify_division(const CorpusManifest& manifest,
                                         const DivisionAssignment& assignment,
                                         const SplitPolicy& policy);

// Assignment TSV: "name<TAB>LABEL", one line per document, sorted by name.
DivisionAssignment load_assignment(std::string_view tsv, std::string corpus_id = {});
std::string write_assignment(const DivisionAssignment& assignment);

}  // namespace corpusdiv

#endif  // CORPUSDIV_SPLITTER_HPP

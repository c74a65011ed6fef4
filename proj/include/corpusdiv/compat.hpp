// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Interval and set algebra over division schemes: overlap matrices,
// train/test contamination checks, and TEST superset verification.

#ifndef CORPUSDIV_COMPAT_HPP
#define CORPUSDIV_COMPAT_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "corpusdiv/corpus_model.hpp"

namespace corpusdiv {

// A division expressed as a half-open index interval [start, end) over the
// sorted document list of one corpus. This is the unit of compatibility
// arithmetic: two schemes over the same corpus version share one sorted
// list, so document overlap reduces to interval intersection.
struct IntervalDivision {
  DivisionLabel label;
  std::int64_t start = 0;
  std::int64_t end = 0;

  std::int64_t size() const noexcept { return end - start; }

  friend bool operator==(const IntervalDivision&, const IntervalDivision&) = default;
};

// One scheme's divisions, tiling [0, N) in order.
struct IntervalScheme {
  std::string scheme_id;
  std::vector<IntervalDivision> divisions;

  std::int64_t corpus_size() const noexcept {
    return divisions.empty() ? 0 : divisions.back().end;
  }
};

struct OverlapPair {
  std::string a;  // label from scheme A
  std::string b;  // label from scheme B
  std::int64_t docs = 0;
  std::optional<std::int64_t> words;  // only when per-document counts are known

  friend bool operator==(const OverlapPair&, const OverlapPair&) = default;
};

struct ContaminationHit {
  std::string train;  // "scheme.LABEL" owning the train side
  std::string test;   // "scheme.LABEL" owning the test side
  std::int64_t docs = 0;

  friend bool operator==(const ContaminationHit&, const ContaminationHit&) = default;
};

// Pairwise shared document counts between two schemes, plus every
// TRAIN-vs-TEST pair that overlaps. Only pairs with nonzero overlap are
// listed; for each label of A the listed counts sum to that label's size,
// because B's labels tile the corpus.
struct OverlapReport {
  std::int64_t corpus_size = 0;
  std::vector<OverlapPair> pairs;
  std::vector<ContaminationHit> contamination;
};

// Pairwise overlap between two interval schemes over the same sorted
// corpus. Throws Errc::mismatched_corpus_size when the schemes cover
// different totals and Errc::ranges_overlap_or_gap when either scheme does
// not tile its range.
OverlapReport overlap_intervals(const IntervalScheme& scheme_a, const IntervalScheme& scheme_b);

struct ContaminationResult {
  bool safe = false;            // true iff the two interval sets are disjoint
  std::int64_t shared_docs = 0;
};

// Disjointness of one scheme's named TRAIN division against another
// scheme's named TEST division. Throws Errc::unknown_label when a label is
// absent from its scheme.
ContaminationResult contamination_check(const IntervalScheme& train_scheme,
                                        const DivisionLabel& train_label,
                                        const IntervalScheme& test_scheme,
                                        const DivisionLabel& test_label);

// Exact name-set overlap between two assignments over the same document
// universe. Handles schemes that cannot be expressed as sorted-order
// ranges (e.g. randomly drawn file lists supplied externally). Word counts
// are included when a manifest covering the universe is supplied. Throws
// Errc::universe_mismatch listing symmetric-difference names.
OverlapReport compare_assignments(const DivisionAssignment& assignment_a,
                                  const DivisionAssignment& assignment_b,
                                  const CorpusManifest* manifest = nullptr,
                                  std::string id_a = "A", std::string id_b = "B");

struct SupersetResult {
  bool contains = false;              // old_test is a subset of new_test
  std::vector<std::string> missing;   // old names absent from new, sorted
};

// True iff old_test is a subset of new_test; otherwise lists the missing
// names. A new TEST division that passes this against every older one keeps
// prior evaluation results comparable.
SupersetResult test_superset_check(const std::set<std::string>& new_test,
                                   const std::set<std::string>& old_test);

struct IntervalSupersetResult {
  bool contains = false;
  std::int64_t missing_docs = 0;
};

// Interval form of the superset check, for schemes over one sorted corpus.
IntervalSupersetResult interval_superset_check(const std::vector<IntervalDivision>& new_test,
                                               const std::vector<IntervalDivision>& old_test);

// Interval view of an assignment over its manifest's sorted order. Throws
// Errc::ranges_overlap_or_gap if any label occupies a non-contiguous run.
std::vector<IntervalDivision> intervals_from_assignment(const DivisionAssignment& assignment,
                                                        const CorpusManifest& manifest);

// Report rendering. JSON keys are emitted in schema order
// {corpus_size, pairs:[{a,b,docs,words?}], contamination:[{train,test,docs}]}
// and both forms are byte-stable for identical inputs.
std::string render_report_json(const OverlapReport& report);
std::string render_report_text(const OverlapReport& report);

}  // namespace corpusdiv

#endif  // CORPUSDIV_COMPAT_HPP

// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0

#include "corpusdiv/registry.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "corpusdiv/error.hpp"

namespace corpusdiv {

namespace {

constexpr std::string_view kJhuScheme = "jhu-stanford";
constexpr std::string_view kJhuNote =
    "the jhu-stanford DEVTEST was drawn randomly, so it cannot be expressed as "
    "ranges over a sorted document list; compare it by supplying the published "
    "file list as an assignment";

}  // namespace

std::vector<std::string> registry_schemes() {
  return {"10-80-10", "zitouni", "mada", std::string(kJhuScheme)};
}

std::optional<std::string> scheme_note(std::string_view scheme) {
  if (scheme == kJhuScheme) return std::string(kJhuNote);
  return std::nullopt;
}

std::vector<ReferenceDivision> list_reference(std::string_view scheme,
                                              std::optional<std::string_view> treebank) {
  const auto schemes = registry_schemes();
  if (std::find(schemes.begin(), schemes.end(), scheme) == schemes.end())
    throw Error(Errc::unknown_scheme, "'" + std::string(scheme) + "'");

  std::vector<ReferenceDivision> out;
  bool scheme_has_rows = false;
  for (const auto& row : reference_divisions()) {
    if (row.scheme != scheme) continue;
    scheme_has_rows = true;
    if (!treebank || row.treebank == *treebank) out.push_back(row);
  }
  if (treebank && out.empty()) {
    std::string msg = "'" + std::string(*treebank) + "' in scheme '" + std::string(scheme) + "'";
    if (scheme_has_rows && *treebank == "ATB6")
      msg += " (ATB6 is multi-genre; use ATB6/NW, ATB6/NG or ATB6/WL)";
    throw Error(Errc::unknown_treebank, msg);
  }
  return out;
}

std::vector<IntervalDivision> to_intervals(const std::vector<ReferenceDivision>& rows) {
  if (rows.empty()) throw Error(Errc::incomplete_scheme, "no rows given");
  const std::string& scheme = rows.front().scheme;
  const std::string& treebank = rows.front().treebank;
  for (const auto& row : rows) {
    if (row.scheme != scheme || row.treebank != treebank)
      throw Error(Errc::incomplete_scheme,
                  "rows span more than one (scheme, treebank): " + scheme + "/" + treebank +
                      " vs " + row.scheme + "/" + row.treebank);
  }
  // The registry knows the complete row set for this key; anything else
  // cannot tile the corpus.
  std::vector<ReferenceDivision> expected;
  for (const auto& row : reference_divisions())
    if (row.scheme == scheme && row.treebank == treebank) expected.push_back(row);
  if (!expected.empty() && rows != expected)
    throw Error(Errc::incomplete_scheme,
                "rows do not form the complete division set of " + scheme + "/" + treebank);

  std::vector<IntervalDivision> intervals;
  std::int64_t cursor = 0;
  for (const auto& row : rows) {
    intervals.push_back({row.label, cursor, cursor + row.n_docs});
    cursor += row.n_docs;
  }
  return intervals;
}

IntervalScheme reference_intervals(std::string_view scheme, std::string_view treebank) {
  return {std::string(scheme), to_intervals(list_reference(scheme, treebank))};
}

DivisionAssignment resolve_assignment(const CorpusManifest& manifest,
                                      const std::vector<ReferenceDivision>& rows) {
  if (rows.empty()) throw Error(Errc::incomplete_scheme, "no rows given");
  const std::vector<DocumentRecord> docs = sort_documents(manifest);
  const size_t n = docs.size();

  const auto name_lower_bound = [&](const std::string& name) {
    return static_cast<size_t>(std::lower_bound(docs.begin(), docs.end(), name,
                                                [](const DocumentRecord& d, const std::string& v) {
                                                  return d.name < v;
                                                }) -
                               docs.begin());
  };

  // Each row claims the documents whose names fall in [first_doc, last_doc]
  // bytewise; the boundary names themselves need not exist to locate the
  // range (their presence is verified last).
  struct Located {
    const ReferenceDivision* row;
    size_t begin;
    size_t end;
  };
  std::vector<Located> located;
  for (const auto& row : rows) {
    const size_t begin = name_lower_bound(row.first_doc);
    size_t end = name_lower_bound(row.last_doc);
    if (end < n && docs[end].name == row.last_doc) ++end;  // inclusive upper bound
    if (end < begin)
      throw Error(Errc::ranges_overlap_or_gap,
                  "row " + row.label.value() + " has first_doc after last_doc");
    located.push_back({&row, begin, end});
  }

  size_t cursor = 0;
  for (const auto& loc : located) {
    if (loc.begin != cursor)
      throw Error(Errc::ranges_overlap_or_gap,
                  "range of label " + loc.row->label.value() + " starts at sorted index " +
                      std::to_string(loc.begin) + ", expected " + std::to_string(cursor));
    cursor = loc.end;
  }
  if (cursor != n)
    throw Error(Errc::ranges_overlap_or_gap,
                "ranges cover " + std::to_string(cursor) + " of " + std::to_string(n) +
                    " documents");

  for (const auto& loc : located) {
    const std::int64_t actual_docs = static_cast<std::int64_t>(loc.end - loc.begin);
    if (actual_docs != loc.row->n_docs)
      throw Error(Errc::count_mismatch,
                  loc.row->label.value() + " expected " + std::to_string(loc.row->n_docs) +
                      " documents, manifest yields " + std::to_string(actual_docs) +
                      " (different corpus version?)");
    std::int64_t actual_words = 0;
    for (size_t i = loc.begin; i < loc.end; ++i) actual_words += docs[i].word_count;
    if (actual_words != loc.row->n_words)
      throw Error(Errc::count_mismatch,
                  loc.row->label.value() + " expected " + std::to_string(loc.row->n_words) +
                      " words, manifest yields " + std::to_string(actual_words) +
                      " (different corpus version?)");
  }

  for (const auto& loc : located) {
    for (const std::string* boundary : {&loc.row->first_doc, &loc.row->last_doc}) {
      const size_t i = name_lower_bound(*boundary);
      if (i >= n || docs[i].name != *boundary)
        throw Error(Errc::boundary_not_found, "'" + *boundary + "'");
    }
  }

  DivisionAssignment assignment;
  assignment.corpus_id = manifest.corpus_id;
  for (const auto& loc : located)
    for (size_t i = loc.begin; i < loc.end; ++i)
      assignment.entries.emplace(docs[i].name, loc.row->label);
  return assignment;
}

namespace {

struct TableTotals {
  std::int64_t docs = 0;
  std::int64_t words = 0;
};

// Splits "PREFIX.1234" into its stem and numeric suffix value.
std::optional<std::pair<std::string_view, std::int64_t>> numeric_suffix(std::string_view name) {
  const size_t dot = name.rfind('.');
  if (dot == std::string_view::npos || dot + 1 == name.size()) return std::nullopt;
  const std::string_view digits = name.substr(dot + 1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return std::make_pair(name.substr(0, dot), value);
}

}  // namespace

std::vector<RegistryCheck> registry_selfcheck() {
  std::vector<RegistryCheck> out;
  const auto fail = [&](std::string msg) {
    out.push_back({CheckSeverity::failure, std::move(msg)});
  };
  const auto info = [&](std::string msg) {
    out.push_back({CheckSeverity::info, std::move(msg)});
  };

  // Group rows per (scheme, treebank), preserving registry order.
  std::vector<std::pair<std::string, std::vector<const ReferenceDivision*>>> groups;
  for (const auto& row : reference_divisions()) {
    const std::string key = row.scheme + "/" + row.treebank;
    if (groups.empty() || groups.back().first != key) groups.push_back({key, {}});
    groups.back().second.push_back(&row);
  }

  std::map<std::string, TableTotals> totals;
  for (const auto& [key, rows] : groups) {
    TableTotals t;
    for (const auto* row : rows) {
      t.docs += row->n_docs;
      t.words += row->n_words;
      if (row->n_docs <= 0 || row->n_words <= 0)
        fail(key + " " + row->label.value() + ": non-positive counts");
      if (!(row->first_doc <= row->last_doc))
        fail(key + " " + row->label.value() + ": first_doc sorts after last_doc");
    }
    totals[key] = t;

    for (size_t i = 1; i < rows.size(); ++i) {
      const auto* prev = rows[i - 1];
      const auto* next = rows[i];
      if (!(prev->last_doc < next->first_doc))
        fail(key + ": " + prev->label.value() + " range does not precede " +
             next->label.value() + " range in bytewise order");
      // Adjacent ranges whose boundary names share a stem and carry numeric
      // suffixes should be consecutive; a hole means the printed table skips
      // a document name. Informational: transcription stores what is printed.
      const auto a = numeric_suffix(prev->last_doc);
      const auto b = numeric_suffix(next->first_doc);
      if (a && b && a->first == b->first && b->second > a->second + 1)
        info(key + ": boundary names " + prev->last_doc + " and " + next->first_doc +
             " leave " + std::to_string(b->second - a->second - 1) +
             " intermediate name(s) unaccounted");
    }

    if (rows.front()->scheme == "10-80-10") {
      if (rows.size() != 3 || !(rows[0]->label == DivisionLabel::dev()) ||
          !(rows[1]->label == DivisionLabel::train()) ||
          !(rows[2]->label == DivisionLabel::test())) {
        fail(key + ": expected DEV/TRAIN/TEST rows");
        continue;
      }
      // Strict 10% exceedance in exact integer arithmetic.
      if (rows[0]->n_words * 10 <= t.words)
        fail(key + ": DEV words " + std::to_string(rows[0]->n_words) +
             " do not exceed 10% of " + std::to_string(t.words));
      if (rows[2]->n_words * 10 <= t.words)
        fail(key + ": TEST words " + std::to_string(rows[2]->n_words) +
             " do not exceed 10% of " + std::to_string(t.words));
    }
  }

  // Cross-scheme identities.
  const auto expect_equal = [&](const std::string& what, std::int64_t a, std::int64_t b) {
    if (a != b)
      fail(what + ": " + std::to_string(a) + " != " + std::to_string(b));
  };
  expect_equal("zitouni/ATB3 total docs vs 10-80-10/ATB3", totals["zitouni/ATB3"].docs,
               totals["10-80-10/ATB3"].docs);
  expect_equal("zitouni/ATB3 total words vs 10-80-10/ATB3", totals["zitouni/ATB3"].words,
               totals["10-80-10/ATB3"].words);
  expect_equal("mada/ATB1 TRAIN docs vs 10-80-10/ATB1 total", totals["mada/ATB1"].docs,
               totals["10-80-10/ATB1"].docs);
  expect_equal("mada/ATB1 TRAIN words vs 10-80-10/ATB1 total", totals["mada/ATB1"].words,
               totals["10-80-10/ATB1"].words);
  expect_equal("mada/ATB2 TRAIN docs vs 10-80-10/ATB2 total", totals["mada/ATB2"].docs,
               totals["10-80-10/ATB2"].docs);
  expect_equal("mada/ATB2 TRAIN words vs 10-80-10/ATB2 total", totals["mada/ATB2"].words,
               totals["10-80-10/ATB2"].words);

  std::int64_t mada_atb3_devtest_docs = 0;
  std::int64_t zitouni_devtest_docs = 0;
  for (const auto& row : reference_divisions()) {
    if (row.scheme == "mada" && row.treebank == "ATB3" &&
        (row.label == DivisionLabel::dev() || row.label == DivisionLabel::test()))
      mada_atb3_devtest_docs += row.n_docs;
    if (row.scheme == "zitouni" && row.label == DivisionLabel("DEVTEST"))
      zitouni_devtest_docs = row.n_docs;
  }
  expect_equal("mada/ATB3 DEV+TEST docs vs zitouni DEVTEST", mada_atb3_devtest_docs,
               zitouni_devtest_docs);

  // Catalog numbers: LDC<year><letter><number>.
  for (const auto& meta : treebank_metadata()) {
    const std::string& c = meta.ldc_catalog;
    bool ok = c.size() >= 9 && c.compare(0, 3, "LDC") == 0;
    for (size_t i = 3; ok && i < 7; ++i) ok = c[i] >= '0' && c[i] <= '9';
    ok = ok && c[7] >= 'A' && c[7] <= 'Z';
    for (size_t i = 8; ok && i < c.size(); ++i) ok = c[i] >= '0' && c[i] <= '9';
    if (!ok) fail(meta.treebank + ": catalog '" + c + "' does not match LDC<year><letter><number>");
  }

  return out;
}

std::string export_divisions_tsv() {
  std::string out;
  for (const auto& row : reference_divisions()) {
    out += row.scheme;
    out += '\t';
    out += row.treebank;
    out += '\t';
    out += row.label.value();
    out += '\t';
    out += std::to_string(row.n_docs);
    out += '\t';
    out += std::to_string(row.n_words);
    out += '\t';
    out += row.first_doc;
    out += '\t';
    out += row.last_doc;
    out += '\n';
  }
  return out;
}

std::string export_meta_tsv() {
  std::string out;
  for (const auto& meta : treebank_metadata()) {
    out += meta.treebank;
    out += '\t';
    out += meta.version;
    out += '\t';
    out += meta.ldc_catalog;
    out += '\n';
  }
  return out;
}

}  // namespace corpusdiv

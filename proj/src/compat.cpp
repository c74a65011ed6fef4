// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0

#include "corpusdiv/compat.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "corpusdiv/error.hpp"

namespace corpusdiv {

namespace {

std::int64_t intersection_size(const IntervalDivision& a, const IntervalDivision& b) {
  const std::int64_t lo = std::max(a.start, b.start);
  const std::int64_t hi = std::min(a.end, b.end);
  return hi > lo ? hi - lo : 0;
}

void require_tiling(const IntervalScheme& scheme) {
  std::int64_t cursor = 0;
  for (const auto& div : scheme.divisions) {
    if (div.start != cursor || div.end <= div.start)
      throw Error(Errc::ranges_overlap_or_gap,
                  "scheme '" + scheme.scheme_id + "' does not tile its corpus at label '" +
                      div.label.value() + "'");
    cursor = div.end;
  }
}

bool is_train_like(const std::string& label) {
  return label == "TRAIN" || label.ends_with(":TRAIN");
}

bool is_test_like(const std::string& label) {
  return label == "TEST" || label == "DEVTEST" || label.ends_with(":TEST") ||
         label.ends_with(":DEVTEST");
}

void add_contamination(std::vector<ContaminationHit>& hits, const std::string& id_a,
                       const std::string& label_a, const std::string& id_b,
                       const std::string& label_b, std::int64_t docs) {
  if (docs <= 0) return;
  if (is_train_like(label_a) && is_test_like(label_b))
    hits.push_back({id_a + "." + label_a, id_b + "." + label_b, docs});
  if (is_test_like(label_a) && is_train_like(label_b))
    hits.push_back({id_b + "." + label_b, id_a + "." + label_a, docs});
}

}  // namespace

OverlapReport overlap_intervals(const IntervalScheme& scheme_a, const IntervalScheme& scheme_b) {
  require_tiling(scheme_a);
  require_tiling(scheme_b);
  if (scheme_a.corpus_size() != scheme_b.corpus_size())
    throw Error(Errc::mismatched_corpus_size,
                scheme_a.scheme_id + " covers " + std::to_string(scheme_a.corpus_size()) +
                    " documents, " + scheme_b.scheme_id + " covers " +
                    std::to_string(scheme_b.corpus_size()));

  OverlapReport report;
  report.corpus_size = scheme_a.corpus_size();
  for (const auto& a : scheme_a.divisions) {
    for (const auto& b : scheme_b.divisions) {
      const std::int64_t shared = intersection_size(a, b);
      if (shared > 0) report.pairs.push_back({a.label.value(), b.label.value(), shared, {}});
      add_contamination(report.contamination, scheme_a.scheme_id, a.label.value(),
                        scheme_b.scheme_id, b.label.value(), shared);
    }
  }
  return report;
}

ContaminationResult contamination_check(const IntervalScheme& train_scheme,
                                        const DivisionLabel& train_label,
                                        const IntervalScheme& test_scheme,
                                        const DivisionLabel& test_label) {
  require_tiling(train_scheme);
  require_tiling(test_scheme);
  if (train_scheme.corpus_size() != test_scheme.corpus_size())
    throw Error(Errc::mismatched_corpus_size,
                train_scheme.scheme_id + " covers " + std::to_string(train_scheme.corpus_size()) +
                    " documents, " + test_scheme.scheme_id + " covers " +
                    std::to_string(test_scheme.corpus_size()));

  const auto collect = [](const IntervalScheme& scheme, const DivisionLabel& label) {
    std::vector<const IntervalDivision*> out;
    for (const auto& div : scheme.divisions)
      if (div.label == label) out.push_back(&div);
    if (out.empty())
      throw Error(Errc::unknown_label,
                  "'" + label.value() + "' in scheme '" + scheme.scheme_id + "'");
    return out;
  };

  ContaminationResult result;
  for (const auto* train : collect(train_scheme, train_label))
    for (const auto* test : collect(test_scheme, test_label))
      result.shared_docs += intersection_size(*train, *test);
  result.safe = result.shared_docs == 0;
  return result;
}

OverlapReport compare_assignments(const DivisionAssignment& assignment_a,
                                  const DivisionAssignment& assignment_b,
                                  const CorpusManifest* manifest,
                                  std::string id_a, std::string id_b) {
  // Same universe, or nothing is comparable.
  std::vector<std::string> only_a, only_b;
  for (const auto& [name, label] : assignment_a.entries)
    if (!assignment_b.entries.count(name)) only_a.push_back(name);
  for (const auto& [name, label] : assignment_b.entries)
    if (!assignment_a.entries.count(name)) only_b.push_back(name);
  if (!only_a.empty() || !only_b.empty()) {
    std::string msg = "assignments cover different documents;";
    size_t listed = 0;
    for (const auto& name : only_a) {
      if (listed++ == 8) break;
      msg += " only-in-" + id_a + ": '" + name + "'";
    }
    for (const auto& name : only_b) {
      if (listed++ == 8) break;
      msg += " only-in-" + id_b + ": '" + name + "'";
    }
    if (only_a.size() + only_b.size() > listed) msg += " ...";
    throw Error(Errc::universe_mismatch, msg);
  }

  std::map<std::string, std::int64_t> word_of;
  if (manifest) {
    for (const auto& doc : manifest->documents) word_of[doc.name] = doc.word_count;
    for (const auto& [name, label] : assignment_a.entries)
      if (!word_of.count(name))
        throw Error(Errc::universe_mismatch,
                    "manifest does not cover document '" + name + "'");
  }

  // label pair -> (docs, words), keyed in label order for stable output.
  std::map<std::pair<std::string, std::string>, std::pair<std::int64_t, std::int64_t>> cells;
  for (const auto& [name, label_a] : assignment_a.entries) {
    const DivisionLabel& label_b = assignment_b.entries.at(name);
    auto& cell = cells[{label_a.value(), label_b.value()}];
    cell.first += 1;
    if (manifest) cell.second += word_of[name];
  }

  OverlapReport report;
  report.corpus_size = static_cast<std::int64_t>(assignment_a.entries.size());
  for (const auto& [key, cell] : cells) {
    OverlapPair pair{key.first, key.second, cell.first, {}};
    if (manifest) pair.words = cell.second;
    report.pairs.push_back(std::move(pair));
    add_contamination(report.contamination, id_a, key.first, id_b, key.second, cell.first);
  }
  return report;
}

SupersetResult test_superset_check(const std::set<std::string>& new_test,
                                   const std::set<std::string>& old_test) {
  SupersetResult result;
  for (const auto& name : old_test)
    if (!new_test.count(name)) result.missing.push_back(name);
  result.contains = result.missing.empty();
  return result;
}

IntervalSupersetResult interval_superset_check(const std::vector<IntervalDivision>& new_test,
                                               const std::vector<IntervalDivision>& old_test) {
  IntervalSupersetResult result;
  for (const auto& old_div : old_test) {
    std::int64_t covered = 0;
    for (const auto& new_div : new_test) covered += intersection_size(old_div, new_div);
    result.missing_docs += old_div.size() - covered;
  }
  result.contains = result.missing_docs == 0;
  return result;
}

std::vector<IntervalDivision> intervals_from_assignment(const DivisionAssignment& assignment,
                                                        const CorpusManifest& manifest) {
  const std::vector<DocumentRecord> docs = sort_documents(manifest);
  std::vector<IntervalDivision> intervals;
  std::set<std::string> closed;
  for (size_t i = 0; i < docs.size(); ++i) {
    auto it = assignment.entries.find(docs[i].name);
    if (it == assignment.entries.end())
      throw Error(Errc::universe_mismatch,
                  "document '" + docs[i].name + "' has no assignment entry");
    const DivisionLabel& label = it->second;
    if (!intervals.empty() && intervals.back().label == label) {
      intervals.back().end = static_cast<std::int64_t>(i) + 1;
      continue;
    }
    if (!closed.insert(label.value()).second)
      throw Error(Errc::ranges_overlap_or_gap,
                  "label '" + label.value() + "' occupies non-contiguous runs");
    intervals.push_back({label, static_cast<std::int64_t>(i), static_cast<std::int64_t>(i) + 1});
  }
  return intervals;
}

std::string render_report_json(const OverlapReport& report) {
  nlohmann::ordered_json j;
  j["corpus_size"] = report.corpus_size;
  j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& pair : report.pairs) {
    nlohmann::ordered_json p;
    p["a"] = pair.a;
    p["b"] = pair.b;
    p["docs"] = pair.docs;
    if (pair.words) p["words"] = *pair.words;
    j["pairs"].push_back(std::move(p));
  }
  j["contamination"] = nlohmann::ordered_json::array();
  for (const auto& hit : report.contamination) {
    nlohmann::ordered_json h;
    h["train"] = hit.train;
    h["test"] = hit.test;
    h["docs"] = hit.docs;
    j["contamination"].push_back(std::move(h));
  }
  return j.dump(2) + "\n";
}

std::string render_report_text(const OverlapReport& report) {
  std::string out = "corpus size: " + std::to_string(report.corpus_size) + "\n";
  size_t wa = 1, wb = 1;
  for (const auto& pair : report.pairs) {
    wa = std::max(wa, pair.a.size());
    wb = std::max(wb, pair.b.size());
  }
  const auto pad = [](const std::string& s, size_t width) {
    return s + std::string(width - s.size(), ' ');
  };
  out += "shared documents:\n";
  for (const auto& pair : report.pairs) {
    out += "  " + pad(pair.a, wa) + "  " + pad(pair.b, wb) + "  " + std::to_string(pair.docs);
    if (pair.words) out += "  (" + std::to_string(*pair.words) + " words)";
    out += "\n";
  }
  if (report.contamination.empty()) {
    out += "contamination: none\n";
  } else {
    out += "contamination:\n";
    for (const auto& hit : report.contamination)
      out += "  " + hit.train + " overlaps " + hit.test + " in " + std::to_string(hit.docs) +
             " document(s)\n";
  }
  return out;
}

}  // namespace corpusdiv

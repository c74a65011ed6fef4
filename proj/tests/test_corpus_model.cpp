// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpusdiv/corpus_model.hpp"
#include "support/test_util.hpp"

using namespace corpusdiv;
using testutil::error_code_of;

namespace {

CorpusManifest manifest_of(std::vector<std::pair<std::string, std::int64_t>> docs) {
  CorpusManifest m;
  m.corpus_id = "t";
  for (auto& [name, words] : docs) m.documents.push_back({std::move(name), words, {}});
  return m;
}

}  // namespace

TEST_CASE("sort_documents orders names bytewise") {
  const auto m = manifest_of({{"b", 1}, {"a", 2}, {"c", 3}});
  const auto sorted = sort_documents(m);
  REQUIRE(sorted.size() == 3);
  CHECK(sorted[0].name == "a");
  CHECK(sorted[1].name == "b");
  CHECK(sorted[2].name == "c");
  // input untouched
  CHECK(m.documents[0].name == "b");
}

TEST_CASE("sort_documents puts dated newswire names in chronological order") {
  const auto m = manifest_of(
      {{"ANN20020115.0001", 1}, {"ANN20021215.0045", 1}, {"ANN20020215.0001", 1}});
  const auto sorted = sort_documents(m);
  CHECK(sorted.front().name == "ANN20020115.0001");
  CHECK(sorted.back().name == "ANN20021215.0045");
}

TEST_CASE("sort_documents sorts spaces before alphanumerics") {
  // embedded-space names occur in real treebank file lists
  const auto m = manifest_of({{"ALHURRA_X", 1}, {"ALHURRA X", 1}});
  const auto sorted = sort_documents(m);
  CHECK(sorted.front().name == "ALHURRA X");
}

TEST_CASE("sort_documents rejects duplicates") {
  const auto m = manifest_of({{"x", 1}, {"x", 2}});
  CHECK(error_code_of([&] { sort_documents(m); }) == Errc::duplicate_name);
}

TEST_CASE("sort_documents is idempotent and permutation-invariant") {
  auto m = manifest_of({});
  for (int i = 0; i < 200; ++i)
    m.documents.push_back({"doc" + std::to_string(i * 7919 % 997), i, {}});
  const auto reference = sort_documents(m);
  std::mt19937 rng(42);
  for (int round = 0; round < 20; ++round) {
    std::shuffle(m.documents.begin(), m.documents.end(), rng);
    CHECK(sort_documents(m) == reference);
  }
  // sorting a sorted manifest changes nothing
  CorpusManifest sorted_manifest{m.corpus_id, reference};
  CHECK(sort_documents(sorted_manifest) == reference);
}

TEST_CASE("total_word_count sums the documents") {
  const auto m = manifest_of({{"a", 5}, {"b", 7}, {"c", 0}});
  CHECK(m.total_word_count() == 12);
}

TEST_CASE("validate_manifest accepts a well-formed manifest") {
  const auto m = manifest_of({{"a", 1}, {"b", 2}, {"c", 3}});
  CHECK(validate_manifest(m).empty());
}

TEST_CASE("validate_manifest reports each defect with the document name") {
  CorpusManifest m;
  m.documents.push_back({"neg", -1, {}});
  auto report = validate_manifest(m);
  REQUIRE(report.size() == 1);
  CHECK(report[0].document == "neg");

  m.documents.clear();
  m.documents.push_back({"has\ttab", 1, {}});
  report = validate_manifest(m);
  REQUIRE(report.size() == 1);
  CHECK(report[0].message.find("tab") != std::string::npos);

  m.documents.clear();
  m.documents.push_back({"", 1, {}});
  CHECK(validate_manifest(m).size() == 1);

  m.documents.clear();
  m.documents.push_back({"#comment-like", 1, {}});
  CHECK(validate_manifest(m).size() == 1);

  m.documents.clear();
  m.documents.push_back({"dup", 1, {}});
  m.documents.push_back({"dup", 2, {}});
  report = validate_manifest(m);
  REQUIRE(report.size() == 1);
  CHECK(report[0].message.find("duplicate") != std::string::npos);
}

TEST_CASE("DivisionLabel folds canonical labels case-insensitively") {
  CHECK(DivisionLabel("dev") == DivisionLabel::dev());
  CHECK(DivisionLabel("Train").value() == "TRAIN");
  CHECK(DivisionLabel("TEST").is_canonical());
  // scheme-specific labels stay verbatim
  CHECK(DivisionLabel("DevTest").value() == "DevTest");
  CHECK_FALSE(DivisionLabel("DEVTEST").is_canonical());
  CHECK(DivisionLabel("TUNE").value() == "TUNE");
}

TEST_CASE("compute_stats recomputes per-label doc and word counts") {
  const auto m = manifest_of({{"a", 10}, {"b", 20}, {"c", 30}});
  DivisionAssignment asg;
  asg.corpus_id = "t";
  asg.entries.emplace("a", DivisionLabel::dev());
  asg.entries.emplace("b", DivisionLabel::train());
  asg.entries.emplace("c", DivisionLabel::train());
  const auto stats = compute_stats(asg, m);
  CHECK(stats.at(DivisionLabel::dev()) == LabelStats{1, 10});
  CHECK(stats.at(DivisionLabel::train()) == LabelStats{2, 50});
}

TEST_CASE("compute_stats rejects universe mismatches") {
  const auto m = manifest_of({{"a", 10}, {"b", 20}});
  DivisionAssignment missing;
  missing.entries.emplace("a", DivisionLabel::dev());
  CHECK(error_code_of([&] { compute_stats(missing, m); }) == Errc::universe_mismatch);

  DivisionAssignment extra;
  extra.entries.emplace("a", DivisionLabel::dev());
  extra.entries.emplace("b", DivisionLabel::dev());
  extra.entries.emplace("z", DivisionLabel::dev());
  CHECK(error_code_of([&] { compute_stats(extra, m); }) == Errc::universe_mismatch);
}

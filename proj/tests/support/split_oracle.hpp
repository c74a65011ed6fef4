// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Straight-line transcription of the division procedure, kept independent
// of the library implementation on purpose: tests compare the two.
//
//   1. sort the documents by name
//   2. move documents from the front into DEV until its word count
//      exceeds dev_fraction of the corpus total
//   3. move documents from the back into TEST until its word count
//      exceeds test_fraction of the corpus total
//   4. everything left in the middle is TRAIN
//
// Uses plain (name, weight) pairs and its own arithmetic; the only shared
// vocabulary with the library is the label strings in the result.

#ifndef CORPUSDIV_TESTS_SPLIT_ORACLE_HPP
#define CORPUSDIV_TESTS_SPLIT_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct OracleResult {
  bool feasible = false;
  std::map<std::string, std::string> label_of;  // name -> "DEV"/"TRAIN"/"TEST"
};

inline OracleResult split_oracle(std::vector<std::pair<std::string, std::int64_t>> docs,
                                 std::int64_t dev_num, std::int64_t dev_den,
                                 std::int64_t test_num, std::int64_t test_den) {
  OracleResult result;
  std::sort(docs.begin(), docs.end());

  std::int64_t total_words = 0;
  for (const auto& [name, words] : docs) total_words += words;
  if (total_words <= 0) return result;  // nothing to divide

  const std::size_t n = docs.size();

  // step 2: front into DEV until it exceeds dev_num/dev_den of the total
  std::size_t dev_count = 0;
  std::int64_t dev_words = 0;
  bool dev_done = false;
  while (dev_count < n) {
    dev_words += docs[dev_count].second;
    ++dev_count;
    if (static_cast<__int128>(dev_words) * dev_den >
        static_cast<__int128>(dev_num) * total_words) {
      dev_done = true;
      break;
    }
  }

  // step 3: back into TEST until it exceeds test_num/test_den of the total
  std::size_t test_count = 0;
  std::int64_t test_words = 0;
  bool test_done = false;
  while (test_count < n) {
    test_words += docs[n - 1 - test_count].second;
    ++test_count;
    if (static_cast<__int128>(test_words) * test_den >
        static_cast<__int128>(test_num) * total_words) {
      test_done = true;
      break;
    }
  }

  // step 4: the rest is TRAIN, which must exist and not overlap the ends
  if (!dev_done || !test_done) return result;
  if (dev_count + test_count >= n) return result;

  result.feasible = true;
  for (std::size_t i = 0; i < n; ++i) {
    const char* label = i < dev_count ? "DEV" : i >= n - test_count ? "TEST" : "TRAIN";
    result.label_of.emplace(docs[i].first, label);
  }
  return result;
}

}  // namespace oracle

#endif  // CORPUSDIV_TESTS_SPLIT_ORACLE_HPP

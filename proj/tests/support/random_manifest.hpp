// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic random manifests for property tests: 5-500 documents,
// word counts 1-10000, with a slice of zero-word documents and an
// occasional single giant document to stress the greedy's edge cases.

#ifndef CORPUSDIV_TESTS_RANDOM_MANIFEST_HPP
#define CORPUSDIV_TESTS_RANDOM_MANIFEST_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>

#include "corpusdiv/corpus_model.hpp"

namespace testgen {

inline std::string doc_name(int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "doc%05d", i);
  return buf;
}

inline corpusdiv::CorpusManifest random_manifest(std::mt19937& rng, int case_index) {
  std::uniform_int_distribution<int> n_docs_dist(5, 500);
  std::uniform_int_distribution<std::int64_t> words_dist(1, 10000);
  std::uniform_int_distribution<int> pct(0, 99);

  corpusdiv::CorpusManifest manifest;
  manifest.corpus_id = "case" + std::to_string(case_index);
  const int n = n_docs_dist(rng);
  const bool with_zeros = pct(rng) < 25;       // sprinkle zero-word documents
  const bool with_giant = pct(rng) < 20;       // one document dwarfing the rest
  const int giant_at = with_giant ? pct(rng) % n : -1;
  for (int i = 0; i < n; ++i) {
    corpusdiv::DocumentRecord doc;
    doc.name = doc_name(i);
    if (i == giant_at)
      doc.word_count = 1000000 + words_dist(rng);
    else if (with_zeros && pct(rng) < 20)
      doc.word_count = 0;
    else
      doc.word_count = words_dist(rng);
    manifest.documents.push_back(std::move(doc));
  }
  // Shuffled record order: splitting must not depend on it.
  std::shuffle(manifest.documents.begin(), manifest.documents.end(), rng);
  return manifest;
}

}  // namespace testgen

#endif  // CORPUSDIV_TESTS_RANDOM_MANIFEST_HPP

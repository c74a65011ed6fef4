// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0

#include "corpusdiv/splitter.hpp"

#include <algorithm>
#include <set>

#include "corpusdiv/error.hpp"
#include "tsv_lines.hpp"

namespace corpusdiv {

void SplitPolicy::validate() const {
  if (!dev_fraction.positive() || !test_fraction.positive())
    throw Error(Errc::invalid_fraction, "dev and test fractions must be positive");
  if (!(dev_fraction + test_fraction).below_one())
    throw Error(Errc::invalid_fraction,
                "dev_fraction + test_fraction must be below 1, got " + dev_fraction.str() +
                    " + " + test_fraction.str());
}

namespace {

// Shortest prefix of [begin, end) whose word sum strictly exceeds
// fraction * total. Returns the index one past the prefix, or end + 1 when
// even the whole range does not exceed.
size_t greedy_prefix(const std::vector<DocumentRecord>& docs, size_t begin, size_t end,
                     Fraction fraction, std::int64_t total) {
  std::int64_t sum = 0;
  for (size_t i = begin; i < end; ++i) {
    sum += docs[i].word_count;
    if (fraction.exceeded_by(sum, total)) return i + 1;
  }
  return end + 1;
}

// Mirror image: shortest suffix of [begin, end) strictly exceeding the
// threshold. Returns the index of the suffix's first document, or begin - 1
// (as a signed sentinel via size_t wrap is avoided by returning begin and a
// flag) -- callers only need the found case, so report failure as `begin`
// with found=false.
struct SuffixResult {
  size_t start = 0;
  bool found = false;
};

SuffixResult greedy_suffix(const std::vector<DocumentRecord>& docs, size_t begin, size_t end,
                           Fraction fraction, std::int64_t total) {
  std::int64_t sum = 0;
  for (size_t i = end; i > begin; --i) {
    sum += docs[i - 1].word_count;
    if (fraction.exceeded_by(sum, total)) return {i - 1, true};
  }
  return {begin, false};
}

DivisionAssignment assignment_from_ranges(const std::string& corpus_id,
                                          const std::vector<DocumentRecord>& sorted_docs,
                                          size_t dev_end, size_t test_start) {
  DivisionAssignment assignment;
  assignment.corpus_id = corpus_id;
  for (size_t i = 0; i < sorted_docs.size(); ++i) {
    const DivisionLabel label = i < dev_end      ? DivisionLabel::dev()
                                : i < test_start ? DivisionLabel::train()
                                                 : DivisionLabel::test();
    assignment.entries.emplace(sorted_docs[i].name, label);
  }
  return assignment;
}

}  // namespace

DivisionAssignment split(const CorpusManifest& manifest, const SplitPolicy& policy) {
  policy.validate();
  const std::vector<DocumentRecord> docs = sort_documents(manifest);
  const std::int64_t total = manifest.total_word_count();
  if (total <= 0)
    throw Error(Errc::empty_corpus, "corpus '" + manifest.corpus_id + "' has no words");

  const size_t n = docs.size();
  // total > 0 and fractions < 1 guarantee both greedy walks terminate with
  // exceedance at the latest when they have consumed the whole list.
  const size_t dev_end = greedy_prefix(docs, 0, n, policy.dev_fraction, total);
  const SuffixResult test = greedy_suffix(docs, 0, n, policy.test_fraction, total);
  if (dev_end > n || !test.found || dev_end >= test.start)
    throw Error(Errc::division_infeasible,
                "corpus '" + manifest.corpus_id + "' (" + std::to_string(n) + " docs, " +
                    std::to_string(total) + " words) cannot satisfy dev=" +
                    policy.dev_fraction.str() + " test=" + policy.test_fraction.str() +
                    ": the DEV prefix and TEST suffix would overlap or leave TRAIN empty");
  return assignment_from_ranges(manifest.corpus_id, docs, dev_end, test.start);
}

std::map<std::string, DivisionAssignment> split_stratified(const CorpusManifest& manifest,
                                                           const SplitPolicy& policy) {
  policy.validate();
  // Validate names once up front; per-genre splits then re-sort their slices.
  sort_documents(manifest);

  std::map<std::string, CorpusManifest> by_genre;
  for (const auto& doc : manifest.documents) {
    if (!doc.genre || doc.genre->empty())
      throw Error(Errc::missing_genre, "document '" + doc.name + "' has no genre tag");
    auto [it, inserted] = by_genre.try_emplace(*doc.genre);
    if (inserted) it->second.corpus_id = manifest.corpus_id;
    it->second.documents.push_back(doc);
  }

  std::map<std::string, DivisionAssignment> result;
  for (const auto& [genre, sub_manifest] : by_genre) {
    try {
      result.emplace(genre, split(sub_manifest, policy));
    } catch (const Error& e) {
      if (e.code() == Errc::division_infeasible || e.code() == Errc::empty_corpus)
        throw Error(e.code(), "genre '" + genre + "': " + e.what());
      throw;
    }
  }
  return result;
}

DivisionAssignment carve_extra(const DivisionAssignment& assignment,
                               const CorpusManifest& manifest,
                               const DivisionLabel& new_label,
                               Fraction target_fraction) {
  if (!target_fraction.positive() || !target_fraction.below_one())
    throw Error(Errc::invalid_fraction,
                "carve fraction must be in (0,1), got " + target_fraction.str());
  for (const auto& [name, label] : assignment.entries) {
    if (label == new_label)
      throw Error(Errc::label_clash, "label '" + new_label.value() + "' already exists");
  }
  if (new_label.is_canonical())
    throw Error(Errc::label_clash, "label '" + new_label.value() + "' is reserved");

  const std::vector<DocumentRecord> docs = sort_documents(manifest);
  const std::int64_t total = manifest.total_word_count();

  std::vector<size_t> train_indices;
  for (size_t i = 0; i < docs.size(); ++i) {
    auto it = assignment.entries.find(docs[i].name);
    if (it == assignment.entries.end())
      throw Error(Errc::universe_mismatch,
                  "document '" + docs[i].name + "' has no assignment entry");
    if (it->second == DivisionLabel::train()) train_indices.push_back(i);
  }
  if (assignment.entries.size() != docs.size())
    throw Error(Errc::universe_mismatch, "assignment names documents outside the manifest");

  // Shortest prefix of TRAIN (front, adjacent to DEV) strictly exceeding
  // the target. Consuming all of TRAIN would leave it empty, so that case
  // is rejected as well.
  std::int64_t sum = 0;
  size_t take = train_indices.size() + 1;
  for (size_t k = 0; k < train_indices.size(); ++k) {
    sum += docs[train_indices[k]].word_count;
    if (target_fraction.exceeded_by(sum, total)) {
      take = k + 1;
      break;
    }
  }
  if (take >= train_indices.size())
    throw Error(Errc::insufficient_train,
                "TRAIN cannot supply " + target_fraction.str() +
                    " of the corpus without emptying itself");

  DivisionAssignment carved = assignment;
  for (size_t k = 0; k < take; ++k)
    carved.entries[docs[train_indices[k]].name] = new_label;
  return carved;
}

namespace {

struct LabelRun {
  DivisionLabel label;
  size_t begin = 0;
  size_t end = 0;
};

// Property checks for one DEV/TRAIN/TEST family over a sorted document
// slice. `context` prefixes every message ("" or "genre 'NW': ").
void check_family(const std::vector<DocumentRecord>& docs,
                  const std::vector<DivisionLabel>& labels, const SplitPolicy& policy,
                  const std::string& context, std::vector<std::string>& out) {
  std::int64_t total = 0;
  for (const auto& doc : docs) total += doc.word_count;

  const DivisionLabel dev = DivisionLabel::dev();
  const DivisionLabel train = DivisionLabel::train();
  const DivisionLabel test = DivisionLabel::test();

  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != dev && labels[i] != train && labels[i] != test) {
      out.push_back(context + "labels: unexpected label '" + labels[i].value() +
                    "' on document '" + docs[i].name + "'");
      return;  // further checks assume the three canonical labels
    }
  }

  std::vector<LabelRun> runs;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (runs.empty() || !(runs.back().label == labels[i]))
      runs.push_back({labels[i], i, i + 1});
    else
      runs.back().end = i + 1;
  }
  const bool contiguous =
      runs.size() == 3 && runs[0].label == dev && runs[1].label == train && runs[2].label == test;
  if (!contiguous) {
    std::string got;
    for (const auto& run : runs) {
      if (!got.empty()) got += ' ';
      got += run.label.value();
    }
    out.push_back(context +
                  "contiguity: sorted labels must form DEV TRAIN TEST blocks, got [" + got + "]");
    return;  // threshold checks below need the block structure
  }

  const auto words_in = [&](size_t begin, size_t end) {
    std::int64_t sum = 0;
    for (size_t i = begin; i < end; ++i) sum += docs[i].word_count;
    return sum;
  };
  const std::int64_t dev_words = words_in(runs[0].begin, runs[0].end);
  const std::int64_t test_words = words_in(runs[2].begin, runs[2].end);

  if (!policy.dev_fraction.exceeded_by(dev_words, total))
    out.push_back(context + "threshold: DEV words " + std::to_string(dev_words) +
                  " do not exceed " + policy.dev_fraction.str() + " of " + std::to_string(total));
  else if (policy.dev_fraction.exceeded_by(dev_words - docs[runs[0].end - 1].word_count, total))
    out.push_back(context + "minimality: DEV still exceeds its threshold without its last document '" +
                  docs[runs[0].end - 1].name + "'");

  if (!policy.test_fraction.exceeded_by(test_words, total))
    out.push_back(context + "threshold: TEST words " + std::to_string(test_words) +
                  " do not exceed " + policy.test_fraction.str() + " of " + std::to_string(total));
  else if (policy.test_fraction.exceeded_by(test_words - docs[runs[2].begin].word_count, total))
    out.push_back(context + "minimality: TEST still exceeds its threshold without its first document '" +
                  docs[runs[2].begin].name + "'");
}

}  // namespace

std::vector<std::string> verify_division(const CorpusManifest& manifest,
                                         const DivisionAssignment& assignment,
                                         const SplitPolicy& policy) {
  policy.validate();
  std::vector<std::string> out;
  const std::vector<DocumentRecord> docs = sort_documents(manifest);

  // Partition: exactly the manifest's documents, each labeled once. The
  // entries map cannot hold a name twice, so duplicates were already
  // rejected at load time.
  std::set<std::string> manifest_names;
  for (const auto& doc : docs) manifest_names.insert(doc.name);
  for (const auto& doc : docs) {
    if (!assignment.entries.count(doc.name))
      out.push_back("partition: document '" + doc.name + "' has no label");
  }
  for (const auto& [name, label] : assignment.entries) {
    if (!manifest_names.count(name))
      out.push_back("partition: assignment names unknown document '" + name + "'");
  }
  if (!out.empty()) return out;

  if (!policy.stratify_by_genre) {
    std::vector<DivisionLabel> labels;
    labels.reserve(docs.size());
    for (const auto& doc : docs) labels.push_back(assignment.entries.at(doc.name));
    check_family(docs, labels, policy, "", out);
    return out;
  }

  // Stratified: labels are "GENRE:LABEL"; each genre family must itself be
  // a valid split of its genre sub-manifest.
  std::map<std::string, std::vector<DocumentRecord>> genre_docs;
  std::map<std::string, std::vector<DivisionLabel>> genre_labels;
  for (const auto& doc : docs) {
    const DivisionLabel& label = assignment.entries.at(doc.name);
    const size_t colon = label.value().find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == label.value().size()) {
      out.push_back("labels: expected GENRE:LABEL, got '" + label.value() + "' on document '" +
                    doc.name + "'");
      continue;
    }
    const std::string genre = label.value().substr(0, colon);
    if (!doc.genre)
      out.push_back("genre: document '" + doc.name + "' is labeled '" + label.value() +
                    "' but carries no genre tag");
    else if (*doc.genre != genre)
      out.push_back("genre: document '" + doc.name + "' of genre '" + *doc.genre +
                    "' is labeled '" + label.value() + "'");
    genre_docs[genre].push_back(doc);
    genre_labels[genre].push_back(DivisionLabel(label.value().substr(colon + 1)));
  }
  if (!out.empty()) return out;
  for (const auto& [genre, family_docs] : genre_docs)
    check_family(family_docs, genre_labels.at(genre), policy, "genre '" + genre + "': ", out);
  return out;
}

DivisionAssignment load_assignment(std::string_view tsv, std::string corpus_id) {
  DivisionAssignment assignment;
  assignment.corpus_id = std::move(corpus_id);
  detail::for_each_tsv_line(tsv, [&](std::string_view line, size_t line_no) {
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string_view::npos)
      throw Error(Errc::malformed_line, "line " + std::to_string(line_no));
    std::string name(line.substr(0, tab));
    if (assignment.entries.count(name))
      throw Error(Errc::duplicate_name, "'" + name + "' at line " + std::to_string(line_no));
    assignment.entries.emplace(std::move(name), DivisionLabel(line.substr(tab + 1)));
  });
  return assignment;
}

std::string write_assignment(const DivisionAssignment& assignment) {
  std::string out;
  // std::map iterates in bytewise name order already.
  for (const auto& [name, label] : assignment.entries) {
    out += name;
    out += '\t';
    out += label.value();
    out += '\n';
  }
  return out;
}

}  // namespace corpusdiv

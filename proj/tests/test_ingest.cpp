// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "corpusdiv/ingest.hpp"
#include "support/test_util.hpp"

using namespace corpusdiv;
using testutil::error_code_of;

TEST_CASE("count_words_raw counts whitespace-delimited runs") {
  CHECK(count_words_raw("") == 0);
  CHECK(count_words_raw("two  words\n") == 2);
  CHECK(count_words_raw("a b c d e") == 5);
  CHECK(count_words_raw("   ") == 0);
  CHECK(count_words_raw("one") == 1);
  CHECK(count_words_raw("tab\tsep\nnewline") == 3);
  CHECK(count_words_raw("punct , stays .") == 4);
}

TEST_CASE("count_words_raw treats Unicode whitespace as delimiter") {
  CHECK(count_words_raw("a\xc2\xa0posteriori") == 2);          // U+00A0 no-break space
  CHECK(count_words_raw("x\xe2\x80\x89y") == 2);               // U+2009 thin space
  CHECK(count_words_raw("x\xe3\x80\x80y") == 2);               // U+3000 ideographic space
  CHECK(count_words_raw("\xd9\x83\xd9\x84\xd9\x85\xd8\xa9") == 1);  // Arabic word, no spaces
}

TEST_CASE("parse_trees reads one tree with leaves in order") {
  const auto trees = parse_trees("(S (NP (DT the) (NN cat)) (VP (VBD sat)))");
  REQUIRE(trees.size() == 1);
  REQUIRE(trees[0].tokens.size() == 3);
  CHECK(trees[0].tokens[0].surface == "the");
  CHECK(trees[0].tokens[1].surface == "cat");
  CHECK(trees[0].tokens[2].surface == "sat");
  for (const auto& token : trees[0].tokens) CHECK_FALSE(token.is_empty_category);
}

TEST_CASE("parse_trees marks -NONE- leaves as empty categories") {
  const auto trees = parse_trees("(S (NP-SBJ (-NONE- *T*)) (VP (VBD sat)))");
  REQUIRE(trees.size() == 1);
  REQUIRE(trees[0].tokens.size() == 2);
  CHECK(trees[0].tokens[0].surface == "*T*");
  CHECK(trees[0].tokens[0].is_empty_category);
  CHECK_FALSE(trees[0].tokens[1].is_empty_category);
}

TEST_CASE("parse_trees handles several trees and the outer-wrapper idiom") {
  const auto trees = parse_trees("(S (NN a))\n( (S (NN b) (NN c)))");
  REQUIRE(trees.size() == 2);
  CHECK(trees[0].tokens.size() == 1);
  CHECK(trees[1].tokens.size() == 2);
}

TEST_CASE("parse_trees accepts empty and blank input") {
  CHECK(parse_trees("").empty());
  CHECK(parse_trees("  \n\t ").empty());
}

TEST_CASE("parse_trees rejects malformed input") {
  CHECK(error_code_of([] { parse_trees("(S (NP (DT the)"); }) == Errc::unbalanced_parens);
  CHECK(error_code_of([] { parse_trees("(S (NN x)))"); }) == Errc::unbalanced_parens);
  CHECK(error_code_of([] { parse_trees("()"); }) == Errc::malformed_tree);
  CHECK(error_code_of([] { parse_trees("(NP)"); }) == Errc::malformed_tree);
  CHECK(error_code_of([] { parse_trees("(TAG a b)"); }) == Errc::malformed_tree);
  CHECK(error_code_of([] { parse_trees("stray (S (NN x))"); }) == Errc::malformed_tree);
  CHECK(error_code_of([] { parse_trees("(S (NN x) tail)"); }) == Errc::malformed_tree);
  CHECK(error_code_of([] { parse_trees("(S (NN x (T y)))"); }) == Errc::malformed_tree);
}

TEST_CASE("count_words_tree excludes empty categories") {
  CHECK(count_words_tree("(S (NP (DT the) (NN cat)) (VP (VBD sat)) (. .))") == 4);
  CHECK(count_words_tree("(S (NP-SBJ (-NONE- *)) (VP (VBD sat)))") == 1);
  // two trees with 3 and 2 non-empty leaves
  const char* two_trees =
      "(S (NP (DT the) (NN dog)) (VP (VBD ran)))\n"
      "(S (NP-SBJ (-NONE- *T*)) (VP (VBD barked) (ADVP (RB loudly))))";
  CHECK(count_words_tree(two_trees) == 5);
  CHECK(count_words_tree("") == 0);
}

TEST_CASE("tree word count never exceeds the leaf count") {
  const char* text = "(S (NP (-NONE- *)) (VP (V go) (NP (-NONE- *T*) (NN home))))";
  const auto trees = parse_trees(text);
  std::size_t leaves = 0;
  for (const auto& tree : trees) leaves += tree.tokens.size();
  CHECK(count_words_tree(text) <= static_cast<std::int64_t>(leaves));
  CHECK(count_words_tree(text) == 2);
  CHECK(leaves == 4);
}

TEST_CASE("build_manifest applies the kind-appropriate counter") {
  const std::vector<DocumentInput> inputs = {
      {"a", "a b", ContentKind::raw},
      {"b", "c", ContentKind::raw},
  };
  const auto m = build_manifest("demo", inputs);
  REQUIRE(m.documents.size() == 2);
  CHECK(m.documents[0].word_count == 2);
  CHECK(m.documents[1].word_count == 1);
  CHECK(m.total_word_count() == 3);

  const auto t = build_manifest("demo", {{"t", "(S (NN x))", ContentKind::tree}});
  CHECK(t.documents[0].word_count == 1);
}

TEST_CASE("build_manifest attaches genres and tags counter errors with the document") {
  const auto m =
      build_manifest("demo", {{"a", "x", ContentKind::raw}}, {{"a", "weblog"}, {"z", "nw"}});
  CHECK(m.documents[0].genre == "weblog");

  CHECK(error_code_of([] {
          build_manifest("demo", {{"a", "x", ContentKind::raw}, {"a", "y", ContentKind::raw}});
        }) == Errc::duplicate_name);

  try {
    build_manifest("demo", {{"bad", "(S", ContentKind::tree}});
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unbalanced_parens);
    CHECK(std::string(e.what()).find("'bad'") != std::string::npos);
  }
}

TEST_CASE("load_manifest parses records, comments and genres") {
  const auto m = load_manifest("d1\t10\nd2\t20\n");
  REQUIRE(m.documents.size() == 2);
  CHECK(m.total_word_count() == 30);

  const auto g = load_manifest("# header comment\nd1\t10\tweblog\n");
  REQUIRE(g.documents.size() == 1);
  CHECK(g.documents[0].genre == "weblog");
}

TEST_CASE("load_manifest reports malformed lines with their line number") {
  try {
    load_manifest("d1\tten\n");
    FAIL("expected MalformedLine");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::malformed_line);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  try {
    load_manifest("ok\t1\nbad\n");
    FAIL("expected MalformedLine");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(error_code_of([] { load_manifest("d\t-3\n"); }) == Errc::malformed_line);
  CHECK(error_code_of([] { load_manifest("d\t007\n"); }) == Errc::malformed_line);
  CHECK(error_code_of([] { load_manifest("d\t1\t\n"); }) == Errc::malformed_line);
  CHECK(error_code_of([] { load_manifest("d\t1\ta\tb\n"); }) == Errc::malformed_line);
  CHECK(error_code_of([] { load_manifest("d\t1\nd\t2\n"); }) == Errc::duplicate_name);
}

TEST_CASE("manifest TSV round-trips") {
  // value identity: load(write(m)) == m
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<int> ch(0, 61);
  std::uniform_int_distribution<std::int64_t> words(0, 100000);
  const auto rand_name = [&] {
    static const char alphabet[] =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    std::string s;
    for (int i = 0, n = len(rng); i < n; ++i) s += alphabet[ch(rng)];
    return s;
  };
  for (int round = 0; round < 50; ++round) {
    CorpusManifest m;
    m.corpus_id = "rt";
    std::set<std::string> used;
    for (int i = 0; i < 30; ++i) {
      std::string name = rand_name() + std::to_string(i);
      if (!used.insert(name).second) continue;
      DocumentRecord doc{std::move(name), words(rng), {}};
      if (round % 3 == 0 && i % 2 == 0) doc.genre = rand_name();
      m.documents.push_back(std::move(doc));
    }
    CHECK(load_manifest(write_manifest(m), "rt") == m);
  }

  // byte identity for canonical text, modulo the trailing newline
  const std::string canonical = "a name with spaces\t3\nz\t0\tgenre x\n";
  CHECK(write_manifest(load_manifest(canonical)) == canonical);
}

TEST_CASE("write_manifest refuses names that cannot round-trip") {
  CorpusManifest m;
  m.documents.push_back({"#looks-like-a-comment", 1, {}});
  CHECK(error_code_of([&] { write_manifest(m); }) == Errc::invalid_name);
}

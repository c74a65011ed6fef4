// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0
//
// corpusdiv: deterministic corpus division toolkit.
//
// Subcommands: count, split, verify, compare, registry. All reports go to
// stdout, diagnostics to stderr; stdout is byte-identical for identical
// inputs and flags. Exit codes: 0 success, 1 validation failure (checks
// ran and found violations), 2 usage/IO/parse error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corpusdiv/compat.hpp"
#include "corpusdiv/corpus_model.hpp"
#include "corpusdiv/error.hpp"
#include "corpusdiv/fraction.hpp"
#include "corpusdiv/ingest.hpp"
#include "corpusdiv/registry.hpp"
#include "corpusdiv/splitter.hpp"

namespace {

using namespace corpusdiv;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(Errc::io_error, "failed reading '" + path.string() + "'");
  return std::move(buffer).str();
}

// ---------------------------------------------------------------------------
// count

struct CountArgs {
  std::vector<std::string> inputs;
  std::string kind = "raw";
  std::string genre_map_path;
};

std::map<std::string, std::string> load_genre_map(const fs::path& path) {
  std::map<std::string, std::string> map;
  const std::string text = read_file(path);
  size_t line_no = 0;
  std::string_view rest = text;
  while (!rest.empty()) {
    const size_t eol = rest.find('\n');
    const std::string_view line = rest.substr(0, eol);
    rest = eol == std::string_view::npos ? std::string_view() : rest.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size())
      throw Error(Errc::malformed_line,
                  path.string() + " line " + std::to_string(line_no) +
                      ": expected name<TAB>genre");
    map.emplace(std::string(line.substr(0, tab)), std::string(line.substr(tab + 1)));
  }
  return map;
}

int run_count(const CountArgs& args) {
  std::vector<fs::path> files;
  for (const auto& input : args.inputs) {
    const fs::path path(input);
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      for (const auto& entry : fs::recursive_directory_iterator(path)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
      }
    } else if (fs::is_regular_file(path, ec)) {
      files.push_back(path);
    } else {
      throw Error(Errc::io_error, "'" + input + "' is not a file or directory");
    }
  }

  std::map<std::string, fs::path> by_stem;
  for (const auto& file : files) {
    const std::string stem = file.stem().string();
    auto [it, inserted] = by_stem.emplace(stem, file);
    if (!inserted)
      throw Error(Errc::duplicate_name, "document name '" + stem + "' produced by both '" +
                                            it->second.string() + "' and '" + file.string() + "'");
  }

  std::map<std::string, std::string> genre_map;
  if (!args.genre_map_path.empty()) genre_map = load_genre_map(args.genre_map_path);

  const ContentKind kind = args.kind == "tree" ? ContentKind::tree : ContentKind::raw;
  std::vector<DocumentInput> inputs;
  for (const auto& [stem, path] : by_stem) {
    try {
      inputs.push_back({stem, read_file(path), kind});
    } catch (const Error& e) {
      throw Error(e.code(), "'" + path.string() + "': " + e.what());
    }
  }
  // Counter failures name the document, which maps 1:1 onto an input file.
  CorpusManifest manifest = build_manifest("", inputs, genre_map);
  manifest.documents = sort_documents(manifest);
  std::cout << write_manifest(manifest);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// split / verify

struct SplitArgs {
  std::string manifest_path;
  std::string dev_frac = "1/10";
  std::string test_frac = "1/10";
  bool stratify = false;
};

SplitPolicy make_policy(const SplitArgs& args) {
  SplitPolicy policy;
  policy.dev_fraction = Fraction::parse(args.dev_frac);
  policy.test_fraction = Fraction::parse(args.test_frac);
  policy.stratify_by_genre = args.stratify;
  policy.validate();
  return policy;
}

// Stratified assignments are emitted as one file with GENRE:LABEL entries.
DivisionAssignment merge_stratified(const std::map<std::string, DivisionAssignment>& by_genre) {
  DivisionAssignment merged;
  for (const auto& [genre, assignment] : by_genre) {
    merged.corpus_id = assignment.corpus_id;
    for (const auto& [name, label] : assignment.entries)
      merged.entries.emplace(name, DivisionLabel(genre + ":" + label.value()));
  }
  return merged;
}

int run_split(const SplitArgs& args) {
  const SplitPolicy policy = make_policy(args);
  const CorpusManifest manifest = load_manifest(read_file(args.manifest_path));
  try {
    const DivisionAssignment assignment =
        policy.stratify_by_genre ? merge_stratified(split_stratified(manifest, policy))
                                 : split(manifest, policy);
    std::cout << write_assignment(assignment);
  } catch (const Error& e) {
    if (e.code() == Errc::division_infeasible || e.code() == Errc::empty_corpus) {
      std::cerr << "corpusdiv: " << e.what() << "\n";
      return kExitViolation;
    }
    throw;
  }
  return kExitOk;
}

struct VerifyArgs {
  SplitArgs split;
  std::string assignment_path;
};

int run_verify(const VerifyArgs& args) {
  const SplitPolicy policy = make_policy(args.split);
  const CorpusManifest manifest = load_manifest(read_file(args.split.manifest_path));
  const DivisionAssignment assignment = load_assignment(read_file(args.assignment_path));
  const std::vector<std::string> violations = verify_division(manifest, assignment, policy);
  if (violations.empty()) {
    std::cout << "ok: assignment matches the rule-generated division\n";
    return kExitOk;
  }
  for (const auto& violation : violations) std::cout << "violation: " << violation << "\n";
  return kExitViolation;
}

// ---------------------------------------------------------------------------
// registry

struct RegistryArgs {
  std::string scheme;
  std::string treebank;
  bool meta = false;
};

std::string format_rows(const std::vector<ReferenceDivision>& rows) {
  std::string out;
  for (const auto& row : rows) {
    out += row.scheme + "\t" + row.treebank + "\t" + row.label.value() + "\t" +
           std::to_string(row.n_docs) + "\t" + std::to_string(row.n_words) + "\t" +
           row.first_doc + "\t" + row.last_doc + "\n";
  }
  return out;
}

int run_registry_list(const RegistryArgs& args) {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& row : reference_divisions()) {
    if (!args.scheme.empty() && row.scheme != args.scheme) continue;
    if (seen.emplace(row.scheme, row.treebank).second)
      std::cout << row.scheme << "\t" << row.treebank << "\n";
  }
  if (!args.scheme.empty() && seen.empty()) {
    if (auto note = scheme_note(args.scheme)) {
      std::cerr << "corpusdiv: " << *note << "\n";
      return kExitOk;
    }
    throw Error(Errc::unknown_scheme, "'" + args.scheme + "'");
  }
  return kExitOk;
}

int run_registry_show(const RegistryArgs& args) {
  if (args.scheme.empty() && args.treebank.empty())
    throw Error(Errc::unknown_scheme, "registry show needs --scheme and/or --treebank");
  std::vector<ReferenceDivision> rows;
  if (!args.scheme.empty()) {
    rows = list_reference(args.scheme, args.treebank.empty()
                                           ? std::nullopt
                                           : std::optional<std::string_view>(args.treebank));
    if (auto note = scheme_note(args.scheme)) std::cerr << "corpusdiv: " << *note << "\n";
  } else {
    for (const auto& row : reference_divisions())
      if (row.treebank == args.treebank) rows.push_back(row);
    if (rows.empty()) throw Error(Errc::unknown_treebank, "'" + args.treebank + "'");
  }
  std::cout << format_rows(rows);
  return kExitOk;
}

int run_registry_export(const RegistryArgs& args) {
  std::cout << (args.meta ? export_meta_tsv() : export_divisions_tsv());
  return kExitOk;
}

int run_registry_selfcheck() {
  const std::vector<RegistryCheck> report = registry_selfcheck();
  size_t failures = 0;
  for (const auto& check : report) {
    if (check.severity == CheckSeverity::failure) {
      ++failures;
      std::cout << "FAIL " << check.message << "\n";
    } else {
      std::cout << "info " << check.message << "\n";
    }
  }
  std::cout << "selfcheck: " << failures << " failure(s), " << (report.size() - failures)
            << " note(s)\n";
  return failures == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// compare

struct CompareArgs {
  std::string scheme_a, scheme_b, treebank;
  std::string assignment_a, assignment_b, manifest_path;
  std::string contamination;  // "<side>.<LABEL>:<side>.<LABEL>"
  bool json = false;
};

struct ContaminationSpec {
  std::string train_side, train_label;
  std::string test_side, test_label;
};

// The separator is the ':' where both halves start with a known side name
// followed by '.', so labels that themselves contain ':' stay parseable.
ContaminationSpec parse_contamination(const std::string& spec,
                                      const std::vector<std::string>& sides) {
  const auto side_of =
      [&](std::string_view part) -> std::optional<std::pair<std::string, std::string>> {
    for (const auto& side : sides) {
      if (part.size() > side.size() + 1 && part.substr(0, side.size()) == side &&
          part[side.size()] == '.')
        return std::make_pair(side, std::string(part.substr(side.size() + 1)));
    }
    return std::nullopt;
  };
  for (size_t pos = spec.find(':'); pos != std::string::npos; pos = spec.find(':', pos + 1)) {
    const auto lhs = side_of(std::string_view(spec).substr(0, pos));
    const auto rhs = side_of(std::string_view(spec).substr(pos + 1));
    if (lhs && rhs) return {lhs->first, lhs->second, rhs->first, rhs->second};
  }
  throw Error(Errc::unknown_label,
              "cannot parse '" + spec + "' as <side>.<LABEL>:<side>.<LABEL>");
}

int run_compare(const CompareArgs& args) {
  const bool scheme_mode = !args.scheme_a.empty() || !args.scheme_b.empty() ||
                           (!args.contamination.empty() && args.assignment_a.empty());
  OverlapReport report;
  bool checked = false;
  bool safe = true;
  std::string verdict;

  if (scheme_mode) {
    if (args.treebank.empty())
      throw Error(Errc::unknown_treebank, "scheme comparison needs --treebank");
    std::string scheme_a = args.scheme_a;
    std::string scheme_b = args.scheme_b;
    std::optional<ContaminationSpec> spec;
    if (!args.contamination.empty()) {
      spec = parse_contamination(args.contamination, registry_schemes());
      if (scheme_a.empty()) scheme_a = spec->train_side;
      if (scheme_b.empty()) scheme_b = spec->test_side;
    }
    if (scheme_a.empty() || scheme_b.empty())
      throw Error(Errc::unknown_scheme, "need --scheme-a and --scheme-b");
    const IntervalScheme ivs_a = reference_intervals(scheme_a, args.treebank);
    const IntervalScheme ivs_b = reference_intervals(scheme_b, args.treebank);
    report = overlap_intervals(ivs_a, ivs_b);
    if (spec) {
      const auto pick = [&](const std::string& side) -> const IntervalScheme& {
        if (side == scheme_a) return ivs_a;
        if (side == scheme_b) return ivs_b;
        throw Error(Errc::unknown_scheme, "'" + side + "' is not one of the compared schemes");
      };
      const ContaminationResult result =
          contamination_check(pick(spec->train_side), DivisionLabel(spec->train_label),
                              pick(spec->test_side), DivisionLabel(spec->test_label));
      checked = true;
      safe = result.safe;
      verdict = "contamination " + spec->train_side + "." + spec->train_label + " vs " +
                spec->test_side + "." + spec->test_label + ": " +
                (result.safe ? "safe" : "unsafe") + " (shared " +
                std::to_string(result.shared_docs) + " docs)";
    }
  } else {
    if (args.assignment_a.empty() || args.assignment_b.empty())
      throw Error(Errc::universe_mismatch,
                  "need either --scheme-a/--scheme-b or --assignment-a/--assignment-b");
    const DivisionAssignment a = load_assignment(read_file(args.assignment_a));
    const DivisionAssignment b = load_assignment(read_file(args.assignment_b));
    std::optional<CorpusManifest> manifest;
    if (!args.manifest_path.empty()) manifest = load_manifest(read_file(args.manifest_path));
    report = compare_assignments(a, b, manifest ? &*manifest : nullptr, "a", "b");
    if (!args.contamination.empty()) {
      const ContaminationSpec spec = parse_contamination(args.contamination, {"a", "b"});
      if (spec.train_side == spec.test_side)
        throw Error(Errc::unknown_label, "contamination check needs one side each");
      const DivisionAssignment& train_asg = spec.train_side == "a" ? a : b;
      const DivisionAssignment& test_asg = spec.test_side == "a" ? a : b;
      const DivisionLabel train_label(spec.train_label);
      const DivisionLabel test_label(spec.test_label);
      const auto label_exists = [](const DivisionAssignment& asg, const DivisionLabel& label) {
        for (const auto& [name, l] : asg.entries)
          if (l == label) return true;
        return false;
      };
      if (!label_exists(train_asg, train_label))
        throw Error(Errc::unknown_label, "'" + spec.train_label + "' in " + spec.train_side);
      if (!label_exists(test_asg, test_label))
        throw Error(Errc::unknown_label, "'" + spec.test_label + "' in " + spec.test_side);
      std::int64_t shared = 0;
      for (const auto& [name, label] : train_asg.entries)
        if (label == train_label && test_asg.entries.at(name) == test_label) ++shared;
      checked = true;
      safe = shared == 0;
      verdict = "contamination " + spec.train_side + "." + spec.train_label + " vs " +
                spec.test_side + "." + spec.test_label + ": " + (safe ? "safe" : "unsafe") +
                " (shared " + std::to_string(shared) + " docs)";
    }
  }

  std::cout << (args.json ? render_report_json(report) : render_report_text(report));
  if (checked) std::cout << verdict << "\n";
  return checked && !safe ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic corpus train/dev/test division toolkit"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "build a manifest TSV from document files");
  count->add_option("inputs", count_args.inputs, "files or directories (one document per file)")
      ->required();
  count->add_option("--kind", count_args.kind, "content kind: raw or tree")
      ->check(CLI::IsMember({"raw", "tree"}))
      ->capture_default_str();
  count->add_option("--genre-map", count_args.genre_map_path,
                    "TSV file mapping document name to genre");

  SplitArgs split_args;
  auto* split_cmd = app.add_subcommand("split", "divide a manifest into DEV/TRAIN/TEST");
  split_cmd->add_option("--manifest", split_args.manifest_path, "manifest TSV")->required();
  split_cmd->add_option("--dev-frac", split_args.dev_frac, "DEV fraction, e.g. 1/10 or 0.1")
      ->capture_default_str();
  split_cmd->add_option("--test-frac", split_args.test_frac, "TEST fraction")
      ->capture_default_str();
  split_cmd->add_flag("--stratify", split_args.stratify, "split each genre independently");

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "check an assignment against the division rules");
  verify_cmd->add_option("--manifest", verify_args.split.manifest_path, "manifest TSV")
      ->required();
  verify_cmd->add_option("--assignment", verify_args.assignment_path, "assignment TSV")
      ->required();
  verify_cmd->add_option("--dev-frac", verify_args.split.dev_frac, "DEV fraction")
      ->capture_default_str();
  verify_cmd->add_option("--test-frac", verify_args.split.test_frac, "TEST fraction")
      ->capture_default_str();
  verify_cmd->add_flag("--stratify", verify_args.split.stratify,
                       "expect GENRE:LABEL entries, verified per genre");

  CompareArgs compare_args;
  auto* compare_cmd = app.add_subcommand("compare", "overlap report between two divisions");
  compare_cmd->add_option("--scheme-a", compare_args.scheme_a, "registry scheme A");
  compare_cmd->add_option("--scheme-b", compare_args.scheme_b, "registry scheme B");
  compare_cmd->add_option("--treebank", compare_args.treebank, "treebank for scheme comparison");
  compare_cmd->add_option("--assignment-a", compare_args.assignment_a, "assignment TSV A");
  compare_cmd->add_option("--assignment-b", compare_args.assignment_b, "assignment TSV B");
  compare_cmd->add_option("--manifest", compare_args.manifest_path,
                          "manifest TSV for word-level overlap");
  compare_cmd->add_option("--check-contamination", compare_args.contamination,
                          "<side>.<LABEL>:<side>.<LABEL>; exit 1 when the pair overlaps");
  compare_cmd->add_flag("--json", compare_args.json, "emit the report as JSON");

  RegistryArgs registry_args;
  auto* registry_cmd = app.add_subcommand("registry", "built-in reference divisions");
  registry_cmd->require_subcommand(1);
  auto* reg_list = registry_cmd->add_subcommand("list", "list scheme/treebank row sets");
  auto* reg_show = registry_cmd->add_subcommand("show", "print rows for a scheme/treebank");
  auto* reg_export = registry_cmd->add_subcommand("export", "dump the full registry as TSV");
  auto* reg_selfcheck =
      registry_cmd->add_subcommand("selfcheck", "verify the embedded data's arithmetic");
  for (auto* sub : {reg_list, reg_show}) {
    sub->add_option("--scheme", registry_args.scheme, "scheme name");
    sub->add_option("--treebank", registry_args.treebank, "treebank name");
  }
  reg_export->add_flag("--meta", registry_args.meta, "export treebank versions/catalog numbers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return run_count(count_args);
    if (*split_cmd) return run_split(split_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*compare_cmd) return run_compare(compare_args);
    if (*reg_list) return run_registry_list(registry_args);
    if (*reg_show) return run_registry_show(registry_args);
    if (*reg_export) return run_registry_export(registry_args);
    if (*reg_selfcheck) return run_registry_selfcheck();
  } catch (const Error& e) {
    std::cerr << "corpusdiv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "corpusdiv: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CORPUSDIV_ERROR_HPP
#define CORPUSDIV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace corpusdiv {

// Failure categories raised by the library. Codes are stable and meant for
// programmatic dispatch; messages are for humans.
enum class Errc {
  duplicate_name,
  invalid_name,
  malformed_line,
  unbalanced_parens,
  malformed_tree,
  empty_corpus,
  division_infeasible,
  missing_genre,
  insufficient_train,
  label_clash,
  invalid_fraction,
  unknown_scheme,
  unknown_treebank,
  incomplete_scheme,
  boundary_not_found,
  ranges_overlap_or_gap,
  count_mismatch,
  mismatched_corpus_size,
  unknown_label,
  universe_mismatch,
  io_error,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace corpusdiv

#endif  // CORPUSDIV_ERROR_HPP

// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0

#include "corpusdiv/error.hpp"

namespace corpusdiv {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::duplicate_name: return "DuplicateName";
    case Errc::invalid_name: return "InvalidName";
    case Errc::malformed_line: return "MalformedLine";
    case Errc::unbalanced_parens: return "UnbalancedParens";
    case Errc::malformed_tree: return "MalformedTree";
    case Errc::empty_corpus: return "EmptyCorpus";
    case Errc::division_infeasible: return "DivisionInfeasible";
    case Errc::missing_genre: return "MissingGenre";
    case Errc::insufficient_train: return "InsufficientTrain";
    case Errc::label_clash: return "LabelClash";
    case Errc::invalid_fraction: return "InvalidFraction";
    case Errc::unknown_scheme: return "UnknownScheme";
    case Errc::unknown_treebank: return "UnknownTreebank";
    case Errc::incomplete_scheme: return "IncompleteScheme";
    case Errc::boundary_not_found: return "BoundaryNotFound";
    case Errc::ranges_overlap_or_gap: return "RangesOverlapOrGap";
    case Errc::count_mismatch: return "CountMismatch";
    case Errc::mismatched_corpus_size: return "MismatchedCorpusSize";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::universe_mismatch: return "UniverseMismatch";
    case Errc::io_error: return "IoError";
  }
  return "Error";
}

}  // namespace corpusdiv

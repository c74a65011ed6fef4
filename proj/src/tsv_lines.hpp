// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CORPUSDIV_SRC_TSV_LINES_HPP
#define CORPUSDIV_SRC_TSV_LINES_HPP

#include <cstddef>
#include <string_view>
#include <vector>

namespace corpusdiv::detail {

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

// Calls fn(line, line_no) for every record line, with 1-based physical line
// numbers. Blank lines and '#' comments are skipped.
template <typename Fn>
void for_each_tsv_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::string_view rest = text;
  while (!rest.empty()) {
    const std::size_t eol = rest.find('\n');
    const std::string_view line = rest.substr(0, eol);
    rest = eol == std::string_view::npos ? std::string_view() : rest.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    fn(line, line_no);
  }
}

}  // namespace corpusdiv::detail

#endif  // CORPUSDIV_SRC_TSV_LINES_HPP

// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CORPUSDIV_TESTS_TEST_UTIL_HPP
#define CORPUSDIV_TESTS_TEST_UTIL_HPP

#include <optional>
#include <utility>

#include "corpusdiv/error.hpp"

namespace testutil {

// Runs f and reports the corpusdiv error code it throws, if any.
template <typename F>
std::optional<corpusdiv::Errc> error_code_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const corpusdiv::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testutil

#endif  // CORPUSDIV_TESTS_TEST_UTIL_HPP

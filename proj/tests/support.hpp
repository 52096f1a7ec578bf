#ifndef LATCD_TESTS_SUPPORT_HPP_
#define LATCD_TESTS_SUPPORT_HPP_

#include <optional>

#include "latcd/error.hpp"

// Kind of the latcd::Error thrown by f, or nullopt if nothing was thrown.
template <typename F>
std::optional<latcd::ErrorKind> error_kind(F&& f) {
  try {
    static_cast<void>(f());
  } catch (latcd::Error const& e) {
    return e.kind();
  }
  return std::nullopt;
}

#endif  // LATCD_TESTS_SUPPORT_HPP_

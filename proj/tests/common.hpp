#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <optional>

#include "stickforge/error.hpp"

// Code of the stickforge::Error raised by f, or nullopt.
inline std::optional<stickforge::ErrorCode> error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const stickforge::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

#pragma once

#include <doctest.h>

#include "recolor/error.hpp"

// Error code thrown by f; fails the test if f returns normally.
template <typename F>
recolor::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const recolor::Error& e) {
    return e.code();
  }
  FAIL("expected a recolor::Error");
  return recolor::ErrorCode::Io;
}

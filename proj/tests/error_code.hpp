#pragma once

#include <gtest/gtest.h>

#include "wavedim/error.hpp"

/// The code of the wavedim::Error thrown by f (a test failure if none is).
template <class F>
wavedim::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const wavedim::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no wavedim::Error thrown";
  return wavedim::ErrorCode::InvalidArgument;
}

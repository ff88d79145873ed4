#pragma once

#include <functional>

#include <gtest/gtest.h>

#include "symarr/errors.hpp"

inline void expect_kind(symarr::ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << symarr::to_string(kind);
  } catch (const symarr::Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

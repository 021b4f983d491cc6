#pragma once

#include <gtest/gtest.h>

#include <string>

#include "dmloc/error.hpp"

#define EXPECT_COMPUTATION_ERROR(stmt, expected_code)                        \
  do {                                                                       \
    try {                                                                    \
      stmt;                                                                  \
      ADD_FAILURE() << "expected ComputationError " << (expected_code);      \
    } catch (const dmloc::ComputationError& e) {                             \
      EXPECT_EQ(e.code(), std::string(expected_code)) << e.what();           \
    }                                                                        \
  } while (0)

#define EXPECT_PARSE_ERROR_AT(stmt, want_line, want_column)                  \
  do {                                                                       \
    try {                                                                    \
      stmt;                                                                  \
      ADD_FAILURE() << "expected ParseError";                                \
    } catch (const dmloc::ParseError& e) {                                   \
      EXPECT_EQ(e.line(), (want_line)) << e.what();                          \
      EXPECT_EQ(e.column(), (want_column)) << e.what();                      \
    }                                                                        \
  } while (0)

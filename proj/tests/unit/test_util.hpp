#pragma once

#include <gtest/gtest.h>

#include "lpi/error.hpp"

#define EXPECT_LPI_ERROR(statement, expected_kind)                                      \
  do {                                                                                  \
    try {                                                                               \
      statement;                                                                        \
      ADD_FAILURE() << "expected " << lpi::to_string(expected_kind) << ", no error";    \
    } catch (const lpi::Error& e) {                                                     \
      EXPECT_EQ(e.kind(), expected_kind) << e.what();                                   \
    }                                                                                   \
  } while (0)

#ifndef PATHBIJ_TEST_SUPPORT_HPP
#define PATHBIJ_TEST_SUPPORT_HPP

#include <doctest.h>

#include "pathbij/error.hpp"

// Asserts that expr throws PathError with the given code.
#define CHECK_PATH_ERROR(expr, errc)                                   \
  do {                                                                 \
    try {                                                              \
      (void)(expr);                                                    \
      FAIL("expected " << pathbij::errc_name(errc) << ", got nothing"); \
    } catch (const pathbij::PathError& e) {                            \
      CHECK(e.code() == (errc));                                       \
    }                                                                  \
  } while (0)

#endif

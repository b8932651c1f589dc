#pragma once

#include <doctest.h>

#include <cmath>
#include <random>

#include "qlra/probmodel.hpp"

#define CHECK_ERROR_CODE(expr, expected)            \
  do {                                              \
    bool caught_ = false;                           \
    try {                                           \
      (void)(expr);                                 \
    } catch (const qlra::Error& e_) {               \
      caught_ = true;                               \
      CHECK(e_.code() == qlra::ErrorCode::expected);\
    }                                               \
    CHECK_MESSAGE(caught_, "expected " #expected);  \
  } while (0)

namespace testutil {

// test-local uniform sampling, independent of the library's generator
inline double urand(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// forward interference construction of the b marginal (oracle path)
inline double forward_pb1(double pa1, double p, double theta) {
  return pa1 * p + (1.0 - pa1) * (1.0 - p) +
         2.0 * std::cos(theta) * std::sqrt(pa1 * p * (1.0 - pa1) * (1.0 - p));
}

inline qlra::ContextData forward_context(double pa1, double p, double theta) {
  const double pb1 = forward_pb1(pa1, p, theta);
  return qlra::validate_context({pa1, 1.0 - pa1}, {pb1, 1.0 - pb1});
}

}  // namespace testutil

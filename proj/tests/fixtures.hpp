#pragma once

#include "scp/construct.hpp"

namespace scp::fixtures {

// q = 4, m = 5, t = 2, pi = (1,3,2,4,5), d = (0,0), linear part 3 x2.
inline ScpParams len27_params() {
  ScpParams p;
  p.q = 4;
  p.m = 5;
  p.t = 2;
  p.perm = {1, 3, 2, 4, 5};
  p.d = {0, 0};
  p.g = {0, 0, 3, 0, 0, 0};
  return p;
}

// Printed sequences; `.` marks a zero entry.
inline constexpr const char* kLen27C0 = "0 . 3 . . . . . 0 . 1 . . . . . 0 . 3 . . . . . 2 . 3";
inline constexpr const char* kLen27C1 = "0 . 1 . . . . . 0 . 3 . . . . . 0 . 1 . . . . . 2 . 1";
inline constexpr const char* kLen27S0 = "0 . 3 . . . . . 0 . 1 . . . . . 2 . 1 . . . . . 0 . 1";
inline constexpr const char* kLen27S1 = "0 . 1 . . . . . 0 . 3 . . . . . 2 . 3 . . . . . 0 . 3";

inline GeneralizedBooleanFunction quaternary3_function() {
  return {4, 3, {{2, {2, 3}}, {1, {1}}}};
}

}  // namespace scp::fixtures

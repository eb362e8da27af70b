#pragma once

#include "funobs/system.hpp"

namespace fixture {

using funobs::Matrix;

inline funobs::SystemSextuple example1() {
  return funobs::make_system({{-1}}, {{1, -1}}, {{1}}, {{0, 0}}, {{1}}, {{1, 1}});
}

inline funobs::SystemSextuple example2() {
  return funobs::make_system({{0, 0}, {1, 0}}, {{1}, {0}}, {{1, 1}}, {{0}}, {{0, 0}}, {{1}});
}

inline funobs::SystemSextuple diagonal_full_state() {
  return funobs::make_system({{-1, 0}, {0, -1}}, Matrix(2, 0), Matrix::identity(2), Matrix(2, 0), {{1, 0}}, Matrix(1, 0));
}

inline funobs::SystemSextuple proper_unstable_witness() {
  return funobs::make_system({{0, 1}, {0, 0}}, {{1}, {1}}, {{0, 0}}, {{1}}, {{1, -1}}, {{0}});
}

inline funobs::SystemSextuple triple_chain() {
  return funobs::make_system({{0, 1, 0}, {0, 0, 1}, {0, 0, 1}}, Matrix(3, 0), {{1, 0, 0}}, Matrix(1, 0), {{0, 1, 0}},
                             Matrix(1, 0));
}

}  // namespace fixture

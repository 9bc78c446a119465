#pragma once

#include <vector>

#include "matroid/binary_matroid.hpp"

namespace matroid {

enum class Connectivity { ThreeConnected, InternallyFourConnected };

// A minor-closed class description: members must be 3-connected (or internally
// 4-connected), contain every required minor, and avoid every excluded one.
struct ClassSpec {
  std::vector<BinaryMatroid> required_minors;
  std::vector<BinaryMatroid> excluded_minors;
  Connectivity connectivity = Connectivity::ThreeConnected;
};

// Minor containment dualizes, so the dual class swaps in the dual minors.
inline ClassSpec dualized(const ClassSpec& spec) {
  ClassSpec out;
  out.connectivity = spec.connectivity;
  for (const BinaryMatroid& m : spec.required_minors) out.required_minors.push_back(dual(m));
  for (const BinaryMatroid& m : spec.excluded_minors) out.excluded_minors.push_back(dual(m));
  return out;
}

}  // namespace matroid

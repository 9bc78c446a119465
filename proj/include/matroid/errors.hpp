#pragma once

#include <stdexcept>
#include <string>

namespace matroid {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error {
  using error::error;
};

struct unknown_label_error : error {
  using error::error;
};

struct unknown_name_error : error {
  using error::error;
};

struct precondition_error : error {
  using error::error;
};

// Splitter checks on a wheel need a certificate that the class excludes the
// next larger wheel; when that cannot be certified we refuse to give a verdict.
struct wheel_precondition_error : precondition_error {
  using precondition_error::precondition_error;
};

}  // namespace matroid

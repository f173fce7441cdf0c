#pragma once

#include <stdexcept>
#include <string>

namespace grassdesign {

/// Frame columns were numerically rank deficient.
class degenerate_frame_error : public std::runtime_error {
 public:
  explicit degenerate_frame_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Group/orbit closure exceeded its element cap.
class nonfinite_orbit_error : public std::runtime_error {
 public:
  explicit nonfinite_orbit_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// An iteration produced non-finite values; the message carries the
/// iterate context.
class numerical_failure : public std::runtime_error {
 public:
  explicit numerical_failure(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace grassdesign

#pragma once

#include <stdexcept>
#include <string>

namespace catv {

// Malformed or inconsistent caller input. Maps to exit code 2 at the tool level.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured size cap was exceeded. Maps to exit code 3.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace catv

#pragma once

#include <stdexcept>

namespace mzt {

// Configuration outside its documented range (precision floors, unknown
// route names, malformed option values).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mzt

#pragma once

#include <stdexcept>
#include <string>

namespace aplab {

enum class Errc {
  invalid_argument = 1,
  grid_mismatch = 2,
  range = 3,
  domain = 4,
  parse = 5,
  io = 6,
  contract = 7,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace aplab

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace repvar {

/// Base class for all errors thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error in one of the textual input grammars (words, matrices,
/// group descriptors, automorphism specs). Carries the offending position.
struct parse_error : error {
  std::size_t position;

  parse_error(const std::string& msg, std::size_t pos)
      : error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace repvar

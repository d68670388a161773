#ifndef KMC_ERRORS_HPP
#define KMC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kmc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed textual input (cycles, words, group files). Carries the
/// 0-based offset of the offending character where known.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit ParseError(const std::string& msg) : Error(msg), position_(0) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A desk-scale limit was hit (group order, Aut search, pair enumeration).
/// This signals that the input is too large for exact computation, not a
/// mathematical failure.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// The construction was invoked on a subgroup that does not satisfy the
/// requested identity, so the theorem's hypothesis is violated.
class HypothesisFailed : public Error {
public:
  using Error::Error;
};

}  // namespace kmc

#endif

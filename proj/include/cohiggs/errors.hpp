#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cohiggs {

// Input text could not be parsed. `position` is the byte offset of the
// offending character in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at byte " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ZeroPolynomial : std::domain_error {
  ZeroPolynomial() : std::domain_error("operation undefined for the zero polynomial") {}
};

struct NotHolomorphicAtInfinity : std::domain_error {
  explicit NotHolomorphicAtInfinity(const std::string& what) : std::domain_error(what) {}
};

struct NotReduced : std::domain_error {
  explicit NotReduced(const std::string& what = "spectral curve is not reduced")
      : std::domain_error(what) {}
};

struct NotSmooth : std::domain_error {
  explicit NotSmooth(const std::string& what) : std::domain_error(what) {}
};

struct RankNotTwo : std::domain_error {
  explicit RankNotTwo(const std::string& what = "operation requires a rank-2 bundle")
      : std::domain_error(what) {}
};

struct NotEigenSection : std::domain_error {
  explicit NotEigenSection(const std::string& what) : std::domain_error(what) {}
};

struct ShapeMismatch : std::invalid_argument {
  explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Sign calibration could not find a sample separating the two candidate
// orientations within the allotted redraws.
struct NoConsistentSign : std::runtime_error {
  explicit NoConsistentSign(const std::string& what) : std::runtime_error(what) {}
};

// Numeric trajectory left the trust region (matrix norms past the blow-up
// threshold). `time` is how far the integrator got.
class PoleEncountered : public std::runtime_error {
 public:
  explicit PoleEncountered(double time)
      : std::runtime_error("trajectory blew up near t = " + std::to_string(time)),
        time_(time) {}

  double time() const { return time_; }

 private:
  double time_;
};

}  // namespace cohiggs

#pragma once

#include <stdexcept>
#include <string>

namespace kleinring {

// Valuation crossed into the guard band: the truncated value cannot be
// distinguished from an exact zero, so the computation refuses to continue.
class PrecisionExhausted : public std::runtime_error {
 public:
  explicit PrecisionExhausted(const std::string& what)
      : std::runtime_error("precision exhausted: " + what) {}
};

class CompositionNonZero : public std::runtime_error {
 public:
  explicit CompositionNonZero(const std::string& what)
      : std::runtime_error("composite differential is nonzero: " + what) {}
};

class InvalidRepresentation : public std::runtime_error {
 public:
  explicit InvalidRepresentation(const std::string& what)
      : std::runtime_error("invalid representation: " + what) {}
};

class NotNormalized : public std::runtime_error {
 public:
  explicit NotNormalized(const std::string& what)
      : std::runtime_error("lattice not in normalized position: " + what) {}
};

class NotHomogeneousPoint : public std::runtime_error {
 public:
  explicit NotHomogeneousPoint(const std::string& what)
      : std::runtime_error("not a homogeneous tube point: " + what) {}
};

class ExtensionSearchFailed : public std::runtime_error {
 public:
  explicit ExtensionSearchFailed(const std::string& what)
      : std::runtime_error("extension search failed: " + what) {}
};

class ElementNotInSlot : public std::runtime_error {
 public:
  explicit ElementNotInSlot(const std::string& what)
      : std::runtime_error("element not in the requested eigenpart: " + what) {}
};

class NotRegular : public std::runtime_error {
 public:
  explicit NotRegular(const std::string& what)
      : std::runtime_error("lattice is not regular: " + what) {}
};

class NotExact : public std::runtime_error {
 public:
  explicit NotExact(const std::string& what)
      : std::runtime_error("sequence is not exact: " + what) {}
};

class UnknownFamily : public std::runtime_error {
 public:
  explicit UnknownFamily(const std::string& what)
      : std::runtime_error("unknown family: " + what) {}
};

class Inconclusive : public std::runtime_error {
 public:
  explicit Inconclusive(const std::string& what)
      : std::runtime_error("inconclusive: " + what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + what),
        position(position) {}
  std::size_t position;
};

class SemanticError : public std::runtime_error {
 public:
  explicit SemanticError(const std::string& what)
      : std::runtime_error("semantic error: " + what) {}
};

}  // namespace kleinring

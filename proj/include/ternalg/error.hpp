#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace ternalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error
{
public:
  DivisionByZero() : Error("division by zero") {}
};

/// Malformed literal or descriptor; `position` is a 0-based character offset.
class ParseError : public Error
{
public:
  ParseError(const std::string &what, std::size_t position)
  : Error(what + " (at position " + std::to_string(position) + ")"), m_position(position)
  {}

  std::size_t position() const { return m_position; }

private:
  std::size_t m_position;
};

class ShapeError : public Error
{
public:
  using Error::Error;
};

class BasisError : public Error
{
public:
  using Error::Error;
};

class SingularError : public Error
{
public:
  using Error::Error;
};

class ConstructionError : public Error
{
public:
  using Error::Error;
};

class DimensionError : public Error
{
public:
  using Error::Error;
};

/// Raised when a bracket of spanning elements escapes a subspace.
class ClosureError : public Error
{
public:
  ClosureError(const std::string &what, std::array<std::size_t, 3> triple)
  : Error(what), m_triple(triple)
  {}

  /// Indices (into the subspace's spanning family) of the escaping triple.
  std::array<std::size_t, 3> triple() const { return m_triple; }

private:
  std::array<std::size_t, 3> m_triple;
};

} // namespace ternalg

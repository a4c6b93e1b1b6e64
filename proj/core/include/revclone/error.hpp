#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revclone
{

/// Base class of every error raised by the library.
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A value lies outside its domain: letter out of range, map not bijective, ...
class domain_error : public error
{
public:
  using error::error;
};

/// Two shapes that must agree do not. Carries both sides for reporting.
class shape_error : public error
{
public:
  shape_error( std::string const& context, std::string expected, std::string actual )
      : error( context + ": expected " + expected + ", got " + actual ),
        expected_( std::move( expected ) ),
        actual_( std::move( actual ) )
  {
  }

  std::string const& expected() const noexcept { return expected_; }
  std::string const& actual() const noexcept { return actual_; }

private:
  std::string expected_;
  std::string actual_;
};

/// Malformed text input. Line and column are 1-based.
class parse_error : public error
{
public:
  parse_error( std::string const& message, std::size_t line, std::size_t column )
      : error( std::to_string( line ) + ":" + std::to_string( column ) + ": " + message ),
        line_( line ),
        column_( column )
  {
  }

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace revclone

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace evframe {

/// Base class for data errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parse failure pinned to a location in the input.
class ParseError : public Error {
 public:
  enum class Where { byte_offset, record, line };

  ParseError(const std::string& message, Where where, std::uint64_t position);

  Where where() const noexcept { return where_; }
  std::uint64_t position() const noexcept { return position_; }

 private:
  Where where_;
  std::uint64_t position_;
};

}  // namespace evframe

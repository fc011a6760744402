#include "evframe/error.hpp"

namespace evframe {
namespace {

std::string describe(ParseError::Where where, std::uint64_t position) {
  switch (where) {
    case ParseError::Where::byte_offset:
      return "byte offset " + std::to_string(position);
    case ParseError::Where::record:
      return "record " + std::to_string(position);
    case ParseError::Where::line:
      return "line " + std::to_string(position);
  }
  return {};
}

}  // namespace

ParseError::ParseError(const std::string& message, Where where, std::uint64_t position)
    : Error(message + " (at " + describe(where, position) + ")"), where_(where), position_(position) {}

}  // namespace evframe

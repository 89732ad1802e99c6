#include "plectic6/error.hpp"

namespace plectic6 {

namespace {

std::string describe(const std::string& message, std::size_t line, std::size_t offset) {
  std::string out;
  if (line > 0) {
    out = "line " + std::to_string(line) + ": ";
  } else {
    out = "offset " + std::to_string(offset) + ": ";
  }
  return out + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t offset)
    : InputError(describe(message, line, offset)), message_(message), line_(line), offset_(offset) {}

}  // namespace plectic6

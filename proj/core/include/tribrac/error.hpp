#pragma once

#include <stdexcept>
#include <string>

namespace tribrac {

enum class Errc {
  invalid_argument,
  kind_mismatch,
  axiom_failure,
  cap_exceeded,
  parse_error,
  not_cocycle,
  unknown_name,
  composite_modulus,
  disconnected,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised when a configured size limit would be exceeded; cap() names the limit.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap, const std::string& what);
  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

enum class ParseErrc {
  syntax,
  dangling_end,
  repeated_id,
  face_count,
  orientation,
  sign,
};

class ParseError : public Error {
 public:
  ParseError(ParseErrc kind, int line, const std::string& what);
  ParseErrc kind() const noexcept { return kind_; }
  // 1-based input line, 0 when the problem is not tied to a line
  int line() const noexcept { return line_; }

 private:
  ParseErrc kind_;
  int line_;
};

}  // namespace tribrac

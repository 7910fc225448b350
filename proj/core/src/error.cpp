#include "tribrac/error.hpp"

namespace tribrac {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::kind_mismatch: return "kind mismatch";
    case Errc::axiom_failure: return "axiom failure";
    case Errc::cap_exceeded: return "cap exceeded";
    case Errc::parse_error: return "parse error";
    case Errc::not_cocycle: return "not a cocycle";
    case Errc::unknown_name: return "unknown name";
    case Errc::composite_modulus: return "composite modulus";
    case Errc::disconnected: return "disconnected diagram";
  }
  return "error";
}

Error::Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

CapExceeded::CapExceeded(std::string cap, const std::string& what)
    : Error(Errc::cap_exceeded, what), cap_(std::move(cap)) {}

static std::string with_line(int line, const std::string& what) {
  if (line <= 0) return what;
  return "line " + std::to_string(line) + ": " + what;
}

ParseError::ParseError(ParseErrc kind, int line, const std::string& what)
    : Error(Errc::parse_error, with_line(line, what)), kind_(kind), line_(line) {}

}  // namespace tribrac

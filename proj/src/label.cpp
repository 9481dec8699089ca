#include "polyhedra/label.hpp"

#include <charconv>

#include "polyhedra/error.hpp"

namespace polyhedra {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::IncompatibleSets: return "IncompatibleSets";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DisconnectedLink: return "DisconnectedLink";
    case ErrorCode::NotWicks: return "NotWicks";
    case ErrorCode::IncompleteSubstitution: return "IncompleteSubstitution";
    case ErrorCode::CancellingSubstitution: return "CancellingSubstitution";
    case ErrorCode::NotP2Shape: return "NotP2Shape";
    case ErrorCode::NoExtension: return "NoExtension";
    case ErrorCode::BadParameter: return "BadParameter";
  }
  return "Error";
}

std::string Label::str() const {
  if (!family) return base;
  return base + "^" + std::to_string(*family);
}

bool is_token(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

Label parse_label(std::string_view token) {
  auto caret = token.find('^');
  std::string_view base = token.substr(0, caret);
  if (!is_token(base)) throw Error(ErrorCode::Parse, "bad label '" + std::string(token) + "'");
  if (caret == std::string_view::npos) return Label(std::string(base));
  std::string_view idx = token.substr(caret + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), value);
  if (idx.empty() || ec != std::errc() || ptr != idx.data() + idx.size() || value < 0) {
    throw Error(ErrorCode::Parse, "bad family index in '" + std::string(token) + "'");
  }
  return Label(std::string(base), value);
}

}  // namespace polyhedra

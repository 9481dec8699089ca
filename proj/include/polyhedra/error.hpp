#pragma once

#include <stdexcept>
#include <string>

namespace polyhedra {

enum class ErrorCode {
  Parse,
  InvalidGraph,
  DisconnectedGraph,
  IncompatibleSets,
  UnknownLabel,
  AxiomViolation,
  NotQuadratic,
  UnknownVertex,
  DisconnectedLink,
  NotWicks,
  IncompleteSubstitution,
  CancellingSubstitution,
  NotP2Shape,
  NoExtension,
  BadParameter,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polyhedra

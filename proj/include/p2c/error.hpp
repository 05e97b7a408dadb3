#pragma once

#include <stdexcept>
#include <string>

namespace p2c {

enum class ErrorKind {
  ParseError,
  ContractionError,
  OracleViolation,
  PlantedViolation,
  NotIsomorphic,
  NoWitness,
  InstanceTooLarge,
  InternalInvariantFailure,
  FixtureNotFound,
};

const char* to_string(ErrorKind k);

// Process exit code for the CLI. 0 = success, 2 = parse, 3 = oracle-level
// failure (violation, planted mismatch, unsatisfiable query), 4 = size guard,
// 5 = broken internal invariant.
int exit_code(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string detail_json = {})
      : std::runtime_error(std::move(message)),
        kind_(kind),
        detail_json_(std::move(detail_json)) {}

  ErrorKind kind() const { return kind_; }

  // Optional machine-readable payload, e.g. the trace record of the step that
  // failed. Empty when there is nothing beyond the message.
  const std::string& detail_json() const { return detail_json_; }

 private:
  ErrorKind kind_;
  std::string detail_json_;
};

[[noreturn]] inline void raise(ErrorKind kind, std::string message,
                               std::string detail_json = {}) {
  throw Error(kind, std::move(message), std::move(detail_json));
}

}  // namespace p2c

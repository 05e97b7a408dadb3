#include "p2c/error.hpp"

namespace p2c {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
      return "parse-error";
    case ErrorKind::ContractionError:
      return "contraction-error";
    case ErrorKind::OracleViolation:
      return "oracle-violation";
    case ErrorKind::PlantedViolation:
      return "planted-violation";
    case ErrorKind::NotIsomorphic:
      return "not-isomorphic";
    case ErrorKind::NoWitness:
      return "no-witness";
    case ErrorKind::InstanceTooLarge:
      return "instance-too-large";
    case ErrorKind::InternalInvariantFailure:
      return "internal-invariant-failure";
    case ErrorKind::FixtureNotFound:
      return "fixture-not-found";
  }
  return "unknown-error";
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
      return 2;
    case ErrorKind::OracleViolation:
    case ErrorKind::PlantedViolation:
    case ErrorKind::NotIsomorphic:
    case ErrorKind::NoWitness:
      return 3;
    case ErrorKind::InstanceTooLarge:
      return 4;
    case ErrorKind::ContractionError:
    case ErrorKind::InternalInvariantFailure:
    case ErrorKind::FixtureNotFound:
      return 5;
  }
  return 5;
}

}  // namespace p2c

#pragma once

#include <stdexcept>
#include <string>

namespace rxgram {

// Base of all library errors. Subclasses distinguish the failure domains
// the CLI maps onto exit codes (usage=1, data=2, training=3).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Corpus / file format errors.
struct SyntaxError : Error {
  int line;
  int col;
  SyntaxError(int line_, int col_, const std::string& msg)
      : Error("syntax error at line " + std::to_string(line_) + ", col " +
              std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

struct InvariantViolation : Error {
  int line;
  InvariantViolation(int line_, const std::string& rule)
      : Error("invariant violation at line " + std::to_string(line_) + ": " + rule),
        line(line_) {}
};

struct SchemaError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct MissingExternalFile : Error {
  using Error::Error;
};

struct CheckpointMismatch : Error {
  using Error::Error;
};

struct AlignmentError : Error {
  using Error::Error;
};

// Transition system errors.
struct IllegalAction : Error {
  using Error::Error;
};

struct OracleIllegal : Error {
  using Error::Error;
};

// Numeric core errors.
struct DimMismatch : Error {
  using Error::Error;
};

struct EmptySequence : Error {
  using Error::Error;
};

struct EmptyStack : Error {
  using Error::Error;
};

struct EmptyMask : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct TagNotInTagset : Error {
  using Error::Error;
};

struct EmptyInstances : Error {
  using Error::Error;
};

}  // namespace rxgram

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace racebench {

class KindMismatch : public std::runtime_error {
 public:
  explicit KindMismatch(const std::string& what) : std::runtime_error(what) {}
};

class PoseOutOfBounds : public std::runtime_error {
 public:
  explicit PoseOutOfBounds(const std::string& what) : std::runtime_error(what) {}
};

class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

class NonMonotonicTime : public std::runtime_error {
 public:
  explicit NonMonotonicTime(const std::string& what) : std::runtime_error(what) {}
};

class EmptyLaps : public std::runtime_error {
 public:
  explicit EmptyLaps(const std::string& what) : std::runtime_error(what) {}
};

class NoMatches : public std::runtime_error {
 public:
  explicit NoMatches(const std::string& what) : std::runtime_error(what) {}
};

class DegenerateInput : public std::runtime_error {
 public:
  explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

class DeltaTooLarge : public std::runtime_error {
 public:
  explicit DeltaTooLarge(const std::string& what) : std::runtime_error(what) {}
};

class LengthMismatch : public std::runtime_error {
 public:
  explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

class DuplicateExperimentId : public std::runtime_error {
 public:
  explicit DuplicateExperimentId(const std::string& what) : std::runtime_error(what) {}
};

class IoFailure : public std::runtime_error {
 public:
  explicit IoFailure(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Structured parse failure for text inputs (trajectory files, map files).
// `line` is 1-based; 0 means the error is not tied to a particular line.
class ParseError : public std::runtime_error {
 public:
  enum class Code {
    kBadFieldCount,
    kNonNumeric,
    kNonMonotonicTime,
    kNonRotation,
    kMissingColumn,
    kEmptyFile,
    kMalformedImage,
    kDimensionMismatch,
    kBadThresholds,
  };

  ParseError(Code code, std::size_t line, const std::string& message)
      : std::runtime_error(format(code, line, message)), code_(code), line_(line) {}

  Code code() const { return code_; }
  std::size_t line() const { return line_; }

  static const char* code_name(Code code) {
    switch (code) {
      case Code::kBadFieldCount: return "BadFieldCount";
      case Code::kNonNumeric: return "NonNumeric";
      case Code::kNonMonotonicTime: return "NonMonotonicTime";
      case Code::kNonRotation: return "NonRotation";
      case Code::kMissingColumn: return "MissingColumn";
      case Code::kEmptyFile: return "EmptyFile";
      case Code::kMalformedImage: return "MalformedImage";
      case Code::kDimensionMismatch: return "DimensionMismatch";
      case Code::kBadThresholds: return "BadThresholds";
    }
    return "ParseError";
  }

 private:
  static std::string format(Code code, std::size_t line, const std::string& message) {
    std::string out = code_name(code);
    if (line > 0) {
      out += " at line " + std::to_string(line);
    }
    out += ": " + message;
    return out;
  }

  Code code_;
  std::size_t line_;
};

}  // namespace racebench

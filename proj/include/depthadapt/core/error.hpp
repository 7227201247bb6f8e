#pragma once

#include <stdexcept>
#include <string>

namespace depthadapt {

/// Invalid or inconsistent configuration (bad config file, unsupported
/// resolution, malformed architecture request). CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Dataset ingestion problems: missing files, undecodable images, size
/// mismatches between requests and available data. CLI exit code 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Tensor- or batch-shape mismatch between producer and consumer.
class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad argument to an otherwise well-configured operation (empty batch,
/// empty valid-pixel set, mixed update phases).
class ArgumentError : public std::runtime_error {
 public:
  explicit ArgumentError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Failures while a training run is in flight (divergence, aborted
/// checkpoint writes). CLI exit code 4.
class TrainingError : public std::runtime_error {
 public:
  explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

/// I/O and serialization failures (unreadable checkpoint, short file).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace depthadapt

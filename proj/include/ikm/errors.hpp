#pragma once

#include <stdexcept>
#include <string>

namespace ikm {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct WrongFamily : std::logic_error {
  explicit WrongFamily(const std::string& what) : std::logic_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateTuple : std::invalid_argument {
  explicit DegenerateTuple(const std::string& what) : std::invalid_argument(what) {}
};

struct HypothesisViolated : std::invalid_argument {
  explicit HypothesisViolated(const std::string& what) : std::invalid_argument(what) {}
};

struct NotConverged : std::runtime_error {
  explicit NotConverged(const std::string& what) : std::runtime_error(what) {}
};

struct NoEntranceTime : std::runtime_error {
  explicit NoEntranceTime(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ikm

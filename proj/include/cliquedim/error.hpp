#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cliquedim {

enum class ErrorKind {
  invalid_params,
  parse_error,
  resource_limit,
  index_out_of_range,
  not_independent,
  degenerate_clique,
  not_clique,
  not_shattered,
  not_complete,
  infeasible_model,
  zero_coloring,
  zero_clique,
  no_separation,
  length_mismatch,
  even_length,
  not_realizable_distribution,
  empty_class,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when a configured cap is exceeded. `dimension` names the cap
// (e.g. "vertices", "patterns", "search-nodes") so the CLI can report it.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(std::string dimension, const std::string& what)
      : Error(ErrorKind::resource_limit, dimension + ": " + what),
        dimension_(std::move(dimension)) {}

  const std::string& dimension() const noexcept { return dimension_; }

 private:
  std::string dimension_;
};

}  // namespace cliquedim

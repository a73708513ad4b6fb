#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricreal {

enum class Errc {
  empty,
  unbounded,
  lower_dimensional,
  no_solution,
  inconsistent_relations,
  not_complete,
  invalid_fan,
  torsion_class_group,
  not_simplicial,
  not_big,
  exhausted_attempts,
  same_chamber,
  out_of_range,
  not_cartier,
  not_fano,
  no_such_m,
  invalid_argument,
};

std::string_view to_string(Errc code);

/// A violated geometric precondition (empty polytope, non-big divisor, ...).
class GeometryError : public std::runtime_error {
 public:
  GeometryError(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Malformed textual input (files, divisor literals).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace toricreal

#pragma once

#include <stdexcept>
#include <string>

namespace springer {

enum class Errc {
  invalid_argument,
  not_classical_type,
  dimension_mismatch,
  not_admissible,
  unclassifiable_domino,
  not_a_partition,
  infeasible,
  scope_error,
  pattern_mismatch,
  singular_table,
  inconsistent_character,
  non_integral_solution,
  negative_multiplicity,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace springer

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmvlab {

enum class ErrorCode {
  malformed_table,
  out_of_carrier,
  internal_inconsistency,
  precondition_failed,
  no_split,
  not_enumerable,
  shape_mismatch,
  bad_partition,
  unit_not_in_group,
  unit_not_strong,
  closure_violation,
  cap_exceeded,
  not_in_carrier,
  not_chain_factor,
  not_normal,
  no_decomposition,
  not_summand,
  not_strongly_projectable,
  iso_failure,
  not_in_group,
  not_finite_index,
  bound_exhausted,
  not_large,
  correspondence_failure,
  non_termination,
  schema_error,
};

/// Stable CamelCase name used in reports and CLI diagnostics.
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pmvlab

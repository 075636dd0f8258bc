#pragma once

#include <stdexcept>
#include <string>

namespace shockratio {

enum class errc {
  invalid_distribution,
  non_differentiable,
  tail_bound_too_loose,
  not_class_c2,
  combinatorial_blowup,
  hypothesis_violated,
  not_an_atom,
  resolution_too_coarse,
  window_invalid,
  mgf_undefined,
  target_out_of_range,
  condition_failed,
  n_too_small,
  constants_out_of_order,
  eps_not_valid,
  tilt_not_samplable,
  parse_error,
  unsupported_combination,
  engine_error,
};

const char* errc_name(errc c);

/// All library failures are reported through this exception; `code` makes the
/// failure class testable without string matching.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what_arg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what_arg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

} // namespace shockratio

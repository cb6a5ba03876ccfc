#pragma once

#include <stdexcept>
#include <string>

namespace hsas {

/// Error categories carried by every exception thrown from this library.
enum class errc {
  bad_argument,
  dimension_mismatch,
  zero_divisor,
  magic_mismatch,
  truncated_payload,
  shape_mismatch,
  io_failure,
  negative_support,
  convergence_failure,
  non_finite_sample,
  unsupported,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hsas

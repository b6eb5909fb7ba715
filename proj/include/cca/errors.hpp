#pragma once

#include <stdexcept>
#include <string>

namespace cca {

// Error codes carried by every exception thrown from this library, so that
// callers (and the CLI error record) can dispatch without parsing messages.
enum class errc {
  invalid_argument,
  not_mirror_symmetric,
  eta_zero,        // eta = 0: no bound mode exists
  eta_degenerate,  // |eta| = 1: fully dimerized, formulas singular
  no_bound_pair,
  zero_gap,
  regime_mismatch,
  index_out_of_range,
  parse_error,
  io_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace cca

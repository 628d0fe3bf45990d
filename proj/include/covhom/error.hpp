#pragma once
#include <stdexcept>
#include <string>

namespace covhom {

// Failure classes. The CLI maps code() straight to its process exit status,
// so the numbering is part of the external contract.
enum class errc {
  parse_error = 2,
  shape_mismatch = 3,
  composition_nonzero = 4,
  not_minimal = 5,
  odd_entry = 6,
  zero_omega = 7,
  empty_omega = 8,
  duplicate_line = 9,
  shape_violation = 10,
  certificate_failure = 11,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace covhom

#pragma once

#include <stdexcept>
#include <string>

namespace nm {

enum class error_kind {
  invalid_argument,    // malformed input, out-of-range parameters
  not_a_monoid,        // empty generator list or gcd != 1
  hypothesis_violated, // an operation's structural precondition fails
  not_artinian,
  inadmissible,        // Hilbert function violates Macaulay growth or closure
  not_stable,
  not_lexsegment,
  not_a_downset,
  not_certified,       // truncation of the initial-form ideal not certified
  resource_limit,
};

inline const char* to_string(error_kind k) noexcept {
  switch (k) {
    case error_kind::invalid_argument: return "invalid argument";
    case error_kind::not_a_monoid: return "not a numerical monoid";
    case error_kind::hypothesis_violated: return "hypothesis violated";
    case error_kind::not_artinian: return "not artinian";
    case error_kind::inadmissible: return "inadmissible Hilbert function";
    case error_kind::not_stable: return "not stable";
    case error_kind::not_lexsegment: return "not lexsegment";
    case error_kind::not_a_downset: return "not a down-set";
    case error_kind::not_certified: return "truncation not certified";
    case error_kind::resource_limit: return "resource limit exceeded";
  }
  return "unknown error";
}

class error : public std::runtime_error {
 public:
  error(error_kind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

}  // namespace nm

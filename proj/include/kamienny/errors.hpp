#pragma once

#include <stdexcept>
#include <string>

namespace kamienny {

enum class errc {
  bad_argument,
  overflow,
  not_a_point,
  not_in_kernel,
  torsion_detected,
  not_a_dependency,
  degenerate_h,
  hypothesis_unmet,
  d_out_of_range,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_argument:     return "BadArgument";
    case errc::overflow:         return "Overflow";
    case errc::not_a_point:      return "NotAPoint";
    case errc::not_in_kernel:    return "NotInKernel";
    case errc::torsion_detected: return "TorsionDetected";
    case errc::not_a_dependency: return "NotADependency";
    case errc::degenerate_h:     return "DegenerateH";
    case errc::hypothesis_unmet: return "HypothesisUnmet";
    case errc::d_out_of_range:   return "DOutOfRange";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace kamienny

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpld {

/// Base class for every solver-side failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series or iteration did not meet its stopping rule within its cap.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

/// No sign change of a secular/characteristic function was found below the scan ceiling.
class NoRootFound : public Error {
 public:
  using Error::Error;
};

/// Per-row outcome recorded by sweeps instead of aborting.
enum class Status { ok, no_root, nonconvergent };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::no_root: return "no_root";
    case Status::nonconvergent: return "nonconvergent";
  }
  return "ok";
}

inline Status status_from_string(std::string_view s) {
  if (s == "ok") return Status::ok;
  if (s == "no_root") return Status::no_root;
  if (s == "nonconvergent") return Status::nonconvergent;
  throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

}  // namespace cpld

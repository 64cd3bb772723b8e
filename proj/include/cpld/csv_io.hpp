#pragma once

// CSV writers/readers for the sweep, profile and curve tables. Floats are
// written with 17 significant digits so that reading them back is exact.

#include <iosfwd>
#include <string>
#include <vector>

#include "cpld/ball_spectrum.hpp"
#include "cpld/constants.hpp"
#include "cpld/jab_solver.hpp"

namespace cpld::io {

inline constexpr const char* kConstantsHeader = "n,R,Lambda1,lambda1,A_min,B_min,J_min,C,C_raw,status";
inline constexpr const char* kProfileHeader = "A,B,sqrtJ,status";
inline constexpr const char* kCurveHeader = "R,l,lambda,status";

/// "%.17g", with "nan"/"inf"/"-inf" for non-finite values.
std::string format_real(double x);
double parse_real(const std::string& text);

struct CurveRow {
  double R;
  int l;
  double lambda;
  Status status;
};

void write_constants(std::ostream& out, const std::vector<constants::ConstantRecord>& rows);
void write_profile(std::ostream& out, const std::vector<jab::ProfileSample>& rows);
void write_curve(std::ostream& out, const std::vector<CurveRow>& rows);

/// Readers throw std::runtime_error on a header mismatch or malformed row.
std::vector<constants::ConstantRecord> read_constants(std::istream& in);
std::vector<jab::ProfileSample> read_profile(std::istream& in);
std::vector<CurveRow> read_curve(std::istream& in);

}  // namespace cpld::io

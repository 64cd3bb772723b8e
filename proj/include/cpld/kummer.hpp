#pragma once

// Kummer's confluent hypergeometric function M(a,b,z) for real arguments.
//
// The series is summed with the term recurrence
//   t_{k+1} = t_k (a+k) z / ((b+k)(k+1))
// and Neumaier-compensated accumulation. When the largest term dwarfs the
// result (alternating series at negative z) the sum is redone in quad
// precision (__float128, 113-bit mantissa).

#include <cstdint>

namespace cpld::kummer {

struct KummerParams {
  double a = 0.0;
  double b = 1.0;  ///< must be > 0
};

/// Working precision of the series.
enum class Precision {
  automatic,  ///< double, falling back to quad when cancellation is detected
  double_only,
  extended,
};

struct EvalResult {
  double value = 0.0;
  int terms_used = 0;
  double max_term_magnitude = 0.0;
  /// max_term_magnitude / max(|value|, tiny) exceeded kCancellationThreshold.
  bool cancellation_flag = false;
  /// The returned value was summed in quad precision.
  bool extended = false;
};

inline constexpr double kSeriesTolerance = 1e-17;
inline constexpr int kConsecutiveSmallTerms = 3;
inline constexpr int kMaxTerms = 2000;
inline constexpr double kCancellationThreshold = 1e4;
inline constexpr double kTiny = 1e-300;

/// Rising factorial (a)_k = a(a+1)...(a+k-1); (a)_0 = 1.
double pochhammer(double a, std::uint32_t k);

/// M(a,b,z) using the process default precision (see default_precision()).
EvalResult eval_m(KummerParams p, double z);
EvalResult eval_m(KummerParams p, double z, Precision precision);

/// dM/dz = (a/b) M(a+1, b+1, z).
EvalResult eval_m_dz(KummerParams p, double z);
EvalResult eval_m_dz(KummerParams p, double z, Precision precision);

/// Number of positive real zeros of M(a,b,.): ceil(|a|) for a < 0, else 0.
unsigned count_positive_roots(KummerParams p);

/// Number of negative real zeros of M(a,b,.): ceil(a-b) for b < a, else 0.
unsigned count_negative_roots(KummerParams p);

/// Precision selected by the CPLD_PRECISION environment variable
/// ("double" or "extended"); anything else, or unset, means automatic.
/// Read once per process.
Precision default_precision();

/// Parses a CPLD_PRECISION value; returns false for unrecognised text.
bool parse_precision(const char* text, Precision& out);

}  // namespace cpld::kummer

#include "cpld/kummer.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "cpld/error.hpp"

namespace cpld::kummer {

namespace {

using quad = __float128;

template <class T>
T magnitude(T x) {
  return x < 0 ? -x : x;
}

template <class T>
struct SeriesSum {
  T value;
  int terms;
  T max_term;
};

// Neumaier summation; in quad precision the compensation is harmless.
template <class T>
SeriesSum<T> sum_series(T a, T b, T z) {
  T sum = 1;
  T comp = 0;
  T term = 1;
  T max_term = 1;
  int small_run = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term = term * (a + k) * z / ((b + k) * (k + 1));
    const T next = sum + term;
    if (magnitude(sum) >= magnitude(term)) {
      comp += (sum - next) + term;
    } else {
      comp += (term - next) + sum;
    }
    sum = next;
    const T abs_term = magnitude(term);
    if (abs_term > max_term) max_term = abs_term;
    if (abs_term <= T(kSeriesTolerance) * magnitude(sum + comp)) {
      if (++small_run == kConsecutiveSmallTerms) {
        return {sum + comp, k + 2, max_term};
      }
    } else {
      small_run = 0;
    }
  }
  std::ostringstream msg;
  msg << "Kummer series did not converge in " << kMaxTerms << " terms (a=" << double(a)
      << ", b=" << double(b) << ", z=" << double(z) << ")";
  throw NonConvergent(msg.str());
}

void check_params(KummerParams p, double z) {
  if (!(p.b > 0.0) || !std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(z)) {
    std::ostringstream msg;
    msg << "Kummer M requires finite a, z and b > 0 (a=" << p.a << ", b=" << p.b << ", z=" << z
        << ")";
    throw std::invalid_argument(msg.str());
  }
}

EvalResult evaluate_extended(KummerParams p, double z, bool flag) {
  const auto s = sum_series<quad>(quad(p.a), quad(p.b), quad(z));
  return {double(s.value), s.terms, double(s.max_term), flag, true};
}

}  // namespace

double pochhammer(double a, std::uint32_t k) {
  double result = 1.0;
  for (std::uint32_t i = 0; i < k; ++i) result *= a + double(i);
  return result;
}

EvalResult eval_m(KummerParams p, double z) { return eval_m(p, z, default_precision()); }

EvalResult eval_m(KummerParams p, double z, Precision precision) {
  check_params(p, z);
  if (precision == Precision::extended) {
    const auto r = evaluate_extended(p, z, false);
    return {r.value, r.terms_used, r.max_term_magnitude,
            r.max_term_magnitude / std::max(std::abs(r.value), kTiny) > kCancellationThreshold,
            true};
  }
  const auto s = sum_series<double>(p.a, p.b, z);
  const bool flag = s.max_term / std::max(std::abs(s.value), kTiny) > kCancellationThreshold;
  if (flag && precision == Precision::automatic) return evaluate_extended(p, z, true);
  return {s.value, s.terms, s.max_term, flag, false};
}

EvalResult eval_m_dz(KummerParams p, double z) { return eval_m_dz(p, z, default_precision()); }

EvalResult eval_m_dz(KummerParams p, double z, Precision precision) {
  check_params(p, z);
  const double scale = p.a / p.b;
  EvalResult r = eval_m({p.a + 1.0, p.b + 1.0}, z, precision);
  r.value *= scale;
  r.max_term_magnitude *= std::abs(scale);
  return r;
}

unsigned count_positive_roots(KummerParams p) {
  if (p.a < 0.0) return static_cast<unsigned>(std::ceil(-p.a));
  return 0;
}

unsigned count_negative_roots(KummerParams p) {
  if (p.b < p.a) return static_cast<unsigned>(std::ceil(p.a - p.b));
  return 0;
}

bool parse_precision(const char* text, Precision& out) {
  if (text == nullptr || std::strcmp(text, "auto") == 0 || *text == '\0') {
    out = Precision::automatic;
    return true;
  }
  if (std::strcmp(text, "double") == 0) {
    out = Precision::double_only;
    return true;
  }
  if (std::strcmp(text, "extended") == 0) {
    out = Precision::extended;
    return true;
  }
  return false;
}

Precision default_precision() {
  static const Precision cached = [] {
    Precision p = Precision::automatic;
    if (!parse_precision(std::getenv("CPLD_PRECISION"), p)) p = Precision::automatic;
    return p;
  }();
  return cached;
}

}  // namespace cpld::kummer

#include "cpld/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cpld::io {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

// Yields the data rows after checking the header; tolerates a trailing CR.
std::vector<std::vector<std::string>> read_table(std::istream& in, const char* header, std::size_t width) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw std::runtime_error("csv: unexpected header '" + line + "'");
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split(line);
    if (fields.size() != width) throw std::runtime_error("csv: malformed row '" + line + "'");
    rows.push_back(std::move(fields));
  }
  return rows;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  const int v = std::stoi(text, &used);
  if (used != text.size()) throw std::runtime_error("csv: bad integer '" + text + "'");
  return v;
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_real(const std::string& text) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) throw std::runtime_error("csv: bad number '" + text + "'");
  return v;
}

void write_constants(std::ostream& out, const std::vector<constants::ConstantRecord>& rows) {
  out << kConstantsHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << format_real(r.R) << ',' << format_real(r.Lambda1) << ',' << format_real(r.lambda1)
        << ',' << format_real(r.A_min) << ',' << format_real(r.B_min) << ',' << format_real(r.J_min) << ','
        << format_real(r.C) << ',' << format_real(r.C_raw) << ',' << to_string(r.status) << '\n';
  }
}

void write_profile(std::ostream& out, const std::vector<jab::ProfileSample>& rows) {
  out << kProfileHeader << '\n';
  for (const auto& r : rows) {
    out << format_real(r.A) << ',' << format_real(r.B) << ',' << format_real(r.sqrtJ) << ','
        << to_string(r.status) << '\n';
  }
}

void write_curve(std::ostream& out, const std::vector<CurveRow>& rows) {
  out << kCurveHeader << '\n';
  for (const auto& r : rows) {
    out << format_real(r.R) << ',' << r.l << ',' << format_real(r.lambda) << ',' << to_string(r.status)
        << '\n';
  }
}

std::vector<constants::ConstantRecord> read_constants(std::istream& in) {
  std::vector<constants::ConstantRecord> out;
  for (const auto& f : read_table(in, kConstantsHeader, 10)) {
    constants::ConstantRecord r;
    r.n = parse_int(f[0]);
    r.R = parse_real(f[1]);
    r.Lambda1 = parse_real(f[2]);
    r.lambda1 = parse_real(f[3]);
    r.A_min = parse_real(f[4]);
    r.B_min = parse_real(f[5]);
    r.J_min = parse_real(f[6]);
    r.C = parse_real(f[7]);
    r.C_raw = parse_real(f[8]);
    r.status = status_from_string(f[9]);
    out.push_back(r);
  }
  return out;
}

std::vector<jab::ProfileSample> read_profile(std::istream& in) {
  std::vector<jab::ProfileSample> out;
  for (const auto& f : read_table(in, kProfileHeader, 4)) {
    out.push_back({parse_real(f[0]), parse_real(f[1]), parse_real(f[2]), status_from_string(f[3])});
  }
  return out;
}

std::vector<CurveRow> read_curve(std::istream& in) {
  std::vector<CurveRow> out;
  for (const auto& f : read_table(in, kCurveHeader, 4)) {
    out.push_back({parse_real(f[0]), parse_int(f[1]), parse_real(f[2]), status_from_string(f[3])});
  }
  return out;
}

}  // namespace cpld::io

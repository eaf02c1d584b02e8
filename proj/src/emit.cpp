#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "sdg/bench.hpp"

namespace sdg {

namespace {

std::string num(double v) { return fmt::format("{:.6g}", v); }
std::string opt(const std::optional<double>& v, const char* missing) { return v ? fmt::format("{:.2f}", *v) : missing; }
std::string opt_csv(const std::optional<double>& v) { return v ? num(*v) : ""; }

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "md") return Format::md;
  throw std::invalid_argument("unknown format '" + s + "' (expected csv or md)");
}

std::string emit(const std::vector<ErrorRecord>& records, Format format) {
  std::ostringstream out;
  if (format == Format::csv) {
    out << "level,h,dof,err_omega,err_u,err_p,err_super,ord_omega,ord_u,ord_p,ord_super\n";
    for (const auto& r : records) {
      out << r.level << ',' << num(r.h) << ',' << r.dof << ',' << num(r.err_omega) << ',' << num(r.err_u) << ','
          << num(r.err_p) << ',' << num(r.err_super) << ',' << opt_csv(r.ord_omega) << ',' << opt_csv(r.ord_u) << ','
          << opt_csv(r.ord_p) << ',' << opt_csv(r.ord_super) << '\n';
    }
    return out.str();
  }
  out << "| h | ‖u-u_h‖ | Order | ‖ω-ω_h‖ | Order | ‖p-p_h‖ | Order | ‖I_h u-u_h‖ | Order |\n";
  out << "|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : records) {
    out << "| " << num(r.h) << " | " << num(r.err_u) << " | " << opt(r.ord_u, "N/A") << " | "
        << num(r.err_omega) << " | " << opt(r.ord_omega, "N/A") << " | " << num(r.err_p) << " | "
        << opt(r.ord_p, "N/A") << " | " << num(r.err_super) << " | " << opt(r.ord_super, "N/A") << " |\n";
  }
  return out.str();
}

std::string emit_sweep(const std::vector<SweepRow>& rows, Format format) {
  std::ostringstream out;
  if (format == Format::csv) {
    out << "nu,method,level,h,dof,err_omega,err_u,err_p,err_super\n";
    for (const auto& row : rows) {
      const auto& r = row.record;
      out << num(row.nu) << ',' << to_string(row.method) << ',' << r.level << ',' << num(r.h) << ',' << r.dof << ','
          << num(r.err_omega) << ',' << num(r.err_u) << ',' << num(r.err_p) << ',' << num(r.err_super) << '\n';
    }
    return out.str();
  }
  out << "| nu | method | ‖u-u_h‖ | ‖ω-ω_h‖ | ‖p-p_h‖ | ‖I_h u-u_h‖ |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& row : rows) {
    const auto& r = row.record;
    out << "| " << num(row.nu) << " | " << to_string(row.method) << " | " << num(r.err_u) << " | " << num(r.err_omega)
        << " | " << num(r.err_p) << " | " << num(r.err_super) << " |\n";
  }
  return out.str();
}

}  // namespace sdg

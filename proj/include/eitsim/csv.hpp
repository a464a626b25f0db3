#pragma once

#include <span>
#include <string>
#include <vector>

#include "eitsim/analysis.hpp"
#include "eitsim/suscept.hpp"

namespace eitsim {

// 17-significant-digit scientific notation; round-trips exactly through
// strtod.
std::string format_g17(double value);

// Sweep CSV. Free-space columns:
//   <axis>, re_sigma13, im_sigma13, p1, p2, p3
// Cavity adds: n_mean, n_norm, top_fock_pop.
// Failed rows keep their grid value and carry nan in every data column.
// Comma separator, LF line endings, '.' decimal point.
std::string sweep_csv(const SweepResult& result, bool cavity);

// Susceptibility-order CSV:
//   delta_p, re_c1, im_c1, re_c3, im_c3, re_c5, im_c5, fit_residual
std::string orders_csv(std::span<const SusceptibilityOrders> orders);

// Dark-resonance width CSV: theta, fwhm_atom, fwhm_qdm (nan if unresolved).
std::string fwhm_csv(const FwhmScan& atom, const FwhmScan& qdm);

// Minimal reader for round-trip checks: parses a CSV produced by the
// writers above into header + numeric rows.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};
CsvTable parse_csv(const std::string& text);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace eitsim

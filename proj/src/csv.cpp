#include "eitsim/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace eitsim {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void append_row(std::string& out, std::span<const double> values) {
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_g17(values[i]);
    }
    out += '\n';
}
}  // namespace

std::string format_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", value);
    return buf;
}

std::string sweep_csv(const SweepResult& result, bool cavity) {
    std::string out = result.axis + ",re_sigma13,im_sigma13,p1,p2,p3";
    if (cavity) out += ",n_mean,n_norm,top_fock_pop";
    out += '\n';

    for (size_t i = 0; i < result.rows.size(); ++i) {
        const SweepRow& row = result.rows[i];
        std::vector<double> values;
        values.push_back(row.x);
        if (row.ok) {
            values.insert(values.end(),
                          {row.obs.sigma13.real(), row.obs.sigma13.imag(), row.obs.p1,
                           row.obs.p2, row.obs.p3});
            if (cavity) {
                values.push_back(row.obs.n_mean);
                values.push_back(result.normalized() ? result.n_norm[i] : kNaN);
                values.push_back(row.obs.top_fock_pop);
            }
        } else {
            values.insert(values.end(), cavity ? 8 : 5, kNaN);
        }
        append_row(out, values);
    }
    return out;
}

std::string orders_csv(std::span<const SusceptibilityOrders> orders) {
    std::string out = "delta_p,re_c1,im_c1,re_c3,im_c3,re_c5,im_c5,fit_residual\n";
    for (const auto& o : orders) {
        append_row(out, std::initializer_list<double>{
                            o.delta_p, o.c1.real(), o.c1.imag(), o.c3.real(),
                            o.c3.imag(), o.c5.real(), o.c5.imag(), o.fit_residual});
    }
    return out;
}

std::string fwhm_csv(const FwhmScan& atom, const FwhmScan& qdm) {
    if (atom.rows.size() != qdm.rows.size())
        throw std::invalid_argument("fwhm_csv: scans have different lengths");
    std::string out = "theta,fwhm_atom,fwhm_qdm\n";
    for (size_t i = 0; i < atom.rows.size(); ++i) {
        append_row(out, std::initializer_list<double>{
                            atom.rows[i].theta,
                            atom.rows[i].resolved ? atom.rows[i].stats.fwhm : kNaN,
                            qdm.rows[i].resolved ? qdm.rows[i].stats.fwhm : kNaN});
    }
    return out;
}

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::istringstream stream(text);
    std::string line;
    bool first = true;
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        size_t start = 0;
        for (;;) {
            const size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (first) {
            table.header = cells;
            first = false;
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& cell : cells) {
            char* end = nullptr;
            row.push_back(std::strtod(cell.c_str(), &end));
            if (end == cell.c_str())
                throw std::runtime_error("parse_csv: bad numeric cell '" + cell + "'");
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace eitsim

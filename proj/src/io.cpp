#include "cll/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cll/errors.hpp"

namespace cll::io {

std::string sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

void write_snapshots(std::ostream& os, const std::vector<Snapshot>& snaps) {
    for (const Snapshot& s : snaps) {
        os << "# t=" << sci(s.t) << "\n";
        for (int m = 0; m < s.u.size(); ++m) {
            os << sci(s.u.grid.point(m)) << " " << sci(s.u[m].real()) << " " << sci(s.u[m].imag())
               << "\n";
        }
    }
}

std::vector<Snapshot> read_snapshots(std::istream& is, const GridSpec& grid) {
    std::vector<Snapshot> out;
    std::string line;
    std::vector<Complex> values;
    double t = 0.0;
    bool in_block = false;
    auto flush = [&] {
        if (!in_block) return;
        if (static_cast<int>(values.size()) != grid.n) {
            throw ConfigError("snapshot block at t = " + sci(t) + " has " +
                              std::to_string(values.size()) + " rows, grid expects " +
                              std::to_string(grid.n));
        }
        out.push_back(Snapshot{t, ComplexField(grid, values)});
        values.clear();
    };
    while (std::getline(is, line)) {
        if (line.rfind("# t=", 0) == 0) {
            flush();
            t = std::stod(line.substr(4));
            in_block = true;
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        double x, re, im;
        if (!(row >> x >> re >> im)) {
            throw ConfigError("snapshot file: malformed row '" + line + "'");
        }
        if (!in_block) throw ConfigError("snapshot file: data row before any '# t=' header");
        const int m = static_cast<int>(values.size());
        if (m < grid.n && std::abs(x - grid.point(m)) > 1e-9 * std::max(1.0, std::abs(x))) {
            throw ConfigError("snapshot file: x = " + sci(x) + " does not match grid point " +
                              sci(grid.point(m)));
        }
        values.emplace_back(re, im);
    }
    flush();
    if (out.empty()) throw ConfigError("snapshot file: no snapshots found");
    return out;
}

std::vector<Snapshot> read_snapshots_file(const std::string& path, const GridSpec& grid) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open snapshot file '" + path + "'");
    return read_snapshots(is, grid);
}

void write_series(std::ostream& os, const TaylorSeries& s) {
    for (int j = 0; j <= s.order(); ++j) {
        const ComplexField& v = s.coeffs[static_cast<std::size_t>(j)];
        os << "# order=" << j << "\n";
        for (int m = 0; m < v.size(); ++m) {
            os << sci(v.grid.point(m)) << " " << sci(v[m].real()) << " " << sci(v[m].imag())
               << "\n";
        }
    }
}

void write_error_table(std::ostream& os, const std::vector<ErrorRow>& rows) {
    os << "t,order,sup_err,l2_err,err_abs_u,err_abs_u2\n";
    for (const ErrorRow& r : rows) {
        os << sci(r.t) << "," << r.order << "," << sci(r.sup_err) << "," << sci(r.l2_err) << ","
           << sci(r.err_abs_u) << "," << sci(r.err_abs_u2) << "\n";
    }
}

void write_radius(std::ostream& os, const RadiusReport& report) {
    os << "x,R\n";
    const GridSpec& g = report.per_point.grid;
    for (int m = 0; m < g.n; ++m) {
        const double r = report.per_point[m];
        os << sci(g.point(m)) << "," << (std::isfinite(r) ? sci(r) : "inf") << "\n";
    }
    os << "# global_R=" << (std::isfinite(report.global) ? sci(report.global) : "inf") << "\n";
}

void write_divergence(std::ostream& os, const DivergenceVerdict& v) {
    os << "radius = " << (std::isfinite(v.radius) ? sci(v.radius) : "inf") << "\n";
    os << "t_inside = " << sci(v.t_inside) << "\n";
    os << "err_inside = " << sci(v.err_inside) << "\n";
    os << "clause_a = " << (v.inside_ok ? "PASS" : "FAIL") << "\n";
    if (v.t_outside) os << "t_outside = " << sci(*v.t_outside) << "\n";
    if (v.err_outside) os << "err_outside = " << sci(*v.err_outside) << "\n";
    os << "clause_b = ";
    switch (v.tail_status) {
        case TailStatus::kPass: os << "PASS"; break;
        case TailStatus::kFail: os << "FAIL"; break;
        case TailStatus::kSkippedHorizon: os << "SKIPPED (horizon short of 2R)"; break;
        case TailStatus::kBlowUp: os << "BLOWUP (reference unavailable)"; break;
    }
    os << "\n";
    if (v.blowup_time) os << "blowup_t = " << sci(*v.blowup_time) << "\n";
    os << "verdict = " << (v.divergence_demonstrated() ? "DIVERGENCE_DEMONSTRATED" : "NOT_DEMONSTRATED")
       << "\n";
}

void write_file(const std::string& path, const std::string& header, const std::string& body) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file '" + path + "'");
    std::istringstream hdr(header);
    std::string line;
    while (std::getline(hdr, line)) os << "# " << line << "\n";
    os << body;
    if (!os) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace cll::io

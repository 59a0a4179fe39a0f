#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cll/adm.hpp"
#include "cll/analysis.hpp"
#include "cll/field.hpp"
#include "cll/reference.hpp"

namespace cll::io {

// 17-significant-digit scientific notation, stable across runs.
std::string sci(double v);

// Snapshot stream: one "# t=<value>" header per snapshot, then one
// "x re(u) im(u)" row per grid point.
void write_snapshots(std::ostream& os, const std::vector<Snapshot>& snaps);
std::vector<Snapshot> read_snapshots(std::istream& is, const GridSpec& grid);
std::vector<Snapshot> read_snapshots_file(const std::string& path, const GridSpec& grid);

// Series coefficients: one "# order=<j>" block per coefficient, same row
// format as snapshots.
void write_series(std::ostream& os, const TaylorSeries& s);

// CSV with header "t,order,sup_err,l2_err,err_abs_u,err_abs_u2".
void write_error_table(std::ostream& os, const std::vector<ErrorRow>& rows);

// CSV with header "x,R" and a trailing "# global_R=<value>" footer.
void write_radius(std::ostream& os, const RadiusReport& report);

void write_divergence(std::ostream& os, const DivergenceVerdict& verdict);

// Writes header (each line prefixed "# ") followed by body to path.
void write_file(const std::string& path, const std::string& header, const std::string& body);

}  // namespace cll::io

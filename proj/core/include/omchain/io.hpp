#ifndef OMCHAIN_IO_HPP
#define OMCHAIN_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "omchain/scattering.hpp"
#include "omchain/sweep.hpp"

namespace omchain
{

// Flatten a covariance spectrum into a writable table: one row per filter
// center, columns center_hz plus the upper triangle of the two-mode
// covariance in row-major order (xa_xa, xa_pa, ..., pc_pc).
SweepTable spectrum_table(const std::vector<SpectrumRow> &rows);

// Shortest decimal representation that parses back to the identical double
// (locale-independent), so emitted tables are byte-stable and round-trip
// exactly.
std::string format_double(double value);

// CSV: one header row, comma-separated shortest-round-trip doubles, empty
// cells for missing values, "\n" line endings.
void write_csv(const SweepTable &table, std::ostream &out);

// JSON: array of records keyed by column name, key order = column order,
// null for missing values. Two-space indentation, "\n" endings.
void write_json(const SweepTable &table, std::ostream &out);

// Inverse parsers (exact round-trip of the writers above). Throw ConfigError
// on malformed input.
SweepTable read_csv(std::istream &in);
SweepTable read_json(std::istream &in);

} // namespace omchain

#endif // OMCHAIN_IO_HPP

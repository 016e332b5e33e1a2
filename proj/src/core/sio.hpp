#pragma once

#include "core/construct.hpp"
#include "core/scheme.hpp"
#include "core/spectra.hpp"

#include <string>
#include <string_view>

namespace ascert {

// Scheme text format: a header line "n d", then n lines of n space-separated
// relation indices. Lines whose first non-blank character is '#' are
// comments. Errors carry line/column diagnostics.
RelationMatrix parse_scheme(std::string_view text);

// Canonical text: header, rows, single spaces, LF endings, no comments,
// no trailing whitespace. parse(serialize(s)) == s cell-for-cell.
std::string serialize_scheme(const Scheme& s);

// Sign matrix, one row per line, entries "+" / "-" separated by spaces.
std::string serialize_hadamard(const SkewHadamardMatrix& h);

// JSON eigen-report with every P/Q entry in the exact scalar encoding
// {"a_num":..,"a_den":..,"b_num":..,"b_den":..,"disc":..}.
std::string serialize_eigen_report(const EigenData& e);

}  // namespace ascert

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "virpos/positivity.hpp"
#include "virpos/sweep.hpp"

namespace virpos {

// One JSON object per line. canonical_code_hex is optional (samplers do
// not pay for canonicalization).
std::string positivity_record_json(const PositivityReport& rep,
                                   std::optional<std::string> canonical_code_hex,
                                   long graph_index);

// CSV, one row per (k, i) verdict.
void write_positivity_csv_header(std::ostream& os);
void write_positivity_csv_rows(std::ostream& os, const PositivityReport& rep,
                               long graph_index);

// Sweep CSV: n, r, k, i, trials, violations, frequency, wilson_lo,
// wilson_hi, mean_alpha0, scaled_alpha0, limit_const, beta_over_alpha2.
void write_sweep_csv_header(std::ostream& os);
void write_sweep_csv_row(std::ostream& os, const SweepRow& row);

std::string sweep_row_json(const SweepRow& row);

void write_scaling_csv_header(std::ostream& os);
void write_scaling_csv_row(std::ostream& os, const ScalingRow& row);

// Fixed formatting for floating-point CSV cells (repeatable output).
std::string format_double(double v);

}  // namespace virpos

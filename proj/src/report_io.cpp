#include "virpos/report_io.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace virpos {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

nlohmann::json pairs_json(const std::vector<std::pair<int, int>>& ps) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto [k, i] : ps) arr.push_back({k, i});
  return arr;
}

const char* method_name(SignMethod m) {
  return m == SignMethod::ExactInteger ? "exact" : "interval";
}

}  // namespace

std::string positivity_record_json(const PositivityReport& rep,
                                   std::optional<std::string> canonical_code_hex,
                                   long graph_index) {
  nlohmann::json j;
  j["graph_index"] = graph_index;
  j["n"] = rep.n;
  j["r"] = rep.r;
  if (canonical_code_hex) j["canonical_code"] = *canonical_code_hex;
  j["virial_positive"] = rep.virial_positive;
  j["violations"] = pairs_json(rep.violations);
  j["undetermined"] = pairs_json(rep.undetermined);
  return j.dump();
}

void write_positivity_csv_header(std::ostream& os) {
  os << "graph_index,n,r,k,i,sign,method,precision_bits\n";
}

void write_positivity_csv_rows(std::ostream& os, const PositivityReport& rep,
                               long graph_index) {
  for (const auto& [ki, v] : rep.verdicts) {
    os << graph_index << ',' << rep.n << ',' << rep.r << ',' << ki.first << ','
       << ki.second << ',' << to_string(v.sign) << ',' << method_name(v.method)
       << ',' << v.precision_bits << '\n';
  }
}

void write_sweep_csv_header(std::ostream& os) {
  os << "n,r,k,i,trials,violations,frequency,wilson_lo,wilson_hi,"
        "mean_alpha0,scaled_alpha0,limit_const,beta_over_alpha2\n";
}

void write_sweep_csv_row(std::ostream& os, const SweepRow& row) {
  os << row.n << ',' << row.r << ',' << row.k << ',' << row.i << ','
     << row.trials << ',' << row.violations << ','
     << format_double(row.frequency) << ',' << format_double(row.wilson.lo)
     << ',' << format_double(row.wilson.hi) << ','
     << format_double(row.mean_alpha0.get_d()) << ','
     << format_double(row.scaled_alpha0.get_d()) << ','
     << format_double(row.limit_const.get_d()) << ','
     << (row.beta_over_alpha2 ? format_double(row.beta_over_alpha2->get_d())
                              : std::string("nan"))
     << '\n';
}

std::string sweep_row_json(const SweepRow& row) {
  nlohmann::json j;
  j["n"] = row.n;
  j["r"] = row.r;
  j["k"] = row.k;
  j["i"] = row.i;
  j["requested"] = row.requested;
  j["trials"] = row.trials;
  j["failures"] = row.failures;
  j["violations"] = row.violations;
  j["undetermined"] = row.undetermined;
  j["frequency"] = row.frequency;
  j["wilson_lo"] = row.wilson.lo;
  j["wilson_hi"] = row.wilson.hi;
  j["mean_alpha0"] = row.mean_alpha0.get_str();
  j["scaled_alpha0"] = row.scaled_alpha0.get_str();
  j["limit_const"] = row.limit_const.get_str();
  if (row.beta_over_alpha2)
    j["beta_over_alpha2"] = row.beta_over_alpha2->get_str();
  j["alpha_non_negative"] = row.alpha_non_negative;
  j["beyond_proven_range"] = row.beyond_range;
  if (!row.failure_log.empty()) j["failure_log"] = row.failure_log;
  return j.dump();
}

void write_scaling_csv_header(std::ostream& os) {
  os << "n,mean_alpha0,scaled_alpha0,limit_const,rel_gap\n";
}

void write_scaling_csv_row(std::ostream& os, const ScalingRow& row) {
  os << row.n << ',' << format_double(row.mean_alpha0.get_d()) << ','
     << format_double(row.scaled_alpha0.get_d()) << ','
     << format_double(row.limit_const.get_d()) << ','
     << format_double(row.rel_gap.get_d()) << '\n';
}

}  // namespace virpos

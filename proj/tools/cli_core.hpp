#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spinscatter/entanglement.hpp"
#include "spinscatter/partial_wave.hpp"

namespace spinscatter::cli {

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string &name); // "csv" | "json"

// All emitted numerics carry 12 significant digits; json numbers are first
// rounded through that representation so csv and json parse identically.
std::string format_value(double v);
double round_tripped(double v);

// Half-integer command-line token: "2", "3/2", or "1.5".
AngularMomentum parse_angular_momentum(const std::string &token);

struct SweepSpec {
    double theta_start = 0.0, theta_end = 0.0;
    int theta_count = 0;
    double delta_start = 0.0, delta_end = 0.0; // range of Delta-delta
    int delta_count = 0;
    OutputFormat format = OutputFormat::Csv;
};
void validate(const SweepSpec &spec); // counts >= 2, start < end

struct SweepRow {
    double theta, delta_diff, entanglement;
};
// Row-major in theta, then Delta-delta; the entanglement entry IS the value
// closed_form_entanglement returned at that grid point.
std::vector<SweepRow> sweep_rows(const SweepSpec &spec);
void write_sweep(std::ostream &out, const SweepSpec &spec);

struct RunReport {
    double theta = 0.0, delta0 = 0.0, delta1 = 0.0;
    Eigen::Vector4cd out_product;
    Eigen::Vector4cd out_coupled;
    EntanglementReport report;
    double closed_form_bits = 0.0;
    double residual = 0.0; // |closed form - pipeline entropy|
};
RunReport run_scatter(double theta, double delta0, double delta1);
void write_run_report(std::ostream &out, const RunReport &report, OutputFormat format);

struct PartialWaveRow {
    double q, delta_l0, delta_l1, entanglement;
};
std::vector<PartialWaveRow> partial_wave_rows(const PhaseShiftTable &table,
                                              int l, double theta,
                                              double q_start, double q_end,
                                              int q_count);
void write_partial_wave(std::ostream &out,
                        const std::vector<PartialWaveRow> &rows,
                        OutputFormat format);

void write_cgc_table(std::ostream &out, AngularMomentum j1, AngularMomentum j2,
                     OutputFormat format);
void write_magic_table(std::ostream &out, OutputFormat format);
void write_coupling_table(std::ostream &out, AngularMomentum l,
                          AngularMomentum s, OutputFormat format);

// Self-test: unitarity, rotational invariance, closed-form/pipeline
// agreement, the reduction theorem, and friends. Prints one PASS/FAIL line
// per property; returns the number of failures.
int run_check(std::ostream &out);

} // namespace spinscatter::cli

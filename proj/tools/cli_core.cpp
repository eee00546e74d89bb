#include "cli_core.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>

#include "json.hpp"

namespace spinscatter::cli {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

double lerp_grid(double start, double end, int i, int count) {
    return start + i * (end - start) / (count - 1);
}

// Half-integer label such as "3/2", "-1", "0" for table output.
std::string half_label(int twice) {
    if (twice % 2 == 0)
        return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

json complex_pair(const Complex &z) {
    return json::array({round_tripped(z.real()), round_tripped(z.imag())});
}

const char *kProductNames[4] = {"pp", "pm", "mp", "mm"};
const char *kCoupledNames[4] = {"s00", "t1m1", "t10", "t11"};

} // namespace

OutputFormat parse_format(const std::string &name) {
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "json")
        return OutputFormat::Json;
    throw InputError("unknown output format '" + name + "' (expected csv or json)");
}

std::string format_value(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

double round_tripped(double v) { return std::strtod(format_value(v).c_str(), nullptr); }

AngularMomentum parse_angular_momentum(const std::string &token) {
    const auto slash = token.find('/');
    try {
        if (slash != std::string::npos) {
            const int num = std::stoi(token.substr(0, slash));
            const int den = std::stoi(token.substr(slash + 1));
            if (den == 1)
                return AngularMomentum(2 * num);
            if (den == 2)
                return AngularMomentum(num);
            throw InputError("angular momentum '" + token + "': denominator must be 1 or 2");
        }
        const double value = std::stod(token);
        const double doubled = 2.0 * value;
        const int twice = static_cast<int>(std::lround(doubled));
        if (std::abs(doubled - twice) > 1e-9)
            throw InputError("angular momentum '" + token + "' is not a half-integer");
        return AngularMomentum(twice);
    } catch (const InputError &) {
        throw;
    } catch (const std::exception &) {
        throw InputError("cannot parse angular momentum '" + token + "'");
    }
}

void validate(const SweepSpec &spec) {
    if (spec.theta_count < 2 || spec.delta_count < 2)
        throw InputError("sweep: counts must be >= 2");
    if (!(spec.theta_start < spec.theta_end) || !(spec.delta_start < spec.delta_end))
        throw InputError("sweep: range start must be below range end");
}

std::vector<SweepRow> sweep_rows(const SweepSpec &spec) {
    validate(spec);
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<size_t>(spec.theta_count) * spec.delta_count);
    for (int i = 0; i < spec.theta_count; ++i) {
        const double theta = lerp_grid(spec.theta_start, spec.theta_end, i, spec.theta_count);
        for (int k = 0; k < spec.delta_count; ++k) {
            const double dd = lerp_grid(spec.delta_start, spec.delta_end, k, spec.delta_count);
            rows.push_back({theta, dd, closed_form_entanglement(theta, dd, 0.0)});
        }
    }
    return rows;
}

void write_sweep(std::ostream &out, const SweepSpec &spec) {
    const auto rows = sweep_rows(spec);
    if (spec.format == OutputFormat::Csv) {
        out << "theta,delta_diff,entanglement\n";
        for (const auto &row : rows)
            out << format_value(row.theta) << ',' << format_value(row.delta_diff)
                << ',' << format_value(row.entanglement) << '\n';
        return;
    }
    json doc;
    doc["rows"] = json::array();
    for (const auto &row : rows)
        doc["rows"].push_back({{"theta", round_tripped(row.theta)},
                               {"delta_diff", round_tripped(row.delta_diff)},
                               {"entanglement", round_tripped(row.entanglement)}});
    out << doc.dump(2) << '\n';
}

RunReport run_scatter(double theta, double delta0, double delta1) {
    RunReport r;
    r.theta = theta;
    r.delta0 = delta0;
    r.delta1 = delta1;
    const TwoSpinState out =
        apply_spin_smatrix(in_state_from_angle(theta), SpinPhasePair{delta0, delta1});
    r.out_product = out.amplitudes();
    r.out_coupled = to_coupled(out).amplitudes();
    r.report = entanglement_entropy(out);
    r.closed_form_bits = closed_form_entanglement(theta, delta0, delta1);
    r.residual = std::abs(r.closed_form_bits - r.report.entropy_bits);
    return r;
}

void write_run_report(std::ostream &out, const RunReport &r, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << "field,value\n";
        out << "theta," << format_value(r.theta) << '\n';
        out << "delta0," << format_value(r.delta0) << '\n';
        out << "delta1," << format_value(r.delta1) << '\n';
        for (int i = 0; i < 4; ++i) {
            out << "out_product_" << kProductNames[i] << "_re,"
                << format_value(r.out_product(i).real()) << '\n';
            out << "out_product_" << kProductNames[i] << "_im,"
                << format_value(r.out_product(i).imag()) << '\n';
        }
        for (int i = 0; i < 4; ++i) {
            out << "out_coupled_" << kCoupledNames[i] << "_re,"
                << format_value(r.out_coupled(i).real()) << '\n';
            out << "out_coupled_" << kCoupledNames[i] << "_im,"
                << format_value(r.out_coupled(i).imag()) << '\n';
        }
        out << "schmidt_plus," << format_value(r.report.schmidt[0]) << '\n';
        out << "schmidt_minus," << format_value(r.report.schmidt[1]) << '\n';
        out << "eigenvalue_plus," << format_value(r.report.eigenvalues[0]) << '\n';
        out << "eigenvalue_minus," << format_value(r.report.eigenvalues[1]) << '\n';
        out << "entropy_bits," << format_value(r.report.entropy_bits) << '\n';
        out << "closed_form_bits," << format_value(r.closed_form_bits) << '\n';
        out << "residual," << format_value(r.residual) << '\n';
        return;
    }
    json doc;
    doc["inputs"] = {{"theta", round_tripped(r.theta)},
                     {"delta0", round_tripped(r.delta0)},
                     {"delta1", round_tripped(r.delta1)}};
    for (int i = 0; i < 4; ++i)
        doc["out_product"][kProductNames[i]] = complex_pair(r.out_product(i));
    for (int i = 0; i < 4; ++i)
        doc["out_coupled"][kCoupledNames[i]] = complex_pair(r.out_coupled(i));
    doc["schmidt"] = {round_tripped(r.report.schmidt[0]),
                      round_tripped(r.report.schmidt[1])};
    doc["eigenvalues"] = {round_tripped(r.report.eigenvalues[0]),
                          round_tripped(r.report.eigenvalues[1])};
    doc["entropy_bits"] = round_tripped(r.report.entropy_bits);
    doc["closed_form_bits"] = round_tripped(r.closed_form_bits);
    doc["residual"] = round_tripped(r.residual);
    out << doc.dump(2) << '\n';
}

std::vector<PartialWaveRow> partial_wave_rows(const PhaseShiftTable &table,
                                              int l, double theta,
                                              double q_start, double q_end,
                                              int q_count) {
    if (l < 0)
        throw InputError("partial-wave: l must be >= 0");
    if (q_count < 2 || !(q_start < q_end))
        throw InputError("partial-wave: need q_count >= 2 and q_start < q_end");
    if (!(theta >= 0.0 && theta < kPi))
        throw InputError("partial-wave: theta must lie in [0, pi)");

    const SingleSpinState a(1.0, 0.0);
    const SingleSpinState b(std::cos(theta), std::sin(theta));
    std::vector<PartialWaveRow> rows;
    rows.reserve(static_cast<size_t>(q_count));
    for (int i = 0; i < q_count; ++i) {
        const double q = lerp_grid(q_start, q_end, i, q_count);
        PartialWaveLabels labels;
        labels.relative_momentum = q;
        labels.l = AngularMomentum::from_integer(l);
        const TwoSpinState out = apply_central_smatrix(a, b, labels, table);
        rows.push_back({q, table.lookup_phase(l, 0, q), table.lookup_phase(l, 1, q),
                        entanglement_entropy(out).entropy_bits});
    }
    return rows;
}

void write_partial_wave(std::ostream &out,
                        const std::vector<PartialWaveRow> &rows,
                        OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << "q,delta_l0,delta_l1,entanglement\n";
        for (const auto &row : rows)
            out << format_value(row.q) << ',' << format_value(row.delta_l0) << ','
                << format_value(row.delta_l1) << ',' << format_value(row.entanglement)
                << '\n';
        return;
    }
    json doc;
    doc["rows"] = json::array();
    for (const auto &row : rows)
        doc["rows"].push_back({{"q", round_tripped(row.q)},
                               {"delta_l0", round_tripped(row.delta_l0)},
                               {"delta_l1", round_tripped(row.delta_l1)},
                               {"entanglement", round_tripped(row.entanglement)}});
    out << doc.dump(2) << '\n';
}

void write_cgc_table(std::ostream &out, AngularMomentum j1, AngularMomentum j2,
                     OutputFormat format) {
    struct Entry {
        int tj, tm, tm1, tm2;
        double value;
    };
    std::vector<Entry> entries;
    for (int tj = std::abs(j1.twice() - j2.twice()); tj <= j1.twice() + j2.twice(); tj += 2)
        for (int tm = -tj; tm <= tj; tm += 2)
            for (int tm1 = -j1.twice(); tm1 <= j1.twice(); tm1 += 2)
                for (int tm2 = -j2.twice(); tm2 <= j2.twice(); tm2 += 2)
                    entries.push_back({tj, tm, tm1, tm2,
                                       cgc(j1, tm1, j2, tm2, AngularMomentum(tj), tm)});

    if (format == OutputFormat::Csv) {
        out << "j,m,m1,m2,value\n";
        for (const auto &e : entries)
            out << half_label(e.tj) << ',' << half_label(e.tm) << ','
                << half_label(e.tm1) << ',' << half_label(e.tm2) << ','
                << format_value(e.value) << '\n';
        return;
    }
    json doc;
    doc["j1"] = j1.value();
    doc["j2"] = j2.value();
    doc["entries"] = json::array();
    for (const auto &e : entries)
        doc["entries"].push_back({{"j", 0.5 * e.tj},
                                  {"m", 0.5 * e.tm},
                                  {"m1", 0.5 * e.tm1},
                                  {"m2", 0.5 * e.tm2},
                                  {"value", round_tripped(e.value)}});
    out << doc.dump(2) << '\n';
}

void write_magic_table(std::ostream &out, OutputFormat format) {
    const char *names[4] = {"EPR+", "EPR-", "Bell+", "Bell-"};
    const auto kets = magic_basis();
    if (format == OutputFormat::Csv) {
        out << "ket,pp_re,pp_im,pm_re,pm_im,mp_re,mp_im,mm_re,mm_im,entropy_bits\n";
        for (int k = 0; k < 4; ++k) {
            out << names[k];
            for (int i = 0; i < 4; ++i)
                out << ',' << format_value(kets[k].amplitude(i).real()) << ','
                    << format_value(kets[k].amplitude(i).imag());
            out << ',' << format_value(entanglement_entropy(kets[k]).entropy_bits)
                << '\n';
        }
        return;
    }
    json doc;
    doc["kets"] = json::array();
    for (int k = 0; k < 4; ++k) {
        json ket;
        ket["name"] = names[k];
        for (int i = 0; i < 4; ++i)
            ket["product"][kProductNames[i]] = complex_pair(kets[k].amplitude(i));
        ket["entropy_bits"] =
            round_tripped(entanglement_entropy(kets[k]).entropy_bits);
        doc["kets"].push_back(ket);
    }
    out << doc.dump(2) << '\n';
}

void write_coupling_table(std::ostream &out, AngularMomentum l,
                          AngularMomentum s, OutputFormat format) {
    const Eigen::MatrixXd u = couple_orbital_spin(l, s);
    const auto rows = total_j_labels(l, s);
    const auto cols = orbital_spin_labels(l, s);
    if (format == OutputFormat::Csv) {
        out << "j,j3,m,chi,value\n";
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < cols.size(); ++c)
                out << half_label(rows[r].first) << ',' << half_label(rows[r].second)
                    << ',' << half_label(cols[c].first) << ','
                    << half_label(cols[c].second) << ','
                    << format_value(u(static_cast<Eigen::Index>(r),
                                      static_cast<Eigen::Index>(c)))
                    << '\n';
        return;
    }
    json doc;
    doc["l"] = l.value();
    doc["s"] = s.value();
    doc["entries"] = json::array();
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            doc["entries"].push_back(
                {{"j", 0.5 * rows[r].first},
                 {"j3", 0.5 * rows[r].second},
                 {"m", 0.5 * cols[c].first},
                 {"chi", 0.5 * cols[c].second},
                 {"value", round_tripped(u(static_cast<Eigen::Index>(r),
                                           static_cast<Eigen::Index>(c)))}});
    out << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// check: the invariant suite

namespace {

struct PropertyResult {
    std::string name;
    double residual;
    double tolerance;
};

Rotation random_rotation(std::mt19937 &rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> tilt(0.0, kPi);
    return Rotation{angle(rng), tilt(rng), angle(rng)};
}

SingleSpinState random_single(std::mt19937 &rng) {
    std::normal_distribution<double> gauss;
    Eigen::Vector2cd v(Complex(gauss(rng), gauss(rng)), Complex(gauss(rng), gauss(rng)));
    return SingleSpinState(v / v.norm());
}

Eigen::MatrixXd small_d_matrix(AngularMomentum j, double beta) {
    const int dim = j.multiplicity();
    Eigen::MatrixXd d(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            d(r, c) = wigner_d_small(j, j.twice() - 2 * r, j.twice() - 2 * c, beta);
    return d;
}

double cgc_orthogonality_residual(int max_twice_j) {
    double worst = 0.0;
    for (int tj1 = 0; tj1 <= max_twice_j; ++tj1)
        for (int tj2 = 0; tj2 <= max_twice_j; ++tj2) {
            const AngularMomentum j1(tj1), j2(tj2);
            for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2)
                for (int tjp = std::abs(tj1 - tj2); tjp <= tj1 + tj2; tjp += 2)
                    for (int tm = -tj; tm <= tj; tm += 2)
                        for (int tmp = -tjp; tmp <= tjp; tmp += 2) {
                            double sum = 0.0;
                            for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                                const int tm2 = tm - tm1;
                                const int tm2p = tmp - tm1;
                                if (std::abs(tm2) <= tj2 && tm2 == tm2p)
                                    sum += cgc(j1, tm1, j2, tm2, AngularMomentum(tj), tm) *
                                           cgc(j1, tm1, j2, tm2, AngularMomentum(tjp), tmp);
                            }
                            const double expected = (tj == tjp && tm == tmp) ? 1.0 : 0.0;
                            worst = std::max(worst, std::abs(sum - expected));
                        }
        }
    return worst;
}

double cgc_completeness_residual(int max_twice_j) {
    double worst = 0.0;
    for (int tj1 = 0; tj1 <= max_twice_j; ++tj1)
        for (int tj2 = 0; tj2 <= max_twice_j; ++tj2) {
            const AngularMomentum j1(tj1), j2(tj2);
            for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
                for (int tm1p = -tj1; tm1p <= tj1; tm1p += 2)
                    for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2)
                        for (int tm2p = -tj2; tm2p <= tj2; tm2p += 2) {
                            double sum = 0.0;
                            for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2) {
                                const int tm = tm1 + tm2;
                                if (std::abs(tm) <= tj && tm == tm1p + tm2p)
                                    sum += cgc(j1, tm1, j2, tm2, AngularMomentum(tj), tm) *
                                           cgc(j1, tm1p, j2, tm2p, AngularMomentum(tj), tm);
                            }
                            const double expected = (tm1 == tm1p && tm2 == tm2p) ? 1.0 : 0.0;
                            worst = std::max(worst, std::abs(sum - expected));
                        }
        }
    return worst;
}

double wigner_unitarity_residual(std::mt19937 &rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Rotation r = random_rotation(rng);
        for (int tj = 1; tj <= 8; ++tj) {
            const Eigen::MatrixXcd d = wigner_D_matrix(AngularMomentum(tj), r);
            const Eigen::MatrixXcd defect =
                d * d.adjoint() - Eigen::MatrixXcd::Identity(tj + 1, tj + 1);
            worst = std::max(worst, defect.cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

double wigner_composition_residual(std::mt19937 &rng) {
    std::uniform_real_distribution<double> angle(-2.0 * kPi, 2.0 * kPi);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const double b1 = angle(rng), b2 = angle(rng);
        for (int tj = 1; tj <= 8; ++tj) {
            const AngularMomentum j(tj);
            const Eigen::MatrixXd defect = small_d_matrix(j, b1) * small_d_matrix(j, b2) -
                                           small_d_matrix(j, b1 + b2);
            worst = std::max(worst, defect.cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

double smatrix_unitarity_residual(std::mt19937 &rng) {
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Matrix4cd s = smatrix_as_operator({angle(rng), angle(rng)});
        const Eigen::Matrix4cd defect = s * s.adjoint() - Eigen::Matrix4cd::Identity();
        worst = std::max(worst, defect.cwiseAbs().maxCoeff());
    }
    return worst;
}

double rotational_invariance_residual(std::mt19937 &rng) {
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Matrix4cd s = smatrix_as_operator({angle(rng), angle(rng)});
        const Eigen::MatrixXcd d = wigner_D_matrix(AngularMomentum(1), random_rotation(rng));
        Eigen::Matrix4cd dd;
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k)
                dd.block<2, 2>(2 * i, 2 * k) = d(i, k) * d;
        const Eigen::Matrix4cd defect = dd * s * dd.adjoint() - s;
        worst = std::max(worst, defect.cwiseAbs().maxCoeff());
    }
    return worst;
}

double closed_form_pipeline_residual() {
    double worst = 0.0;
    for (int i = 0; i < 64; ++i) {
        const double theta = i * kPi / 64;
        for (int k = 0; k < 64; ++k) {
            const double dd = k * kPi / 64;
            const TwoSpinState out =
                apply_spin_smatrix(in_state_from_angle(theta), SpinPhasePair{dd, 0.0});
            const double pipeline = entanglement_entropy(out).entropy_bits;
            worst = std::max(worst,
                             std::abs(pipeline - closed_form_entanglement(theta, dd, 0.0)));
        }
    }
    return worst;
}

PhaseShiftTable synthetic_table(std::mt19937 &rng) {
    std::uniform_real_distribution<double> coef(-1.2, 1.2);
    PhaseShiftTable table;
    for (int l = 0; l <= 4; ++l)
        for (int s = 0; s <= 1; ++s) {
            const double a = coef(rng), b = coef(rng), c = coef(rng);
            std::vector<double> qs, deltas;
            for (int i = 0; i <= 40; ++i) {
                const double q = 0.05 + 0.05 * i;
                qs.push_back(q);
                deltas.push_back(a + b * q + c * std::sin(q));
            }
            table.add_channel(l, s, qs, deltas);
        }
    return table;
}

double reduction_theorem_residual(std::mt19937 &rng) {
    const PhaseShiftTable table = synthetic_table(rng);
    std::uniform_real_distribution<double> qdist(0.06, 2.04);
    double worst = 0.0;
    for (int l = 0; l <= 4; ++l) {
        for (int iq = 0; iq < 20; ++iq) {
            const double q = qdist(rng);
            for (int trial = 0; trial < 10; ++trial) {
                const SingleSpinState a = random_single(rng);
                const SingleSpinState b = random_single(rng);
                PartialWaveLabels labels;
                labels.relative_momentum = q;
                labels.l = AngularMomentum::from_integer(l);
                const TwoSpinState via_fiber = apply_central_smatrix(a, b, labels, table);
                const TwoSpinState via_spin = apply_spin_smatrix(
                    product_state(a, b),
                    SpinPhasePair{table.lookup_phase(l, 0, q), table.lookup_phase(l, 1, q)});
                worst = std::max(worst, (via_fiber.amplitudes() - via_spin.amplitudes())
                                            .cwiseAbs()
                                            .maxCoeff());
            }
        }
    }
    return worst;
}

double coupling_orthogonality_residual() {
    double worst = 0.0;
    for (int l = 0; l <= 4; ++l)
        for (int ts : {0, 1, 2}) {
            const Eigen::MatrixXd u =
                couple_orbital_spin(AngularMomentum::from_integer(l), AngularMomentum(ts));
            const Eigen::MatrixXd defect =
                u * u.transpose() - Eigen::MatrixXd::Identity(u.rows(), u.rows());
            worst = std::max(worst, defect.cwiseAbs().maxCoeff());
        }
    return worst;
}

double coupling_dimension_residual() {
    double worst = 0.0;
    for (int l = 0; l <= 4; ++l)
        for (int ts : {0, 1, 2}) {
            const AngularMomentum lj = AngularMomentum::from_integer(l);
            const AngularMomentum s(ts);
            int total = 0;
            for (int tj = std::abs(lj.twice() - ts); tj <= lj.twice() + ts; tj += 2)
                total += tj + 1;
            worst = std::max(worst,
                             std::abs(double(total - lj.multiplicity() * s.multiplicity())));
        }
    return worst;
}

double zero_case_residual(std::mt19937 &rng) {
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_real_distribution<double> theta_dist(0.0, kPi);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        // aligned spins
        worst = std::max(worst,
                         entanglement_entropy(apply_spin_smatrix(
                                                  in_state_from_angle(0.0),
                                                  SpinPhasePair{angle(rng), angle(rng)}))
                             .entropy_bits);
        // equal phases
        const double common = angle(rng);
        worst = std::max(worst,
                         entanglement_entropy(
                             apply_spin_smatrix(in_state_from_angle(theta_dist(rng)),
                                                SpinPhasePair{common, common}))
                             .entropy_bits);
        // spin exchange, 2*Delta-delta = pi
        const double d1 = angle(rng);
        worst = std::max(worst,
                         entanglement_entropy(
                             apply_spin_smatrix(in_state_from_angle(theta_dist(rng)),
                                                SpinPhasePair{d1 + kPi / 2, d1}))
                             .entropy_bits);
    }
    return worst;
}

} // namespace

int run_check(std::ostream &out) {
    std::mt19937 rng(0xC0FFEE);
    std::vector<PropertyResult> results;
    results.push_back({"cgc-orthogonality", cgc_orthogonality_residual(4), 1e-12});
    results.push_back({"cgc-completeness", cgc_completeness_residual(4), 1e-12});
    results.push_back({"wigner-d-unitarity", wigner_unitarity_residual(rng), 1e-12});
    results.push_back({"wigner-d-composition", wigner_composition_residual(rng), 1e-12});
    results.push_back({"smatrix-unitarity", smatrix_unitarity_residual(rng), 1e-12});
    results.push_back(
        {"smatrix-rotational-invariance", rotational_invariance_residual(rng), 1e-12});
    results.push_back(
        {"closed-form-pipeline-agreement", closed_form_pipeline_residual(), 1e-10});
    results.push_back({"reduction-theorem", reduction_theorem_residual(rng), 1e-12});
    results.push_back(
        {"coupling-orthogonality", coupling_orthogonality_residual(), 1e-12});
    results.push_back({"coupling-dimension-identity", coupling_dimension_residual(), 0.5});
    results.push_back({"zero-entanglement-cases", zero_case_residual(rng), 1e-12});

    int failures = 0;
    for (const auto &r : results) {
        const bool pass = r.residual <= r.tolerance;
        if (!pass)
            ++failures;
        out << (pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(34)
            << r.name << " max residual " << format_value(r.residual)
            << " (tolerance " << format_value(r.tolerance) << ")\n";
    }
    return failures;
}

} // namespace spinscatter::cli

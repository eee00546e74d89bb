#include "spinscatter/partial_wave.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace spinscatter {

namespace {

constexpr double kUnitaryTolerance = 1e-10;
constexpr double kDiagonalTolerance = 1e-12;

std::string channel_name(int l, int s) {
    return "(l=" + std::to_string(l) + ", s=" + std::to_string(s) + ")";
}

std::string trim(const std::string &s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ','))
        fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',')
        fields.push_back("");
    return fields;
}

long parse_integer(const std::string &text, const std::string &source,
                   int line, const std::string &what) {
    size_t consumed = 0;
    long value = 0;
    try {
        value = std::stol(text, &consumed);
    } catch (const std::exception &) {
        throw TableLoadError(source, line, what + ": not an integer: '" + text + "'");
    }
    if (consumed != text.size())
        throw TableLoadError(source, line, what + ": not an integer: '" + text + "'");
    return value;
}

double parse_decimal(const std::string &text, const std::string &source,
                     int line, const std::string &what) {
    size_t consumed = 0;
    double value = 0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception &) {
        throw TableLoadError(source, line, what + ": not a number: '" + text + "'");
    }
    if (consumed != text.size() || !std::isfinite(value))
        throw TableLoadError(source, line, what + ": not a finite number: '" + text + "'");
    return value;
}

bool channel_couples_to(const Channel &c, AngularMomentum j) {
    const int tl = c.l.twice(), ts = c.s.twice(), tj = j.twice();
    return tj >= std::abs(tl - ts) && tj <= tl + ts &&
           (tl + ts + tj) % 2 == 0;
}

} // namespace

double internal_energy(double q, double m0, double w1, double w2) {
    if (m0 <= 0.0)
        throw InputError("internal_energy: mass must be positive");
    if (q < 0.0)
        throw InputError("internal_energy: relative momentum must be >= 0");
    return w1 + w2 + q * q / (2.0 * m0);
}

GalileanInvariants equal_mass_invariants(double q, double m0, AngularMomentum s,
                                         double w1, double w2) {
    return {2.0 * m0, internal_energy(q, m0, w1, w2), s};
}

void PartialWaveLabels::validate() const {
    if (relative_momentum < 0.0)
        throw InputError("PartialWaveLabels: q must be >= 0");
    if (!l.is_integer())
        throw InputError("PartialWaveLabels: l must be an integer");
    if (!valid_projection(l, twice_m))
        throw InputError("PartialWaveLabels: m is not a projection of l");
}

PhaseShiftTable PhaseShiftTable::load(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw TableLoadError(path.string(), 0, "cannot open file");
    return parse(in, path.string());
}

PhaseShiftTable PhaseShiftTable::parse(std::istream &in,
                                       const std::string &source) {
    PhaseShiftTable table;
    std::string line;
    int line_number = 0;

    if (!std::getline(in, line))
        throw TableLoadError(source, 1, "missing header line 'l,s,q,delta'");
    ++line_number;
    {
        auto fields = split_fields(line);
        if (fields != std::vector<std::string>{"l", "s", "q", "delta"})
            throw TableLoadError(source, line_number,
                                 "header must be 'l,s,q,delta', got '" + trim(line) + "'");
    }

    while (std::getline(in, line)) {
        ++line_number;
        if (trim(line).empty())
            continue;
        const auto fields = split_fields(line);
        if (fields.size() != 4)
            throw TableLoadError(source, line_number,
                                 "expected 4 comma-separated fields, got " +
                                     std::to_string(fields.size()));
        const long l = parse_integer(fields[0], source, line_number, "l");
        if (l < 0)
            throw TableLoadError(source, line_number, "l must be >= 0");
        const long s = parse_integer(fields[1], source, line_number, "s");
        if (s != 0 && s != 1)
            throw TableLoadError(source, line_number, "s must be 0 or 1");
        const double q = parse_decimal(fields[2], source, line_number, "q");
        const double delta = parse_decimal(fields[3], source, line_number, "delta");

        Curve &curve = table.channels_[{static_cast<int>(l), static_cast<int>(s)}];
        if (!curve.q.empty() && q <= curve.q.back())
            throw TableLoadError(source, line_number,
                                 "q values for channel " +
                                     channel_name(static_cast<int>(l), static_cast<int>(s)) +
                                     " must be strictly ascending");
        curve.q.push_back(q);
        curve.delta.push_back(delta);
    }
    return table;
}

void PhaseShiftTable::add_channel(int l, int s, std::vector<double> q,
                                  std::vector<double> delta) {
    if (l < 0 || (s != 0 && s != 1))
        throw InputError("add_channel: need l >= 0 and s in {0, 1}");
    if (q.size() != delta.size() || q.empty())
        throw InputError("add_channel: q and delta must match and be non-empty");
    for (size_t i = 0; i < q.size(); ++i) {
        if (!std::isfinite(q[i]) || !std::isfinite(delta[i]))
            throw InputError("add_channel: samples must be finite");
        if (i > 0 && q[i] <= q[i - 1])
            throw InputError("add_channel: q must be strictly ascending");
    }
    channels_[{l, s}] = Curve{std::move(q), std::move(delta)};
}

bool PhaseShiftTable::has_channel(int l, int s) const {
    return channels_.count({l, s}) != 0;
}

std::vector<std::pair<int, int>> PhaseShiftTable::channels() const {
    std::vector<std::pair<int, int>> keys;
    keys.reserve(channels_.size());
    for (const auto &entry : channels_)
        keys.push_back(entry.first);
    return keys;
}

double PhaseShiftTable::lookup_phase(int l, int s, double q) const {
    const auto it = channels_.find({l, s});
    if (it == channels_.end())
        throw ChannelError("no phase shifts for channel " + channel_name(l, s));
    const Curve &curve = it->second;
    if (q < curve.q.front() || q > curve.q.back())
        throw GridRangeError("q = " + std::to_string(q) + " outside sampled range [" +
                             std::to_string(curve.q.front()) + ", " +
                             std::to_string(curve.q.back()) + "] of channel " +
                             channel_name(l, s));
    // First node >= q; exact hits return the tabulated value untouched.
    const auto lower = std::lower_bound(curve.q.begin(), curve.q.end(), q);
    const auto i = static_cast<size_t>(lower - curve.q.begin());
    if (lower != curve.q.end() && *lower == q)
        return curve.delta[i];
    const double t = (q - curve.q[i - 1]) / (curve.q[i] - curve.q[i - 1]);
    return (1.0 - t) * curve.delta[i - 1] + t * curve.delta[i];
}

std::pair<double, double> PhaseShiftTable::q_range(int l, int s) const {
    const auto it = channels_.find({l, s});
    if (it == channels_.end())
        throw ChannelError("no phase shifts for channel " + channel_name(l, s));
    return {it->second.q.front(), it->second.q.back()};
}

void PhaseShiftTable::save(std::ostream &out) const {
    out.precision(17);
    out << "l,s,q,delta\n";
    for (const auto &[key, curve] : channels_) {
        for (size_t i = 0; i < curve.q.size(); ++i)
            out << key.first << ',' << key.second << ',' << curve.q[i] << ','
                << curve.delta[i] << '\n';
    }
}

std::vector<std::pair<int, int>> total_j_labels(AngularMomentum l,
                                                AngularMomentum s) {
    std::vector<std::pair<int, int>> labels;
    for (int tj = std::abs(l.twice() - s.twice()); tj <= l.twice() + s.twice();
         tj += 2)
        for (int tj3 = -tj; tj3 <= tj; tj3 += 2)
            labels.emplace_back(tj, tj3);
    return labels;
}

std::vector<std::pair<int, int>> orbital_spin_labels(AngularMomentum l,
                                                     AngularMomentum s) {
    std::vector<std::pair<int, int>> labels;
    for (int tm = -l.twice(); tm <= l.twice(); tm += 2)
        for (int tchi = -s.twice(); tchi <= s.twice(); tchi += 2)
            labels.emplace_back(tm, tchi);
    return labels;
}

Eigen::MatrixXd couple_orbital_spin(AngularMomentum l, AngularMomentum s) {
    if (!l.is_integer())
        throw InputError("couple_orbital_spin: l must be an integer");
    const auto rows = total_j_labels(l, s);
    const auto cols = orbital_spin_labels(l, s);
    Eigen::MatrixXd u(rows.size(), cols.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                cgc(l, cols[c].first, s, cols[c].second,
                    AngularMomentum(rows[r].first), rows[r].second);
    return u;
}

TwoSpinState apply_central_smatrix(const SingleSpinState &a,
                                   const SingleSpinState &b,
                                   const PartialWaveLabels &labels,
                                   const PhaseShiftTable &table) {
    labels.validate();
    const int l = labels.l.twice() / 2;
    const double q = labels.relative_momentum;
    const Complex phase[2] = {
        std::exp(Complex(0.0, 2.0 * table.lookup_phase(l, 0, q))),
        std::exp(Complex(0.0, 2.0 * table.lookup_phase(l, 1, q)))};

    // Doubled spin-1/2 projections in Product amplitude order ++, +-, -+, --.
    constexpr int chi1[4] = {1, 1, -1, -1};
    constexpr int chi2[4] = {1, -1, 1, -1};
    constexpr AngularMomentum half{1};

    const Eigen::Vector2cd &av = a.amplitudes();
    const Eigen::Vector2cd &bv = b.amplitudes();

    // Out-state by the double Clebsch-Gordan sum over intermediate (s, chi).
    Eigen::Vector4cd out = Eigen::Vector4cd::Zero();
    for (int prime = 0; prime < 4; ++prime) {
        for (int in = 0; in < 4; ++in) {
            const Complex c_in = av((1 - chi1[in]) / 2) * bv((1 - chi2[in]) / 2);
            for (int s = 0; s <= 1; ++s) {
                for (int tchi = -2 * s; tchi <= 2 * s; tchi += 2) {
                    const double overlap =
                        cgc(half, chi1[prime], half, chi2[prime],
                            AngularMomentum(2 * s), tchi) *
                        cgc(half, chi1[in], half, chi2[in],
                            AngularMomentum(2 * s), tchi);
                    out(prime) += overlap * phase[s] * c_in;
                }
            }
        }
    }
    return TwoSpinState(Basis::Product, out);
}

ChannelBlockS central_block(AngularMomentum j, double q,
                            const std::vector<Channel> &channels,
                            const PhaseShiftTable &table) {
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(
        static_cast<Eigen::Index>(channels.size()),
        static_cast<Eigen::Index>(channels.size()));
    for (size_t i = 0; i < channels.size(); ++i) {
        const Channel &c = channels[i];
        if (!c.l.is_integer() || (c.s.twice() != 0 && c.s.twice() != 2))
            throw InputError("central_block: channels must have integer l and s in {0, 1}");
        if (!channel_couples_to(c, j))
            throw InputError("central_block: channel " +
                             channel_name(c.l.twice() / 2, c.s.twice() / 2) +
                             " cannot couple to the requested j");
        const double delta =
            table.lookup_phase(c.l.twice() / 2, c.s.twice() / 2, q);
        block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
            std::exp(Complex(0.0, 2.0 * delta));
    }
    return ChannelBlockS{j, q, channels, std::move(block)};
}

Eigen::VectorXcd apply_block(const ChannelBlockS &s,
                             const Eigen::VectorXcd &amplitudes) {
    if (amplitudes.size() != s.block.rows())
        throw InputError("apply_block: amplitude count does not match channels");
    return s.block * amplitudes;
}

BlockValidation validate_block_s(const ChannelBlockS &block) {
    BlockValidation result;
    const auto n = static_cast<Eigen::Index>(block.channels.size());

    if (block.block.rows() != n || block.block.cols() != n) {
        result.violations.push_back(
            {BlockViolation::Kind::ShapeMismatch,
             "block is " + std::to_string(block.block.rows()) + "x" +
                 std::to_string(block.block.cols()) + " but " +
                 std::to_string(block.channels.size()) + " channels are listed"});
        return result;
    }

    for (size_t i = 0; i < block.channels.size(); ++i) {
        const Channel &c = block.channels[i];
        const std::string name = "(2l=" + std::to_string(c.l.twice()) +
                                 ", 2s=" + std::to_string(c.s.twice()) + ")";
        if (!c.l.is_integer())
            result.violations.push_back(
                {BlockViolation::Kind::NonIntegerOrbital,
                 "channel " + name + " has half-odd orbital momentum"});
        else if (!channel_couples_to(c, block.j))
            result.violations.push_back(
                {BlockViolation::Kind::ChannelOutsideTriangle,
                 "channel " + name + " violates |l-s| <= j <= l+s for 2j = " +
                     std::to_string(block.j.twice())});
        for (size_t k = i + 1; k < block.channels.size(); ++k)
            if (block.channels[k] == c)
                result.violations.push_back(
                    {BlockViolation::Kind::DuplicateChannel,
                     "channel " + name + " listed more than once"});
    }

    if (n > 0) {
        const Eigen::MatrixXcd defect =
            block.block * block.block.adjoint() -
            Eigen::MatrixXcd::Identity(n, n);
        const double residual = defect.cwiseAbs().maxCoeff();
        if (residual > kUnitaryTolerance)
            result.violations.push_back(
                {BlockViolation::Kind::NonUnitary,
                 "unitarity defect " + std::to_string(residual)});

        double off_diagonal = 0.0;
        for (Eigen::Index r = 0; r < n; ++r)
            for (Eigen::Index c = 0; c < n; ++c)
                if (r != c)
                    off_diagonal = std::max(off_diagonal, std::abs(block.block(r, c)));
        result.central = off_diagonal <= kDiagonalTolerance;
    } else {
        result.central = true;
    }
    return result;
}

bool fermion_channel_allowed(AngularMomentum l, AngularMomentum s) {
    if (!l.is_integer())
        throw InputError("fermion_channel_allowed: l must be an integer");
    if (s.twice() != 0 && s.twice() != 2)
        throw InputError("fermion_channel_allowed: s must be 0 or 1");
    // Exchange sign (-1)^l from space times (-1)^(s+1) from spin must be -1.
    return (l.twice() / 2 + s.twice() / 2) % 2 == 0;
}

} // namespace spinscatter

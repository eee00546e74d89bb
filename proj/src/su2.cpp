#include "spinscatter/su2.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <gmpxx.h>

namespace spinscatter {

namespace {

// Largest factorial argument in the Racah sum is j1 + j2 + j + 1 <= 3*20 + 1.
constexpr int kMaxFactorial = 3 * (kMaxTwiceJ / 2) + 1;

// Exact integer factorials; built once, immutable afterwards.
const std::vector<mpz_class> &factorials() {
    static const std::vector<mpz_class> table = [] {
        std::vector<mpz_class> f(kMaxFactorial + 1);
        f[0] = 1;
        for (int n = 1; n <= kMaxFactorial; ++n)
            f[n] = f[n - 1] * n;
        return f;
    }();
    return table;
}

const mpz_class &fact(int n) { return factorials()[static_cast<size_t>(n)]; }

void require_label(AngularMomentum j, int twice_m, const char *who) {
    if (j.twice() > kMaxTwiceJ)
        throw InputError(std::string(who) + ": angular momentum exceeds the j = 20 bound");
    if (!valid_projection(j, twice_m))
        throw InputError(std::string(who) + ": projection 2m = " + std::to_string(twice_m) +
                         " invalid for 2j = " + std::to_string(j.twice()));
}

double int_pow(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i)
        r *= base;
    return r;
}

} // namespace

double cgc(AngularMomentum j1, int twice_m1, AngularMomentum j2, int twice_m2,
           AngularMomentum j, int twice_m) {
    require_label(j1, twice_m1, "cgc");
    require_label(j2, twice_m2, "cgc");
    require_label(j, twice_m, "cgc");

    if (twice_m1 + twice_m2 != twice_m)
        return 0.0;
    const int tj1 = j1.twice(), tj2 = j2.twice(), tj = j.twice();
    if (tj < std::abs(tj1 - tj2) || tj > tj1 + tj2)
        return 0.0;
    if ((tj1 + tj2 + tj) % 2 != 0)
        return 0.0; // j1 + j2 + j must be an integer

    // With the parity checks above, all halved combinations below are integers.
    const int a = (tj1 + tj2 - tj) / 2;
    const int b = (tj1 - tj2 + tj) / 2;
    const int c = (-tj1 + tj2 + tj) / 2;
    const int j1pm1 = (tj1 + twice_m1) / 2, j1mm1 = (tj1 - twice_m1) / 2;
    const int j2pm2 = (tj2 + twice_m2) / 2, j2mm2 = (tj2 - twice_m2) / 2;
    const int jpm = (tj + twice_m) / 2, jmm = (tj - twice_m) / 2;
    const int t4 = (tj - tj2 + twice_m1) / 2; // j - j2 + m1
    const int t5 = (tj - tj1 - twice_m2) / 2; // j - j1 - m2

    // Square of the prefactor, kept as an exact rational.
    mpq_class pre(tj + 1, 1);
    pre *= mpq_class(fact(a) * fact(b) * fact(c), fact(a + b + c + 1));
    pre *= fact(j1pm1) * fact(j1mm1) * fact(j2pm2) * fact(j2mm2) * fact(jpm) * fact(jmm);

    const int kmin = std::max({0, -t4, -t5});
    const int kmax = std::min({a, j1mm1, j2pm2});
    mpq_class sum(0);
    for (int k = kmin; k <= kmax; ++k) {
        mpq_class term(1, 1);
        term /= fact(k) * fact(a - k) * fact(j1mm1 - k) * fact(j2pm2 - k) *
                fact(t4 + k) * fact(t5 + k);
        sum += (k % 2 != 0) ? -term : term;
    }
    if (sum == 0)
        return 0.0;

    const mpq_class square = pre * sum * sum;
    const double magnitude = std::sqrt(square.get_d());
    return sgn(sum) < 0 ? -magnitude : magnitude;
}

double wigner_d_small(AngularMomentum j, int twice_mprime, int twice_m,
                      double beta) {
    require_label(j, twice_mprime, "wigner_d_small");
    require_label(j, twice_m, "wigner_d_small");

    const int tj = j.twice();
    const int jp_mp = (tj + twice_mprime) / 2, jm_mp = (tj - twice_mprime) / 2;
    const int jp_m = (tj + twice_m) / 2, jm_m = (tj - twice_m) / 2;
    const int dmm = (twice_mprime - twice_m) / 2; // m' - m

    const mpz_class norm2 = fact(jp_mp) * fact(jm_mp) * fact(jp_m) * fact(jm_m);
    const double norm = std::sqrt(norm2.get_d());

    const double ch = std::cos(0.5 * beta);
    const double sh = std::sin(0.5 * beta);

    double value = 0.0;
    const int kmin = std::max(0, -dmm);
    const int kmax = std::min(jp_m, jm_mp);
    for (int k = kmin; k <= kmax; ++k) {
        const mpz_class denom =
            fact(jp_m - k) * fact(k) * fact(dmm + k) * fact(jm_mp - k);
        double term = norm / denom.get_d();
        term *= int_pow(ch, tj - dmm - 2 * k) * int_pow(sh, dmm + 2 * k);
        value += ((dmm + k) % 2 != 0) ? -term : term;
    }
    return value;
}

std::complex<double> wigner_D(AngularMomentum j, int twice_mprime, int twice_m,
                              const Rotation &r) {
    const double d = wigner_d_small(j, twice_mprime, twice_m, r.beta);
    const std::complex<double> phase =
        std::exp(std::complex<double>(0.0, -0.5 * twice_mprime * r.alpha)) *
        std::exp(std::complex<double>(0.0, -0.5 * twice_m * r.gamma));
    return phase * d;
}

Eigen::MatrixXcd wigner_D_matrix(AngularMomentum j, const Rotation &r) {
    const int dim = j.multiplicity();
    Eigen::MatrixXcd mat(dim, dim);
    for (int row = 0; row < dim; ++row) {
        const int tmp = j.twice() - 2 * row;
        for (int col = 0; col < dim; ++col) {
            const int tm = j.twice() - 2 * col;
            mat(row, col) = wigner_D(j, tmp, tm, r);
        }
    }
    return mat;
}

} // namespace spinscatter

#include "qnd/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qnd/errors.hpp"

namespace qnd::specfun {

namespace {

// Rescale threshold: renormalize once magnitudes cross 2^+-500.
constexpr int kScaleShift = 500;
const double kScaleHi = std::ldexp(1.0, kScaleShift);
const double kScaleLo = std::ldexp(1.0, -kScaleShift);

long round_half_integer_twice(double x, const char* what) {
    const double tx = 2.0 * x;
    const double r = std::round(tx);
    if (std::abs(tx - r) > 1e-9) {
        throw DomainError(std::string(what) + " must be a half-integer");
    }
    return static_cast<long>(r);
}

} // namespace

LogFactorialTable::LogFactorialTable(std::size_t n_max) : values_(n_max + 1) {
    values_[0] = 0.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        values_[n] = values_[n - 1] + std::log(static_cast<double>(n));
    }
}

double LogFactorialTable::operator()(std::size_t n) const {
    if (n >= values_.size()) {
        throw CapacityError("LogFactorialTable: n = " + std::to_string(n) +
                            " exceeds table capacity " + std::to_string(values_.size() - 1));
    }
    return values_[n];
}

const LogFactorialTable& LogFactorialTable::shared() {
    static const LogFactorialTable table(kNMax);
    return table;
}

std::complex<double> hermite(unsigned n, std::complex<double> z) {
    if (n > kNMax) {
        throw CapacityError("hermite: order " + std::to_string(n) +
                            " exceeds capacity " + std::to_string(kNMax));
    }
    if (n == 0) return {1.0, 0.0};
    std::complex<double> prev{1.0, 0.0};
    std::complex<double> cur = 2.0 * z;
    for (unsigned k = 1; k < n; ++k) {
        const std::complex<double> next = 2.0 * z * cur - 2.0 * static_cast<double>(k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double Scaled::to_double() const {
    if (mantissa == 0.0) return 0.0;
    if (exponent2 > std::numeric_limits<int>::max()) return mantissa * HUGE_VAL;
    if (exponent2 < std::numeric_limits<int>::min()) return mantissa * 0.0;
    return std::ldexp(mantissa, static_cast<int>(exponent2));
}

double Scaled::log_abs() const {
    if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(mantissa)) + static_cast<double>(exponent2) * std::numbers::ln2_v<double>;
}

Scaled hermite_scaled(unsigned n, std::complex<double> z, std::complex<double>* unit_phase) {
    if (n > kNMax) {
        throw CapacityError("hermite_scaled: order exceeds capacity");
    }
    std::complex<double> prev{1.0, 0.0};
    std::complex<double> cur = (n == 0) ? std::complex<double>{1.0, 0.0} : 2.0 * z;
    long e2 = 0;
    for (unsigned k = 1; k < n; ++k) {
        std::complex<double> next = 2.0 * z * cur - 2.0 * static_cast<double>(k) * prev;
        prev = cur;
        cur = next;
        const double mag = std::max(std::abs(cur.real()) + std::abs(cur.imag()),
                                    std::abs(prev.real()) + std::abs(prev.imag()));
        if (mag > kScaleHi) {
            cur *= kScaleLo;
            prev *= kScaleLo;
            e2 += kScaleShift;
        }
    }
    const double mag = std::abs(cur);
    if (unit_phase != nullptr) {
        *unit_phase = (mag == 0.0) ? std::complex<double>{1.0, 0.0} : cur / mag;
    }
    return Scaled{mag, e2};
}

Scaled hyp2f1_terminating_scaled(unsigned p, unsigned m, double c, double x) {
    if (!(c > 0.0)) {
        throw DomainError("hyp2f1_terminating: parameter c must be positive");
    }
    if (p > kNMax || m > kNMax) {
        throw CapacityError("hyp2f1_terminating: order exceeds capacity");
    }
    const unsigned s_max = std::min(p, m);
    double term = 1.0;
    double sum = 1.0;
    long e2 = 0;
    for (unsigned s = 0; s < s_max; ++s) {
        const double ds = static_cast<double>(s);
        // term_{s+1} = term_s * (s - p)(s - m) x / ((c + s)(s + 1));
        // the numerator product is symmetric in (p, m).
        term *= (ds - static_cast<double>(p)) * (ds - static_cast<double>(m)) * x /
                ((c + ds) * (ds + 1.0));
        sum += term;
        const double mag = std::max(std::abs(term), std::abs(sum));
        if (mag > kScaleHi) {
            term *= kScaleLo;
            sum *= kScaleLo;
            e2 += kScaleShift;
        }
    }
    return Scaled{sum, e2};
}

double hyp2f1_terminating(unsigned p, unsigned m, double c, double x) {
    return hyp2f1_terminating_scaled(p, m, c, x).to_double();
}

double ln_gamma(double x) {
    if (!(x > 0.0)) {
        throw DomainError("ln_gamma: argument must be positive");
    }
    return std::lgamma(x);
}

double beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("beta: arguments must be positive");
    }
    return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

double wigner_d(double j, double n, double p, double beta) {
    const long tj = round_half_integer_twice(j, "wigner_d: j");
    const long tn = round_half_integer_twice(n, "wigner_d: n");
    const long tp = round_half_integer_twice(p, "wigner_d: p");
    if (tj < 0) throw DomainError("wigner_d: j must be nonnegative");
    if (std::labs(tn) > tj || std::labs(tp) > tj) {
        throw DomainError("wigner_d: |n| and |p| must not exceed j");
    }
    if (((tj - tn) % 2 != 0) || ((tj - tp) % 2 != 0)) {
        throw DomainError("wigner_d: n and p must differ from j by integers");
    }

    const long jn = (tj + tn) / 2;   // j + n
    const long jmn = (tj - tn) / 2;  // j - n
    const long jp = (tj + tp) / 2;   // j + p
    const long jmp = (tj - tp) / 2;  // j - p
    const long nmp = (tn - tp) / 2;  // n - p

    const auto& lf = LogFactorialTable::shared();
    if (static_cast<std::size_t>(tj) > lf.n_max()) {
        throw CapacityError("wigner_d: 2j exceeds factorial table capacity");
    }

    const double log_pref = 0.5 * (lf(jn) + lf(jmn) + lf(jp) + lf(jmp));
    const double ch = std::cos(0.5 * beta);
    const double sh = std::sin(0.5 * beta);

    const long s_lo = std::max(0L, -nmp);
    const long s_hi = std::min(jp, jmn);
    double acc = 0.0;
    for (long s = s_lo; s <= s_hi; ++s) {
        const long cos_pow = jp - s + jmn - s; // 2j + p - n - 2s
        const long sin_pow = nmp + 2 * s;      // n - p + 2s
        const double mag =
            std::exp(log_pref - lf(jp - s) - lf(s) - lf(nmp + s) - lf(jmn - s)) *
            std::pow(ch, static_cast<double>(cos_pow)) *
            std::pow(sh, static_cast<double>(sin_pow));
        acc += ((nmp + s) % 2 == 0) ? mag : -mag;
    }
    return acc;
}

} // namespace qnd::specfun

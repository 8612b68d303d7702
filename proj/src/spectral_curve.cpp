#include "wpvol/spectral_curve.hpp"

#include <cstdint>
#include <sstream>

#include "wpvol/errors.hpp"

namespace wpvol {

PiScalar SpectralCurve::y_coeff(int m) const {
    if (m < 1 || m % 2 == 0) throw std::domain_error("curve: y has odd powers only");
    auto it = y.find(m);
    if (it != y.end()) return it->second;
    if (!covers(m))
        throw std::domain_error("curve: insufficient truncation for y coefficient at z^" +
                                std::to_string(m));
    return PiScalar();
}

bool SpectralCurve::pi_graded() const {
    for (const auto& [m, c] : y) {
        int k = (m - 1) / 2;
        if (c.is_zero()) continue;
        if (c.terms().size() != 1 || c.terms().begin()->first != k) return false;
    }
    return true;
}

std::string SpectralCurve::id_for_order(int kmax) const {
    std::ostringstream os;
    for (int k = 0; k <= kmax; ++k) os << 2 * k + 1 << ":" << y_coeff(2 * k + 1) << ";";
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : os.str()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex;
    hex.width(16);
    hex.fill('0');
    hex << h;
    return hex.str();
}

SpectralCurve wp_curve(int truncation) {
    if (truncation < 1) throw std::domain_error("wp_curve: truncation must be >= 1");
    SpectralCurve c;
    c.exact = false;
    c.truncation = truncation;
    for (int k = 0; 2 * k + 1 <= truncation; ++k) {
        Rational q(mpz_class(1), 2 * factorial_z(2 * k + 1));
        if (k % 2 == 1) q = -q;
        c.y[2 * k + 1] = PiScalar::pi_power(k, -q * Rational(4).pow(k));
    }
    return c;
}

SpectralCurve curve_from_times(const std::map<int, PiScalar>& times) {
    SpectralCurve c;
    c.exact = true;
    c.truncation = 1;
    PiScalar y1(1);
    for (const auto& [m, t] : times) {
        if (m % 2 == 0) throw std::domain_error("curve_from_times: curve not odd (even time t_" +
                                                std::to_string(m) + ")");
        if (m < 3) throw std::domain_error("curve_from_times: time index must be >= 3");
        if (t.is_zero()) continue;
        Rational half(1, 2);
        if (m == 3) {
            y1 -= half * t;
        } else {
            c.y[m - 2] = (-half) * t;
            if (m - 2 > c.truncation) c.truncation = m - 2;
        }
    }
    if (y1.is_zero()) throw std::domain_error("curve_from_times: degenerate branch point (y_1 = 0)");
    c.y[1] = y1;
    return c;
}

std::map<int, PiScalar> kontsevich_wp_times(int kmax) {
    if (kmax < 0) throw std::domain_error("kontsevich_wp_times: kmax must be >= 0");
    std::map<int, PiScalar> t;
    for (int k = 0; k <= kmax; ++k) {
        Rational q = Rational(4).pow(k) / Rational(factorial_z(2 * k + 1));
        if (k % 2 == 1) q = -q;
        PiScalar v = PiScalar::pi_power(k, q);
        if (k == 0) v += PiScalar(2);
        t[2 * k + 3] = v;
    }
    return t;
}

KernelSeries kernel_series(const SpectralCurve& curve, int order) {
    if (order < 0) throw std::domain_error("kernel_series: order must be >= 0");
    if (!curve.covers(2 * order + 1))
        throw std::domain_error("kernel_series: insufficient curve truncation for order " +
                                std::to_string(order));

    // D(u)/u = -2 y(u)/u has coefficients c_k = -2 y_{2k+1}.
    std::vector<PiScalar> c(order + 1);
    for (int k = 0; k <= order; ++k) c[k] = Rational(-2) * curve.y_coeff(2 * k + 1);

    const PiScalar& c0 = c[0];
    if (c0.is_zero() || !c0.is_rational())
        throw std::domain_error(
            "kernel_series: leading coefficient -2*y_1 is not an invertible rational");
    Rational inv0 = Rational(1) / c0.coeff(0);

    KernelSeries ks;
    ks.curve_id = curve.id_for_order(order);
    ks.s.resize(order + 1);
    ks.s[0] = PiScalar(inv0);
    for (int m = 1; m <= order; ++m) {
        PiScalar acc;
        for (int i = 1; i <= m; ++i) acc += c[i] * ks.s[m - i];
        ks.s[m] = (-inv0) * acc;
    }

    // Back-multiplication: sum_k s_k u^(2k) times D(u)/u must be 1 exactly
    // through the materialized order.
    for (int m = 0; m <= order; ++m) {
        PiScalar conv;
        for (int i = 0; i <= m; ++i) conv += c[i] * ks.s[m - i];
        if (conv != PiScalar(m == 0 ? 1 : 0))
            throw identity_violation("kernel_series: reciprocal check failed at u^" +
                                     std::to_string(2 * m));
    }
    return ks;
}

}  // namespace wpvol

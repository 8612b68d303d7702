/**
 * @file spectral_curve.hpp
 * @brief Odd spectral curves  x = z^2,  y = sum_{m odd} y_m z^m  over Q[pi^2].
 *
 * Two sources: the Weil-Petersson curve, whose y-series is the sine expansion
 *   -2y(z) = sin(2 pi z) / (2 pi),
 * materialized to a finite truncation, and exact polynomial curves defined by
 * a finite map of odd Kontsevich times.  The `exact` flag records whether
 * absent coefficients are genuinely zero or merely not materialized.
 */
#pragma once

#include <map>
#include <string>

#include "wpvol/pi_scalar.hpp"

namespace wpvol {

struct SpectralCurve {
    std::map<int, PiScalar> y;  // odd power -> coefficient, no zero entries
    bool exact = false;
    int truncation = 0;  // largest odd power materialized (ignored when exact)

    /// y_m for odd m; throws past the truncation of an inexact curve.
    PiScalar y_coeff(int m) const;

    /// Largest odd power usable without error.
    bool covers(int m) const { return exact || m <= truncation; }

    /// True when y_{2k+1} is a single rational multiple of pi^(2k) (or zero)
    /// for every k.  Correlators of such curves are graded in pi^2.
    bool pi_graded() const;

    /// Content hash of the prefix y_1, y_3, ..., y_(2*kmax+1).  Two curves
    /// with equal prefixes have identical correlators wherever only that
    /// prefix is consumed, and deliberately share cache entries there.
    std::string id_for_order(int kmax) const;
};

/// Weil-Petersson curve with odd powers materialized up to `truncation`:
///   y_{2k+1} = -(1/2) (-1)^k (2 pi)^(2k) / (2k+1)!
SpectralCurve wp_curve(int truncation = 19);

/// Exact curve from odd times t_m (m >= 3):
///   y_1 = 1 - t_3/2,   y_{2k+1} = -t_{2k+3}/2  (k >= 1).
/// The empty map gives y(z) = z.
SpectralCurve curve_from_times(const std::map<int, PiScalar>& times);

/// Times whose curve reproduces the Weil-Petersson curve:
///   t_{2k+3} = (-1)^k (2 pi)^(2k) / (2k+1)!  + 2*delta_{k,0},   k = 0..kmax.
std::map<int, PiScalar> kontsevich_wp_times(int kmax);

struct KernelSeries {
    std::string curve_id;     // id_for_order(order) of the source curve
    std::vector<PiScalar> s;  // s[k] multiplies u^(2k)
    int order() const { return static_cast<int>(s.size()) - 1; }
};

/// Coefficients of  u / (y(-u) - y(u))  through u^(2*order).  Requires the
/// leading coefficient -2*y_1 to be a nonzero rational (invertible in
/// Q[pi^2]); verified by back-multiplication before returning.
KernelSeries kernel_series(const SpectralCurve& curve, int order);

}  // namespace wpvol

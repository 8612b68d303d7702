/**
 * @file transforms.hpp
 * @brief Dictionary between correlators, volume polynomials, intersection
 *        numbers, and the dilaton-type consistency identities.
 *
 * Laplace dictionary per key d = (d_1..d_n):  v_d = w_d / prod (2d_i + 1)!.
 * The "identity" convention applies no further factor; "paper" multiplies by
 * 2^(delta_{g,1} delta_{n,1}), the only shape where the normalizations split.
 */
#pragma once

#include <string>
#include <vector>

#include "wpvol/poly.hpp"
#include "wpvol/recursion.hpp"

namespace wpvol {

/// 2 for (g,n) = (1,1), otherwise 1.
int paper_factor(int g, int n);

VolumePoly to_volume(const CorrelatorPoly& w, Convention conv = Convention::identity);

/// Exact inverse of to_volume; requires the identity convention.
CorrelatorPoly to_correlator(const VolumePoly& v);

VolumePoly with_convention(const VolumePoly& v, Convention conv);

// ---- intersection numbers ----

/// value(d) = d_0! (prod d_i!) v^paper_d  with  d_0 = 3g-3+n - sum d_i;
/// pi^(2 d_0) rides along inside the value.
struct IntersectionEntry {
    ExponentKey d;
    int d0 = 0;
    PiScalar value;
};

struct IntersectionTable {
    int g = 0, n = 0;
    std::vector<IntersectionEntry> entries;  // canonical key order
};

IntersectionTable intersection_numbers(const VolumePoly& v);

// ---- dilaton-type identities ----

/// Coefficients t_k of  u cos(2 pi u) - sin(2 pi u)/(2 pi)
///   = sum_{k >= 1} t_k u^(2k+1),  computed by exact series arithmetic.
std::vector<PiScalar> dilaton_pairing_series(int kmax);

struct DilatonReport {
    int g = 0, n = 0;
    bool holds = false;
    int sign = 1;  // -1 marks the calibrated W-form sign
    NVarPoly lhs, rhs;
};

/// (2g-2+n) W^g_n(K)  ==  SIGN * (1/4pi^2) sum_{k>=1} t_k w_k(K),  SIGN = -1,
/// where w_k is the u^-(2k+2) coefficient of W^g_{n+1}(u, K).
DilatonReport dilaton_check_W(Engine& e, int g, int n);

/// (2g-2+n) V_{g,n}(K)  ==  sum_d 2 d_{n+1} a_d (-4pi^2)^(d_{n+1}-1)
///                          prod_{i<=n} L_i^(2d_i)
/// over V_{g,n+1} = sum_d a_d prod L^(2d), both in the identity convention.
DilatonReport dilaton_check_V(Engine& e, int g, int n);

// ---- closed surfaces ----

/// V_{g,0} = 1/(2g-2) sum_d 2d a_d (-4pi^2)^(d-1)  from V_{g,1};  g >= 2.
PiScalar closed_volume(Engine& e, int g);

/// Same value through the W-form pairing on W^g_1 (with the calibrated sign);
/// kept separate so the two routes stay independently checkable.
PiScalar closed_volume_w_path(Engine& e, int g);

// ---- numeric evaluation ----

PiScalar evaluate_volume_exact(const VolumePoly& v, const std::vector<Rational>& lengths);
std::string evaluate_volume(const VolumePoly& v, const std::vector<Rational>& lengths,
                            int digits);

}  // namespace wpvol

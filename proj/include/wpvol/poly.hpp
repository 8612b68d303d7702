/**
 * @file poly.hpp
 * @brief Symmetric polynomial containers keyed by exponent multisets.
 *
 * A key is the sorted (non-increasing) tuple (d_1, ..., d_n).  The stored
 * scalar is the coefficient of the ordered monomial for ANY slot assignment
 * with that multiset, so symmetry is structural and each orbit is stored
 * once.  For correlators the monomial is  prod_i z_i^-(2 d_i + 2),  for
 * volumes  prod_i L_i^(2 d_i).
 */
#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "wpvol/errors.hpp"
#include "wpvol/pi_scalar.hpp"

namespace wpvol {

using ExponentKey = std::vector<int>;

inline int key_degree(const ExponentKey& k) {
    return std::accumulate(k.begin(), k.end(), 0);
}

/// Sorts non-increasing; rejects negative exponents.
ExponentKey canonical_key(ExponentKey k);

/// Every ordered tuple with the multiset of `canon`, each exactly once.
std::vector<ExponentKey> distinct_permutations(const ExponentKey& canon);

/// Canonical term order: total degree descending, then lexicographic
/// descending.  Doubles as the display order everywhere.
struct KeyOrder {
    bool operator()(const ExponentKey& a, const ExponentKey& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        int da = key_degree(a), db = key_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

using CoeffMap = std::map<ExponentKey, PiScalar, KeyOrder>;

struct NVarPoly {
    int n = 0;
    CoeffMap coeffs;

    bool is_zero() const { return coeffs.empty(); }

    /// Coefficient lookup; `d` may be in any slot order.
    PiScalar get(ExponentKey d) const;

    /// Adds c to the coefficient at key `d`, dropping exact zeros.
    void add(ExponentKey d, const PiScalar& c);

    void add_scaled(const NVarPoly& o, const PiScalar& c);
    void scale(const PiScalar& c);

    friend bool operator==(const NVarPoly& a, const NVarPoly& b) {
        return a.n == b.n && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const NVarPoly& a, const NVarPoly& b) { return !(a == b); }
};

/// Symmetrized product over disjoint slot sets:
///   C(z_1..z_{na+nb}) = sum over |J| = na of A(z_J) * B(z_rest).
/// In multiset form each key pair merges with multiplicity
///   prod_v binom(count_C(v), count_A(v)).
NVarPoly convolve_disjoint(const NVarPoly& a, const NVarPoly& b);

/// Coefficients of one slot: result[d] is the (n-1)-variable polynomial
/// multiplying that slot's monomial at exponent d.
std::map<int, NVarPoly> expand_slot(const NVarPoly& p);

// ---- stability bookkeeping ----

constexpr bool is_stable(int g, int n) { return g >= 0 && n >= 0 && 2 * g - 2 + n > 0; }

/// Complex dimension 3g - 3 + n, the total-degree bound.
constexpr int dimension(int g, int n) { return 3 * g - 3 + n; }

// ---- tagged polynomials ----

enum class Convention { identity, paper };

struct CorrelatorPoly {
    int g = 0;
    NVarPoly p;
    int n() const { return p.n; }
};

struct VolumePoly {
    int g = 0;
    Convention convention = Convention::identity;
    NVarPoly p;
    int n() const { return p.n; }
};

// ---- spec'd accessors ----

PiScalar poly_get(const CorrelatorPoly& p, const ExponentKey& d);
PiScalar poly_get(const VolumePoly& p, const ExponentKey& d);

CorrelatorPoly poly_add_scaled(const CorrelatorPoly& a, const CorrelatorPoly& b,
                               const PiScalar& c);
VolumePoly poly_add_scaled(const VolumePoly& a, const VolumePoly& b, const PiScalar& c);

/// Expansion of `p` in one slot, keeping powers d <= max_power.
/// Storage is symmetric, so any slot index in [1, n] gives the same result.
std::map<int, NVarPoly> poly_partial_expand(const CorrelatorPoly& p, int slot, int max_power);

// ---- invariants ----

/// Canonical keys of width n, no zero coefficients.
void validate_shape(const NVarPoly& p);

/// Shape, stability of (g,n), n >= 1, and sum(d) <= 3g-3+n on every key.
void validate_correlator(const CorrelatorPoly& p);
void validate_volume(const VolumePoly& p);

/// For curves graded in pi^2: the coefficient at total degree D must be a
/// single term  q * pi^(2(3g-3+n-D)).
void validate_pi_grading(int g, const NVarPoly& p);

/// True when every term of every coefficient has a positive rational part.
bool all_coefficients_positive(const NVarPoly& p);

}  // namespace wpvol

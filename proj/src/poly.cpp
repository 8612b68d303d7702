#include "wpvol/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace wpvol {

ExponentKey canonical_key(ExponentKey k) {
    for (int d : k)
        if (d < 0) throw std::domain_error("ExponentKey: negative exponent");
    std::sort(k.begin(), k.end(), std::greater<int>());
    return k;
}

std::vector<ExponentKey> distinct_permutations(const ExponentKey& canon) {
    ExponentKey k = canon;
    std::sort(k.begin(), k.end());
    std::vector<ExponentKey> out;
    do {
        out.push_back(k);
    } while (std::next_permutation(k.begin(), k.end()));
    return out;
}

PiScalar NVarPoly::get(ExponentKey d) const {
    if (static_cast<int>(d.size()) != n)
        throw std::domain_error("poly_get: key width does not match variable count");
    auto it = coeffs.find(canonical_key(std::move(d)));
    return it == coeffs.end() ? PiScalar() : it->second;
}

void NVarPoly::add(ExponentKey d, const PiScalar& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(d.size()) != n)
        throw std::domain_error("poly add: key width does not match variable count");
    ExponentKey key = canonical_key(std::move(d));
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
        coeffs.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

void NVarPoly::add_scaled(const NVarPoly& o, const PiScalar& c) {
    if (o.n != n) throw std::domain_error("poly add: variable counts differ");
    if (c.is_zero()) return;
    for (const auto& [k, v] : o.coeffs) add(k, c * v);
}

void NVarPoly::scale(const PiScalar& c) {
    if (c.is_zero()) {
        coeffs.clear();
        return;
    }
    for (auto& [k, v] : coeffs) v *= c;
}

namespace {

/// Multiplicity of a merge: number of ways to pick the sub-multiset `a`
/// out of `m`, i.e. prod over distinct values v of binom(m(v), a(v)).
Rational merge_multiplicity(const ExponentKey& m, const ExponentKey& a) {
    mpz_class ways(1);
    std::size_t i = 0;
    for (std::size_t j = 0; j < m.size();) {
        int v = m[j];
        unsigned in_m = 0, in_a = 0;
        for (; j < m.size() && m[j] == v; ++j) ++in_m;
        for (; i < a.size() && a[i] == v; ++i) ++in_a;
        if (in_a > 0) ways *= binomial_z(in_m, in_a);
    }
    return Rational(ways);
}

}  // namespace

NVarPoly convolve_disjoint(const NVarPoly& a, const NVarPoly& b) {
    NVarPoly out;
    out.n = a.n + b.n;
    for (const auto& [ka, ca] : a.coeffs) {
        for (const auto& [kb, cb] : b.coeffs) {
            ExponentKey merged;
            merged.reserve(ka.size() + kb.size());
            std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(merged),
                       std::greater<int>());
            PiScalar contrib = merge_multiplicity(merged, ka) * (ca * cb);
            out.add(std::move(merged), contrib);
        }
    }
    return out;
}

std::map<int, NVarPoly> expand_slot(const NVarPoly& p) {
    if (p.n < 1) throw std::domain_error("expand_slot: no slot to expand");
    std::map<int, NVarPoly> out;
    for (const auto& [key, c] : p.coeffs) {
        int prev = -1;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (key[i] == prev) continue;  // one pull per distinct value
            prev = key[i];
            ExponentKey rest;
            rest.reserve(key.size() - 1);
            rest.insert(rest.end(), key.begin(), key.begin() + i);
            rest.insert(rest.end(), key.begin() + i + 1, key.end());
            auto [it, fresh] = out.try_emplace(key[i]);
            if (fresh) it->second.n = p.n - 1;
            it->second.add(std::move(rest), c);
        }
    }
    return out;
}

// ---- spec'd accessors ----

PiScalar poly_get(const CorrelatorPoly& p, const ExponentKey& d) { return p.p.get(d); }
PiScalar poly_get(const VolumePoly& p, const ExponentKey& d) { return p.p.get(d); }

CorrelatorPoly poly_add_scaled(const CorrelatorPoly& a, const CorrelatorPoly& b,
                               const PiScalar& c) {
    if (a.g != b.g || a.n() != b.n())
        throw std::domain_error("poly_add_scaled: shapes (g,n) differ");
    CorrelatorPoly out = a;
    out.p.add_scaled(b.p, c);
    return out;
}

VolumePoly poly_add_scaled(const VolumePoly& a, const VolumePoly& b, const PiScalar& c) {
    if (a.g != b.g || a.n() != b.n())
        throw std::domain_error("poly_add_scaled: shapes (g,n) differ");
    if (a.convention != b.convention)
        throw std::domain_error("poly_add_scaled: conventions differ");
    VolumePoly out = a;
    out.p.add_scaled(b.p, c);
    return out;
}

std::map<int, NVarPoly> poly_partial_expand(const CorrelatorPoly& p, int slot, int max_power) {
    if (slot < 1 || slot > p.n())
        throw std::domain_error("poly_partial_expand: slot out of range");
    auto full = expand_slot(p.p);
    if (max_power >= 0) full.erase(full.upper_bound(max_power), full.end());
    return full;
}

// ---- invariants ----

void validate_shape(const NVarPoly& p) {
    if (p.n < 0) throw identity_violation("poly: negative variable count");
    for (const auto& [k, c] : p.coeffs) {
        if (static_cast<int>(k.size()) != p.n)
            throw identity_violation("poly: key width does not match variable count");
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] < 0) throw identity_violation("poly: negative exponent");
            if (i > 0 && k[i] > k[i - 1]) throw identity_violation("poly: key not sorted");
        }
        if (c.is_zero()) throw identity_violation("poly: stored zero coefficient");
    }
}

namespace {

void validate_tagged(int g, const NVarPoly& p, const char* what) {
    validate_shape(p);
    if (p.n < 1 || !is_stable(g, p.n))
        throw identity_violation(std::string(what) + ": unstable shape (g,n)");
    int bound = dimension(g, p.n);
    for (const auto& [k, c] : p.coeffs)
        if (key_degree(k) > bound)
            throw identity_violation(std::string(what) + ": total degree exceeds 3g-3+n");
}

}  // namespace

void validate_correlator(const CorrelatorPoly& p) { validate_tagged(p.g, p.p, "correlator"); }
void validate_volume(const VolumePoly& p) { validate_tagged(p.g, p.p, "volume"); }

void validate_pi_grading(int g, const NVarPoly& p) {
    int dim = dimension(g, p.n);
    for (const auto& [k, c] : p.coeffs) {
        int want = dim - key_degree(k);
        if (c.terms().size() != 1 || c.terms().begin()->first != want) {
            std::ostringstream os;
            os << "pi grading violated: degree-" << key_degree(k)
               << " coefficient should be q*pi^" << 2 * want << ", got " << c.to_string();
            throw identity_violation(os.str());
        }
    }
}

bool all_coefficients_positive(const NVarPoly& p) {
    for (const auto& [k, c] : p.coeffs) {
        if (c.is_zero()) return false;
        for (const auto& [kk, q] : c.terms())
            if (q.sign() <= 0) return false;
    }
    return true;
}

}  // namespace wpvol

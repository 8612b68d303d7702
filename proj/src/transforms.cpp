#include "wpvol/transforms.hpp"

namespace wpvol {

int paper_factor(int g, int n) { return (g == 1 && n == 1) ? 2 : 1; }

namespace {

Rational odd_factorial_product(const ExponentKey& d) {
    mpz_class acc(1);
    for (int di : d) acc *= factorial_z(2 * di + 1);
    return Rational(acc);
}

}  // namespace

VolumePoly to_volume(const CorrelatorPoly& w, Convention conv) {
    validate_correlator(w);
    VolumePoly v;
    v.g = w.g;
    v.convention = conv;
    v.p.n = w.n();
    Rational extra(conv == Convention::paper ? paper_factor(w.g, w.n()) : 1);
    for (const auto& [d, c] : w.p.coeffs)
        v.p.add(d, (extra / odd_factorial_product(d)) * c);
    return v;
}

CorrelatorPoly to_correlator(const VolumePoly& v) {
    if (v.convention != Convention::identity)
        throw std::domain_error("to_correlator: identity convention required");
    validate_volume(v);
    CorrelatorPoly w;
    w.g = v.g;
    w.p.n = v.n();
    for (const auto& [d, c] : v.p.coeffs) w.p.add(d, odd_factorial_product(d) * c);
    return w;
}

VolumePoly with_convention(const VolumePoly& v, Convention conv) {
    if (conv == v.convention) return v;
    VolumePoly out = v;
    out.convention = conv;
    Rational f(paper_factor(v.g, v.n()));
    out.p.scale(PiScalar(conv == Convention::paper ? f : Rational(1) / f));
    return out;
}

IntersectionTable intersection_numbers(const VolumePoly& v) {
    VolumePoly vp = with_convention(v, Convention::paper);
    IntersectionTable t;
    t.g = vp.g;
    t.n = vp.n();
    int dim = dimension(t.g, t.n);
    for (const auto& [d, c] : vp.p.coeffs) {
        IntersectionEntry e;
        e.d = d;
        e.d0 = dim - key_degree(d);
        mpz_class fac = factorial_z(e.d0);
        for (int di : d) fac *= factorial_z(di);
        e.value = Rational(fac) * c;
        t.entries.push_back(std::move(e));
    }
    return t;
}

std::vector<PiScalar> dilaton_pairing_series(int kmax) {
    if (kmax < 0) throw std::domain_error("dilaton_pairing_series: kmax must be >= 0");
    std::vector<PiScalar> t(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        Rational cosc = Rational(1) / Rational(factorial_z(2 * k));
        Rational sinc = Rational(1) / Rational(factorial_z(2 * k + 1));
        Rational q = Rational(4).pow(k) * (cosc - sinc);
        if (k % 2 == 1) q = -q;
        t[k] = PiScalar::pi_power(k, q);
    }
    if (!t[0].is_zero())
        throw identity_violation("dilaton_pairing_series: u^1 coefficient failed to cancel");
    return t;
}

namespace {

NVarPoly scaled_copy(const NVarPoly& p, const PiScalar& c) {
    NVarPoly out = p;
    out.scale(c);
    return out;
}

/// c -> (SIGN/4) * c / pi^2 applied to every coefficient.
NVarPoly w_form_normalize(const NVarPoly& raw) {
    NVarPoly out;
    out.n = raw.n;
    for (const auto& [k, c] : raw.coeffs) out.add(k, (Rational(-1, 4) * c).shift_pi(-1));
    return out;
}

}  // namespace

DilatonReport dilaton_check_W(Engine& e, int g, int n) {
    if (n < 1 || !is_stable(g, n))
        throw std::domain_error("dilaton_check_W: stable (g,n) with n >= 1 required");
    DilatonReport r;
    r.g = g;
    r.n = n;
    r.sign = -1;
    r.lhs = scaled_copy(e.correlator(g, n).p, PiScalar(2 * g - 2 + n));

    auto expansion = expand_slot(e.correlator(g, n + 1).p);
    auto t = dilaton_pairing_series(dimension(g, n + 1));
    NVarPoly raw;
    raw.n = n;
    for (const auto& [k, wk] : expansion) {
        if (k < 1) continue;
        if (k >= static_cast<int>(t.size()))
            throw identity_violation("dilaton_check_W: pairing series shorter than expansion");
        raw.add_scaled(wk, t[k]);
    }
    r.rhs = w_form_normalize(raw);
    r.holds = (r.lhs == r.rhs);
    return r;
}

DilatonReport dilaton_check_V(Engine& e, int g, int n) {
    if (n < 1 || !is_stable(g, n))
        throw std::domain_error("dilaton_check_V: stable (g,n) with n >= 1 required");
    DilatonReport r;
    r.g = g;
    r.n = n;
    r.sign = 1;
    VolumePoly v = to_volume(e.correlator(g, n), Convention::identity);
    r.lhs = scaled_copy(v.p, PiScalar(2 * g - 2 + n));

    VolumePoly vnext = to_volume(e.correlator(g, n + 1), Convention::identity);
    auto expansion = expand_slot(vnext.p);
    NVarPoly rhs;
    rhs.n = n;
    for (const auto& [d, pd] : expansion) {
        if (d < 1) continue;  // the derivative kills d_{n+1} = 0
        PiScalar factor = PiScalar::pi_power(1, Rational(-4)).pow(d - 1);
        factor.scale(Rational(2 * d));
        rhs.add_scaled(pd, factor);
    }
    r.rhs = std::move(rhs);
    r.holds = (r.lhs == r.rhs);
    return r;
}

PiScalar closed_volume(Engine& e, int g) {
    if (g < 2) throw std::domain_error("closed_volume: requires g >= 2 (2g-2 must be positive)");
    VolumePoly v1 = to_volume(e.correlator(g, 1), Convention::identity);
    auto expansion = expand_slot(v1.p);
    PiScalar acc;
    for (const auto& [d, pd] : expansion) {
        if (d < 1) continue;
        PiScalar a = pd.get({});
        PiScalar factor = PiScalar::pi_power(1, Rational(-4)).pow(d - 1);
        factor.scale(Rational(2 * d));
        acc += factor * a;
    }
    return Rational(1, 2 * g - 2) * acc;
}

PiScalar closed_volume_w_path(Engine& e, int g) {
    if (g < 2) throw std::domain_error("closed_volume: requires g >= 2 (2g-2 must be positive)");
    auto expansion = expand_slot(e.correlator(g, 1).p);
    auto t = dilaton_pairing_series(dimension(g, 1));
    PiScalar raw;
    for (const auto& [k, wk] : expansion) {
        if (k < 1) continue;
        raw += t[k] * wk.get({});
    }
    return (Rational(-1, 4 * (2 * g - 2)) * raw).shift_pi(-1);
}

PiScalar evaluate_volume_exact(const VolumePoly& v, const std::vector<Rational>& lengths) {
    if (static_cast<int>(lengths.size()) != v.n())
        throw std::domain_error("evaluate_volume: expected " + std::to_string(v.n()) +
                                " boundary lengths");
    PiScalar total;
    for (const auto& [key, c] : v.p.coeffs) {
        Rational orbit(0);
        for (const ExponentKey& perm : distinct_permutations(key)) {
            Rational mono(1);
            for (std::size_t i = 0; i < perm.size(); ++i)
                mono *= lengths[i].pow(2 * static_cast<unsigned>(perm[i]));
            orbit += mono;
        }
        total += orbit * c;
    }
    return total;
}

std::string evaluate_volume(const VolumePoly& v, const std::vector<Rational>& lengths,
                            int digits) {
    return evaluate_volume_exact(v, lengths).eval_decimal(digits);
}

}  // namespace wpvol

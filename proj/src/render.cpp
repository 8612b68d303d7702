#include "wpvol/render.hpp"

#include <sstream>

namespace wpvol {

namespace {

enum class Style { correlator, volume };

std::string text_factor(Style style, int slot, int d) {
    if (style == Style::volume) {
        if (d == 0) return {};
        return "L" + std::to_string(slot) + "^" + std::to_string(2 * d);
    }
    return "z" + std::to_string(slot) + "^-" + std::to_string(2 * d + 2);
}

std::string text_monomial(Style style, const ExponentKey& perm) {
    std::string out;
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
        std::string f = text_factor(style, i + 1, perm[i]);
        if (f.empty()) continue;
        if (!out.empty()) out += "*";
        out += f;
    }
    return out;
}

std::string text_poly(Style style, const NVarPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : p.coeffs) {
        std::string coeff = c.to_string();
        if (coeff.find(" + ") != std::string::npos) coeff = "(" + coeff + ")";

        auto perms = distinct_permutations(key);
        std::string orbit;
        if (perms.size() == 1) {
            orbit = text_monomial(style, perms.front());
        } else {
            // descending lexicographic order puts L1 before L2 before ...
            for (auto it = perms.rbegin(); it != perms.rend(); ++it) {
                if (!orbit.empty()) orbit += "+";
                orbit += text_monomial(style, *it);
            }
            orbit = "(" + orbit + ")";
        }

        if (!out.empty()) out += " + ";
        out += orbit.empty() ? coeff : coeff + " * " + orbit;
    }
    return out;
}

// ---- LaTeX ----

std::string latex_pi(int k) {
    if (k == 0) return {};
    if (2 * k < 10) return "\\pi^" + std::to_string(2 * k);
    return "\\pi^{" + std::to_string(2 * k) + "}";
}

std::string latex_var(Style style, int slot, int d) {
    if (style == Style::volume)
        return "L_" + std::to_string(slot) + "^{" + std::to_string(2 * d) + "}";
    return "z_" + std::to_string(slot) + "^{" + std::to_string(2 * d + 2) + "}";
}

/// Factors contributed by one slot permutation: volumes multiply into the
/// numerator, correlators into the denominator (the 1/z_i^2 display style).
void latex_collect(Style style, const ExponentKey& perm, std::string& num, std::string& den) {
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
        if (style == Style::volume) {
            if (perm[i] != 0) num += latex_var(style, i + 1, perm[i]);
        } else {
            if (!den.empty()) den += " ";
            den += latex_var(style, i + 1, perm[i]);
        }
    }
}

std::string latex_fraction(bool negative, const mpz_class& num_abs, const mpz_class& den,
                           const std::string& num_factors, const std::string& den_factors) {
    std::string num_str;
    if (num_abs != 1 || num_factors.empty()) num_str = num_abs.get_str();
    num_str += num_factors;

    std::string den_str;
    if (den != 1) den_str = den.get_str();
    if (!den_factors.empty()) {
        if (!den_str.empty()) den_str += " ";
        den_str += den_factors;
    }

    std::string out = negative ? "-" : "";
    if (den_str.empty()) return out + num_str;
    return out + "\\frac{" + num_str + "}{" + den_str + "}";
}

/// One pi-monomial q*pi^{2k} merged with optional variable factors.
std::string latex_monomial_scalar(int k, const Rational& q, const std::string& num_factors,
                                  const std::string& den_factors) {
    mpz_class num_abs = abs(q.num());
    return latex_fraction(q.sign() < 0, num_abs, q.den(), latex_pi(k) + num_factors, den_factors);
}

std::string join_signed(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (out.empty()) {
            out = p;
        } else if (!p.empty() && p.front() == '-') {
            out += " - " + p.substr(1);
        } else {
            out += " + " + p;
        }
    }
    return out;
}

std::string latex_scalar(const PiScalar& s, bool parenthesize_sums) {
    if (s.is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& [k, q] : s.terms()) parts.push_back(latex_monomial_scalar(k, q, "", ""));
    if (parts.size() == 1) return parts.front();
    std::string body = join_signed(parts);
    return parenthesize_sums ? "\\left(" + body + "\\right)" : body;
}

std::string latex_orbit_monomial(Style style, const ExponentKey& perm) {
    std::string num, den;
    latex_collect(style, perm, num, den);
    if (den.empty()) return num;
    return "\\frac{" + (num.empty() ? std::string("1") : num) + "}{" + den + "}";
}

std::string latex_poly(Style style, const NVarPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::string> terms;
    for (const auto& [key, c] : p.coeffs) {
        auto perms = distinct_permutations(key);
        if (perms.size() == 1 && c.terms().size() == 1) {
            const auto& [k, q] = *c.terms().begin();
            std::string num, den;
            latex_collect(style, perms.front(), num, den);
            terms.push_back(latex_monomial_scalar(k, q, num, den));
            continue;
        }
        std::string coeff = latex_scalar(c, true);
        std::string orbit;
        if (perms.size() == 1) {
            orbit = latex_orbit_monomial(style, perms.front());
        } else {
            for (auto it = perms.rbegin(); it != perms.rend(); ++it) {
                if (!orbit.empty()) orbit += "+";
                orbit += latex_orbit_monomial(style, *it);
            }
            orbit = "\\left(" + orbit + "\\right)";
        }
        terms.push_back(orbit.empty() ? coeff : coeff + orbit);
    }
    return join_signed(terms);
}

std::string bracket_label_text(const IntersectionEntry& e) {
    std::string parts;
    if (e.d0 > 0) {
        parts = "kappa1";
        if (e.d0 > 1) parts += "^" + std::to_string(e.d0);
    }
    for (int d : e.d) {
        if (!parts.empty()) parts += " ";
        parts += "tau_" + std::to_string(d);
    }
    return "<" + parts + ">";
}

std::string bracket_label_latex(const IntersectionEntry& e) {
    std::string parts;
    if (e.d0 > 0) {
        parts = "\\kappa_1";
        if (e.d0 > 1) parts += "^{" + std::to_string(e.d0) + "}";
    }
    for (int d : e.d) {
        if (!parts.empty()) parts += " ";
        parts += "\\tau_{" + std::to_string(d) + "}";
    }
    return "\\langle " + parts + " \\rangle";
}

}  // namespace

std::string render_text(const CorrelatorPoly& w) { return text_poly(Style::correlator, w.p); }

std::string render_text(const VolumePoly& v) { return text_poly(Style::volume, v.p); }

std::string render_text(const IntersectionTable& t) {
    std::string out;
    for (const auto& e : t.entries) {
        if (!out.empty()) out += "\n";
        out += bracket_label_text(e) + " = " + e.value.to_string();
    }
    return out;
}

std::string render_latex(const PiScalar& s) { return latex_scalar(s, false); }

std::string render_latex(const CorrelatorPoly& w) { return latex_poly(Style::correlator, w.p); }

std::string render_latex(const VolumePoly& v) { return latex_poly(Style::volume, v.p); }

std::string render_latex(const IntersectionTable& t) {
    std::string out;
    for (const auto& e : t.entries) {
        if (!out.empty()) out += "\n";
        out += bracket_label_latex(e) + " = " + latex_scalar(e.value, false);
    }
    return out;
}

}  // namespace wpvol

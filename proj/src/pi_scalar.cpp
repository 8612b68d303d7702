#include "wpvol/pi_scalar.hpp"

#include <mpfr.h>

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace wpvol {

std::string PiScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        if (k > 0) os << "*pi^" << 2 * k;
    }
    return os.str();
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void parse_fail(const std::string& s) {
    throw std::invalid_argument("PiScalar: cannot parse \"" + s + "\"");
}

/// One term: "p", "p/q", "<rational>*pi^<even>", or bare "pi^<even>" with
/// optional leading '-'.
PiScalar parse_term(const std::string& raw) {
    std::string t = strip(raw);
    if (t.empty()) parse_fail(raw);

    Rational coeff(1);
    std::string::size_type pi_at = t.find("pi^");
    if (pi_at == std::string::npos) return PiScalar(Rational::from_string(t));

    if (pi_at == 0) {
        // bare pi^e
    } else if (pi_at == 1 && t[0] == '-') {
        coeff = Rational(-1);
    } else if (t[pi_at - 1] == '*') {
        coeff = Rational::from_string(strip(t.substr(0, pi_at - 1)));
    } else {
        parse_fail(raw);
    }

    std::string exps = t.substr(pi_at + 3);
    if (exps.empty()) parse_fail(raw);
    for (char ch : exps)
        if (!std::isdigit(static_cast<unsigned char>(ch))) parse_fail(raw);
    long e = std::strtol(exps.c_str(), nullptr, 10);
    if (e % 2 != 0)
        throw std::domain_error("PiScalar: odd pi power \"" + raw + "\" is not representable");
    return PiScalar::pi_power(static_cast<int>(e / 2), coeff);
}

}  // namespace

PiScalar PiScalar::from_string(const std::string& s) {
    std::string body = strip(s);
    if (body.empty()) parse_fail(s);
    PiScalar acc;
    std::size_t pos = 0;
    while (true) {
        std::size_t plus = body.find('+', pos);
        std::string piece =
            (plus == std::string::npos) ? body.substr(pos) : body.substr(pos, plus - pos);
        acc += parse_term(piece);
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return acc;
}

std::string PiScalar::eval_decimal(int digits) const {
    if (digits < 1) throw std::domain_error("pis_eval: digits must be >= 1");
    if (terms_.empty()) return "0";

    // Bits needed: enough to resolve `digits` decimal places below the
    // largest term (terms may cancel, so the result magnitude is no guide).
    long max_term_bits = 0;
    for (const auto& [k, c] : terms_) {
        long bits = static_cast<long>(mpz_sizeinbase(c.num().get_mpz_t(), 2)) -
                    static_cast<long>(mpz_sizeinbase(c.den().get_mpz_t(), 2));
        bits += static_cast<long>(2 * k * 1.6515724 + 2);  // log2(pi) = 1.6514...
        if (bits > max_term_bits) max_term_bits = bits;
    }
    mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(max_term_bits + static_cast<long>(digits * 3.3220) + 64);
    if (prec < 64) prec = 64;

    mpfr_t pi, acc, term;
    mpfr_inits2(prec, pi, acc, term, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_zero(acc, 1);
    for (const auto& [k, c] : terms_) {
        mpfr_set_q(term, c.raw().get_mpq_t(), MPFR_RNDN);
        if (k > 0) {
            mpfr_t pk;
            mpfr_init2(pk, prec);
            mpfr_pow_ui(pk, pi, static_cast<unsigned long>(2 * k), MPFR_RNDN);
            mpfr_mul(term, term, pk, MPFR_RNDN);
            mpfr_clear(pk);
        }
        mpfr_add(acc, acc, term, MPFR_RNDN);
    }

    char* out = nullptr;
    mpfr_asprintf(&out, "%.*Rf", digits, acc);
    std::string result(out);
    mpfr_free_str(out);
    mpfr_clears(pi, acc, term, static_cast<mpfr_ptr>(nullptr));

    // A value that rounds to zero should not keep a stray sign.
    if (result.find_first_not_of("-0.") == std::string::npos && result[0] == '-')
        result.erase(0, 1);
    return result;
}

}  // namespace wpvol

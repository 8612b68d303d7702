#include <doctest.h>

#include "wpvol/recursion.hpp"
#include "wpvol/render.hpp"
#include "wpvol/transforms.hpp"

using namespace wpvol;

namespace {

PiScalar pp(int k, long num, long den) { return PiScalar::pi_power(k, Rational(num, den)); }

CorrelatorPoly mk_w11() {
    CorrelatorPoly w;
    w.g = 1;
    w.p.n = 1;
    w.p.add({1}, PiScalar(Rational(1, 8)));
    w.p.add({0}, pp(1, 1, 12));
    return w;
}

CorrelatorPoly mk_w12() {
    CorrelatorPoly w;
    w.g = 1;
    w.p.n = 2;
    w.p.add({2, 0}, PiScalar(Rational(5, 8)));
    w.p.add({1, 1}, PiScalar(Rational(3, 8)));
    w.p.add({1, 0}, pp(1, 1, 2));
    w.p.add({0, 0}, pp(2, 1, 4));
    return w;
}

CorrelatorPoly mk_w04() {
    CorrelatorPoly w;
    w.g = 0;
    w.p.n = 4;
    w.p.add({1, 0, 0, 0}, PiScalar(3));
    w.p.add({0, 0, 0, 0}, pp(1, 2, 1));
    return w;
}

}  // namespace

TEST_CASE("text rendering of correlators") {
    CHECK(render_text(mk_w11()) == "1/8 * z1^-4 + 1/12*pi^2 * z1^-2");

    CorrelatorPoly w03;
    w03.g = 0;
    w03.p.n = 3;
    w03.p.add({0, 0, 0}, PiScalar(1));
    CHECK(render_text(w03) == "1 * z1^-2*z2^-2*z3^-2");

    CHECK(render_text(mk_w12()) ==
          "5/8 * (z1^-6*z2^-2+z1^-2*z2^-6) + 3/8 * z1^-4*z2^-4 + "
          "1/2*pi^2 * (z1^-4*z2^-2+z1^-2*z2^-4) + 1/4*pi^4 * z1^-2*z2^-2");

    CHECK(render_text(mk_w04()) ==
          "3 * (z1^-4*z2^-2*z3^-2*z4^-2+z1^-2*z2^-4*z3^-2*z4^-2+"
          "z1^-2*z2^-2*z3^-4*z4^-2+z1^-2*z2^-2*z3^-2*z4^-4) + "
          "2*pi^2 * z1^-2*z2^-2*z3^-2*z4^-2");
}

TEST_CASE("text rendering of volumes skips zero exponents") {
    CHECK(render_text(to_volume(mk_w11())) == "1/48 * L1^2 + 1/12*pi^2");
    CHECK(render_text(to_volume(mk_w04())) == "1/2 * (L1^2+L2^2+L3^2+L4^2) + 2*pi^2");
    CHECK(render_text(to_volume(mk_w12())) ==
          "1/192 * (L1^4+L2^4) + 1/96 * L1^2*L2^2 + "
          "1/12*pi^2 * (L1^2+L2^2) + 1/4*pi^4");
}

TEST_CASE("text rendering parenthesizes multi-term coefficients") {
    VolumePoly v;
    v.g = 1;
    v.convention = Convention::identity;
    v.p.n = 2;
    v.p.add({1, 0}, PiScalar(Rational(1, 8)) + pp(1, 1, 12));
    v.p.add({0, 0}, PiScalar(1) + pp(2, -1, 1));
    CHECK(render_text(v) ==
          "(1/8 + 1/12*pi^2) * (L1^2+L2^2) + (1 + -1*pi^4)");
}

TEST_CASE("text rendering of the zero polynomial and negative coefficients") {
    CorrelatorPoly zero;
    zero.g = 1;
    zero.p.n = 1;
    CHECK(render_text(zero) == "0");

    VolumePoly vzero;
    vzero.g = 1;
    vzero.convention = Convention::identity;
    vzero.p.n = 1;
    CHECK(render_text(vzero) == "0");

    CorrelatorPoly w;
    w.g = 1;
    w.p.n = 1;
    w.p.add({1}, PiScalar(Rational(1, 8)));
    w.p.add({0}, PiScalar(Rational(-1, 4)));
    CHECK(render_text(w) == "1/8 * z1^-4 + -1/4 * z1^-2");
}

TEST_CASE("latex rendering of scalars") {
    CHECK(render_latex(PiScalar()) == "0");
    CHECK(render_latex(PiScalar(5)) == "5");
    CHECK(render_latex(PiScalar(Rational(-1, 4))) == "-\\frac{1}{4}");
    CHECK(render_latex(pp(1, 1, 6)) == "\\frac{\\pi^2}{6}");
    CHECK(render_latex(pp(2, -1, 1)) == "-\\pi^4");
    CHECK(render_latex(pp(5, 1, 3)) == "\\frac{\\pi^{10}}{3}");
    CHECK(render_latex(pp(1, 2, 1)) == "2\\pi^2");
    CHECK(render_latex(PiScalar(Rational(1, 8)) + pp(1, 1, 12)) ==
          "\\frac{1}{8} + \\frac{\\pi^2}{12}");
    CHECK(render_latex(PiScalar(1) + pp(2, -1, 1)) == "1 - \\pi^4");
}

TEST_CASE("latex rendering of polynomials") {
    CHECK(render_latex(mk_w11()) == "\\frac{1}{8 z_1^{4}} + \\frac{\\pi^2}{12 z_1^{2}}");
    CHECK(render_latex(to_volume(mk_w11())) == "\\frac{L_1^{2}}{48} + \\frac{\\pi^2}{12}");
    CHECK(render_latex(to_volume(mk_w04())) ==
          "\\frac{1}{2}\\left(L_1^{2}+L_2^{2}+L_3^{2}+L_4^{2}\\right) + 2\\pi^2");

    CorrelatorPoly w;
    w.g = 1;
    w.p.n = 1;
    w.p.add({1}, PiScalar(Rational(1, 8)));
    w.p.add({0}, PiScalar(Rational(-1, 4)));
    CHECK(render_latex(w) == "\\frac{1}{8 z_1^{4}} - \\frac{1}{4 z_1^{2}}");

    VolumePoly v;
    v.g = 1;
    v.convention = Convention::identity;
    v.p.n = 2;
    v.p.add({1, 0}, PiScalar(1) + pp(1, 1, 1));
    v.p.add({1, 1}, PiScalar(1) + pp(1, 1, 1));
    CHECK(render_latex(v) ==
          "\\left(1 + \\pi^2\\right)L_1^{2}L_2^{2} + "
          "\\left(1 + \\pi^2\\right)\\left(L_1^{2}+L_2^{2}\\right)");

    CorrelatorPoly zero;
    zero.g = 1;
    zero.p.n = 1;
    CHECK(render_latex(zero) == "0");
}

TEST_CASE("intersection tables render with bracket labels") {
    IntersectionTable t11 = intersection_numbers(to_volume(mk_w11()));
    CHECK(render_text(t11) == "<tau_1> = 1/24\n<kappa1 tau_0> = 1/6*pi^2");
    CHECK(render_latex(t11) ==
          "\\langle \\tau_{1} \\rangle = \\frac{1}{24}\n"
          "\\langle \\kappa_1 \\tau_{0} \\rangle = \\frac{\\pi^2}{6}");
}

TEST_CASE("intersection labels carry kappa powers") {
    Engine eng(wp_curve(5));
    IntersectionTable t = intersection_numbers(to_volume(eng.correlator(0, 5)));
    std::string text = render_text(t);
    CHECK(text.find("<kappa1^2 tau_0 tau_0 tau_0 tau_0 tau_0> = 20*pi^4") != std::string::npos);
    std::string latex = render_latex(t);
    CHECK(latex.find("\\langle \\kappa_1^{2} \\tau_{0} \\tau_{0} \\tau_{0} \\tau_{0} \\tau_{0} "
                     "\\rangle = 20\\pi^4") != std::string::npos);
}

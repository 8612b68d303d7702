#include <doctest.h>

#include "wpvol/poly.hpp"

using namespace wpvol;

namespace {

NVarPoly w03_data() {
    NVarPoly p;
    p.n = 3;
    p.add({0, 0, 0}, PiScalar(1));
    return p;
}

NVarPoly w11_data() {
    NVarPoly p;
    p.n = 1;
    p.add({1}, PiScalar(Rational(1, 8)));
    p.add({0}, PiScalar::pi_power(1, Rational(1, 12)));
    return p;
}

}  // namespace

TEST_CASE("canonical keys sort non-increasing and reject negatives") {
    CHECK(canonical_key({0, 2, 1}) == ExponentKey{2, 1, 0});
    CHECK(canonical_key({}) == ExponentKey{});
    CHECK_THROWS_AS(canonical_key({1, -1}), std::domain_error);
}

TEST_CASE("distinct permutations enumerate each ordered tuple once") {
    auto perms = distinct_permutations({1, 0, 0});
    CHECK(perms.size() == 3);
    auto all_same = distinct_permutations({2, 2});
    CHECK(all_same.size() == 1);
    auto empty = distinct_permutations({});
    CHECK(empty.size() == 1);
    auto three = distinct_permutations({2, 1, 0});
    CHECK(three.size() == 6);
}

TEST_CASE("display order: degree descending, then lexicographic descending") {
    CoeffMap m;
    m[{0, 0, 0, 0}] = PiScalar(1);
    m[{1, 0, 0, 0}] = PiScalar(1);
    m[{1, 1, 0, 0}] = PiScalar(1);
    m[{2, 0, 0, 0}] = PiScalar(1);
    std::vector<ExponentKey> order;
    for (const auto& [k, c] : m) order.push_back(k);
    CHECK(order == std::vector<ExponentKey>{
                       {2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}});
}

TEST_CASE("coefficient lookup sorts the query key") {
    CorrelatorPoly w03{0, w03_data()};
    CorrelatorPoly w11{1, w11_data()};
    CHECK(poly_get(w03, {0, 0, 0}) == PiScalar(1));
    CHECK(poly_get(w11, {1}) == PiScalar(Rational(1, 8)));
    CHECK(poly_get(w11, {0}) == PiScalar::pi_power(1, Rational(1, 12)));
    CHECK(poly_get(w11, {5}) == PiScalar());

    NVarPoly two;
    two.n = 2;
    two.add({2, 1}, PiScalar(7));
    CHECK(two.get({1, 2}) == PiScalar(7));
    CHECK(two.get({2, 1}) == PiScalar(7));
    CHECK_THROWS_AS(two.get({1}), std::domain_error);
}

TEST_CASE("add drops exact zeros") {
    NVarPoly p;
    p.n = 1;
    p.add({0}, PiScalar(3));
    p.add({0}, PiScalar(-3));
    CHECK(p.is_zero());
    p.add({1}, PiScalar());
    CHECK(p.is_zero());
}

TEST_CASE("scaled addition behaves pointwise") {
    CorrelatorPoly w03{0, w03_data()};
    CorrelatorPoly zero{0, NVarPoly{3, {}}};

    auto same = poly_add_scaled(w03, w03, PiScalar());
    CHECK(same.p == w03.p);

    auto cancel = poly_add_scaled(w03, w03, PiScalar(-1));
    CHECK(cancel.p.is_zero());

    auto doubled = poly_add_scaled(w03, w03, PiScalar(1));
    CHECK(poly_get(doubled, {0, 0, 0}) == PiScalar(2));

    CorrelatorPoly w11{1, w11_data()};
    CHECK_THROWS_AS(poly_add_scaled(w03, w11, PiScalar(1)), std::domain_error);

    VolumePoly va{1, Convention::identity, w11_data()};
    VolumePoly vb{1, Convention::paper, w11_data()};
    CHECK_THROWS_AS(poly_add_scaled(va, vb, PiScalar(1)), std::domain_error);

    // pointwise property on a random-ish mix
    NVarPoly a;
    a.n = 2;
    a.add({2, 0}, PiScalar(Rational(5, 8)));
    a.add({1, 1}, PiScalar(Rational(3, 8)));
    NVarPoly b;
    b.n = 2;
    b.add({1, 1}, PiScalar::pi_power(1));
    b.add({0, 0}, PiScalar(4));
    CorrelatorPoly ca{1, a}, cb{1, b};
    PiScalar s = PiScalar::pi_power(1, Rational(2, 3));
    auto sum = poly_add_scaled(ca, cb, s);
    for (ExponentKey k : {ExponentKey{2, 0}, {1, 1}, {0, 0}, {2, 1}})
        CHECK(poly_get(sum, k) == poly_get(ca, k) + s * poly_get(cb, k));
}

TEST_CASE("partial expansion of one slot") {
    CorrelatorPoly w11{1, w11_data()};
    auto e = poly_partial_expand(w11, 1, -1);
    REQUIRE(e.size() == 2);
    CHECK(e[0].n == 0);
    CHECK(e[0].get({}) == PiScalar::pi_power(1, Rational(1, 12)));
    CHECK(e[1].get({}) == PiScalar(Rational(1, 8)));

    CorrelatorPoly w03{0, w03_data()};
    auto e3 = poly_partial_expand(w03, 1, -1);
    REQUIRE(e3.size() == 1);
    CHECK(e3[0].n == 2);
    CHECK(e3[0].get({0, 0}) == PiScalar(1));

    auto truncated = poly_partial_expand(w11, 1, 0);
    CHECK(truncated.size() == 1);
    CHECK(truncated.count(0) == 1);

    CorrelatorPoly zero{0, NVarPoly{3, {}}};
    CHECK(poly_partial_expand(zero, 2, -1).empty());

    CHECK_THROWS_AS(poly_partial_expand(w11, 0, -1), std::domain_error);
    CHECK_THROWS_AS(poly_partial_expand(w11, 2, -1), std::domain_error);
}

TEST_CASE("partial expansion is slot independent") {
    NVarPoly p;
    p.n = 3;
    p.add({2, 1, 0}, PiScalar(5));
    p.add({1, 1, 1}, PiScalar::pi_power(1));
    CorrelatorPoly w{2, p};
    auto e1 = poly_partial_expand(w, 1, -1);
    auto e2 = poly_partial_expand(w, 2, -1);
    auto e3 = poly_partial_expand(w, 3, -1);
    CHECK(e1.size() == e2.size());
    for (const auto& [d, q] : e1) {
        CHECK(e2.at(d) == q);
        CHECK(e3.at(d) == q);
    }
}

TEST_CASE("disjoint-slot convolution against hand expansion") {
    NVarPoly a;
    a.n = 1;
    a.add({1}, PiScalar(2));
    a.add({0}, PiScalar(3));
    NVarPoly b;
    b.n = 1;
    b.add({0}, PiScalar(5));

    // C(z1,z2) = A(z1)B(z2) + A(z2)B(z1)
    NVarPoly c = convolve_disjoint(a, b);
    CHECK(c.n == 2);
    CHECK(c.get({1, 0}) == PiScalar(10));
    CHECK(c.get({0, 0}) == PiScalar(30));

    // associativity with a third factor
    NVarPoly d;
    d.n = 1;
    d.add({2}, PiScalar(7));
    CHECK(convolve_disjoint(convolve_disjoint(a, b), d) ==
          convolve_disjoint(a, convolve_disjoint(b, d)));
    // commutativity
    CHECK(convolve_disjoint(a, b) == convolve_disjoint(b, a));

    // scalar (n = 0) factor acts as multiplication
    NVarPoly s;
    s.n = 0;
    s.add({}, PiScalar(Rational(1, 4)));
    NVarPoly scaled = convolve_disjoint(s, a);
    CHECK(scaled.n == 1);
    CHECK(scaled.get({1}) == PiScalar(Rational(1, 2)));

    // repeated values pick up the binomial slot-choice factor
    NVarPoly e;
    e.n = 1;
    e.add({0}, PiScalar(1));
    NVarPoly ee = convolve_disjoint(e, e);
    CHECK(ee.get({0, 0}) == PiScalar(2));
}

TEST_CASE("shape validation") {
    NVarPoly good;
    good.n = 2;
    good.add({1, 0}, PiScalar(1));
    CHECK_NOTHROW(validate_shape(good));

    NVarPoly bad_width = good;
    bad_width.coeffs[{1}] = PiScalar(1);
    CHECK_THROWS_AS(validate_shape(bad_width), identity_violation);

    NVarPoly noncanon;
    noncanon.n = 2;
    noncanon.coeffs[{0, 1}] = PiScalar(1);
    CHECK_THROWS_AS(validate_shape(noncanon), identity_violation);

    NVarPoly zeroc;
    zeroc.n = 2;
    zeroc.coeffs[{1, 0}] = PiScalar();
    CHECK_THROWS_AS(validate_shape(zeroc), identity_violation);
}

TEST_CASE("correlator validation enforces stability and the degree bound") {
    CorrelatorPoly w11{1, w11_data()};
    CHECK_NOTHROW(validate_correlator(w11));

    CorrelatorPoly unstable{0, NVarPoly{2, {}}};
    CHECK_THROWS_AS(validate_correlator(unstable), identity_violation);

    CorrelatorPoly overflow{1, NVarPoly{1, {}}};
    overflow.p.add({2}, PiScalar(1));  // dim(1,1) = 1
    CHECK_THROWS_AS(validate_correlator(overflow), identity_violation);
}

TEST_CASE("pi-grading validation") {
    // dim(1,1) = 1: degree 1 carries pi^0, degree 0 carries pi^2
    CHECK_NOTHROW(validate_pi_grading(1, w11_data()));

    NVarPoly bad = w11_data();
    bad.coeffs[{0}] = PiScalar(Rational(1, 12));  // rational where pi^2 belongs
    CHECK_THROWS_AS(validate_pi_grading(1, bad), identity_violation);

    NVarPoly mixed = w11_data();
    mixed.coeffs[{1}] = PiScalar(Rational(1, 8)) + PiScalar::pi_power(1);
    CHECK_THROWS_AS(validate_pi_grading(1, mixed), identity_violation);
}

TEST_CASE("positivity scan") {
    CHECK(all_coefficients_positive(w11_data()));
    NVarPoly neg = w11_data();
    neg.coeffs[{1}] = PiScalar(Rational(-1, 8));
    CHECK(!all_coefficients_positive(neg));
}

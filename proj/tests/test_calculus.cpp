#include <doctest.h>

#include <array>
#include <random>

#include "gtb/calculus.hpp"
#include "gtb/errors.hpp"
#include "gtb/parse.hpp"

using namespace gtb;

namespace {

ScalarField sf(const char* t, std::size_t n = 3) { return sf_parse(t, n); }

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    ScalarField poly_field(std::size_t n, unsigned maxdeg) {
        Poly p(n);
        std::size_t terms = 1 + eng() % 3;
        for (std::size_t t = 0; t < terms; ++t) {
            Mono m(n, 0);
            unsigned budget = maxdeg;
            for (std::size_t v = 0; v < n; ++v) {
                unsigned e = eng() % (budget + 1);
                m[v] = e;
                budget -= e;
            }
            p.add_term(m, GaussRat(static_cast<long>(eng() % 9) - 4));
        }
        return ScalarField::from_poly(p);
    }

    VectorField vf(std::size_t n, unsigned maxdeg = 2) {
        VectorField x(n);
        for (std::size_t i = 0; i < n; ++i) x.comp(i) = poly_field(n, maxdeg);
        return x;
    }

    KForm form(std::size_t n, std::size_t k, unsigned maxdeg = 2) {
        KForm w(n, k);
        std::vector<std::size_t> idx(k);
        // iterate all increasing tuples
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
            if (pos == k) {
                w.set_comp(idx, poly_field(n, maxdeg));
                return;
            }
            for (std::size_t i = start; i < n; ++i) {
                idx[pos] = i;
                rec(pos + 1, i + 1);
            }
        };
        rec(0, 0);
        return w;
    }
};

// Independent bracket oracle: [X,Y] as a derivation applied to each
// coordinate function.
VectorField bracket_oracle(const VectorField& x, const VectorField& y) {
    std::size_t n = x.dim();
    VectorField r(n);
    for (std::size_t k = 0; k < n; ++k) {
        ScalarField xk = ScalarField::variable(n, k);
        r.comp(k) = x.apply(y.apply(xk)) - y.apply(x.apply(xk));
    }
    return r;
}

}  // namespace

TEST_CASE("lie bracket pinned values") {
    std::size_t n = 3;
    VectorField d1 = VectorField::coordinate(n, 0);
    VectorField d2 = VectorField::coordinate(n, 1);
    CHECK(lie_bracket(d1, d2).is_zero());

    VectorField x1d2(n);
    x1d2.comp(1) = sf("x1");
    CHECK(vf_eq(lie_bracket(d1, x1d2), d2));

    // [x1 d2, x2 d1] = x1 d1 - x2 d2 (frozen from the derivation oracle)
    VectorField a(n), b(n);
    a.comp(1) = sf("x1");
    b.comp(0) = sf("x2");
    VectorField expected(n);
    expected.comp(0) = sf("x1");
    expected.comp(1) = sf("-x2");
    VectorField got = lie_bracket(a, b);
    CHECK(vf_eq(got, expected));
    CHECK(vf_eq(got, bracket_oracle(a, b)));
}

TEST_CASE("lie bracket properties") {
    Rng rng(31);
    std::size_t n = 3;
    for (int k = 0; k < 8; ++k) {
        VectorField x = rng.vf(n), y = rng.vf(n), z = rng.vf(n);
        CHECK(vf_eq(lie_bracket(x, y), bracket_oracle(x, y)));
        // Jacobi
        VectorField jac = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                          lie_bracket(z, lie_bracket(x, y));
        CHECK(jac.is_zero());
        // antisymmetry
        CHECK((lie_bracket(x, y) + lie_bracket(y, x)).is_zero());
    }
}

TEST_CASE("exterior derivative pinned values") {
    std::size_t n = 3;
    CHECK(kf_eq(ext_d(sf("x1"), n), KForm::dx(n, 0)));

    KForm w(n, 2);
    w.set_comp({0, 1}, sf("x3"));
    KForm dw = ext_d(w);
    KForm vol(n, 3);
    vol.set_comp({0, 1, 2}, sf("1"));
    CHECK(kf_eq(dw, vol));

    KForm c(n, 2);
    c.set_comp({0, 1}, sf("1"));
    CHECK(ext_d(c).is_zero());
}

TEST_CASE("exterior derivative matches the invariant 2-form formula") {
    // db(X,Y,Z) = Xb(Y,Z) - Yb(X,Z) + Zb(X,Y) - b([X,Y],Z) + b([X,Z],Y) - b([Y,Z],X)
    Rng rng(47);
    std::size_t n = 3;
    for (int k = 0; k < 5; ++k) {
        KForm b = rng.form(n, 2);
        VectorField x = rng.vf(n, 1), y = rng.vf(n, 1), z = rng.vf(n, 1);
        auto ev2 = [&](const VectorField& u, const VectorField& v) {
            std::array<VectorField, 2> args{u, v};
            return b.eval(args);
        };
        ScalarField oracle = x.apply(ev2(y, z)) - y.apply(ev2(x, z)) + z.apply(ev2(x, y)) -
                             ev2(lie_bracket(x, y), z) + ev2(lie_bracket(x, z), y) -
                             ev2(lie_bracket(y, z), x);
        std::array<VectorField, 3> args{x, y, z};
        CHECK(sf_eq(ext_d(b).eval(args), oracle));
    }
}

TEST_CASE("d compose d is zero in every degree") {
    Rng rng(53);
    std::size_t n = 4;
    for (std::size_t k = 0; k <= 3; ++k) {
        KForm w = rng.form(n, k);
        CHECK(ext_d(ext_d(w)).is_zero());
    }
}

TEST_CASE("interior product pinned values and properties") {
    std::size_t n = 3;
    KForm w12(n, 2);
    w12.set_comp({0, 1}, sf("1"));
    VectorField d1 = VectorField::coordinate(n, 0);
    VectorField d3 = VectorField::coordinate(n, 2);
    CHECK(kf_eq(interior(d1, w12), KForm::dx(n, 1)));
    CHECK(interior(d3, w12).is_zero());

    KForm f0(n, 0);
    CHECK_THROWS_AS(interior(d1, f0), DegreeError);

    Rng rng(61);
    for (int k = 0; k < 5; ++k) {
        VectorField x = rng.vf(n);
        KForm w = rng.form(n, 2);
        CHECK(interior(x, interior(x, w)).is_zero());
        // function-linearity in X
        ScalarField f = rng.poly_field(n, 2);
        CHECK(kf_eq(interior(x.scaled(f), w), interior(x, w).scaled(f)));
        // evaluation definition (i_X w)(Y) = w(X, Y)
        VectorField y = rng.vf(n);
        std::array<VectorField, 2> xy{x, y};
        std::array<VectorField, 1> yy{y};
        CHECK(sf_eq(interior(x, w).eval(yy), w.eval(xy)));
    }
}

TEST_CASE("ext_d is not function-linear (witness)") {
    std::size_t n = 2;
    KForm w = KForm::dx(n, 1);  // dx2
    ScalarField f = sf("x1", n);
    KForm lhs = ext_d(w.scaled(f));              // d(x1 dx2) = dx1^dx2
    KForm rhs = ext_d(w).scaled(f);              // x1 * 0 = 0
    CHECK_FALSE(kf_eq(lhs, rhs));
}

TEST_CASE("lie derivative pinned values and identities") {
    std::size_t n = 3;
    VectorField d1 = VectorField::coordinate(n, 0);
    KForm x1dx2 = KForm::dx(n, 1).scaled(sf("x1"));
    CHECK(kf_eq(lie_derivative(d1, x1dx2), KForm::dx(n, 1)));

    Rng rng(71);
    for (int k = 0; k < 5; ++k) {
        VectorField x = rng.vf(n, 1), y = rng.vf(n, 1);
        KForm a = rng.form(n, 1);
        // d commutes with L
        CHECK(kf_eq(lie_derivative(x, ext_d(a)), ext_d(lie_derivative(x, a))));
        // L_X i_Y w - i_Y L_X w = i_{[X,Y]} w
        KForm w = rng.form(n, 2);
        KForm lhs = lie_derivative(x, interior(y, w)) - interior(y, lie_derivative(x, w));
        CHECK(kf_eq(lhs, interior(lie_bracket(x, y), w)));
        // Leibniz: L_X(f w) = (Xf) w + f L_X w
        ScalarField f = rng.poly_field(n, 2);
        CHECK(kf_eq(lie_derivative(x, w.scaled(f)),
                    w.scaled(x.apply(f)) + lie_derivative(x, w).scaled(f)));
    }
}

TEST_CASE("musical isomorphisms") {
    std::size_t n = 2;
    MetricTensor id(FieldMatrix::identity(n, n));
    VectorField d1 = VectorField::coordinate(n, 0);
    CHECK(kf_eq(flat(id, d1), KForm::dx(n, 0)));

    FieldMatrix gm(n, n, n);
    gm.at(0, 0) = sf("2", n);
    gm.at(1, 1) = sf("1", n);
    MetricTensor g2(gm);
    VectorField s = sharp(g2, KForm::dx(n, 0));
    VectorField expect(n);
    expect.comp(0) = sf("1/2", n);
    CHECK(vf_eq(s, expect));

    Rng rng(83);
    for (int k = 0; k < 5; ++k) {
        FieldMatrix m(n, n, n);
        m.at(0, 0) = sf("1", n) + rng.poly_field(n, 2) * rng.poly_field(n, 0);
        m.at(1, 1) = sf("1", n);
        m.at(0, 1) = m.at(1, 0) = ScalarField(n);
        if (m.det().is_zero()) continue;
        MetricTensor g(m);
        VectorField x = rng.vf(n);
        CHECK(vf_eq(sharp(g, flat(g, x)), x));
    }
}

TEST_CASE("two-form operator matrix matches i_X b") {
    Rng rng(97);
    std::size_t n = 3;
    for (int k = 0; k < 5; ++k) {
        KForm b = rng.form(n, 2);
        VectorField x = rng.vf(n);
        FieldMatrix m = two_form_operator(b);
        KForm via_matrix = one_form(m.mul_vec(x.comps()));
        CHECK(kf_eq(via_matrix, interior(x, b)));
        CHECK(kf_eq(operator_two_form(m), b));
        CHECK(m.is_antisymmetric());
    }
}

TEST_CASE("wedge against component evaluation") {
    std::size_t n = 3;
    KForm a = KForm::dx(n, 0);
    KForm b = KForm::dx(n, 1);
    KForm ab = wedge(a, b);
    std::array<VectorField, 2> args{VectorField::coordinate(n, 0), VectorField::coordinate(n, 1)};
    CHECK(sf_eq(ab.eval(args), sf("1")));
    std::array<VectorField, 2> swapped{VectorField::coordinate(n, 1), VectorField::coordinate(n, 0)};
    CHECK(sf_eq(ab.eval(swapped), sf("-1")));

    Rng rng(101);
    KForm u = rng.form(n, 1), v = rng.form(n, 2);
    CHECK(kf_eq(wedge(u, v), wedge(v, u)));  // (-1)^{1*2} = +1
    KForm w = rng.form(n, 1);
    CHECK(kf_eq(wedge(u, w), -wedge(w, u)));
}

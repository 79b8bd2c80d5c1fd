#include <doctest.h>

#include <random>

#include "gtb/connections.hpp"
#include "gtb/errors.hpp"
#include "gtb/genmetric.hpp"
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

    GenSection section(std::size_t n, unsigned maxdeg = 1) {
        VectorField x(n);
        KForm xi(n, 1);
        for (std::size_t i = 0; i < n; ++i) {
            x.comp(i) = poly_field(n, maxdeg);
            xi.set_comp({i}, poly_field(n, maxdeg));
        }
        return GenSection(std::move(x), std::move(xi));
    }

    AffineConnection symmetric_connection(std::size_t n, unsigned maxdeg = 1) {
        AffineConnection c(n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    ScalarField v = poly_field(n, maxdeg);
                    c.gamma(k, i, j) = v;
                    c.gamma(k, j, i) = v;
                }
        return c;
    }
};

AffineConnection torsionful_witness(std::size_t n) {
    AffineConnection c(n);
    c.gamma(2, 0, 1) = ScalarField::one(n);  // Gamma^3_{12} = 1, Gamma^3_{21} = 0
    return c;
}

}  // namespace

TEST_CASE("covariant derivative pinned values") {
    std::size_t n = 3;
    AffineConnection flat(n);
    VectorField d1 = VectorField::coordinate(n, 0);
    VectorField y(n);
    y.comp(1) = sf("x1");
    CHECK(vf_eq(cov_deriv(flat, d1, y), VectorField::coordinate(n, 1)));

    // duality: (nabla_X eta)(Y) + eta(nabla_X Y) = X(eta(Y))
    Rng rng(41);
    AffineConnection c = rng.symmetric_connection(n);
    c.gamma(0, 1, 2) = sf("x3");  // make it torsionful too
    for (int k = 0; k < 4; ++k) {
        VectorField x = rng.vf(n, 1), yy = rng.vf(n, 1);
        KForm eta(n, 1);
        for (std::size_t i = 0; i < n; ++i) eta.set_comp({i}, rng.poly_field(n, 1));
        std::array<VectorField, 1> yv{yy};
        ScalarField lhs = cov_deriv(c, x, eta).eval(yv) + eta.eval(std::array<VectorField, 1>{cov_deriv(c, x, yy)});
        CHECK(sf_eq(lhs, x.apply(eta.eval(yv))));
    }
}

TEST_CASE("torsion basics") {
    std::size_t n = 3;
    Rng rng(43);
    AffineConnection sym = rng.symmetric_connection(n);
    for (int k = 0; k < 3; ++k) {
        VectorField x = rng.vf(n, 1), y = rng.vf(n, 1);
        CHECK(torsion(sym, x, y).is_zero());
        // tensoriality T(fX, Y) = f T(X, Y)
        AffineConnection t = torsionful_witness(n);
        ScalarField f = rng.poly_field(n, 2);
        CHECK(vf_eq(torsion(t, x.scaled(f), y), torsion(t, x, y).scaled(f)));
    }
}

TEST_CASE("metric connection with prescribed torsion") {
    std::size_t n = 3;
    MetricTensor id3(FieldMatrix::identity(n, n));

    // (g = I, T = 0) -> all symbols vanish
    AffineConnection lc = metric_connection_with_torsion(id3, Tensor3(n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(lc.gamma(k, i, j).is_zero());

    // curved metric, zero torsion: nabla g = 0 exactly
    FieldMatrix gmat = FieldMatrix::identity(n, n);
    gmat.at(0, 0) = sf("1 + x2^2");
    MetricTensor g(gmat);
    AffineConnection c = metric_connection_with_torsion(g, Tensor3(n));
    CHECK(c.is_torsion_free());
    for (std::size_t i = 0; i < n; ++i)
        CHECK(cov_deriv(c, VectorField::coordinate(n, i), g).is_zero());

    // random antisymmetric-in-(1,2) torsion is reproduced exactly
    Rng rng(47);
    Tensor3 t3(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                ScalarField v = rng.poly_field(n, 1);
                t3.at(i, j, k) = v;
                t3.at(j, i, k) = -v;
            }
    AffineConnection ct = metric_connection_with_torsion(g, t3);
    for (std::size_t i = 0; i < n; ++i)
        CHECK(cov_deriv(ct, VectorField::coordinate(n, i), g).is_zero());
    CHECK(Tensor3::torsion_of(ct, g).equals(t3));

    // uniqueness: rebuilding from the achieved torsion gives identical symbols
    AffineConnection again = metric_connection_with_torsion(g, Tensor3::torsion_of(ct, g));
    CHECK(ct.equals(again));
}

TEST_CASE("induced generalized connection satisfies the defining axioms") {
    std::size_t n = 3;
    Rng rng(53);
    GeneralizedConnection gc(rng.symmetric_connection(n));
    for (int k = 0; k < 4; ++k) {
        GenSection u = rng.section(n), v = rng.section(n), w = rng.section(n);
        ScalarField f = rng.poly_field(n, 1);
        // Leibniz along pi
        GenSection lhs = gc.apply(u, v.scaled(f));
        GenSection rhs = v.scaled(u.vec().apply(f)) + gc.apply(u, v).scaled(f);
        CHECK(gs_eq(lhs, rhs));
        // pairing compatibility
        ScalarField pl = u.vec().apply(pairing(v, w));
        ScalarField pr = pairing(gc.apply(u, v), w) + pairing(v, gc.apply(u, w));
        CHECK(sf_eq(pl, pr));
    }
}

TEST_CASE("generalized torsions vanish for torsion-free bases") {
    std::size_t n = 3;
    Rng rng(59);
    AffineConnection base = rng.symmetric_connection(n);
    GeneralizedConnection gc(base);
    for (int k = 0; k < 4; ++k) {
        GenSection u = rng.section(n), v = rng.section(n), w = rng.section(n);
        CHECK(gen_torsion_courant(gc, u, v, w).is_zero());
        CHECK(gen_torsion_courant_dorfman_form(gc, u, v, w).is_zero());
        CHECK(gen_torsion_nabla(gc, base, u, v).is_zero());
        CHECK(torsion_equality_defect(gc, base, u, v, w).is_zero());
    }
}

TEST_CASE("torsionful base: witnesses and the equality criterion") {
    std::size_t n = 3;
    AffineConnection base = torsionful_witness(n);
    GeneralizedConnection gc(base);

    // T_{nabla-bracket}(d1, d2) = T(d1, d2) embedded as a vector
    GenSection d1 = GenSection::coordinate_vector(n, 0);
    GenSection d2 = GenSection::coordinate_vector(n, 1);
    GenSection got = gen_torsion_nabla(gc, base, d1, d2);
    VectorField t12 = torsion(base, VectorField::coordinate(n, 0), VectorField::coordinate(n, 1));
    CHECK(gs_eq(got, GenSection::from_vector(t12)));
    CHECK_FALSE(got.is_zero());

    // forms only: no vector part, no torsion
    GenSection f1 = GenSection::coordinate_form(n, 0);
    GenSection f2 = GenSection::coordinate_form(n, 1);
    CHECK(gen_torsion_nabla(gc, base, f1, f2).is_zero());

    // the Courant-form torsion has a nonzero coordinate witness
    bool found = false;
    auto frame = coordinate_frame(n);
    for (std::size_t a = 0; a < frame.size() && !found; ++a)
        for (std::size_t b = 0; b < frame.size() && !found; ++b)
            for (std::size_t c = 0; c < frame.size() && !found; ++c)
                if (!gen_torsion_courant(gc, frame[a], frame[b], frame[c]).is_zero()) found = true;
    CHECK(found);

    // equality criterion defect: zero section triple is trivially zero,
    // a generic triple is not
    GenSection z(n);
    CHECK(torsion_equality_defect(gc, base, z, z, z).is_zero());
    Rng rng(61);
    bool defect_found = false;
    for (int k = 0; k < 6 && !defect_found; ++k) {
        GenSection u = rng.section(n), v = rng.section(n), w = rng.section(n);
        if (!torsion_equality_defect(gc, base, u, v, w).is_zero()) defect_found = true;
    }
    CHECK(defect_found);
}

TEST_CASE("both generalized-torsion expressions agree on random data") {
    std::size_t n = 3;
    Rng rng(67);
    // A mixed (torsionful) base: the two displayed forms must still agree.
    AffineConnection base = rng.symmetric_connection(n);
    base.gamma(1, 0, 2) = sf("x1^2");
    GeneralizedConnection gc(base);
    for (int k = 0; k < 5; ++k) {
        GenSection u = rng.section(n), v = rng.section(n), w = rng.section(n);
        CHECK(sf_eq(gen_torsion_courant(gc, u, v, w),
                    gen_torsion_courant_dorfman_form(gc, u, v, w)));
    }
}

TEST_CASE("db cyclic identities (general formula and both lemma cases)") {
    std::size_t n = 3;
    MetricTensor id3(FieldMatrix::identity(n, n));

    auto check_general_formula = [&](const GeneralizedMetric& gm) {
        AffineConnection np = induced_connection_plus(gm);
        KForm db = ext_d(gm.b());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    VectorField x = VectorField::coordinate(n, i);
                    VectorField y = VectorField::coordinate(n, j);
                    VectorField z = VectorField::coordinate(n, k);
                    auto term = [&](const VectorField& a, const VectorField& bb,
                                    const VectorField& cc) {
                        std::array<VectorField, 2> bc{bb, cc};
                        return cov_deriv(np, a, gm.b()).eval(bc) -
                               gm.b().eval(std::array<VectorField, 2>{torsion(np, a, bb), cc});
                    };
                    ScalarField rhs = term(x, y, z) + term(y, z, x) + term(z, x, y);
                    std::array<VectorField, 3> xyz{x, y, z};
                    CHECK(sf_eq(db.eval(xyz), rhs));
                }
    };

    // db != 0 case exercises the general formula
    KForm b(n, 2);
    b.set_comp({0, 1}, sf("x3"));
    check_general_formula(GeneralizedMetric(id3, b));

    // db = 0: cyclic sum of (nabla+ b) vanishes
    KForm bc(n, 2);
    bc.set_comp({0, 1}, sf("x1"));  // d(x1 dx1^dx2) = 0
    GeneralizedMetric gmc(id3, bc);
    REQUIRE(ext_d(gmc.b()).is_zero());
    check_general_formula(gmc);
    AffineConnection np = induced_connection_plus(gmc);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                VectorField x = VectorField::coordinate(n, i);
                VectorField y = VectorField::coordinate(n, j);
                VectorField z = VectorField::coordinate(n, k);
                auto nb = [&](const VectorField& a, const VectorField& bb, const VectorField& cc) {
                    std::array<VectorField, 2> v2{bb, cc};
                    return cov_deriv(np, a, gmc.b()).eval(v2);
                };
                CHECK((nb(x, y, z) + nb(y, z, x) + nb(z, x, y)).is_zero());
            }

    // nabla+ b = 0 case: b constant => b(T(X,Y),Z) - b(T(Z,X),Y) - b(T(Y,Z),X) = db = 0
    KForm bk(n, 2);
    bk.set_comp({0, 1}, sf("2"));
    GeneralizedMetric gmk(id3, bk);
    AffineConnection npk = induced_connection_plus(gmk);
    bool parallel = true;
    for (std::size_t i = 0; i < n; ++i)
        parallel = parallel && cov_deriv(npk, VectorField::coordinate(n, i), gmk.b()).is_zero();
    REQUIRE(parallel);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                VectorField x = VectorField::coordinate(n, i);
                VectorField y = VectorField::coordinate(n, j);
                VectorField z = VectorField::coordinate(n, k);
                auto bt = [&](const VectorField& a, const VectorField& bb, const VectorField& cc) {
                    return gmk.b().eval(std::array<VectorField, 2>{torsion(npk, a, bb), cc});
                };
                ScalarField lhs = bt(x, y, z) - bt(z, x, y) - bt(y, z, x);
                std::array<VectorField, 3> xyz{x, y, z};
                CHECK(sf_eq(lhs, ext_d(gmk.b()).eval(xyz)));
            }
}

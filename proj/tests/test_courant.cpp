#include <doctest.h>

#include <random>

#include "gtb/courant.hpp"
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

    GenSection section(std::size_t n, unsigned maxdeg = 2) {
        VectorField x(n);
        KForm xi(n, 1);
        for (std::size_t i = 0; i < n; ++i) {
            x.comp(i) = poly_field(n, maxdeg);
            xi.set_comp({i}, poly_field(n, maxdeg));
        }
        return GenSection(std::move(x), std::move(xi));
    }

    KForm form(std::size_t n, std::size_t k, unsigned maxdeg = 2) {
        KForm w(n, k);
        std::vector<std::size_t> idx;
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (idx.size() == k) {
                w.set_comp(idx, poly_field(n, maxdeg));
                return;
            }
            for (std::size_t i = start; i < n; ++i) {
                idx.push_back(i);
                rec(i + 1);
                idx.pop_back();
            }
        };
        rec(0);
        return w;
    }
};

}  // namespace

TEST_CASE("pairing pinned values") {
    std::size_t n = 3;
    GenSection u = GenSection::coordinate_vector(n, 0) + GenSection::coordinate_form(n, 0);
    CHECK(sf_eq(pairing(u, u), sf("1")));
    CHECK(pairing(GenSection::coordinate_vector(n, 0), GenSection::coordinate_vector(n, 1)).is_zero());
    // <X, alpha> = 1/2 alpha(X) for a pure vector and a pure form
    VectorField x(n);
    x.comp(0) = sf("x2");
    x.comp(2) = sf("1");
    KForm a(n, 1);
    a.set_comp({0}, sf("x3"));
    a.set_comp({2}, sf("x1"));
    ScalarField ax = a.comp({0}) * x.comp(0) + a.comp({2}) * x.comp(2);
    CHECK(sf_eq(pairing(GenSection::from_vector(x), GenSection::from_form(a)),
                ax * sf("1/2")));
}

TEST_CASE("dorfman and courant pinned values") {
    std::size_t n = 3;
    // Dorfman: [d1, x1 dx2] = dx2
    GenSection u = GenSection::coordinate_vector(n, 0);
    GenSection v = GenSection::from_form(KForm::dx(n, 1).scaled(sf("x1")));
    CHECK(gs_eq(dorfman(u, v), GenSection::coordinate_form(n, 1)));

    // Courant: [d1 + dx2, d2 + dx1] = 0, cross-checked against the
    // skew-symmetrized Dorfman oracle.
    GenSection a = GenSection::coordinate_vector(n, 0) + GenSection::coordinate_form(n, 1);
    GenSection b = GenSection::coordinate_vector(n, 1) + GenSection::coordinate_form(n, 0);
    GenSection got = courant(a, b);
    CHECK(got.is_zero());
    GenSection oracle = (dorfman(a, b) - dorfman(b, a)).scaled(sf("1/2"));
    CHECK(gs_eq(got, oracle));
}

TEST_CASE("twisted bracket follows the torsion-pinned composition") {
    // The twist term is the literal composition i_X(i_Y(H)); with
    // H = dx1^dx2^dx3 that makes [d1,d2]_C^H = -dx3. The global sign is
    // pinned by the induced-connection torsion law T = -db - H (exercised
    // in test_genmetric and the acceptance suite).
    std::size_t n = 3;
    KForm h(n, 3);
    h.set_comp({0, 1, 2}, sf("1"));
    GenSection u = GenSection::coordinate_vector(n, 0);
    GenSection v = GenSection::coordinate_vector(n, 1);
    GenSection tw = bracket(BracketKind::courant_twisted(h), u, v);
    CHECK(gs_eq(tw, -GenSection::coordinate_form(n, 2)));
    // Oracle: the twist term on vectors is the interior-product composition.
    GenSection oracle = courant(u, v) + GenSection::from_form(interior(u.vec(), interior(v.vec(), h)));
    CHECK(gs_eq(tw, oracle));
}

TEST_CASE("dorfman satisfies the Jacobi rule, courant only up to exact terms") {
    Rng rng(11);
    std::size_t n = 3;
    for (int k = 0; k < 6; ++k) {
        GenSection u = rng.section(n), v = rng.section(n), w = rng.section(n);
        GenSection lhs = dorfman(u, dorfman(v, w));
        GenSection rhs = dorfman(dorfman(u, v), w) + dorfman(v, dorfman(u, w));
        CHECK(gs_eq(lhs, rhs));
        CHECK(jacobiator_defect(u, v, w).is_zero());
    }
    // Coordinate sections: trivially zero.
    GenSection e1 = GenSection::coordinate_vector(n, 0);
    GenSection e2 = GenSection::coordinate_form(n, 1);
    GenSection e3 = GenSection::coordinate_vector(n, 2);
    CHECK(jacobiator_defect(e1, e2, e3).is_zero());
}

TEST_CASE("courant is skew, dorfman is not") {
    std::size_t n = 3;
    Rng rng(13);
    for (int k = 0; k < 4; ++k) {
        GenSection u = rng.section(n), v = rng.section(n);
        CHECK((courant(u, v) + courant(v, u)).is_zero());
    }
    // The symmetrization is 2 d<u,v>, so a witness needs <u,v> nonconstant:
    // [d1, x1 dx1]_D + [x1 dx1, d1]_D = 2 d(x1/2) = dx1 != 0.
    GenSection u = GenSection::coordinate_vector(n, 0);
    GenSection v = GenSection::from_form(KForm::dx(n, 0).scaled(sf("x1")));
    GenSection sym = dorfman(u, v) + dorfman(v, u);
    CHECK_FALSE(sym.is_zero());
    for (int k = 0; k < 4; ++k) {
        GenSection a = rng.section(n), b = rng.section(n);
        CHECK(gs_eq(dorfman(a, b) + dorfman(b, a),
                    d_section(pairing(a, b), n).scaled(sf("2"))));
    }
}

TEST_CASE("b-transform basics and pairing orthogonality") {
    std::size_t n = 3;
    GenSection u = GenSection::coordinate_vector(n, 0);
    CHECK(gs_eq(b_transform(KForm(n, 2), u), u));

    KForm b(n, 2);
    b.set_comp({0, 1}, sf("1"));
    CHECK(gs_eq(b_transform(b, u),
                GenSection::coordinate_vector(n, 0) + GenSection::coordinate_form(n, 1)));

    Rng rng(17);
    for (int k = 0; k < 5; ++k) {
        KForm rb = rng.form(n, 2);
        GenSection x = rng.section(n), y = rng.section(n);
        CHECK(sf_eq(pairing(b_transform(rb, x), b_transform(rb, y)), pairing(x, y)));
        // e^b e^{-b} = id
        CHECK(gs_eq(b_transform(-rb, b_transform(rb, x)), x));
    }
}

TEST_CASE("closed b preserves courant, nonclosed b breaks it") {
    std::size_t n = 3;
    Rng rng(19);
    for (int k = 0; k < 4; ++k) {
        // Random closed 2-form: constants plus an exact piece.
        KForm b = ext_d(rng.form(n, 1));
        KForm bconst(n, 2);
        bconst.set_comp({0, 1}, ScalarField::constant(n, GaussRat(static_cast<long>(rng.eng() % 5) - 2)));
        b = b + bconst;
        REQUIRE(ext_d(b).is_zero());
        GenSection u = rng.section(n), v = rng.section(n);
        GenSection lhs = b_transform(b, courant(b_transform(-b, u), b_transform(-b, v)));
        CHECK(gs_eq(lhs, courant(u, v)));
    }

    KForm bad(n, 2);
    bad.set_comp({0, 1}, sf("x3"));
    GenSection u = GenSection::coordinate_vector(n, 0);
    GenSection v = GenSection::coordinate_vector(n, 1);
    GenSection defect =
        b_transform(bad, courant(b_transform(-bad, u), b_transform(-bad, v))) - courant(u, v);
    CHECK_FALSE(defect.is_zero());
}

TEST_CASE("twisted brackets preserve the pairing") {
    // Dorfman compatibility: pi(u)<v,w> = <[u,v]_D^H, w> + <v, [u,w]_D^H>.
    // Equivalently, with the skew bracket, [u,v]_C^H + d<u,v> = [u,v]_D^H.
    std::size_t n = 3;
    Rng rng(23);
    for (int k = 0; k < 4; ++k) {
        KForm h = rng.form(n, 3);
        BracketKind dk = BracketKind::dorfman_twisted(h);
        BracketKind ck = BracketKind::courant_twisted(h);
        GenSection u = rng.section(n, 1), v = rng.section(n, 1), w = rng.section(n, 1);
        ScalarField lhs = u.vec().apply(pairing(v, w));
        ScalarField rhs = pairing(bracket(dk, u, v), w) + pairing(v, bracket(dk, u, w));
        CHECK(sf_eq(lhs, rhs));
        GenSection skew_plus_exact = bracket(ck, u, v) + d_section(pairing(u, v), n);
        CHECK(gs_eq(skew_plus_exact, bracket(dk, u, v)));
    }
}

TEST_CASE("connection bracket: jacobi iff flat") {
    std::size_t n = 2;
    // Flat connection (zero symbols): Jacobi holds.
    AffineConnection flat(n);
    REQUIRE(flat.is_flat());
    BracketKind kind = BracketKind::connection(flat);
    Rng rng(29);
    auto jac = [&](const BracketKind& bk, const GenSection& u, const GenSection& v,
                   const GenSection& w) {
        return bracket(bk, u, bracket(bk, v, w)) - bracket(bk, bracket(bk, u, v), w) -
               bracket(bk, v, bracket(bk, u, w));
    };
    for (int k = 0; k < 4; ++k) {
        GenSection u = rng.section(n), v = rng.section(n), w = rng.section(n);
        CHECK(jac(kind, u, v, w).is_zero());
    }

    // Curved witness Gamma^1_{11} = x2.
    AffineConnection curved(n);
    curved.gamma(0, 0, 0) = sf("x2", n);
    REQUIRE_FALSE(curved.is_flat());
    BracketKind ckind = BracketKind::connection(curved);
    GenSection u = GenSection::coordinate_vector(n, 0);
    GenSection v = GenSection::coordinate_vector(n, 1);
    GenSection w = GenSection::coordinate_form(n, 0);
    CHECK_FALSE(jac(ckind, u, v, w).is_zero());
}

TEST_CASE("nijenhuis basics") {
    std::size_t n = 2;
    // Standard complex block J(X+xi) = (J0 X, -J0^T xi) with J0 = [[0,-1],[1,0]].
    FieldMatrix j0(n, n, n);
    j0.at(0, 1) = sf("-1", n);
    j0.at(1, 0) = sf("1", n);
    EndoE j(j0, FieldMatrix(n, n, n), FieldMatrix(n, n, n), -j0.transposed());

    GenSection d1 = GenSection::coordinate_vector(n, 0);
    GenSection d2 = GenSection::coordinate_vector(n, 1);
    CHECK(nijenhuis(BracketKind::courant(), j, d1, d2).is_zero());

    // N(u,u) = 0 for skew brackets.
    Rng rng(37);
    AffineConnection flatc(n);
    for (int k = 0; k < 3; ++k) {
        GenSection u = rng.section(n);
        CHECK(nijenhuis(BracketKind::courant(), j, u, u).is_zero());
        CHECK(nijenhuis(BracketKind::connection(flatc), j, u, u).is_zero());
    }
}

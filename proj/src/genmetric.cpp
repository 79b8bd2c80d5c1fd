#include "gtb/genmetric.hpp"

#include "gtb/errors.hpp"

namespace gtb {

namespace {

EndoE metric_blocks(const MetricTensor& g, const FieldMatrix& b_op) {
    // G = e^{-b} G_g e^{b} = [ -g^{-1} b   g^{-1}     ]
    //                        [ g - b g^{-1} b   b g^{-1} ]
    const FieldMatrix& ginv = g.inverse_entries();
    FieldMatrix h = -(ginv * b_op);
    FieldMatrix beta = g.entries() - b_op * ginv * b_op;
    FieldMatrix k = b_op * ginv;
    return EndoE(std::move(h), ginv, std::move(beta), std::move(k));
}

}  // namespace

GeneralizedMetric::GeneralizedMetric(MetricTensor g, KForm b)
    : g_(std::move(g)),
      b_(std::move(b)),
      b_op_(two_form_components(b_)),
      blocks_(metric_blocks(g_, b_op_)) {
    if (b_.dim() != g_.dim()) throw DimensionMismatch("metric and 2-form chart dimensions differ");
    std::size_t n = dim();
    EndoE id = EndoE::identity(n, n);
    if (!(blocks_ * blocks_).equals(id))
        throw Error("generalized metric blocks do not square to the identity");
    // Pairing orthogonality <Gu,Gv> = <u,v> on the coordinate frame.
    auto frame = coordinate_frame(n);
    for (std::size_t a = 0; a < frame.size(); ++a)
        for (std::size_t c = a; c < frame.size(); ++c) {
            ScalarField lhs = pairing(blocks_.apply(frame[a]), blocks_.apply(frame[c]));
            if (!sf_eq(lhs, pairing(frame[a], frame[c])))
                throw Error("generalized metric blocks are not pairing-orthogonal");
        }
}

GenSection extend_plus(const GeneralizedMetric& gm, const VectorField& x) {
    KForm gx = flat(gm.g(), x);
    KForm bx = one_form(gm.b_operator().mul_vec(x.comps()));
    return GenSection(x, gx + bx);
}

GenSection extend_minus(const GeneralizedMetric& gm, const VectorField& x) {
    KForm gx = flat(gm.g(), x);
    KForm bx = one_form(gm.b_operator().mul_vec(x.comps()));
    return GenSection(x, bx - gx);
}

GenSection project_plus(const GeneralizedMetric& gm, const GenSection& u) {
    GenSection gu = gm.blocks().apply(u);
    return (u + gu).scaled(ScalarField::constant(gm.dim(), GaussRat(1, 2)));
}

GenSection project_minus(const GeneralizedMetric& gm, const GenSection& u) {
    GenSection gu = gm.blocks().apply(u);
    return (u - gu).scaled(ScalarField::constant(gm.dim(), GaussRat(1, 2)));
}

namespace {

AffineConnection connection_from_bracket(const GeneralizedMetric& gm, const BracketKind& kind,
                                         bool plus) {
    std::size_t n = gm.dim();
    AffineConnection c(n);
    for (std::size_t i = 0; i < n; ++i) {
        VectorField di = VectorField::coordinate(n, i);
        GenSection left = plus ? extend_minus(gm, di) : extend_plus(gm, di);
        for (std::size_t j = 0; j < n; ++j) {
            VectorField dj = VectorField::coordinate(n, j);
            GenSection right = plus ? extend_plus(gm, dj) : extend_minus(gm, dj);
            GenSection br = bracket(kind, left, right);
            GenSection proj = plus ? project_plus(gm, br) : project_minus(gm, br);
            for (std::size_t k = 0; k < n; ++k) c.gamma(k, i, j) = proj.vec().comp(k);
        }
    }
    return c;
}

}  // namespace

AffineConnection induced_connection_plus(const GeneralizedMetric& gm) {
    return connection_from_bracket(gm, BracketKind::courant(), true);
}

AffineConnection induced_connection_minus(const GeneralizedMetric& gm) {
    return connection_from_bracket(gm, BracketKind::courant(), false);
}

AffineConnection induced_connection_plus_twisted(const GeneralizedMetric& gm, const KForm& h) {
    return connection_from_bracket(gm, BracketKind::courant_twisted(h), true);
}

std::vector<GenSection> coordinate_frame(std::size_t dim) {
    std::vector<GenSection> frame;
    frame.reserve(2 * dim);
    for (std::size_t i = 0; i < dim; ++i) frame.push_back(GenSection::coordinate_vector(dim, i));
    for (std::size_t i = 0; i < dim; ++i) frame.push_back(GenSection::coordinate_form(dim, i));
    return frame;
}

std::string coordinate_frame_name(std::size_t dim, std::size_t index) {
    if (index < dim) return "d" + std::to_string(index + 1);
    return "dx" + std::to_string(index - dim + 1);
}

CourantIntegReport courant_integrability_report(const GeneralizedMetric& gm) {
    std::size_t n = gm.dim();
    CourantIntegReport rep;
    const EndoE& G = gm.blocks();
    // The Nijenhuis operator is not tensorial under the Courant bracket, so
    // the frame that decides eigenbundle involutivity is the eigenframe
    // X_i^{+-} itself, not the raw coordinate sections: on V^{+-} pairs
    // N = 2([u,v] -+ G[u,v]) measures exactly the failure of [u,v]_C to
    // stay in the eigenbundle.
    std::vector<GenSection> frame;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        frame.push_back(extend_plus(gm, VectorField::coordinate(n, i)));
        names.push_back("d" + std::to_string(i + 1) + "+");
    }
    for (std::size_t i = 0; i < n; ++i) {
        frame.push_back(extend_minus(gm, VectorField::coordinate(n, i)));
        names.push_back("d" + std::to_string(i + 1) + "-");
    }
    BracketKind ckind = BracketKind::courant();
    BracketKind dkind = BracketKind::dorfman();

    rep.nijenhuis_vanishes = true;
    rep.dorfman_symmetry_ok = true;
    for (std::size_t a = 0; a < frame.size() && rep.nijenhuis_vanishes; ++a)
        for (std::size_t c = a + 1; c < frame.size(); ++c) {
            GenSection nab = nijenhuis(ckind, G, frame[a], frame[c]);
            if (!nab.is_zero()) {
                rep.nijenhuis_vanishes = false;
                rep.nijenhuis_witness = Witness{{names[a], names[c]}, nab.str()};
                break;
            }
        }
    // N_C(v,w) = 1/2 (N_D(v,w) - N_D(w,v)) regardless of integrability.
    for (std::size_t a = 0; a < frame.size() && rep.dorfman_symmetry_ok; ++a)
        for (std::size_t c = 0; c < frame.size(); ++c) {
            GenSection lhs = nijenhuis(ckind, G, frame[a], frame[c]);
            GenSection rhs = (nijenhuis(dkind, G, frame[a], frame[c]) -
                              nijenhuis(dkind, G, frame[c], frame[a]))
                                 .scaled(ScalarField::constant(n, GaussRat(1, 2)));
            if (!gs_eq(lhs, rhs)) {
                rep.dorfman_symmetry_ok = false;
                break;
            }
        }

    // Probes N(f u, v) for f = x_k: record whether linearity holds, and
    // verify the defect against its closed form in either case.
    rep.probes_tensorial = true;
    rep.probe_defect_formula_ok = true;
    for (std::size_t k = 0; k < n; ++k) {
        ScalarField f = ScalarField::variable(n, k);
        GenSection df = d_section(f, n);
        GenSection gdf = G.apply(df);
        for (std::size_t a = 0; a < frame.size(); ++a)
            for (std::size_t c = 0; c < frame.size(); ++c) {
                GenSection defect = nijenhuis(ckind, G, frame[a].scaled(f), frame[c]) -
                                    nijenhuis(ckind, G, frame[a], frame[c]).scaled(f);
                if (!defect.is_zero() && rep.probes_tensorial) {
                    rep.probes_tensorial = false;
                    rep.probe_witness =
                        Witness{{"x" + std::to_string(k + 1), names[a], names[c]}, defect.str()};
                }
                GenSection formula =
                    (df.scaled(pairing(frame[a], frame[c])) -
                     gdf.scaled(pairing(G.apply(frame[a]), frame[c])))
                        .scaled(ScalarField::constant(n, GaussRat(2)));
                if (!gs_eq(defect, formula)) rep.probe_defect_formula_ok = false;
            }
    }

    // Sufficient criterion and involutivity identity, with nabla = nabla^+.
    AffineConnection np = induced_connection_plus(gm);
    rep.beta_criterion_zero = true;
    rep.involutivity_identity_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        VectorField x = VectorField::coordinate(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            VectorField y = VectorField::coordinate(n, j);
            KForm dgx = ext_d(flat(gm.g(), x));
            KForm dgy = ext_d(flat(gm.g(), y));
            for (std::size_t l = 0; l < n; ++l) {
                VectorField z = VectorField::coordinate(n, l);
                ScalarField beta = gm.g().eval(cov_deriv(np, z, x), y) -
                                   gm.g().eval(cov_deriv(np, z, y), x);
                if (!beta.is_zero() && rep.beta_criterion_zero) {
                    rep.beta_criterion_zero = false;
                    rep.beta_witness = Witness{{"d" + std::to_string(i + 1),
                                                "d" + std::to_string(j + 1),
                                                "d" + std::to_string(l + 1)},
                                               beta.str()};
                }
                std::array<VectorField, 1> zz{z};
                ScalarField lhs = (interior(x, dgy) - interior(y, dgx)).eval(zz);
                ScalarField rhs = gm.g().eval(lie_bracket(x, y), z) + beta;
                if (!sf_eq(lhs, rhs)) rep.involutivity_identity_ok = false;
            }
        }
    }
    return rep;
}

NablaIntegReport nabla_integrability_check(const GeneralizedMetric& gm) {
    std::size_t n = gm.dim();
    NablaIntegReport rep;
    rep.db_zero = ext_d(gm.b()).is_zero();

    AffineConnection np = induced_connection_plus(gm);
    BracketKind kind = BracketKind::connection(np);
    const EndoE& G = gm.blocks();
    auto frame = coordinate_frame(n);

    bool n_zero = true;
    bool cf_zero = true;
    for (std::size_t a = 0; a < frame.size(); ++a)
        for (std::size_t c = a + 1; c < frame.size(); ++c) {
            GenSection nab = nijenhuis(kind, G, frame[a], frame[c]);
            if (!nab.is_zero() && !rep.nijenhuis_witness) {
                n_zero = false;
                rep.nijenhuis_witness =
                    Witness{{coordinate_frame_name(n, a), coordinate_frame_name(n, c)}, nab.str()};
            }
            // Closed form T(g^{-1} xi, Y) + T(X, g^{-1} eta).
            VectorField p = sharp(gm.g(), frame[a].form());
            VectorField q = sharp(gm.g(), frame[c].form());
            VectorField cf = torsion(np, p, frame[c].vec()) + torsion(np, frame[a].vec(), q);
            if (!cf.is_zero() && !rep.closed_form_witness) {
                cf_zero = false;
                rep.closed_form_witness =
                    Witness{{coordinate_frame_name(n, a), coordinate_frame_name(n, c)}, cf.str()};
            }
        }
    rep.integrable = n_zero;
    rep.closed_form_consistent = (n_zero == cf_zero);
    return rep;
}

ParallelReport parallel_G_check(const GeneralizedMetric& gm) {
    std::size_t n = gm.dim();
    ParallelReport rep;
    AffineConnection np = induced_connection_plus(gm);

    rep.b_parallel = true;
    for (std::size_t i = 0; i < n && rep.b_parallel; ++i) {
        KForm der = cov_deriv(np, VectorField::coordinate(n, i), gm.b());
        if (!der.is_zero()) rep.b_parallel = false;
    }

    rep.blocks_parallel = true;
    const EndoE& G = gm.blocks();
    for (std::size_t i = 0; i < n && rep.blocks_parallel; ++i) {
        VectorField di = VectorField::coordinate(n, i);
        bool zero = cov_deriv_matrix(np, di, G.h(), Variance::Upper, Variance::Lower).is_zero() &&
                    cov_deriv_matrix(np, di, G.alpha(), Variance::Upper, Variance::Upper).is_zero() &&
                    cov_deriv_matrix(np, di, G.beta(), Variance::Lower, Variance::Lower).is_zero() &&
                    cov_deriv_matrix(np, di, G.k(), Variance::Lower, Variance::Upper).is_zero();
        if (!zero) rep.blocks_parallel = false;
    }

    rep.equivalent = (rep.b_parallel == rep.blocks_parallel);
    return rep;
}

}  // namespace gtb

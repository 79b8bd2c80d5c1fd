#include "gtb/structures.hpp"

#include <array>

#include "gtb/errors.hpp"

namespace gtb {

namespace {

VectorField matrix_column(const FieldMatrix& m, std::size_t col) {
    std::size_t n = m.rows();
    VectorField x(n);
    for (std::size_t r = 0; r < n; ++r) x.comp(r) = m.at(r, col);
    return x;
}

FieldMatrix endo_parallel_defect(const AffineConnection& c, const EndoE& j, std::size_t dir) {
    std::size_t n = c.dim();
    VectorField d = VectorField::coordinate(n, dir);
    FieldMatrix total(4 * n, n, n);
    FieldMatrix dh = cov_deriv_matrix(c, d, j.h(), Variance::Upper, Variance::Lower);
    FieldMatrix da = cov_deriv_matrix(c, d, j.alpha(), Variance::Upper, Variance::Upper);
    FieldMatrix db = cov_deriv_matrix(c, d, j.beta(), Variance::Lower, Variance::Lower);
    FieldMatrix dk = cov_deriv_matrix(c, d, j.k(), Variance::Lower, Variance::Upper);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            total.at(r, s) = dh.at(r, s);
            total.at(n + r, s) = da.at(r, s);
            total.at(2 * n + r, s) = db.at(r, s);
            total.at(3 * n + r, s) = dk.at(r, s);
        }
    return total;
}

bool endo_parallel(const AffineConnection& c, const EndoE& j) {
    for (std::size_t i = 0; i < c.dim(); ++i)
        if (!endo_parallel_defect(c, j, i).is_zero()) return false;
    return true;
}

bool matrix_parallel(const AffineConnection& c, const FieldMatrix& m, Variance row, Variance col) {
    for (std::size_t i = 0; i < c.dim(); ++i)
        if (!cov_deriv_matrix(c, VectorField::coordinate(c.dim(), i), m, row, col).is_zero())
            return false;
    return true;
}

}  // namespace

EndoE pairing_adjoint(const EndoE& j) {
    return EndoE(j.k().transposed(), j.alpha().transposed(), j.beta().transposed(),
                 j.h().transposed());
}

FieldMatrix endo_matrix(const EndoE& j) {
    std::size_t n = j.dim();
    std::size_t nv = j.h().nvars();
    FieldMatrix m(2 * n, 2 * n, nv);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            m.at(r, c) = j.h().at(r, c);
            m.at(r, n + c) = j.alpha().at(r, c);
            m.at(n + r, c) = j.beta().at(r, c);
            m.at(n + r, n + c) = j.k().at(r, c);
        }
    return m;
}

EndoClassification classify_endo(const EndoE& j) {
    EndoClassification cls;
    std::size_t n = j.dim();
    std::size_t nv = j.h().nvars();
    EndoE sq = j * j;
    EndoE id = EndoE::identity(n, nv);
    EndoE adj = pairing_adjoint(j);

    bool sq_minus = sq.equals(-id);
    bool sq_plus = sq.equals(id);

    cls.weak_gacs = sq_minus;
    cls.strong_gacs = sq_minus && adj.equals(-j);
    cls.product = sq_plus && adj.equals(j);
    if (cls.product) {
        FieldMatrix m = endo_matrix(j);
        FieldMatrix id2n = FieldMatrix::identity(2 * n, nv);
        std::size_t plus_rank = (m - id2n).kernel().size();
        std::size_t minus_rank = (m + id2n).kernel().size();
        cls.paracomplex = plus_rank == n && minus_rank == n;
    }

    if (cls.strong_gacs) cls.primary = EndoClass::StrongGacs;
    else if (cls.weak_gacs) cls.primary = EndoClass::WeakGacs;
    else if (cls.paracomplex) cls.primary = EndoClass::ParaComplex;
    else if (cls.product) cls.primary = EndoClass::Product;
    else cls.primary = EndoClass::NotGacs;
    return cls;
}

GenSection para_extend_plus(const EndoE& p, const VectorField& x) {
    FieldMatrix ainv = p.alpha().inverse();
    std::vector<ScalarField> form = ainv.mul_vec(x.comps());
    std::vector<ScalarField> hx = (ainv * p.h()).mul_vec(x.comps());
    for (std::size_t i = 0; i < form.size(); ++i) form[i] -= hx[i];
    return GenSection(x, one_form(std::move(form)));
}

GenSection para_extend_minus(const EndoE& p, const VectorField& x) {
    FieldMatrix ainv = p.alpha().inverse();
    std::vector<ScalarField> form = ainv.mul_vec(x.comps());
    std::vector<ScalarField> hx = (ainv * p.h()).mul_vec(x.comps());
    for (std::size_t i = 0; i < form.size(); ++i) form[i] = -form[i] - hx[i];
    return GenSection(x, one_form(std::move(form)));
}

AffineConnection para_connection(const EndoE& p) {
    std::size_t n = p.dim();
    AffineConnection c(n);
    ScalarField half = ScalarField::constant(p.h().nvars(), GaussRat(1, 2));
    for (std::size_t i = 0; i < n; ++i) {
        GenSection left = para_extend_minus(p, VectorField::coordinate(n, i));
        for (std::size_t j = 0; j < n; ++j) {
            GenSection right = para_extend_plus(p, VectorField::coordinate(n, j));
            GenSection br = courant(left, right);
            GenSection proj = (br + p.apply(br)).scaled(half);
            for (std::size_t k = 0; k < n; ++k) c.gamma(k, i, j) = proj.vec().comp(k);
        }
    }
    return c;
}

KForm para_two_form(const EndoE& p) {
    FieldMatrix rho = p.alpha().inverse() * p.h();
    if (!rho.is_antisymmetric())
        throw NotCompatible("alpha^{-1} H is not antisymmetric; not an orthogonal product structure");
    return operator_two_form(rho);
}

Tensor3 para_torsion_formula(const EndoE& p) {
    std::size_t n = p.dim();
    KForm drho = ext_d(para_two_form(p));
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            KForm w = interior(VectorField::coordinate(n, i),
                               interior(VectorField::coordinate(n, j), drho));
            std::vector<ScalarField> v = p.alpha().mul_vec(one_form_comps(w));
            for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = v[k];
        }
    return t;
}

ParaIntegReport para_integrability(const EndoE& p) {
    std::size_t n = p.dim();
    ParaIntegReport rep;
    AffineConnection np = para_connection(p);

    rep.alpha_parallel = matrix_parallel(np, p.alpha(), Variance::Upper, Variance::Upper);
    rep.h_parallel = matrix_parallel(np, p.h(), Variance::Upper, Variance::Lower);
    rep.drho_zero = ext_d(para_two_form(p)).is_zero();

    GeneralizedConnection gc(np);
    auto frame = coordinate_frame(n);
    rep.pairing_hypothesis = true;
    for (std::size_t a = 0; a < frame.size() && rep.pairing_hypothesis; ++a)
        for (std::size_t b = 0; b < frame.size() && rep.pairing_hypothesis; ++b)
            for (std::size_t c = 0; c < frame.size(); ++c) {
                ScalarField lhs = pairing(gc.apply(frame[a], frame[b]), frame[c]);
                ScalarField rhs = pairing(gc.apply(p.apply(frame[a]), frame[b]), p.apply(frame[c]));
                if (!sf_eq(lhs, rhs)) {
                    rep.pairing_hypothesis = false;
                    break;
                }
            }

    BracketKind nk = BracketKind::connection(np);
    rep.nabla_nijenhuis_zero = true;
    for (std::size_t a = 0; a < frame.size() && rep.nabla_nijenhuis_zero; ++a)
        for (std::size_t c = a + 1; c < frame.size(); ++c) {
            GenSection nab = nijenhuis(nk, p, frame[a], frame[c]);
            if (!nab.is_zero()) {
                rep.nabla_nijenhuis_zero = false;
                rep.nabla_witness = Witness{
                    {coordinate_frame_name(n, a), coordinate_frame_name(n, c)}, nab.str()};
                break;
            }
        }

    // Courant-bracket Nijenhuis on the para eigenframe (see genmetric: the
    // operator is not tensorial, the eigenframe is the faithful frame).
    std::vector<GenSection> eigen;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        eigen.push_back(para_extend_plus(p, VectorField::coordinate(n, i)));
        names.push_back("d" + std::to_string(i + 1) + "+");
    }
    for (std::size_t i = 0; i < n; ++i) {
        eigen.push_back(para_extend_minus(p, VectorField::coordinate(n, i)));
        names.push_back("d" + std::to_string(i + 1) + "-");
    }
    BracketKind ck = BracketKind::courant();
    rep.courant_nijenhuis_zero = true;
    for (std::size_t a = 0; a < eigen.size() && rep.courant_nijenhuis_zero; ++a)
        for (std::size_t c = a + 1; c < eigen.size(); ++c) {
            GenSection nab = nijenhuis(ck, p, eigen[a], eigen[c]);
            if (!nab.is_zero()) {
                rep.courant_nijenhuis_zero = false;
                rep.courant_witness = Witness{{names[a], names[c]}, nab.str()};
                break;
            }
        }
    return rep;
}

std::optional<std::pair<std::size_t, std::size_t>> metric_signature(const MetricTensor& g) {
    std::size_t n = g.dim();
    std::size_t nv = g.entries().nvars();
    FieldMatrix m = g.entries();
    for (std::size_t k = 0; k < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t pivot = n;
            for (std::size_t l = k + 1; l < n && pivot == n; ++l)
                if (!m.at(l, l).is_zero()) pivot = l;
            if (pivot < n) {
                // symmetric swap of rows/columns k and pivot
                for (std::size_t t = 0; t < n; ++t) std::swap(m.at(k, t), m.at(pivot, t));
                for (std::size_t t = 0; t < n; ++t) std::swap(m.at(t, k), m.at(t, pivot));
            } else {
                std::size_t l = n;
                for (std::size_t t = k + 1; t < n && l == n; ++t)
                    if (!m.at(k, t).is_zero()) l = t;
                if (l == n) continue;  // row is zero in the remaining block
                for (std::size_t t = 0; t < n; ++t) m.at(k, t) += m.at(l, t);
                for (std::size_t t = 0; t < n; ++t) m.at(t, k) += m.at(t, l);
            }
        }
        ScalarField piv = m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            ScalarField f = m.at(i, k) / piv;
            for (std::size_t t = 0; t < n; ++t) m.at(i, t) -= f * m.at(k, t);
            for (std::size_t t = 0; t < n; ++t) m.at(t, i) -= f * m.at(t, k);
        }
    }
    std::size_t pos = 0, neg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        ScalarField d = m.at(k, k);
        if (d.is_zero()) return std::nullopt;  // cannot happen for nondegenerate g
        if (!d.is_constant()) return std::nullopt;
        GaussRat v = d.constant_value();
        if (!v.is_real()) return std::nullopt;
        if (v.re() > 0) ++pos;
        else ++neg;
    }
    (void)nv;
    return std::make_pair(pos, neg);
}

std::vector<GenSection> build_vi(const GeneralizedMetric& gm,
                                 const std::vector<VectorField>& frame) {
    std::size_t n = gm.dim();
    std::size_t k = frame.size();
    if (k == 0 || k > n) throw RankMismatch("isotropic frame must have between 1 and dim fields");
    for (const auto& x : frame)
        if (x.dim() != n) throw DimensionMismatch("isotropic frame chart dimension");

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
            if (!gm.g().eval(frame[i], frame[j]).is_zero())
                throw FrameNotIsotropic("g(X_" + std::to_string(i + 1) + ", X_" +
                                        std::to_string(j + 1) + ") is not identically zero");

    FieldMatrix rows(k, n, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) rows.at(i, j) = frame[i].comp(j);
    if (rows.rank() != k) throw RankMismatch("isotropic frame fields are dependent at the generic point");

    if (auto sig = metric_signature(gm.g())) {
        std::size_t p = std::min(sig->first, sig->second);
        if (p == 0) throw FrameNotIsotropic("definite metrics admit no isotropic directions");
        if (k != p)
            throw RankMismatch("frame rank " + std::to_string(k) +
                               " must equal the maximal isotropic dimension " + std::to_string(p));
    }

    std::vector<GenSection> basis;
    for (const auto& x : frame) basis.push_back(extend_plus(gm, x));
    for (auto& covec : rows.kernel()) basis.push_back(GenSection::from_form(one_form(std::move(covec))));

    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (!pairing(basis[i], basis[j]).is_zero())
                throw FrameNotIsotropic("constructed V_i basis is not pairing-isotropic");

    FieldMatrix cols(2 * n, basis.size(), n);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t r = 0; r < n; ++r) {
            cols.at(r, j) = basis[j].vec().comp(r);
            cols.at(n + r, j) = basis[j].form().comp({r});
        }
    }
    if (cols.rank() != n) throw RankMismatch("V_i basis does not have full generic rank");
    return basis;
}

namespace {

// Generic-point membership of a section in the span of a section family.
bool in_span(const std::vector<GenSection>& family, const GenSection& s) {
    std::size_t n = s.dim();
    FieldMatrix m(2 * n, family.size() + 1, n);
    for (std::size_t j = 0; j < family.size(); ++j)
        for (std::size_t r = 0; r < n; ++r) {
            m.at(r, j) = family[j].vec().comp(r);
            m.at(n + r, j) = family[j].form().comp({r});
        }
    for (std::size_t r = 0; r < n; ++r) {
        m.at(r, family.size()) = s.vec().comp(r);
        m.at(n + r, family.size()) = s.form().comp({r});
    }
    FieldMatrix base(2 * n, family.size(), n);
    for (std::size_t j = 0; j < family.size(); ++j)
        for (std::size_t r = 0; r < n; ++r) {
            base.at(r, j) = family[j].vec().comp(r);
            base.at(n + r, j) = family[j].form().comp({r});
        }
    return m.rank() == base.rank();
}

bool vf_in_span(const std::vector<VectorField>& family, const VectorField& x) {
    std::size_t n = x.dim();
    FieldMatrix base(n, family.size(), n);
    FieldMatrix aug(n, family.size() + 1, n);
    for (std::size_t j = 0; j < family.size(); ++j)
        for (std::size_t r = 0; r < n; ++r) {
            base.at(r, j) = family[j].comp(r);
            aug.at(r, j) = family[j].comp(r);
        }
    for (std::size_t r = 0; r < n; ++r) aug.at(r, family.size()) = x.comp(r);
    return aug.rank() == base.rank();
}

}  // namespace

JgIntegReport jg_integrability(const GeneralizedMetric& gm,
                               const std::vector<VectorField>& frame) {
    JgIntegReport rep;
    std::vector<GenSection> vi = build_vi(gm, frame);

    rep.frame_involutive = true;
    for (std::size_t i = 0; i < frame.size() && rep.frame_involutive; ++i)
        for (std::size_t j = i + 1; j < frame.size(); ++j) {
            VectorField br = lie_bracket(frame[i], frame[j]);
            if (!vf_in_span(frame, br)) {
                rep.frame_involutive = false;
                rep.involutivity_witness =
                    Witness{{"X" + std::to_string(i + 1), "X" + std::to_string(j + 1)}, br.str()};
                break;
            }
        }

    rep.metric_integrable = courant_integrability_report(gm).nijenhuis_vanishes;

    rep.vi_involutive = true;
    for (std::size_t i = 0; i < vi.size() && rep.vi_involutive; ++i)
        for (std::size_t j = i + 1; j < vi.size(); ++j) {
            GenSection br = courant(vi[i], vi[j]);
            if (br.is_zero()) continue;
            if (!in_span(vi, br)) {
                rep.vi_involutive = false;
                rep.vi_witness = Witness{
                    {"s" + std::to_string(i + 1), "s" + std::to_string(j + 1)}, br.str()};
                break;
            }
        }
    return rep;
}

WeakHermitian::WeakHermitian(MetricTensor g, FieldMatrix a)
    : g_(std::move(g)), a_(std::move(a)), q_(a_.rows(), a_.cols(), a_.nvars()) {
    std::size_t n = g_.dim();
    if (a_.rows() != n || a_.cols() != n) throw DimensionMismatch("endomorphism A size");
    if (a_.det().is_zero()) throw DegenerateB();
    FieldMatrix ga = g_.entries() * a_;
    if (!ga.is_antisymmetric()) throw NotHermitianInput("A is not g-skew-symmetric");
    q_ = -(a_ * a_);
    FieldMatrix gq = g_.entries() * q_;
    if (!gq.is_symmetric()) throw NotHermitianInput("Q = -A^2 is not g-self-adjoint");
}

WeakHermitian weak_from_metric(const GeneralizedMetric& gm) {
    std::size_t n = gm.dim();
    if (n % 2 == 1) throw DimensionOdd();
    // A = g^{-1} b with the interior-product orientation, so that
    // F(X,Y) = g(AX,Y) = b(X,Y) exactly.
    FieldMatrix bop = two_form_operator(gm.b());
    if (bop.det().is_zero()) throw DegenerateB();
    return WeakHermitian(gm.g(), gm.g().inverse_entries() * bop);
}

TorsionCondReport torsion_conditions(const GeneralizedMetric& gm, const WeakHermitian& wh,
                                     const AffineConnection& conn, Lemma7Reading reading) {
    std::size_t n = gm.dim();
    TorsionCondReport rep;
    const FieldMatrix& a = wh.a();
    const FieldMatrix& q = wh.q();

    rep.a_condition = true;
    rep.q_condition = true;
    for (std::size_t i = 0; i < n; ++i) {
        VectorField di = VectorField::coordinate(n, i);
        VectorField adi = matrix_column(a, i);
        VectorField qdi = matrix_column(q, i);
        for (std::size_t j = 0; j < n; ++j) {
            VectorField dj = VectorField::coordinate(n, j);
            VectorField adj = matrix_column(a, j);
            VectorField qdj = matrix_column(q, j);
            VectorField adef = torsion(conn, adi, dj) - torsion(conn, di, adj);
            if (!adef.is_zero() && rep.a_condition) {
                rep.a_condition = false;
                rep.a_witness = Witness{{"d" + std::to_string(i + 1), "d" + std::to_string(j + 1)},
                                        adef.str()};
            }
            VectorField tq = torsion(conn, qdi, dj);
            VectorField qdef1 = tq - torsion(conn, di, qdj);
            VectorField qt = VectorField(q.mul_vec(torsion(conn, di, dj).comps()));
            VectorField qdef2 = tq - qt;
            if ((!qdef1.is_zero() || !qdef2.is_zero()) && rep.q_condition) {
                rep.q_condition = false;
                rep.q_witness = Witness{{"d" + std::to_string(i + 1), "d" + std::to_string(j + 1)},
                                        (!qdef1.is_zero() ? qdef1 : qdef2).str()};
            }
        }
    }

    rep.b_parallel = true;
    for (std::size_t i = 0; i < n && rep.b_parallel; ++i)
        if (!cov_deriv(conn, VectorField::coordinate(n, i), gm.b()).is_zero()) rep.b_parallel = false;

    KForm db = ext_d(gm.b());
    auto db2 = [&](const VectorField& u, const VectorField& v) {
        // 1-form W -> db(U, V, W)
        return interior(v, interior(u, db));
    };
    auto bvv = [&](const VectorField& u, const VectorField& v) {
        std::array<VectorField, 2> uv{u, v};
        return gm.b().eval(uv);
    };
    auto g_sharp = [&](const KForm& w) { return sharp(gm.g(), w); };

    rep.b_identity = true;
    for (std::size_t i = 0; i < n && rep.b_identity; ++i)
        for (std::size_t j = 0; j < n && rep.b_identity; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                VectorField x = VectorField::coordinate(n, i);
                VectorField y = VectorField::coordinate(n, j);
                VectorField z = VectorField::coordinate(n, k);
                VectorField ax = matrix_column(a, i);
                VectorField ay = matrix_column(a, j);
                KForm first = (reading == Lemma7Reading::Primary)
                                  ? db2(x, ay) - db2(ax, y)
                                  : db2(ax, y) - db2(x, ay);
                ScalarField total = bvv(g_sharp(first), z) + bvv(g_sharp(db2(ay, z)), x) -
                                    bvv(g_sharp(db2(y, z)), ax) - bvv(g_sharp(db2(z, ax)), y) +
                                    bvv(g_sharp(db2(z, x)), ay);
                if (!total.is_zero()) {
                    rep.b_identity = false;
                    break;
                }
            }

    rep.q_hypothesis = true;
    for (std::size_t i = 0; i < n && rep.q_hypothesis; ++i)
        for (std::size_t j = 0; j < n && rep.q_hypothesis; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                VectorField x = VectorField::coordinate(n, i);
                VectorField y = VectorField::coordinate(n, j);
                VectorField z = VectorField::coordinate(n, k);
                std::array<VectorField, 3> lhs_args{matrix_column(q, i), y, z};
                std::array<VectorField, 3> rhs_args{x, y, VectorField(q.mul_vec(z.comps()))};
                if (!sf_eq(db.eval(lhs_args), db.eval(rhs_args))) {
                    rep.q_hypothesis = false;
                    break;
                }
            }
    return rep;
}

Tensor3 nearly_kahler_defect(const WeakHermitian& wh, const AffineConnection& lc) {
    std::size_t n = wh.dim();
    Tensor3 s(n);
    std::vector<FieldMatrix> da;
    da.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        da.push_back(cov_deriv_matrix(lc, VectorField::coordinate(n, i), wh.a(), Variance::Upper,
                                      Variance::Lower));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) s.at(i, j, k) = da[i].at(k, j) + da[j].at(k, i);
    return s;
}

bool weak_kahler(const WeakHermitian& wh, const AffineConnection& lc) {
    return matrix_parallel(lc, wh.a(), Variance::Upper, Variance::Lower);
}

HermitianReport hermitian_suite(const GeneralizedMetric& gm, const EndoE& j) {
    std::size_t n = gm.dim();
    HermitianReport rep{.j_plus = FieldMatrix(n, n, n), .j_minus = FieldMatrix(n, n, n)};
    rep.strong = classify_endo(j).strong_gacs;

    const EndoE& G = gm.blocks();
    EndoE comm = G * j - j * G;
    if (!comm.is_zero()) {
        const char* block = !comm.h().is_zero()       ? "H"
                            : !comm.alpha().is_zero() ? "alpha"
                            : !comm.beta().is_zero()  ? "beta"
                                                      : "K";
        throw NotCompatible(std::string("G and J do not commute; witness block ") + block);
    }
    rep.commutes = true;

    for (std::size_t col = 0; col < n; ++col) {
        VectorField dc = VectorField::coordinate(n, col);
        GenSection jp = j.apply(extend_plus(gm, dc));
        GenSection jm = j.apply(extend_minus(gm, dc));
        for (std::size_t r = 0; r < n; ++r) {
            rep.j_plus.at(r, col) = jp.vec().comp(r);
            rep.j_minus.at(r, col) = jm.vec().comp(r);
        }
    }

    FieldMatrix minus_id = -FieldMatrix::identity(n, n);
    rep.j_pm_square = (rep.j_plus * rep.j_plus).equals(minus_id) &&
                      (rep.j_minus * rep.j_minus).equals(minus_id);

    rep.extension_identity = true;
    for (std::size_t col = 0; col < n && rep.extension_identity; ++col) {
        VectorField dc = VectorField::coordinate(n, col);
        GenSection lhs_p = j.apply(extend_plus(gm, dc));
        GenSection rhs_p = extend_plus(gm, matrix_column(rep.j_plus, col));
        GenSection lhs_m = j.apply(extend_minus(gm, dc));
        GenSection rhs_m = extend_minus(gm, matrix_column(rep.j_minus, col));
        if (!gs_eq(lhs_p, rhs_p) || !gs_eq(lhs_m, rhs_m)) rep.extension_identity = false;
    }

    AffineConnection np = induced_connection_plus(gm);
    rep.b_parallel = true;
    for (std::size_t i = 0; i < n && rep.b_parallel; ++i)
        if (!cov_deriv(np, VectorField::coordinate(n, i), gm.b()).is_zero()) rep.b_parallel = false;

    rep.j_blocks_parallel = endo_parallel(np, j);
    rep.j_pm_parallel = matrix_parallel(np, rep.j_plus, Variance::Upper, Variance::Lower) &&
                        matrix_parallel(np, rep.j_minus, Variance::Upper, Variance::Lower);
    rep.parallel_equivalence = !rep.b_parallel || (rep.j_blocks_parallel == rep.j_pm_parallel);
    return rep;
}

std::pair<EndoE, EndoE> gualtieri_pair(const MetricTensor& g, const KForm& b,
                                       const FieldMatrix& j_plus, const FieldMatrix& j_minus) {
    std::size_t n = g.dim();
    std::size_t nv = g.entries().nvars();
    FieldMatrix minus_id = -FieldMatrix::identity(n, nv);
    if (!(j_plus * j_plus).equals(minus_id) || !(j_minus * j_minus).equals(minus_id))
        throw NotHermitianInput("J_+- must square to -Id");
    if (!(j_plus.transposed() * g.entries() * j_plus).equals(g.entries()) ||
        !(j_minus.transposed() * g.entries() * j_minus).equals(g.entries()))
        throw NotHermitianInput("g is not Hermitian for J_+-");

    // omega_+- = g J_+- as maps TM -> T*M; inverses are -J_+- g^{-1}.
    FieldMatrix wp = g.entries() * j_plus;
    FieldMatrix wm = g.entries() * j_minus;
    FieldMatrix wp_inv = -(j_plus * g.inverse_entries());
    FieldMatrix wm_inv = -(j_minus * g.inverse_entries());

    ScalarField half = ScalarField::constant(nv, GaussRat(1, 2));
    EndoE m1(((j_plus + j_minus)).scaled(half), (-(wp_inv - wm_inv)).scaled(half),
             (wp - wm).scaled(half), (-(j_plus.transposed() + j_minus.transposed())).scaled(half));
    EndoE m2(((j_plus - j_minus)).scaled(half), (-(wp_inv + wm_inv)).scaled(half),
             (wp + wm).scaled(half), (-(j_plus.transposed() - j_minus.transposed())).scaled(half));

    FieldMatrix bc = two_form_components(b);
    FieldMatrix zero(n, n, nv);
    FieldMatrix id = FieldMatrix::identity(n, nv);
    EndoE eb(id, zero, bc, id);
    EndoE ebneg(id, zero, -bc, id);
    return {eb * m1 * ebneg, eb * m2 * ebneg};
}

EndoE kahler_conjugate_endo(const KForm& b, const EndoE& j) {
    std::size_t n = j.dim();
    std::size_t nv = j.h().nvars();
    FieldMatrix bc = two_form_components(b);
    FieldMatrix zero(n, n, nv);
    FieldMatrix id = FieldMatrix::identity(n, nv);
    EndoE eb(id, zero, bc, id);
    EndoE ebneg(id, zero, -bc, id);
    return eb * j * ebneg;
}

namespace {

bool frame_nijenhuis_zero(const BracketKind& kind, const EndoE& j, std::size_t n,
                          std::optional<Witness>* witness) {
    auto frame = coordinate_frame(n);
    for (std::size_t a = 0; a < frame.size(); ++a)
        for (std::size_t c = a + 1; c < frame.size(); ++c) {
            GenSection nab = nijenhuis(kind, j, frame[a], frame[c]);
            if (!nab.is_zero()) {
                if (witness)
                    *witness = Witness{{coordinate_frame_name(n, a), coordinate_frame_name(n, c)},
                                       nab.str()};
                return false;
            }
        }
    return true;
}

}  // namespace

KahlerReport kahler_report(const GeneralizedMetric& gm, const EndoE& j) {
    std::size_t n = gm.dim();
    KahlerReport rep;
    HermitianReport herm = hermitian_suite(gm, j);

    rep.db_zero = ext_d(gm.b()).is_zero();
    rep.b_parallel = herm.b_parallel;
    rep.j_pm_parallel = herm.j_pm_parallel;

    const EndoE& G = gm.blocks();
    EndoE gj = G * j;
    BracketKind ck = BracketKind::courant();
    AffineConnection np = induced_connection_plus(gm);
    BracketKind nk = BracketKind::connection(np);

    // J and GJ are strong structures, so their Courant Nijenhuis operators
    // are tensorial and the coordinate frame is decisive.
    rep.courant_nijenhuis_j_zero = frame_nijenhuis_zero(ck, j, n, &rep.courant_j_witness);
    rep.courant_nijenhuis_gj_zero = frame_nijenhuis_zero(ck, gj, n, nullptr);
    rep.nabla_nijenhuis_g_zero = frame_nijenhuis_zero(nk, G, n, nullptr);
    rep.nabla_nijenhuis_j_zero = frame_nijenhuis_zero(nk, j, n, &rep.nabla_j_witness);
    rep.nabla_nijenhuis_gj_zero = frame_nijenhuis_zero(nk, gj, n, nullptr);

    rep.parallel_g = endo_parallel(np, G);
    rep.parallel_j = herm.j_blocks_parallel;
    rep.parallel_gj = endo_parallel(np, gj);
    return rep;
}

}  // namespace gtb

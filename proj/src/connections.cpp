#include "gtb/connections.hpp"

#include "gtb/errors.hpp"

namespace gtb {

bool AffineConnection::equals(const AffineConnection& o) const {
    if (dim_ != o.dim_) return false;
    for (std::size_t i = 0; i < gamma_.size(); ++i)
        if (!sf_eq(gamma_[i], o.gamma_[i])) return false;
    return true;
}

bool AffineConnection::is_torsion_free() const {
    for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                if (!sf_eq(gamma(k, i, j), gamma(k, j, i))) return false;
    return true;
}

bool AffineConnection::is_flat() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        VectorField di = VectorField::coordinate(dim_, i);
        for (std::size_t j = i + 1; j < dim_; ++j) {
            VectorField dj = VectorField::coordinate(dim_, j);
            for (std::size_t k = 0; k < dim_; ++k) {
                VectorField dk = VectorField::coordinate(dim_, k);
                VectorField r = cov_deriv(*this, di, cov_deriv(*this, dj, dk)) -
                                cov_deriv(*this, dj, cov_deriv(*this, di, dk));
                if (!r.is_zero()) return false;
            }
        }
    }
    return true;
}

VectorField cov_deriv(const AffineConnection& c, const VectorField& x, const VectorField& y) {
    std::size_t n = c.dim();
    if (x.dim() != n || y.dim() != n) throw DimensionMismatch("covariant derivative chart dimension");
    VectorField r(n);
    for (std::size_t k = 0; k < n; ++k) {
        ScalarField v = x.apply(y.comp(k));
        for (std::size_t i = 0; i < n; ++i) {
            if (x.comp(i).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y.comp(j).is_zero() || c.gamma(k, i, j).is_zero()) continue;
                v += c.gamma(k, i, j) * x.comp(i) * y.comp(j);
            }
        }
        r.comp(k) = std::move(v);
    }
    return r;
}

KForm cov_deriv(const AffineConnection& c, const VectorField& x, const KForm& w) {
    std::size_t n = c.dim();
    if (w.dim() != n) throw DimensionMismatch("covariant derivative chart dimension");
    std::size_t k = w.degree();
    KForm r(n, k);
    if (k == 0) {
        r.set_comp({}, x.apply(w.comp({})));
        return r;
    }
    // (nabla_X w)_{I} = X(w_I) - sum_{slot a} Gamma^m_{i I_a} X^i w_{I with m at a}
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            tuples.push_back(idx);
            return;
        }
        for (std::size_t t = start; t < n; ++t) {
            idx[pos] = t;
            rec(pos + 1, t + 1);
        }
    };
    rec(0, 0);
    for (const auto& I : tuples) {
        ScalarField v = x.apply(w.comp(I));
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t i = 0; i < n; ++i) {
                if (x.comp(i).is_zero()) continue;
                for (std::size_t m = 0; m < n; ++m) {
                    const ScalarField& gam = c.gamma(m, i, I[a]);
                    if (gam.is_zero()) continue;
                    std::vector<std::size_t> J = I;
                    J[a] = m;
                    ScalarField wj = w.comp_signed(J);
                    if (wj.is_zero()) continue;
                    v -= gam * x.comp(i) * wj;
                }
            }
        }
        if (!v.is_zero()) r.set_comp(I, std::move(v));
    }
    return r;
}

FieldMatrix cov_deriv(const AffineConnection& c, const VectorField& x, const MetricTensor& g) {
    return cov_deriv_matrix(c, x, g.entries(), Variance::Lower, Variance::Lower);
}

FieldMatrix cov_deriv_matrix(const AffineConnection& c, const VectorField& x, const FieldMatrix& m,
                             Variance row, Variance col) {
    std::size_t n = c.dim();
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("block covariant derivative size");
    FieldMatrix r(n, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            ScalarField v = x.apply(m.at(a, b));
            for (std::size_t i = 0; i < n; ++i) {
                if (x.comp(i).is_zero()) continue;
                for (std::size_t t = 0; t < n; ++t) {
                    if (!m.at(t, b).is_zero()) {
                        if (row == Variance::Upper) {
                            if (!c.gamma(a, i, t).is_zero()) v += c.gamma(a, i, t) * x.comp(i) * m.at(t, b);
                        } else {
                            if (!c.gamma(t, i, a).is_zero()) v -= c.gamma(t, i, a) * x.comp(i) * m.at(t, b);
                        }
                    }
                    if (!m.at(a, t).is_zero()) {
                        if (col == Variance::Upper) {
                            if (!c.gamma(b, i, t).is_zero()) v += c.gamma(b, i, t) * x.comp(i) * m.at(a, t);
                        } else {
                            if (!c.gamma(t, i, b).is_zero()) v -= c.gamma(t, i, b) * x.comp(i) * m.at(a, t);
                        }
                    }
                }
            }
            r.at(a, b) = std::move(v);
        }
    return r;
}

VectorField torsion(const AffineConnection& c, const VectorField& x, const VectorField& y) {
    return cov_deriv(c, x, y) - cov_deriv(c, y, x) - lie_bracket(x, y);
}

ScalarField torsion3(const AffineConnection& c, const MetricTensor& g, const VectorField& x,
                     const VectorField& y, const VectorField& z) {
    return g.eval(torsion(c, x, y), z);
}

bool Tensor3::equals(const Tensor3& o) const {
    if (dim_ != o.dim_) return false;
    for (std::size_t i = 0; i < v_.size(); ++i)
        if (!sf_eq(v_[i], o.v_[i])) return false;
    return true;
}

bool Tensor3::is_zero() const {
    for (const auto& x : v_)
        if (!x.is_zero()) return false;
    return true;
}

Tensor3 Tensor3::from_form(const KForm& w) {
    if (w.degree() != 3) throw DegreeError("Tensor3::from_form expects a 3-form");
    Tensor3 t(w.dim());
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j)
            for (std::size_t k = 0; k < w.dim(); ++k) t.at(i, j, k) = w.comp_signed({i, j, k});
    return t;
}

Tensor3 Tensor3::torsion_of(const AffineConnection& c, const MetricTensor& g) {
    std::size_t n = c.dim();
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            VectorField tij = torsion(c, VectorField::coordinate(n, i), VectorField::coordinate(n, j));
            for (std::size_t k = 0; k < n; ++k)
                t.at(i, j, k) = g.eval(tij, VectorField::coordinate(n, k));
        }
    return t;
}

AffineConnection metric_connection_with_torsion(const MetricTensor& g, const Tensor3& t3) {
    std::size_t n = g.dim();
    if (t3.dim() != n) throw DimensionMismatch("prescribed torsion dimension");
    AffineConnection c(n);
    // On coordinate fields the Koszul-type formula loses its bracket terms:
    // g(nabla_i d_j, d_l) = 1/2 (d_i g_jl + d_j g_il - d_l g_ij
    //                            + T3_ijl - T3_ilj - T3_jli)
    const FieldMatrix& gm = g.entries();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<ScalarField> rhs(n, ScalarField(n));
            for (std::size_t l = 0; l < n; ++l) {
                ScalarField v = gm.at(j, l).diff(i) + gm.at(i, l).diff(j) - gm.at(i, j).diff(l);
                v += t3.at(i, j, l) - t3.at(i, l, j) - t3.at(j, l, i);
                rhs[l] = v * ScalarField::constant(n, GaussRat(1, 2));
            }
            std::vector<ScalarField> gam = g.inverse_entries().mul_vec(rhs);
            for (std::size_t k = 0; k < n; ++k) c.gamma(k, i, j) = gam[k];
        }
    return c;
}

}  // namespace gtb

namespace gtb {

ScalarField gen_torsion_courant(const GeneralizedConnection& gc, const GenSection& v,
                                const GenSection& w, const GenSection& u) {
    std::size_t n = gc.dim();
    GenSection skew = gc.apply(v, w) - gc.apply(w, v) - courant(v, w);
    ScalarField r = pairing(skew, u);
    r += (pairing(gc.apply(u, v), w) - pairing(gc.apply(u, w), v)) *
         ScalarField::constant(n, GaussRat(1, 2));
    return r;
}

ScalarField gen_torsion_courant_dorfman_form(const GeneralizedConnection& gc, const GenSection& v,
                                             const GenSection& w, const GenSection& u) {
    GenSection skew = gc.apply(v, w) - gc.apply(w, v) - dorfman(v, w);
    return pairing(skew, u) + pairing(gc.apply(u, v), w);
}

GenSection gen_torsion_nabla(const GeneralizedConnection& gc, const AffineConnection& conn,
                             const GenSection& v, const GenSection& w) {
    return gc.apply(v, w) - gc.apply(w, v) - bracket(BracketKind::connection(conn), v, w);
}

ScalarField torsion_equality_defect(const GeneralizedConnection& gc, const AffineConnection& conn,
                                    const GenSection& v, const GenSection& w, const GenSection& u) {
    std::size_t n = gc.dim();
    const VectorField& x = v.vec();
    const VectorField& y = w.vec();
    const VectorField& z = u.vec();

    auto pair_form_vec = [&](const KForm& f, const VectorField& vec) {
        ScalarField s(n);
        for (std::size_t i = 0; i < n; ++i) s += f.comp({i}) * vec.comp(i);
        return s;
    };

    ScalarField eta_term = pair_form_vec(w.form(), torsion(conn, x, z) + cov_deriv(conn, z, x));
    ScalarField xi_term = pair_form_vec(v.form(), torsion(conn, y, z) + cov_deriv(conn, z, y));
    ScalarField zxy = z.apply(pair_form_vec(v.form(), y));
    ScalarField lhs = (eta_term - xi_term + zxy) * ScalarField::constant(n, GaussRat(1, 2));

    ScalarField rhs = pairing(gc.apply(u, v), w);
    return lhs - rhs;
}

}  // namespace gtb

#include "gtb/courant.hpp"

#include "gtb/errors.hpp"

namespace gtb {

GenSection::GenSection(VectorField vec, KForm form) : vec_(std::move(vec)), form_(std::move(form)) {
    if (form_.degree() != 1) throw DegreeError("the form part of a section must be a 1-form");
    if (vec_.dim() != form_.dim()) throw DimensionMismatch("section parts live on different charts");
}

std::string GenSection::str() const {
    if (is_zero()) return "0";
    if (vec_.is_zero()) return form_.str();
    if (form_.is_zero()) return vec_.str();
    return vec_.str() + " + " + form_.str();
}

bool gs_eq(const GenSection& a, const GenSection& b) {
    return vf_eq(a.vec(), b.vec()) && kf_eq(a.form(), b.form());
}

EndoE::EndoE(FieldMatrix h, FieldMatrix alpha, FieldMatrix beta, FieldMatrix k)
    : h_(std::move(h)), alpha_(std::move(alpha)), beta_(std::move(beta)), k_(std::move(k)) {
    std::size_t n = h_.rows();
    if (h_.cols() != n || alpha_.rows() != n || alpha_.cols() != n || beta_.rows() != n ||
        beta_.cols() != n || k_.rows() != n || k_.cols() != n)
        throw DimensionMismatch("endomorphism blocks must be square of equal size");
}

EndoE EndoE::identity(std::size_t dim, std::size_t nvars) {
    return EndoE(FieldMatrix::identity(dim, nvars), FieldMatrix(dim, dim, nvars),
                 FieldMatrix(dim, dim, nvars), FieldMatrix::identity(dim, nvars));
}

EndoE EndoE::zero(std::size_t dim, std::size_t nvars) {
    FieldMatrix z(dim, dim, nvars);
    return EndoE(z, z, z, z);
}

GenSection EndoE::apply(const GenSection& u) const {
    if (u.dim() != dim()) throw DimensionMismatch("endomorphism applied across charts");
    std::vector<ScalarField> xi = one_form_comps(u.form());
    std::vector<ScalarField> v1 = h_.mul_vec(u.vec().comps());
    std::vector<ScalarField> v2 = alpha_.mul_vec(xi);
    std::vector<ScalarField> f1 = beta_.mul_vec(u.vec().comps());
    std::vector<ScalarField> f2 = k_.mul_vec(xi);
    for (std::size_t i = 0; i < v1.size(); ++i) {
        v1[i] += v2[i];
        f1[i] += f2[i];
    }
    return GenSection(VectorField(std::move(v1)), one_form(std::move(f1)));
}

EndoE operator*(const EndoE& a, const EndoE& b) {
    return EndoE(a.h_ * b.h_ + a.alpha_ * b.beta_, a.h_ * b.alpha_ + a.alpha_ * b.k_,
                 a.beta_ * b.h_ + a.k_ * b.beta_, a.beta_ * b.alpha_ + a.k_ * b.k_);
}

EndoE operator+(const EndoE& a, const EndoE& b) {
    return EndoE(a.h_ + b.h_, a.alpha_ + b.alpha_, a.beta_ + b.beta_, a.k_ + b.k_);
}

EndoE operator-(const EndoE& a, const EndoE& b) {
    return EndoE(a.h_ - b.h_, a.alpha_ - b.alpha_, a.beta_ - b.beta_, a.k_ - b.k_);
}

EndoE EndoE::operator-() const { return EndoE(-h_, -alpha_, -beta_, -k_); }

EndoE EndoE::scaled(const ScalarField& f) const {
    return EndoE(h_.scaled(f), alpha_.scaled(f), beta_.scaled(f), k_.scaled(f));
}

bool EndoE::equals(const EndoE& o) const {
    return h_.equals(o.h_) && alpha_.equals(o.alpha_) && beta_.equals(o.beta_) && k_.equals(o.k_);
}

bool EndoE::is_zero() const {
    return h_.is_zero() && alpha_.is_zero() && beta_.is_zero() && k_.is_zero();
}

ScalarField pairing(const GenSection& u, const GenSection& v) {
    if (u.dim() != v.dim()) throw DimensionMismatch("pairing across charts");
    std::size_t n = u.dim();
    ScalarField s(n);
    for (std::size_t i = 0; i < n; ++i) {
        s += v.form().comp({i}) * u.vec().comp(i);
        s += u.form().comp({i}) * v.vec().comp(i);
    }
    return s * ScalarField::constant(n, GaussRat(1, 2));
}

GenSection d_section(const ScalarField& f, std::size_t dim) {
    return GenSection::from_form(ext_d(f, dim));
}

GenSection b_transform(const KForm& b, const GenSection& u) {
    if (b.degree() != 2) throw DegreeError("b-transform needs a 2-form");
    if (b.dim() != u.dim()) throw DimensionMismatch("b-transform across charts");
    return GenSection(u.vec(), u.form() + interior(u.vec(), b));
}

BracketKind BracketKind::dorfman_twisted(KForm h) {
    if (h.degree() != 3) throw DegreeError("twist must be a 3-form");
    return {Tag::DorfmanTwisted, std::move(h), std::nullopt};
}

BracketKind BracketKind::courant_twisted(KForm h) {
    if (h.degree() != 3) throw DegreeError("twist must be a 3-form");
    return {Tag::CourantTwisted, std::move(h), std::nullopt};
}

namespace {

GenSection dorfman_core(const GenSection& u, const GenSection& v) {
    // [X+xi, Y+eta]_D = [X,Y] + L_X eta - i_Y d xi
    VectorField xy = lie_bracket(u.vec(), v.vec());
    KForm form = lie_derivative(u.vec(), v.form()) - interior(v.vec(), ext_d(u.form()));
    return GenSection(std::move(xy), std::move(form));
}

// Twist term i_X i_Y H. The composition order is pinned by the twisted
// torsion law T = -db - H of the induced connection.
KForm twist_term(const KForm& h, const VectorField& x, const VectorField& y) {
    return interior(x, interior(y, h));
}

}  // namespace

GenSection dorfman(const GenSection& u, const GenSection& v) { return dorfman_core(u, v); }

GenSection courant(const GenSection& u, const GenSection& v) {
    GenSection d1 = dorfman_core(u, v);
    GenSection d2 = dorfman_core(v, u);
    return (d1 - d2).scaled(ScalarField::constant(u.dim(), GaussRat(1, 2)));
}

GenSection bracket(const BracketKind& kind, const GenSection& u, const GenSection& v) {
    if (u.dim() != v.dim()) throw DimensionMismatch("bracket across charts");
    switch (kind.tag) {
        case BracketKind::Tag::Dorfman:
            return dorfman_core(u, v);
        case BracketKind::Tag::Courant:
            return courant(u, v);
        case BracketKind::Tag::DorfmanTwisted: {
            GenSection d = dorfman_core(u, v);
            return d + GenSection::from_form(twist_term(*kind.twist, u.vec(), v.vec()));
        }
        case BracketKind::Tag::CourantTwisted: {
            GenSection c = courant(u, v);
            return c + GenSection::from_form(twist_term(*kind.twist, u.vec(), v.vec()));
        }
        case BracketKind::Tag::Connection: {
            const AffineConnection& c = *kind.conn;
            VectorField xy = lie_bracket(u.vec(), v.vec());
            KForm form = cov_deriv(c, u.vec(), v.form()) - cov_deriv(c, v.vec(), u.form());
            return GenSection(std::move(xy), std::move(form));
        }
    }
    throw Error("unreachable bracket kind");
}

GenSection nijenhuis(const BracketKind& kind, const EndoE& j, const GenSection& u,
                     const GenSection& v) {
    GenSection ju = j.apply(u);
    GenSection jv = j.apply(v);
    GenSection t1 = bracket(kind, ju, jv);
    GenSection t2 = j.apply(bracket(kind, ju, v));
    GenSection t3 = j.apply(bracket(kind, u, jv));
    GenSection t4 = j.apply(j.apply(bracket(kind, u, v)));
    return t1 - t2 - t3 + t4;
}

GenSection jacobiator_defect(const GenSection& u, const GenSection& v, const GenSection& w) {
    std::size_t n = u.dim();
    GenSection cyc = bracket(BracketKind::courant(), courant(u, v), w) +
                     bracket(BracketKind::courant(), courant(v, w), u) +
                     bracket(BracketKind::courant(), courant(w, u), v);
    ScalarField s = pairing(courant(u, v), w) + pairing(courant(v, w), u) + pairing(courant(w, u), v);
    GenSection exact = d_section(s * ScalarField::constant(n, GaussRat(1, 3)), n);
    return cyc - exact;
}

}  // namespace gtb

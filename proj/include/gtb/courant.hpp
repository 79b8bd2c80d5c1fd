#ifndef GTB_COURANT_HPP
#define GTB_COURANT_HPP

#include <optional>
#include <string>

#include "gtb/affine.hpp"
#include "gtb/calculus.hpp"

namespace gtb {

// Section X + xi of the generalized tangent bundle TM + T*M.
class GenSection {
public:
    explicit GenSection(std::size_t dim) : vec_(dim), form_(dim, 1) {}
    GenSection(VectorField vec, KForm form);

    static GenSection from_vector(VectorField x) {
        std::size_t n = x.dim();
        return GenSection(std::move(x), KForm(n, 1));
    }
    static GenSection from_form(KForm xi) {
        std::size_t n = xi.dim();
        return GenSection(VectorField(n), std::move(xi));
    }
    static GenSection coordinate_vector(std::size_t dim, std::size_t i) {
        return from_vector(VectorField::coordinate(dim, i));
    }
    static GenSection coordinate_form(std::size_t dim, std::size_t i) {
        return from_form(KForm::dx(dim, i));
    }

    std::size_t dim() const { return vec_.dim(); }
    const VectorField& vec() const { return vec_; }
    const KForm& form() const { return form_; }

    bool is_zero() const { return vec_.is_zero() && form_.is_zero(); }
    GenSection operator-() const { return GenSection(-vec_, -form_); }
    friend GenSection operator+(const GenSection& a, const GenSection& b) {
        return GenSection(a.vec_ + b.vec_, a.form_ + b.form_);
    }
    friend GenSection operator-(const GenSection& a, const GenSection& b) {
        return GenSection(a.vec_ - b.vec_, a.form_ - b.form_);
    }
    GenSection scaled(const ScalarField& f) const { return GenSection(vec_.scaled(f), form_.scaled(f)); }

    std::string str() const;

private:
    VectorField vec_;
    KForm form_;
};

bool gs_eq(const GenSection& a, const GenSection& b);

// Block endomorphism of TM + T*M:
//   (X, xi) -> (H X + alpha xi, beta X + K xi)
// with H: TM->TM, alpha: T*M->TM, beta: TM->T*M, K: T*M->T*M, all acting
// on component columns.
class EndoE {
public:
    EndoE(FieldMatrix h, FieldMatrix alpha, FieldMatrix beta, FieldMatrix k);

    static EndoE identity(std::size_t dim, std::size_t nvars);
    static EndoE zero(std::size_t dim, std::size_t nvars);

    std::size_t dim() const { return h_.rows(); }
    const FieldMatrix& h() const { return h_; }
    const FieldMatrix& alpha() const { return alpha_; }
    const FieldMatrix& beta() const { return beta_; }
    const FieldMatrix& k() const { return k_; }

    GenSection apply(const GenSection& u) const;
    friend EndoE operator*(const EndoE& a, const EndoE& b);  // composition
    friend EndoE operator+(const EndoE& a, const EndoE& b);
    friend EndoE operator-(const EndoE& a, const EndoE& b);
    EndoE operator-() const;
    EndoE scaled(const ScalarField& f) const;

    bool equals(const EndoE& o) const;
    bool is_zero() const;

private:
    FieldMatrix h_, alpha_, beta_, k_;
};

// <X+xi, Y+eta> = 1/2 (eta(X) + xi(Y)); the 1/2 normalization matches the
// computations this kernel reproduces (e.g. <X^+,X^+> = g(X,X)).
ScalarField pairing(const GenSection& u, const GenSection& v);

// Differential of a scalar, embedded as a form section.
GenSection d_section(const ScalarField& f, std::size_t dim);

// e^b(X+xi) = X + xi + i_X b
GenSection b_transform(const KForm& b, const GenSection& u);

struct BracketKind {
    enum class Tag { Dorfman, Courant, DorfmanTwisted, CourantTwisted, Connection };

    Tag tag;
    std::optional<KForm> twist;           // 3-form for the twisted kinds
    std::optional<AffineConnection> conn; // for the connection-induced bracket

    static BracketKind dorfman() { return {Tag::Dorfman, std::nullopt, std::nullopt}; }
    static BracketKind courant() { return {Tag::Courant, std::nullopt, std::nullopt}; }
    static BracketKind dorfman_twisted(KForm h);
    static BracketKind courant_twisted(KForm h);
    static BracketKind connection(AffineConnection c) {
        return {Tag::Connection, std::nullopt, std::move(c)};
    }
};

GenSection bracket(const BracketKind& kind, const GenSection& u, const GenSection& v);

// Convenience entry points for the two untwisted brackets.
GenSection dorfman(const GenSection& u, const GenSection& v);
GenSection courant(const GenSection& u, const GenSection& v);

// N(v,w) = [Jv,Jw] - J[Jv,w] - J[v,Jw] + J^2[v,w] for the chosen bracket.
GenSection nijenhuis(const BracketKind& kind, const EndoE& j, const GenSection& u,
                     const GenSection& v);

// sum_cyc [[u,v]_C, w]_C - 1/3 d(sum_cyc <[u,v]_C, w>); identically zero.
GenSection jacobiator_defect(const GenSection& u, const GenSection& v, const GenSection& w);

}  // namespace gtb

#endif

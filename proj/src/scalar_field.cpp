#include "gtb/scalar_field.hpp"

#include <algorithm>

#include "gtb/errors.hpp"

namespace gtb {

ScalarField::ScalarField(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars())
        throw DimensionMismatch("scalar field numerator/denominator variable counts differ");
    normalize();
}

void ScalarField::normalize() {
    if (den_.is_zero()) throw DivisionByZeroField();
    std::size_t n = num_.nvars();
    if (num_.is_zero()) {
        den_ = Poly::one(n);
        return;
    }

    // Cancel the common monomial factor.
    Mono cn = num_.monomial_content();
    Mono cd = den_.monomial_content();
    Mono common(n, 0);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
        common[i] = std::min(cn[i], cd[i]);
        any = any || common[i] > 0;
    }
    if (any) {
        num_ = num_.shifted_down(common);
        den_ = den_.shifted_down(common);
    }

    if (den_.is_constant()) {
        num_ = num_.scaled(den_.constant_value().inverse());
        den_ = Poly::one(n);
        return;
    }

    // Full cancellation when one side divides the other.
    if (auto q = num_.divided_exactly_by(den_)) {
        num_ = std::move(*q);
        den_ = Poly::one(n);
        return;
    }
    if (!num_.is_constant()) {
        if (auto q = den_.divided_exactly_by(num_)) {
            den_ = std::move(*q);
            num_ = Poly::one(n);
        }
    }

    // Unit leading coefficient for the denominator.
    GaussRat lc = den_.leading().second;
    if (!lc.is_one()) {
        GaussRat inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

ScalarField ScalarField::operator-() const {
    ScalarField r = *this;
    r.num_ = -r.num_;
    return r;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    if (den_.structurally_equal(o.den_)) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
    if (den_.structurally_equal(o.den_)) {
        num_ -= o.num_;
        normalize();
        return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

ScalarField& ScalarField::operator*=(const ScalarField& o) {
    // Cross-cancel before multiplying to keep degrees down.
    Poly a = num_, b = o.num_, c = den_, d = o.den_;
    if (!d.is_constant() && !a.is_zero()) {
        if (auto q = a.divided_exactly_by(d)) {
            a = std::move(*q);
            d = Poly::one(d.nvars());
        }
    }
    if (!c.is_constant() && !b.is_zero()) {
        if (auto q = b.divided_exactly_by(c)) {
            b = std::move(*q);
            c = Poly::one(c.nvars());
        }
    }
    num_ = a * b;
    den_ = c * d;
    normalize();
    return *this;
}

ScalarField& ScalarField::operator/=(const ScalarField& o) {
    if (o.is_zero()) throw DivisionByZeroField();
    ScalarField flip(o.den_, o.num_);
    return *this *= flip;
}

ScalarField ScalarField::diff(std::size_t var) const {
    // Quotient rule (num' den - num den') / den^2.
    Poly dn = num_.diff(var);
    if (den_.is_constant()) {
        return ScalarField(std::move(dn), den_);
    }
    Poly dd = den_.diff(var);
    return ScalarField(dn * den_ - num_ * dd, den_ * den_);
}

std::string ScalarField::str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool sf_eq(const ScalarField& a, const ScalarField& b) {
    if (a.nvars() != b.nvars())
        throw DimensionMismatch("comparing scalar fields on different charts");
    if (a.den().structurally_equal(b.den())) return (a.num() - b.num()).is_zero();
    return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

}  // namespace gtb

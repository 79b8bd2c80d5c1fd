#ifndef GTB_SCALAR_FIELD_HPP
#define GTB_SCALAR_FIELD_HPP

#include <string>

#include "gtb/poly.hpp"

namespace gtb {

// Exact rational function num/den over the Gaussian rationals. Equality is
// decided by cross-multiplication, so no canonical form is required; the
// normalization pass below only limits term growth (common monomial factor,
// exact-division cancellation, unit leading coefficient of the denominator).
class ScalarField {
public:
    explicit ScalarField(std::size_t nvars = 0)
        : num_(Poly::zero(nvars)), den_(Poly::one(nvars)) {}
    ScalarField(Poly num, Poly den);

    static ScalarField constant(std::size_t nvars, GaussRat c) {
        return ScalarField(Poly::constant(nvars, std::move(c)), Poly::one(nvars));
    }
    static ScalarField from_poly(Poly p) {
        std::size_t n = p.nvars();
        return ScalarField(std::move(p), Poly::one(n));
    }
    static ScalarField variable(std::size_t nvars, std::size_t index) {
        return from_poly(Poly::variable(nvars, index));
    }
    static ScalarField zero(std::size_t nvars) { return ScalarField(nvars); }
    static ScalarField one(std::size_t nvars) { return constant(nvars, GaussRat(1)); }

    std::size_t nvars() const { return num_.nvars(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // True when the value is a constant rational (denominator reduces away).
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    GaussRat constant_value() const { return num_.constant_value() / den_.constant_value(); }

    ScalarField operator-() const;
    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(const ScalarField& o);
    ScalarField& operator/=(const ScalarField& o);
    friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
    friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
    friend ScalarField operator*(ScalarField a, const ScalarField& b) { return a *= b; }
    friend ScalarField operator/(ScalarField a, const ScalarField& b) { return a /= b; }

    ScalarField diff(std::size_t var) const;

    std::string str() const;

private:
    void normalize();

    Poly num_;
    Poly den_;
};

// True iff a - b is the zero rational function (cross-multiplied, exact).
bool sf_eq(const ScalarField& a, const ScalarField& b);
inline bool sf_is_zero(const ScalarField& a) { return a.is_zero(); }

}  // namespace gtb

#endif

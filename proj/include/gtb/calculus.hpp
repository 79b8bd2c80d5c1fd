#ifndef GTB_CALCULUS_HPP
#define GTB_CALCULUS_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gtb/matrix.hpp"
#include "gtb/scalar_field.hpp"

namespace gtb {

// Vector field X = sum X^i d_i on a single chart.
class VectorField {
public:
    explicit VectorField(std::size_t dim)
        : comps_(dim, ScalarField(dim)) {}
    explicit VectorField(std::vector<ScalarField> comps);

    static VectorField coordinate(std::size_t dim, std::size_t i);

    std::size_t dim() const { return comps_.size(); }
    const ScalarField& comp(std::size_t i) const { return comps_.at(i); }
    ScalarField& comp(std::size_t i) { return comps_.at(i); }
    const std::vector<ScalarField>& comps() const { return comps_; }

    bool is_zero() const;
    VectorField operator-() const;
    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator-(const VectorField& a, const VectorField& b);
    VectorField scaled(const ScalarField& f) const;

    // Directional derivative X(f).
    ScalarField apply(const ScalarField& f) const;

    std::string str() const;

private:
    std::vector<ScalarField> comps_;
};

bool vf_eq(const VectorField& a, const VectorField& b);

// Differential k-form stored on strictly increasing index tuples; the
// wedge convention is the determinant one, dx^i^dx^j(d_k,d_l) =
// delta^i_k delta^j_l - delta^i_l delta^j_k, with no 1/k! factors.
class KForm {
public:
    KForm(std::size_t dim, std::size_t degree);

    static KForm dx(std::size_t dim, std::size_t i);  // coordinate 1-form

    std::size_t dim() const { return dim_; }
    std::size_t degree() const { return degree_; }

    // Component on a strictly increasing tuple (0-based). Reading a tuple
    // that is not stored yields zero.
    ScalarField comp(const std::vector<std::size_t>& idx) const;
    void set_comp(const std::vector<std::size_t>& idx, ScalarField v);
    // Antisymmetric access: any tuple, sign worked out, zero on repeats.
    ScalarField comp_signed(std::vector<std::size_t> idx) const;

    const std::map<std::vector<std::size_t>, ScalarField>& comps() const { return comps_; }

    bool is_zero() const;
    KForm operator-() const;
    friend KForm operator+(const KForm& a, const KForm& b);
    friend KForm operator-(const KForm& a, const KForm& b);
    KForm scaled(const ScalarField& f) const;

    // Full evaluation on degree() vector fields.
    ScalarField eval(std::span<const VectorField> args) const;

    std::string str() const;

private:
    std::size_t dim_;
    std::size_t degree_;
    std::map<std::vector<std::size_t>, ScalarField> comps_;
};

bool kf_eq(const KForm& a, const KForm& b);

KForm ext_d(const KForm& w);
KForm ext_d(const ScalarField& f, std::size_t dim);  // df
KForm interior(const VectorField& x, const KForm& w);
KForm lie_derivative(const VectorField& x, const KForm& w);
KForm wedge(const KForm& a, const KForm& b);
VectorField lie_bracket(const VectorField& x, const VectorField& y);

// Pseudo-Riemannian metric on the chart; symmetric with det != 0 as a
// rational function (nondegeneracy at the generic point).
class MetricTensor {
public:
    explicit MetricTensor(FieldMatrix entries);

    std::size_t dim() const { return entries_.rows(); }
    const FieldMatrix& entries() const { return entries_; }
    const FieldMatrix& inverse_entries() const { return inverse_; }

    ScalarField eval(const VectorField& x, const VectorField& y) const;

private:
    FieldMatrix entries_;
    FieldMatrix inverse_;
};

KForm flat(const MetricTensor& g, const VectorField& x);    // g(X, .)
VectorField sharp(const MetricTensor& g, const KForm& xi);  // g^{-1} xi

// Matrix of the map X -> i_X b for a 2-form b, acting on component columns.
FieldMatrix two_form_operator(const KForm& b);
// Inverse direction: operator matrix (X -> i_X b) back to the 2-form.
KForm operator_two_form(const FieldMatrix& m);
// Component matrix B[i][j] = b(d_i, d_j); the transpose of the operator
// matrix. This is the matrix the graph map of a generalized metric uses.
FieldMatrix two_form_components(const KForm& b);

// 1-form with given components; vector field as column and back.
KForm one_form(std::vector<ScalarField> comps);
std::vector<ScalarField> one_form_comps(const KForm& xi);

}  // namespace gtb

#endif

#ifndef GTB_AFFINE_HPP
#define GTB_AFFINE_HPP

#include <vector>

#include "gtb/calculus.hpp"

namespace gtb {

// Affine connection stored as the raw Christoffel array Gamma^k_{ij}, so
// equality of connections is a finite comparison of n^3 scalar fields.
class AffineConnection {
public:
    explicit AffineConnection(std::size_t dim)
        : dim_(dim), gamma_(dim * dim * dim, ScalarField(dim)) {}

    std::size_t dim() const { return dim_; }
    // Gamma^k_{ij}: nabla_{d_i} d_j = Gamma^k_{ij} d_k
    const ScalarField& gamma(std::size_t k, std::size_t i, std::size_t j) const {
        return gamma_.at((k * dim_ + i) * dim_ + j);
    }
    ScalarField& gamma(std::size_t k, std::size_t i, std::size_t j) {
        return gamma_.at((k * dim_ + i) * dim_ + j);
    }

    bool equals(const AffineConnection& o) const;
    bool is_torsion_free() const;
    // Curvature on coordinate fields vanishes identically.
    bool is_flat() const;

private:
    std::size_t dim_;
    std::vector<ScalarField> gamma_;
};

VectorField cov_deriv(const AffineConnection& c, const VectorField& x, const VectorField& y);
// Dual Leibniz rule on forms of any degree.
KForm cov_deriv(const AffineConnection& c, const VectorField& x, const KForm& w);
// (0,2)-tensor rule on the metric entries; zero matrix means metric
// compatibility in the direction x.
FieldMatrix cov_deriv(const AffineConnection& c, const VectorField& x, const MetricTensor& g);

enum class Variance { Upper, Lower };

// Covariant derivative of a block matrix M acting by out[r] = M[r][c] in[c];
// the variances say which tensor slot each matrix index is.
FieldMatrix cov_deriv_matrix(const AffineConnection& c, const VectorField& x, const FieldMatrix& m,
                             Variance row, Variance col);

VectorField torsion(const AffineConnection& c, const VectorField& x, const VectorField& y);
ScalarField torsion3(const AffineConnection& c, const MetricTensor& g, const VectorField& x,
                     const VectorField& y, const VectorField& z);

// Dense 3-index array of scalar fields; used for prescribed torsion input
// T(d_i, d_j, d_k) and for torsion-formula comparisons.
class Tensor3 {
public:
    explicit Tensor3(std::size_t dim) : dim_(dim), v_(dim * dim * dim, ScalarField(dim)) {}

    std::size_t dim() const { return dim_; }
    const ScalarField& at(std::size_t i, std::size_t j, std::size_t k) const {
        return v_.at((i * dim_ + j) * dim_ + k);
    }
    ScalarField& at(std::size_t i, std::size_t j, std::size_t k) {
        return v_.at((i * dim_ + j) * dim_ + k);
    }

    bool equals(const Tensor3& o) const;
    bool is_zero() const;

    static Tensor3 from_form(const KForm& w);  // degree-3 components
    static Tensor3 torsion_of(const AffineConnection& c, const MetricTensor& g);

private:
    std::size_t dim_;
    std::vector<ScalarField> v_;
};

// The unique metric connection with prescribed torsion 3-tensor
// T3(i,j,k) = g(T(d_i,d_j), d_k); T3 must be antisymmetric in (i,j).
AffineConnection metric_connection_with_torsion(const MetricTensor& g, const Tensor3& t3);

}  // namespace gtb

#endif

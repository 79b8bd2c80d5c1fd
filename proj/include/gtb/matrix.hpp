#ifndef GTB_MATRIX_HPP
#define GTB_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "gtb/scalar_field.hpp"

namespace gtb {

// Dense matrix over the rational-function field. Rank, nondegeneracy and
// kernels are generic-point notions: they are decided over the fraction
// field, i.e. away from the vanishing loci of denominators and pivots.
class FieldMatrix {
public:
    FieldMatrix() : rows_(0), cols_(0), nvars_(0) {}
    FieldMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

    static FieldMatrix identity(std::size_t n, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    ScalarField& at(std::size_t r, std::size_t c);
    const ScalarField& at(std::size_t r, std::size_t c) const;

    FieldMatrix operator-() const;
    friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
    friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);

    FieldMatrix scaled(const ScalarField& c) const;
    FieldMatrix transposed() const;

    std::vector<ScalarField> mul_vec(const std::vector<ScalarField>& x) const;

    bool is_zero() const;
    bool equals(const FieldMatrix& o) const;  // entrywise sf_eq
    bool is_symmetric() const;
    bool is_antisymmetric() const;

    // Fraction-free (Bareiss) determinant: rows are cleared to polynomial
    // entries first, so every division in the elimination is an exact
    // polynomial division.
    ScalarField det() const;

    // Exact Gauss-Jordan inverse; throws SingularMatrix when det is the
    // zero rational function.
    FieldMatrix inverse() const;

    std::size_t rank() const;

    // Basis of the right null space over the fraction field, one column
    // vector per free column of the reduced echelon form.
    std::vector<std::vector<ScalarField>> kernel() const;

private:
    std::size_t rows_, cols_, nvars_;
    std::vector<ScalarField> e_;
};

}  // namespace gtb

#endif

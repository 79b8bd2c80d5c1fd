#include "gtb/matrix.hpp"

#include <utility>

#include "gtb/errors.hpp"

namespace gtb {

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), e_(rows * cols, ScalarField(nvars)) {}

FieldMatrix FieldMatrix::identity(std::size_t n, std::size_t nvars) {
    FieldMatrix m(n, n, nvars);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ScalarField::one(nvars);
    return m;
}

ScalarField& FieldMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    return e_[r * cols_ + c];
}

const ScalarField& FieldMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    return e_[r * cols_ + c];
}

FieldMatrix FieldMatrix::operator-() const {
    FieldMatrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix addition");
    FieldMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix subtraction");
    FieldMatrix r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    FieldMatrix r(a.rows_, b.cols_, a.nvars_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const ScalarField& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const ScalarField& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

FieldMatrix FieldMatrix::scaled(const ScalarField& c) const {
    FieldMatrix r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
}

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix r(cols_, rows_, nvars_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<ScalarField> FieldMatrix::mul_vec(const std::vector<ScalarField>& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector product");
    std::vector<ScalarField> y(rows_, ScalarField(nvars_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || x[j].is_zero()) continue;
            y[i] += at(i, j) * x[j];
        }
    return y;
}

bool FieldMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool FieldMatrix::equals(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!sf_eq(e_[i], o.e_[i])) return false;
    return true;
}

bool FieldMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (!sf_eq(at(i, j), at(j, i))) return false;
    return true;
}

bool FieldMatrix::is_antisymmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (!sf_eq(at(i, j), -at(j, i))) return false;
    return true;
}

ScalarField FieldMatrix::det() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return ScalarField::one(nvars_);

    // Clear every row to polynomial entries; track the row multipliers.
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly::zero(nvars_)));
    ScalarField scale = ScalarField::one(nvars_);
    for (std::size_t i = 0; i < n; ++i) {
        Poly rowden = Poly::one(nvars_);
        for (std::size_t j = 0; j < n; ++j) rowden = rowden * at(i, j).den();
        scale *= ScalarField(Poly::one(nvars_), rowden);
        for (std::size_t j = 0; j < n; ++j) {
            auto q = rowden.divided_exactly_by(at(i, j).den());
            m[i][j] = at(i, j).num() * *q;
        }
    }

    // Bareiss: every division is exact in the polynomial ring.
    bool negate = false;
    Poly prev = Poly::one(nvars_);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return ScalarField::zero(nvars_);
            std::swap(m[k], m[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = *t.divided_exactly_by(prev);
            }
            m[i][k] = Poly::zero(nvars_);
        }
        prev = m[k][k];
    }
    ScalarField d = ScalarField::from_poly(m[n - 1][n - 1]) * scale;
    return negate ? -d : d;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot
// row. Pivoting uses exact zero tests, so the result is the generic-point
// echelon form.
std::vector<std::size_t> rref(std::vector<std::vector<ScalarField>>& a, std::size_t nvars) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        ScalarField inv = ScalarField::one(nvars) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            ScalarField f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

FieldMatrix FieldMatrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of a non-square matrix");
    std::size_t n = rows_;
    std::vector<std::vector<ScalarField>> a(n, std::vector<ScalarField>(2 * n, ScalarField(nvars_)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = at(i, j);
        a[i][n + i] = ScalarField::one(nvars_);
    }
    auto pivots = rref(a, nvars_);
    if (pivots.size() != n || pivots[n - 1] != n - 1) throw SingularMatrix();
    FieldMatrix inv(n, n, nvars_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = a[i][n + j];
    return inv;
}

std::size_t FieldMatrix::rank() const {
    std::vector<std::vector<ScalarField>> a(rows_, std::vector<ScalarField>(cols_, ScalarField(nvars_)));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a[i][j] = at(i, j);
    return rref(a, nvars_).size();
}

std::vector<std::vector<ScalarField>> FieldMatrix::kernel() const {
    std::vector<std::vector<ScalarField>> a(rows_, std::vector<ScalarField>(cols_, ScalarField(nvars_)));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a[i][j] = at(i, j);
    auto pivots = rref(a, nvars_);

    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<ScalarField>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<ScalarField> v(cols_, ScalarField(nvars_));
        v[free] = ScalarField::one(nvars_);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -a[pr][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace gtb

#include "gtb/calculus.hpp"

#include <algorithm>

#include "gtb/errors.hpp"

namespace gtb {

VectorField::VectorField(std::vector<ScalarField> comps) : comps_(std::move(comps)) {
    for (const auto& c : comps_)
        if (c.nvars() != comps_.size())
            throw DimensionMismatch("vector field component count must equal the chart dimension");
}

VectorField VectorField::coordinate(std::size_t dim, std::size_t i) {
    VectorField x(dim);
    x.comp(i) = ScalarField::one(dim);
    return x;
}

bool VectorField::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const ScalarField& c) { return c.is_zero(); });
}

VectorField VectorField::operator-() const {
    VectorField r = *this;
    for (auto& c : r.comps_) c = -c;
    return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("vector field addition");
    VectorField r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r.comp(i) += b.comp(i);
    return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("vector field subtraction");
    VectorField r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r.comp(i) -= b.comp(i);
    return r;
}

VectorField VectorField::scaled(const ScalarField& f) const {
    VectorField r = *this;
    for (auto& c : r.comps_) c *= f;
    return r;
}

ScalarField VectorField::apply(const ScalarField& f) const {
    ScalarField r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (comps_[i].is_zero()) continue;
        r += comps_[i] * f.diff(i);
    }
    return r;
}

std::string VectorField::str() const {
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (comps_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + comps_[i].str() + ")*d" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

bool vf_eq(const VectorField& a, const VectorField& b) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!sf_eq(a.comp(i), b.comp(i))) return false;
    return true;
}

KForm::KForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

KForm KForm::dx(std::size_t dim, std::size_t i) {
    KForm w(dim, 1);
    w.set_comp({i}, ScalarField::one(dim));
    return w;
}

ScalarField KForm::comp(const std::vector<std::size_t>& idx) const {
    auto it = comps_.find(idx);
    if (it == comps_.end()) return ScalarField(dim_);
    return it->second;
}

void KForm::set_comp(const std::vector<std::size_t>& idx, ScalarField v) {
    if (idx.size() != degree_) throw DimensionMismatch("form component index length");
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] >= idx[i + 1]) throw DimensionMismatch("form component index must be strictly increasing");
    if (!idx.empty() && idx.back() >= dim_) throw DimensionMismatch("form component index out of range");
    if (v.is_zero()) {
        comps_.erase(idx);
    } else {
        comps_[idx] = std::move(v);
    }
}

ScalarField KForm::comp_signed(std::vector<std::size_t> idx) const {
    // Sort with sign; repeated indices kill the component.
    bool negate = false;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
            if (idx[j] == idx[j + 1]) return ScalarField(dim_);
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                negate = !negate;
            }
        }
    ScalarField v = comp(idx);
    return negate ? -v : v;
}

bool KForm::is_zero() const {
    for (const auto& [idx, v] : comps_)
        if (!v.is_zero()) return false;
    return true;
}

KForm KForm::operator-() const {
    KForm r(dim_, degree_);
    for (const auto& [idx, v] : comps_) r.comps_.emplace(idx, -v);
    return r;
}

KForm operator+(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim() || a.degree() != b.degree()) throw DimensionMismatch("form addition");
    KForm r = a;
    for (const auto& [idx, v] : b.comps()) {
        ScalarField s = r.comp(idx) + v;
        r.set_comp(idx, std::move(s));
    }
    return r;
}

KForm operator-(const KForm& a, const KForm& b) { return a + (-b); }

KForm KForm::scaled(const ScalarField& f) const {
    KForm r(dim_, degree_);
    if (f.is_zero()) return r;
    for (const auto& [idx, v] : comps_) {
        ScalarField s = v * f;
        if (!s.is_zero()) r.comps_.emplace(idx, std::move(s));
    }
    return r;
}

ScalarField KForm::eval(std::span<const VectorField> args) const {
    if (args.size() != degree_) throw DimensionMismatch("form evaluated on wrong number of arguments");
    for (const auto& x : args)
        if (x.dim() != dim_) throw DimensionMismatch("form argument chart dimension");
    ScalarField total(dim_);
    if (degree_ == 0) {
        // Degree-0 form is a function; represented with the empty index.
        return comp({});
    }
    for (const auto& [idx, v] : comps_) {
        // det of the k x k matrix args[a].comp(idx[b]).
        FieldMatrix m(degree_, degree_, dim_);
        for (std::size_t a = 0; a < degree_; ++a)
            for (std::size_t b = 0; b < degree_; ++b) m.at(a, b) = args[a].comp(idx[b]);
        total += v * m.det();
    }
    return total;
}

std::string KForm::str() const {
    std::string out;
    for (const auto& [idx, v] : comps_) {
        if (v.is_zero()) continue;
        std::string basis;
        for (std::size_t i : idx) {
            if (!basis.empty()) basis += "^";
            basis += "dx" + std::to_string(i + 1);
        }
        if (!out.empty()) out += " + ";
        out += basis.empty() ? v.str() : "(" + v.str() + ")*" + basis;
    }
    return out.empty() ? "0" : out;
}

bool kf_eq(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim() || a.degree() != b.degree()) return false;
    return (a - b).is_zero();
}

KForm ext_d(const KForm& w) {
    std::size_t n = w.dim();
    KForm r(n, w.degree() + 1);
    for (const auto& [idx, v] : w.comps()) {
        for (std::size_t j = 0; j < n; ++j) {
            ScalarField dv = v.diff(j);
            if (dv.is_zero()) continue;
            // Insert j into idx with its sign; skip repeats.
            if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
            std::vector<std::size_t> out = idx;
            auto pos = std::lower_bound(out.begin(), out.end(), j);
            std::size_t p = static_cast<std::size_t>(pos - out.begin());
            out.insert(pos, j);
            if (p % 2 == 1) dv = -dv;
            ScalarField s = r.comp(out) + dv;
            r.set_comp(out, std::move(s));
        }
    }
    return r;
}

KForm ext_d(const ScalarField& f, std::size_t dim) {
    KForm w(dim, 1);
    for (std::size_t i = 0; i < dim; ++i) {
        ScalarField d = f.diff(i);
        if (!d.is_zero()) w.set_comp({i}, std::move(d));
    }
    return w;
}

KForm interior(const VectorField& x, const KForm& w) {
    if (x.dim() != w.dim()) throw DimensionMismatch("interior product chart dimension");
    if (w.degree() == 0) throw DegreeError("interior product of a degree-0 form");
    std::size_t n = w.dim();
    KForm r(n, w.degree() - 1);
    for (const auto& [idx, v] : w.comps()) {
        for (std::size_t p = 0; p < idx.size(); ++p) {
            const ScalarField& xc = x.comp(idx[p]);
            if (xc.is_zero()) continue;
            std::vector<std::size_t> out;
            out.reserve(idx.size() - 1);
            for (std::size_t q = 0; q < idx.size(); ++q)
                if (q != p) out.push_back(idx[q]);
            ScalarField term = xc * v;
            if (p % 2 == 1) term = -term;
            ScalarField s = r.comp(out) + term;
            r.set_comp(out, std::move(s));
        }
    }
    return r;
}

KForm lie_derivative(const VectorField& x, const KForm& w) {
    // Cartan formula L_X = d i_X + i_X d; the first summand is absent in
    // degree 0.
    KForm a = interior(x, ext_d(w));
    if (w.degree() == 0) return a;
    return ext_d(interior(x, w)) + a;
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("wedge product chart dimension");
    std::size_t n = a.dim();
    KForm r(n, a.degree() + b.degree());
    for (const auto& [ia, va] : a.comps()) {
        for (const auto& [ib, vb] : b.comps()) {
            // Merge the two increasing tuples, tracking the shuffle sign;
            // overlapping tuples contribute nothing.
            std::vector<std::size_t> merged = ia;
            merged.insert(merged.end(), ib.begin(), ib.end());
            bool skip = false;
            bool negate = false;
            for (std::size_t i = 0; i + 1 < merged.size() && !skip; ++i)
                for (std::size_t j = 0; j + 1 < merged.size() - i; ++j) {
                    if (merged[j] == merged[j + 1]) {
                        skip = true;
                        break;
                    }
                    if (merged[j] > merged[j + 1]) {
                        std::swap(merged[j], merged[j + 1]);
                        negate = !negate;
                    }
                }
            if (skip) continue;
            ScalarField term = va * vb;
            if (negate) term = -term;
            ScalarField s = r.comp(merged) + term;
            r.set_comp(merged, std::move(s));
        }
    }
    return r;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch("Lie bracket chart dimension");
    std::size_t n = x.dim();
    VectorField r(n);
    for (std::size_t k = 0; k < n; ++k) {
        ScalarField c(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (!x.comp(j).is_zero()) c += x.comp(j) * y.comp(k).diff(j);
            if (!y.comp(j).is_zero()) c -= y.comp(j) * x.comp(k).diff(j);
        }
        r.comp(k) = std::move(c);
    }
    return r;
}

MetricTensor::MetricTensor(FieldMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw DimensionMismatch("metric must be square");
    if (!entries_.is_symmetric()) throw DimensionMismatch("metric must be symmetric");
    if (entries_.det().is_zero()) throw DegenerateMetric();
    inverse_ = entries_.inverse();
}

ScalarField MetricTensor::eval(const VectorField& x, const VectorField& y) const {
    ScalarField r(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
            if (x.comp(i).is_zero() || y.comp(j).is_zero()) continue;
            r += entries_.at(i, j) * x.comp(i) * y.comp(j);
        }
    return r;
}

KForm flat(const MetricTensor& g, const VectorField& x) {
    if (x.dim() != g.dim()) throw DimensionMismatch("flat chart dimension");
    std::vector<ScalarField> comps = g.entries().mul_vec(x.comps());
    return one_form(std::move(comps));
}

VectorField sharp(const MetricTensor& g, const KForm& xi) {
    if (xi.degree() != 1) throw DegreeError("sharp expects a 1-form");
    if (xi.dim() != g.dim()) throw DimensionMismatch("sharp chart dimension");
    return VectorField(g.inverse_entries().mul_vec(one_form_comps(xi)));
}

FieldMatrix two_form_operator(const KForm& b) {
    if (b.degree() != 2) throw DegreeError("two_form_operator expects a 2-form");
    std::size_t n = b.dim();
    FieldMatrix m(n, n, n);
    // (i_X b)(d_j) = b(X, d_j) = sum_i X^i b_{ij}
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(j, i) = b.comp_signed({i, j});
    return m;
}

KForm operator_two_form(const FieldMatrix& m) {
    std::size_t n = m.rows();
    KForm b(n, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) b.set_comp({i, j}, m.at(j, i));
    return b;
}

FieldMatrix two_form_components(const KForm& b) {
    return two_form_operator(b).transposed();
}

KForm one_form(std::vector<ScalarField> comps) {
    std::size_t n = comps.size();
    KForm w(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        if (!comps[i].is_zero()) w.set_comp({i}, std::move(comps[i]));
    return w;
}

std::vector<ScalarField> one_form_comps(const KForm& xi) {
    if (xi.degree() != 1) throw DegreeError("expected a 1-form");
    std::size_t n = xi.dim();
    std::vector<ScalarField> comps(n, ScalarField(n));
    for (std::size_t i = 0; i < n; ++i) comps[i] = xi.comp({i});
    return comps;
}

}  // namespace gtb

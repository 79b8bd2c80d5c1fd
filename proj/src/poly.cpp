#include "gtb/poly.hpp"

#include <algorithm>
#include <numeric>

#include "gtb/errors.hpp"

namespace gtb {

bool GrlexLess::operator()(const Mono& a, const Mono& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly Poly::constant(std::size_t nvars, GaussRat c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Mono(nvars, 0), std::move(c));
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
    Poly p(nvars);
    Mono m(nvars, 0);
    m.at(index) = 1;
    p.terms_.emplace(std::move(m), GaussRat(1));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Mono& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

GaussRat Poly::constant_value() const {
    if (terms_.empty()) return GaussRat(0);
    return terms_.begin()->second;
}

unsigned Poly::total_degree() const {
    if (terms_.empty()) return 0;
    const Mono& m = terms_.rbegin()->first;
    return std::accumulate(m.begin(), m.end(), 0u);
}

void Poly::add_term(const Mono& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.nvars_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    Mono m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const GaussRat& c) const {
    Poly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

Poly Poly::diff(std::size_t var) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono d = m;
        d[var] -= 1;
        r.add_term(d, c * GaussRat(static_cast<long>(m[var])));
    }
    return r;
}

Mono Poly::monomial_content() const {
    Mono content(nvars_, 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            content = m;
            first = false;
        } else {
            for (std::size_t i = 0; i < nvars_; ++i) content[i] = std::min(content[i], m[i]);
        }
    }
    return content;
}

Poly Poly::shifted_down(const Mono& shift) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        Mono d = m;
        for (std::size_t i = 0; i < nvars_; ++i) d[i] -= shift[i];
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

std::optional<Poly> Poly::divided_exactly_by(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZeroField();
    Poly q(nvars_);
    Poly rem = *this;
    const auto& [dm, dc] = d.leading();
    Mono qm(nvars_);
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (rm[i] < dm[i]) return std::nullopt;
            qm[i] = rm[i] - dm[i];
        }
        GaussRat qc = rc / dc;
        q.add_term(qm, qc);
        Poly t(nvars_);
        t.terms_.emplace(qm, qc);
        rem -= t * d;
    }
    return q;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest-degree terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Mono& m = it->first;
        const GaussRat& c = it->second;
        bool is_const_term = std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });

        std::string coeff = c.str();
        bool negative = coeff[0] == '-';
        if (negative) coeff = coeff.substr(1);

        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }

        std::string term;
        if (is_const_term) {
            term = coeff;
        } else if (coeff == "1") {
            term = mono;
        } else {
            term = coeff + "*" + mono;
        }

        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " + term : " + " + term;
        }
    }
    return out;
}

}  // namespace gtb

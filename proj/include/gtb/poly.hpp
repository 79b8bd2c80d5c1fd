#ifndef GTB_POLY_HPP
#define GTB_POLY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtb/rational.hpp"

namespace gtb {

// Exponent multi-index; length equals the chart dimension.
using Mono = std::vector<unsigned>;

// Graded lexicographic order: total degree first, then lex. Any admissible
// order would do for exact division; grlex also prints nicely.
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

// Multivariate polynomial over the Gaussian rationals. Zero coefficients are
// never stored; the zero polynomial has an empty term map.
class Poly {
public:
    using TermMap = std::map<Mono, GaussRat, GrlexLess>;

    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, GaussRat c);
    static Poly variable(std::size_t nvars, std::size_t index);  // x_{index}, 0-based
    static Poly zero(std::size_t nvars) { return Poly(nvars); }
    static Poly one(std::size_t nvars) { return constant(nvars, GaussRat(1)); }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term; only meaningful when is_constant().
    GaussRat constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const;  // 0 for the zero polynomial

    const TermMap& terms() const { return terms_; }

    void add_term(const Mono& m, const GaussRat& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(const GaussRat& c) const;
    Poly diff(std::size_t var) const;

    // Largest monomial under grlex; polynomial must be nonzero.
    const std::pair<const Mono, GaussRat>& leading() const { return *terms_.rbegin(); }

    // Componentwise minimum exponent over all terms (the monomial content).
    Mono monomial_content() const;
    Poly shifted_down(const Mono& m) const;  // divide every term by x^m

    // Quotient when the division is exact, nullopt otherwise.
    std::optional<Poly> divided_exactly_by(const Poly& d) const;

    bool structurally_equal(const Poly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    std::string str() const;  // expression-grammar rendering; "0" for zero

private:
    std::size_t nvars_;
    TermMap terms_;
};

}  // namespace gtb

#endif

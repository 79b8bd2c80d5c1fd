#ifndef GTB_RATIONAL_HPP
#define GTB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "gtb/errors.hpp"

namespace gtb {

// Gaussian rational re + im*i with arbitrary-precision components.
// mpq_class keeps denominators positive and in lowest terms, so the
// type's invariants hold after every operation for free.
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
    GaussRat(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat imaginary_unit() { return GaussRat(mpq_class(0), mpq_class(1)); }
    static GaussRat from_decimal_string(const std::string& digits) {
        return GaussRat(mpq_class(mpz_class(digits, 10)), mpq_class(0));
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        if (o.is_zero()) throw DivisionByZeroField();
        mpq_class n2 = o.re_ * o.re_ + o.im_ * o.im_;
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n2;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / n2;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    GaussRat inverse() const {
        GaussRat one(1);
        return one /= *this;
    }

    // Renders in the expression grammar; a mixed value gets parentheses so
    // that "coeff*x1" re-parses with the right precedence.
    std::string str() const;

private:
    mpq_class re_;
    mpq_class im_;
};

inline std::string rat_str(const mpq_class& q) {
    return q.get_str();
}

inline std::string GaussRat::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = rat_str(im_) + "*i";
    }
    if (re_ == 0) return imag;
    std::string out = "(" + rat_str(re_);
    if (imag[0] == '-') {
        out += " - " + imag.substr(1);
    } else {
        out += " + " + imag;
    }
    return out + ")";
}

}  // namespace gtb

#endif

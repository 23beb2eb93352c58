#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace contextlab {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "a", "-a", "a/b".
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw error("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0) throw error("bad rational literal: " + s);
    if (q.get_den() == 0) throw error("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

/// Complex number with exact rational real and imaginary parts.
struct RationalComplex {
    Rational re{0};
    Rational im{0};

    RationalComplex() = default;
    RationalComplex(Rational r) : re(std::move(r)) {}
    RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    RationalComplex(long r) : re(make_rational(r)) {}
    RationalComplex(long r, long i) : re(make_rational(r)), im(make_rational(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
    friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw error("division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    RationalComplex& operator+=(const RationalComplex& b) { return *this = *this + b; }
    RationalComplex& operator-=(const RationalComplex& b) { return *this = *this - b; }
    RationalComplex& operator*=(const RationalComplex& b) { return *this = *this * b; }
    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }
};

inline RationalComplex conj(const RationalComplex& z) { return {z.re, -z.im}; }

/// |z|^2 as an exact rational.
inline Rational abs2(const RationalComplex& z) { return z.re * z.re + z.im * z.im; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const RationalComplex& z) {
    if (z.im == 0) return z.re.get_str();
    std::string s = z.re == 0 ? std::string() : z.re.get_str();
    std::string i = z.im.get_str();
    if (!s.empty() && i[0] != '-') s += '+';
    return s + i + "i";
}

inline std::complex<double> to_complex_double(const RationalComplex& z) {
    return {z.re.get_d(), z.im.get_d()};
}

}  // namespace contextlab

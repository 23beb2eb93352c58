#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <vector>

#include "contextlab/rational.hpp"

namespace contextlab {

// Scalar backends for the dense vector core. Everything downstream of a
// RaySet is templated on one of these two scalars; exact and floating data
// never mix inside one computation.
template <class S>
struct scalar_ops;

template <>
struct scalar_ops<RationalComplex> {
    static constexpr bool exact = true;
    static RationalComplex zero() { return {}; }
    static RationalComplex one() { return {1}; }
    static RationalComplex conjugate(const RationalComplex& z) { return conj(z); }
    static bool is_zero(const RationalComplex& z) { return z.is_zero(); }
    static double abs_approx(const RationalComplex& z) { return std::abs(to_complex_double(z)); }
};

template <>
struct scalar_ops<std::complex<double>> {
    static constexpr bool exact = false;
    static std::complex<double> zero() { return {}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> conjugate(const std::complex<double>& z) { return std::conj(z); }
    static bool is_zero(const std::complex<double>& z) { return z == std::complex<double>{}; }
    static double abs_approx(const std::complex<double>& z) { return std::abs(z); }
};

using ExactScalar = RationalComplex;
using FloatScalar = std::complex<double>;

/// Dense column vector in C^d. The scalar decides exact vs floating mode.
template <class S>
struct KVec {
    std::vector<S> c;

    KVec() = default;
    explicit KVec(std::vector<S> comps) : c(std::move(comps)) {}
    explicit KVec(int dim) : c(static_cast<size_t>(dim), scalar_ops<S>::zero()) {}

    int dim() const { return static_cast<int>(c.size()); }
    const S& operator[](int i) const { return c[static_cast<size_t>(i)]; }
    S& operator[](int i) { return c[static_cast<size_t>(i)]; }

    bool is_zero() const {
        for (const S& x : c)
            if (!scalar_ops<S>::is_zero(x)) return false;
        return true;
    }
    friend bool operator==(const KVec& a, const KVec& b) { return a.c == b.c; }
};

using ExactVec = KVec<ExactScalar>;
using FloatVec = KVec<FloatScalar>;

inline void require_same_dim(int a, int b) {
    if (a != b) throw error("dimension mismatch");
}

/// <u|v>, conjugate-linear in the first argument.
template <class S>
S inner_product(const KVec<S>& u, const KVec<S>& v) {
    require_same_dim(u.dim(), v.dim());
    S acc = scalar_ops<S>::zero();
    for (int i = 0; i < u.dim(); ++i) acc += scalar_ops<S>::conjugate(u[i]) * v[i];
    return acc;
}

template <class S>
KVec<S> operator*(const S& a, const KVec<S>& v) {
    KVec<S> r = v;
    for (S& x : r.c) x = a * x;
    return r;
}

template <class S>
KVec<S> operator-(const KVec<S>& a, const KVec<S>& b) {
    require_same_dim(a.dim(), b.dim());
    KVec<S> r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

/// Vector orthogonal to both u and v in C^3 (conjugated formal cross
/// product, so <u|w> = <v|w> = 0 holds for complex entries too).
template <class S>
KVec<S> orthogonal_complement3(const KVec<S>& u, const KVec<S>& v) {
    if (u.dim() != 3 || v.dim() != 3) throw error("orthogonal_complement3 needs dim 3");
    auto cj = [](const S& z) { return scalar_ops<S>::conjugate(z); };
    KVec<S> w(std::vector<S>(3, scalar_ops<S>::zero()));
    w[0] = cj(u[1]) * cj(v[2]) - cj(u[2]) * cj(v[1]);
    w[1] = cj(u[2]) * cj(v[0]) - cj(u[0]) * cj(v[2]);
    w[2] = cj(u[0]) * cj(v[1]) - cj(u[1]) * cj(v[0]);
    return w;
}

/// Component of v orthogonal to every vector in basis (classical
/// Gram-Schmidt; basis vectors need not be normalized).
template <class S>
KVec<S> project_out(KVec<S> v, const std::vector<KVec<S>>& basis) {
    for (const KVec<S>& b : basis) {
        S nb = inner_product(b, b);
        S coef = inner_product(b, v) / nb;
        v = v - coef * b;
    }
    return v;
}

template <class S>
KVec<S> standard_basis_vector(int dim, int k) {
    KVec<S> v(std::vector<S>(static_cast<size_t>(dim), scalar_ops<S>::zero()));
    v[k] = scalar_ops<S>::one();
    return v;
}

}  // namespace contextlab

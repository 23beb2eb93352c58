#include "contextlab/ray.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace contextlab {

KVec<ExactScalar> canonicalize(const KVec<ExactScalar>& v) {
    int first = -1;
    for (int i = 0; i < v.dim(); ++i)
        if (!v[i].is_zero()) {
            first = i;
            break;
        }
    if (first < 0) throw error("cannot canonicalize the zero vector");

    // Divide by the first nonzero component (makes it 1, real positive),
    // then rescale to coprime integer parts.
    KVec<ExactScalar> w = v;
    ExactScalar pivot = v[first];
    for (auto& x : w.c) x = x / pivot;

    Integer lcm = 1;
    for (const auto& x : w.c) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.re.get_den().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.im.get_den().get_mpz_t());
    }
    Integer gcd = 0;
    auto fold_gcd = [&gcd](const Integer& z) {
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), z.get_mpz_t());
    };
    std::vector<std::pair<Integer, Integer>> ints;
    ints.reserve(w.c.size());
    for (const auto& x : w.c) {
        Integer re = x.re.get_num() * (lcm / x.re.get_den());
        Integer im = x.im.get_num() * (lcm / x.im.get_den());
        fold_gcd(re);
        fold_gcd(im);
        ints.emplace_back(std::move(re), std::move(im));
    }
    KVec<ExactScalar> out(std::vector<ExactScalar>(w.c.size()));
    for (size_t i = 0; i < ints.size(); ++i)
        out.c[i] = ExactScalar{Rational(ints[i].first / gcd), Rational(ints[i].second / gcd)};
    return out;
}

KVec<FloatScalar> canonicalize(const KVec<FloatScalar>& v) {
    double maxabs = 0.0;
    for (const auto& x : v.c) maxabs = std::max(maxabs, std::abs(x));
    if (maxabs == 0.0) throw error("cannot canonicalize the zero vector");

    int first = -1;
    for (int i = 0; i < v.dim(); ++i)
        if (std::abs(v[i]) > 1e-12 * maxabs) {
            first = i;
            break;
        }
    FloatScalar phase = v[first] / std::abs(v[first]);
    double norm = 0.0;
    for (const auto& x : v.c) norm += std::norm(x);
    norm = std::sqrt(norm);

    KVec<FloatScalar> out = v;
    for (auto& x : out.c) x *= std::conj(phase) / norm;
    out.c[static_cast<size_t>(first)] = {out[first].real(), 0.0};  // kill rounding residue
    return out;
}

bool ray_equal(const ExactRay& a, const ExactRay& b) { return a.vec() == b.vec(); }

bool ray_equal(const FloatRay& a, const FloatRay& b, double tol) {
    if (a.dim() != b.dim()) return false;
    return std::abs(inner_product(a.vec(), b.vec())) > 1.0 - tol;
}

std::string to_string(const ExactRay& r) {
    std::string s = "(";
    for (int i = 0; i < r.dim(); ++i) {
        if (i) s += ",";
        s += to_string(r.vec()[i]);
    }
    return s + ")";
}

std::string to_string(const FloatRay& r) {
    char buf[64];
    std::string s = "(";
    for (int i = 0; i < r.dim(); ++i) {
        if (i) s += ",";
        const FloatScalar& z = r.vec()[i];
        if (z.imag() == 0.0) {
            std::snprintf(buf, sizeof buf, "%.12g", z.real());
            s += buf;
        } else {
            std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
            s += buf;
        }
    }
    return s + ")";
}

}  // namespace contextlab

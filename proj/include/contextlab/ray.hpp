#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "contextlab/linalg.hpp"

namespace contextlab {

// Default tolerance for floating-mode orthogonality and ray-equality tests,
// applied to unit-normalized vectors.
inline constexpr double kFloatTol = 1e-9;

/// Canonical form of a projective ray.
///
/// Exact mode: components are scaled to coprime (Gaussian-)integers with the
/// first nonzero component real and positive. Floating mode: unit norm with
/// the first significant component real and positive. Canonicalization is a
/// fixed point, so two proportional vectors canonicalize identically (exact
/// mode) or compare equal under ray_equal (floating mode).
KVec<ExactScalar> canonicalize(const KVec<ExactScalar>& v);
KVec<FloatScalar> canonicalize(const KVec<FloatScalar>& v);

template <class S>
class Ray {
  public:
    static Ray canonical(const KVec<S>& v) {
        if (v.dim() < 2) throw error("ray needs dim >= 2");
        return Ray(canonicalize(v));
    }
    const KVec<S>& vec() const { return rep_; }
    int dim() const { return rep_.dim(); }

  private:
    explicit Ray(KVec<S> rep) : rep_(std::move(rep)) {}
    KVec<S> rep_;
};

using ExactRay = Ray<ExactScalar>;
using FloatRay = Ray<FloatScalar>;

bool ray_equal(const ExactRay& a, const ExactRay& b);
bool ray_equal(const FloatRay& a, const FloatRay& b, double tol = kFloatTol);

inline bool operator==(const ExactRay& a, const ExactRay& b) { return ray_equal(a, b); }
inline bool operator==(const FloatRay& a, const FloatRay& b) { return ray_equal(a, b); }

std::string to_string(const ExactRay& r);
std::string to_string(const FloatRay& r);

/// Exact mode ignores tol; floating mode tests |<u|v>| < tol on the
/// unit-normalized representatives.
template <class S>
bool is_orthogonal(const Ray<S>& u, const Ray<S>& v, double tol = kFloatTol) {
    require_same_dim(u.dim(), v.dim());
    S ip = inner_product(u.vec(), v.vec());
    if constexpr (scalar_ops<S>::exact) {
        (void)tol;
        return scalar_ops<S>::is_zero(ip);
    } else {
        double nu = std::sqrt(std::abs(inner_product(u.vec(), u.vec())));
        double nv = std::sqrt(std::abs(inner_product(v.vec(), v.vec())));
        return std::abs(ip) / (nu * nv) < tol;
    }
}

/// Ordered set of distinct rays of one dimension.
template <class S>
struct RaySet {
    int dim = 0;
    std::vector<Ray<S>> rays;
    std::vector<std::string> labels;  // empty or one per ray

    static RaySet from_vectors(const std::vector<KVec<S>>& vecs,
                               std::vector<std::string> labels = {}) {
        if (vecs.empty()) throw error("empty ray set");
        RaySet rs;
        rs.dim = vecs.front().dim();
        for (const KVec<S>& v : vecs) {
            if (v.dim() != rs.dim) throw error("ray set with mixed dimensions");
            Ray<S> r = Ray<S>::canonical(v);
            for (const Ray<S>& prev : rs.rays)
                if (prev == r) throw error("duplicate ray: " + to_string(r));
            rs.rays.push_back(std::move(r));
        }
        rs.labels = std::move(labels);
        if (!rs.labels.empty() && rs.labels.size() != rs.rays.size())
            throw error("label count does not match ray count");
        return rs;
    }

    int size() const { return static_cast<int>(rays.size()); }
};

using ExactRaySet = RaySet<ExactScalar>;
using FloatRaySet = RaySet<FloatScalar>;

/// Mode-erased ray set for file and CLI boundaries. Exact and floating data
/// never mix: operations dispatch on the active alternative and reject
/// cross-mode arguments.
using ModalRaySet = std::variant<ExactRaySet, FloatRaySet>;

inline bool is_exact(const ModalRaySet& m) { return std::holds_alternative<ExactRaySet>(m); }
inline int modal_dim(const ModalRaySet& m) {
    return std::visit([](const auto& rs) { return rs.dim; }, m);
}
inline int modal_size(const ModalRaySet& m) {
    return std::visit([](const auto& rs) { return rs.size(); }, m);
}

inline FloatVec to_float_vec(const ExactVec& v) {
    FloatVec f(v.dim());
    for (int i = 0; i < v.dim(); ++i) f[i] = to_complex_double(v[i]);
    return f;
}

inline FloatRaySet to_float_rays(const ExactRaySet& rs) {
    std::vector<FloatVec> vecs;
    vecs.reserve(rs.rays.size());
    for (const ExactRay& r : rs.rays) vecs.push_back(to_float_vec(r.vec()));
    return FloatRaySet::from_vectors(vecs, rs.labels);
}

inline FloatRaySet to_float_rays(const FloatRaySet& rs) { return rs; }

inline FloatRaySet to_float_rays(const ModalRaySet& m) {
    return std::visit([](const auto& rs) { return to_float_rays(rs); }, m);
}

/// Exactly d mutually orthogonal rays in C^d.
template <class S>
struct OrthoBasis {
    int dim = 0;
    std::vector<Ray<S>> members;

    static OrthoBasis checked(int dim, std::vector<Ray<S>> members, double tol = kFloatTol) {
        if (static_cast<int>(members.size()) != dim)
            throw error("orthogonal basis needs exactly dim members");
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                if (!is_orthogonal(members[i], members[j], tol))
                    throw error("basis members not mutually orthogonal");
        OrthoBasis b;
        b.dim = dim;
        b.members = std::move(members);
        return b;
    }
};

/// The unique third ray orthogonal to an orthogonal pair in C^3.
template <class S>
Ray<S> complete_pair_d3(const Ray<S>& u, const Ray<S>& v, double tol = kFloatTol) {
    if (u.dim() != 3) throw error("complete_pair_d3 needs dim 3");
    if (!is_orthogonal(u, v, tol)) throw error("complete_pair_d3 needs orthogonal inputs");
    if (u == v) throw error("complete_pair_d3 needs distinct rays");
    return Ray<S>::canonical(orthogonal_complement3(u.vec(), v.vec()));
}

template <class S>
struct BasisCompletion {
    OrthoBasis<S> basis;
    std::vector<Ray<S>> added;  // completion rays, in adjunction order
};

/// Extends 2..d mutually orthogonal rays to a full basis by Gram-Schmidt
/// against the standard basis vectors in index order (the deterministic
/// "canonical completion" used in reports). For d=3 and two inputs this
/// agrees with complete_pair_d3.
template <class S>
BasisCompletion<S> complete_to_basis(const std::vector<Ray<S>>& partial, int d,
                                     double tol = kFloatTol) {
    if (partial.size() < 2 || static_cast<int>(partial.size()) > d)
        throw error("complete_to_basis needs between 2 and d rays");
    for (size_t i = 0; i < partial.size(); ++i) {
        if (partial[i].dim() != d) throw error("dimension mismatch");
        for (size_t j = i + 1; j < partial.size(); ++j)
            if (!is_orthogonal(partial[i], partial[j], tol))
                throw error("complete_to_basis needs mutually orthogonal rays");
    }
    std::vector<KVec<S>> span;
    for (const Ray<S>& r : partial) span.push_back(r.vec());

    BasisCompletion<S> out;
    std::vector<Ray<S>> members = partial;
    for (int k = 0; k < d && static_cast<int>(members.size()) < d; ++k) {
        KVec<S> res = project_out(standard_basis_vector<S>(d, k), span);
        bool nonzero;
        if constexpr (scalar_ops<S>::exact) {
            nonzero = !res.is_zero();
        } else {
            nonzero = std::sqrt(std::abs(inner_product(res, res))) > 1e-8;
        }
        if (!nonzero) continue;
        Ray<S> r = Ray<S>::canonical(res);
        out.added.push_back(r);
        members.push_back(r);
        span.push_back(res);
    }
    if (static_cast<int>(members.size()) != d) throw error("completion failed");
    out.basis = OrthoBasis<S>::checked(d, std::move(members), tol);
    return out;
}

}  // namespace contextlab

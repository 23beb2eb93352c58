#include "contextlab/fixtures.hpp"

#include <algorithm>
#include <array>

namespace contextlab {

namespace {

KVec<ExactScalar> int_vec(const std::vector<long>& comps) {
    KVec<ExactScalar> v(static_cast<int>(comps.size()));
    for (size_t i = 0; i < comps.size(); ++i) v.c[i] = ExactScalar{Rational(comps[i]), Rational(0)};
    return v;
}

std::string int_label(const KVec<ExactScalar>& v) {
    std::string s;
    for (int i = 0; i < v.dim(); ++i) {
        if (i) s += ",";
        s += v.c[static_cast<size_t>(i)].re.get_str();
    }
    return s;
}

}  // namespace

RaySet<ExactScalar> thirteen_vector_set() {
    const std::array<std::array<long, 3>, 5> seeds = {{
        {0, 0, 1}, {0, 1, 1}, {0, 1, -1}, {1, 1, 1}, {1, 1, -1},
    }};
    std::vector<Ray<ExactScalar>> rays;
    std::vector<KVec<ExactScalar>> vecs;
    std::vector<std::string> labels;
    for (const auto& seed : seeds) {
        std::array<int, 3> idx = {0, 1, 2};
        do {
            KVec<ExactScalar> v = int_vec({seed[static_cast<size_t>(idx[0])],
                                           seed[static_cast<size_t>(idx[1])],
                                           seed[static_cast<size_t>(idx[2])]});
            Ray<ExactScalar> r = Ray<ExactScalar>::canonical(v);
            bool seen = false;
            for (const auto& prev : rays)
                if (ray_equal(prev, r)) {
                    seen = true;
                    break;
                }
            if (!seen) {
                vecs.push_back(r.vec());
                labels.push_back(int_label(r.vec()));
                rays.push_back(std::move(r));
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return RaySet<ExactScalar>::from_vectors(vecs, labels);
}

RaySet<ExactScalar> thirteen_vector_set_extended(int extra_dims) {
    if (extra_dims < 0) throw error("extra_dims must be nonnegative");
    RaySet<ExactScalar> base = thirteen_vector_set();
    if (extra_dims == 0) return base;
    int dim = 3 + extra_dims;
    std::vector<KVec<ExactScalar>> vecs;
    std::vector<std::string> labels;
    for (int i = 0; i < base.size(); ++i) {
        KVec<ExactScalar> v(dim);
        for (int k = 0; k < 3; ++k) v.c[static_cast<size_t>(k)] = base.rays[static_cast<size_t>(i)].vec().c[static_cast<size_t>(k)];
        vecs.push_back(v);
        labels.push_back(int_label(v));
    }
    for (int k = 3; k < dim; ++k) {
        KVec<ExactScalar> v = standard_basis_vector<ExactScalar>(dim, k);
        vecs.push_back(v);
        labels.push_back(int_label(v));
    }
    return RaySet<ExactScalar>::from_vectors(vecs, labels);
}

}  // namespace contextlab

#pragma once

#include "contextlab/ray.hpp"

namespace contextlab {

/// The 13-ray set in C^3 built from (0,0,1), (0,1,1), (0,1,-1), (1,1,1),
/// (1,1,-1) and all component permutations, with duplicate rays collapsed
/// (3 coordinate rays + 6 one-zero rays + 4 no-zero rays).
RaySet<ExactScalar> thirteen_vector_set();

/// Embedding of the 13-ray set in dimension 3+extra_dims: every ray padded
/// with zeros, plus the extra_dims new coordinate rays. 13+extra_dims rays;
/// extra_dims = 0 returns the base set.
RaySet<ExactScalar> thirteen_vector_set_extended(int extra_dims);

}  // namespace contextlab

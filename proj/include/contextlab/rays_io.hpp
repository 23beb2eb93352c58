#pragma once

#include <iosfwd>
#include <string>

#include "contextlab/ray.hpp"

namespace contextlab {

// Text format for ray sets:
//   header line  `dim=<d> mode=<exact|float>`
//   one vector per line, components comma-separated; exact components are
//   integers or `a/b` rationals with an optional `+c/di` imaginary part;
//   float components are decimals. `#` starts a comment, a trailing
//   `label=<string>` names the ray.
ModalRaySet parse_rays(std::istream& in);
ModalRaySet read_rays_file(const std::string& path);
std::string format_rays(const ModalRaySet& rays);
void write_rays_file(const std::string& path, const ModalRaySet& rays);

ExactScalar parse_exact_component(const std::string& tok);
FloatScalar parse_float_component(const std::string& tok);

}  // namespace contextlab

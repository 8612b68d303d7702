/**
 * @file render.hpp
 * @brief Text and LaTeX renderers for polynomials, tables, and scalars.
 *
 * Text grammar, shared with the parsers: terms are joined by " + " in the
 * canonical key order; each term is "<coeff> * <orbit>" where the orbit
 * lists the distinct slot permutations of one exponent key. Correlator
 * slots print as z<i>^-<2d+2> (always present), volume slots as L<i>^<2d>
 * (zero exponents skipped; an all-zero key prints as the bare coefficient).
 */
#pragma once

#include <string>

#include "wpvol/poly.hpp"
#include "wpvol/transforms.hpp"

namespace wpvol {

std::string render_text(const CorrelatorPoly& w);
std::string render_text(const VolumePoly& v);
std::string render_text(const IntersectionTable& t);

std::string render_latex(const PiScalar& s);
std::string render_latex(const CorrelatorPoly& w);
std::string render_latex(const VolumePoly& v);
std::string render_latex(const IntersectionTable& t);

}  // namespace wpvol

#pragma once

#include <iosfwd>
#include <string>

#include "hilb/frobenius.hpp"

namespace hilb {

// Parse an algebra description (JSON text). Throws input_error with a
// message naming the offending key on malformed input; the returned algebra
// has been validated.
FrobeniusAlgebra load_algebra(const std::string& json_text);
FrobeniusAlgebra load_algebra_file(const std::string& path);

std::string algebra_to_json(const FrobeniusAlgebra& h);

// Built-in coefficient algebras used throughout the test and verification
// suites.
FrobeniusAlgebra point_algebra(const Rational& t);      // dim 1, Delta(1) = t 1x1
FrobeniusAlgebra plane_algebra();                        // 1, h, h^2 with e = 3h^2
FrobeniusAlgebra torus_algebra();                        // 1, a, b, w with e = 0
FrobeniusAlgebra tpoint_algebra(const Rational& t);      // dim 2: 1, v with v^2 = t v

// Resolve a --algebra argument: a builtin name ("point", "point:t", "plane",
// "torus", "tpoint", "tpoint:t") or a path to a JSON file.
FrobeniusAlgebra resolve_algebra(const std::string& arg);

} // namespace hilb

#pragma once

#include <gmpxx.h>

#include <string>

#include "hilb/errors.hpp"

namespace hilb {

// Exact rational scalar. mpq_class keeps the canonical form (positive
// denominator, coprime) after every operation.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rational_from_string(const std::string& s) {
    try {
        Rational q(s);
        if (q.get_den() == 0) throw input_error("zero denominator in rational '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw input_error("malformed rational '" + s + "'");
    }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace hilb

#pragma once

#include <gmpxx.h>

#include <string>

#include "gwz/errors.hpp"

namespace gwz {

// Exact arbitrary-precision rational scalar. All symbolic-side computation in
// this library is done over these; no floating point enters until the numeric
// evaluators in hurwitz.hpp / multi_zeta.hpp.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p", "-p" or "p/q". Used by the JSON matrix/polynomial formats.
inline Rational parse_rational(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational: '" + s + "'");
    }
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace gwz

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "omegacat/errors.hpp"

namespace omegacat {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

// Representative of a in [0, m), m > 0.
inline Integer floor_mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer parse_integer(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw ParseError("empty integer literal");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw ParseError("bad integer literal '" + std::string(s) + "'");
    return Integer(std::string(s));
}

inline std::string to_string(const Integer& a) { return a.str(); }

inline bool is_zero_vector(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline IntVector add_vectors(const IntVector& a, const IntVector& b) {
    IntVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline IntVector sub_vectors(const IntVector& a, const IntVector& b) {
    IntVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline IntVector scale_vector(const IntVector& a, const Integer& k) {
    IntVector r(a);
    for (auto& x : r) x *= k;
    return r;
}

inline IntVector unit_vector(std::size_t n, std::size_t i) {
    IntVector r(n, 0);
    r[i] = 1;
    return r;
}

}  // namespace omegacat

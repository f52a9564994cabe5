#ifndef TORICBUNCH_RATIONAL_HPP
#define TORICBUNCH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

namespace toric {

// Exact arithmetic everywhere: lattice entries are arbitrary-precision
// integers, cone data lives over the rationals.  cpp_rational keeps values
// in lowest terms with positive denominator, which is the canonical form
// we rely on for structural equality.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// Floor division with sign convention q = floor(a/b), valid for b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline bool is_zero(const RatVector& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

inline RatVector rat_vector(const IntVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline Rat dot(const RatVector& a, const RatVector& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVector add(const RatVector& a, const RatVector& b) {
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVector sub(const RatVector& a, const RatVector& b) {
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVector scale(const Rat& c, const RatVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline RatVector negate(const RatVector& v) { return scale(Rat(-1), v); }

// Unique primitive integer vector on the ray through v (positive scaling
// only, so the orientation of v is preserved).  Zero stays zero.
inline IntVector primitive(const RatVector& v) {
    Int l = 1;
    for (const Rat& x : v) l = int_lcm(l, rat_den(x));
    IntVector w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = rat_num(v[i]) * (l / rat_den(v[i]));
        g = int_gcd(g, w[i]);
    }
    if (g > 1)
        for (Int& x : w) x /= g;
    return w;
}

inline std::string to_string(const RatVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace toric

#endif

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "trax/error.hpp"

namespace trax {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals throughout. Weights in a splitting sequence shrink geometrically,
// so fixed-width types would overflow almost immediately.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& r) { return r.sign(); }
inline int sign_of(const Int& n) { return n.sign(); }

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical text form "p/q" with q > 0 and gcd(p,q)=1; parse also accepts "p".
inline std::string rat_to_string(const Rat& r) {
    return num(r).str() + "/" + den(r).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw Error(Err::ParseError, "zero denominator in '" + s + "'");
        return Rat(p, q);
    } catch (const std::runtime_error& e) {
        throw Error(Err::ParseError, "bad rational '" + s + "'");
    }
}

// Closed rational interval, used for certified evaluation at a real root.
struct RatInterval {
    Rat lo, hi;

    RatInterval() = default;
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    static RatInterval point(const Rat& x) { return {x, x}; }

    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    Rat width() const { return hi - lo; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }

    RatInterval operator*(const RatInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        Rat mn = a, mx = a;
        for (const Rat* x : {&b, &c, &d}) {
            if (*x < mn) mn = *x;
            if (*x > mx) mx = *x;
        }
        return {mn, mx};
    }

    RatInterval operator*(const Rat& c) const {
        if (c.sign() >= 0) return {lo * c, hi * c};
        return {hi * c, lo * c};
    }
};

} // namespace trax

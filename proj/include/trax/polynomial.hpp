#pragma once

#include <utility>
#include <vector>

#include "trax/rational.hpp"

namespace trax {

// Dense univariate polynomial over the rationals, coefficients low to high.
// The empty vector is the zero polynomial.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
    static Poly constant(const Rat& r) { return Poly(std::vector<Rat>{r}); }
    static Poly x() { return Poly({Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const { return c_.back(); }

    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
        return c_[i];
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly operator+(const Poly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    Poly operator*(const Rat& k) const {
        std::vector<Rat> r = c_;
        for (auto& v : r) v *= k;
        return Poly(std::move(r));
    }

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw Error(Err::DivisionByZero, "polynomial division by zero");
        std::vector<Rat> rem = c_;
        std::vector<Rat> quo;
        int dd = d.degree();
        while (static_cast<int>(rem.size()) - 1 >= dd) {
            Rat f = rem.back() / d.leading();
            int shift = static_cast<int>(rem.size()) - 1 - dd;
            if (static_cast<int>(quo.size()) < shift + 1) quo.resize(shift + 1, Rat(0));
            quo[shift] = f;
            for (int i = 0; i <= dd; ++i) rem[shift + i] -= f * d.c_[i];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    Poly mod(const Poly& d) const { return divmod(d).second; }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return Poly(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RatInterval eval(const RatInterval& x) const {
        RatInterval acc = RatInterval::point(Rat(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + RatInterval::point(*it);
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (Rat(1) / leading());
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
inline std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(Rat(1)), s1;
    Poly t0, t1 = Poly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1); r1 = std::move(r);
        Poly s2 = s0 - q * s1; s0 = std::move(s1); s1 = std::move(s2);
        Poly t2 = t0 - q * t1; t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rat inv = Rat(1) / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

inline bool is_square_free(const Poly& p) {
    if (p.degree() <= 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

// Number of distinct real roots in (lo, hi], via a Sturm chain.
inline int sturm_root_count(const Poly& p, const Rat& lo, const Rat& hi) {
    std::vector<Poly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        Poly r = chain[chain.size() - 2].mod(chain.back());
        chain.push_back(r * Rat(-1));
    }
    auto variations = [&chain](const Rat& x) {
        int count = 0, prev = 0;
        for (const Poly& q : chain) {
            int s = q.eval(x).sign();
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return variations(lo) - variations(hi);
}

// Integer-coefficient view: clears denominators and divides by the content,
// normalising the leading coefficient to be positive.
inline std::vector<Int> primitive_integer_coeffs(const Poly& p) {
    Int lcm_den(1);
    for (const Rat& c : p.coeffs()) lcm_den = boost::multiprecision::lcm(lcm_den, den(c));
    std::vector<Int> out;
    Int content(0);
    for (const Rat& c : p.coeffs()) {
        Int v = num(c) * (lcm_den / den(c));
        out.push_back(v);
        content = boost::multiprecision::gcd(content, boost::multiprecision::abs(v));
    }
    if (content == 0) return out;
    for (auto& v : out) v /= content;
    if (out.back() < 0)
        for (auto& v : out) v = -v;
    return out;
}

// Screen for a rational root of an integer polynomial. Candidates p/q need
// p | a0 and q | lead; divisor enumeration is by trial division, which is
// fine at the coefficient sizes minimal polynomials have here.
inline bool has_rational_root(const std::vector<Int>& c) {
    if (c.empty()) return false;
    // strip zero roots
    size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) return true; // x divides
    auto divisors = [](Int n) {
        n = boost::multiprecision::abs(n);
        std::vector<Int> ds;
        for (Int d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                ds.push_back(d);
                if (d != n / d) ds.push_back(n / d);
            }
            if (ds.size() > 4096) break; // screen only; give up on huge inputs
        }
        return ds;
    };
    Poly p;
    {
        std::vector<Rat> rc;
        for (const Int& v : c) rc.emplace_back(v);
        p = Poly(std::move(rc));
    }
    for (const Int& a : divisors(c.front())) {
        for (const Int& b : divisors(c.back())) {
            for (int s : {1, -1}) {
                Rat cand(a * s, b);
                if (p.eval(cand) == 0) return true;
            }
        }
    }
    return false;
}

} // namespace trax

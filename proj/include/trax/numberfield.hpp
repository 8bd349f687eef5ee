#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trax/polynomial.hpp"

namespace trax {

// Exact arithmetic in a real number field Q(lambda), where lambda is the
// unique real root of min_poly inside an isolating interval. Elements are
// polynomials in lambda reduced mod min_poly. Sign determination is by
// rational interval arithmetic with interval bisection, falling back to an
// exact zero test first, so it is certified and always terminates.
//
// Irreducibility of min_poly is screened only (square-free check plus
// rational-root test); a reducible polynomial that passes the screen gives a
// ring, not a field, and division may then fail with FieldMismatch.
class NumberField {
public:
    NumberField(const Poly& min_poly, Rat iv_lo, Rat iv_hi) {
        if (min_poly.degree() < 1)
            throw Error(Err::NoRootInInterval, "minimal polynomial must be nonconstant");
        int_coeffs_ = primitive_integer_coeffs(min_poly);
        std::vector<Rat> rc;
        for (const Int& v : int_coeffs_) rc.emplace_back(v);
        poly_ = Poly(std::move(rc)).monic();

        if (!is_square_free(poly_))
            throw Error(Err::MultipleRootsSuspected, "minimal polynomial is not square-free");
        if (poly_.degree() >= 2 && has_rational_root(int_coeffs_))
            throw Error(Err::MultipleRootsSuspected,
                        "minimal polynomial has a rational root, so it is reducible");

        if (iv_lo > iv_hi) std::swap(iv_lo, iv_hi);
        lo_ = std::move(iv_lo);
        hi_ = std::move(iv_hi);
        int slo = poly_.eval(lo_).sign();
        int shi = poly_.eval(hi_).sign();
        if (poly_.degree() == 1) {
            // Degenerate field isomorphic to Q; the root is exact.
            Rat root = -poly_.coeff(0);
            if (root < lo_ || root > hi_)
                throw Error(Err::NoRootInInterval, "linear root lies outside the interval");
            lo_ = hi_ = root;
            return;
        }
        if (slo == 0 || shi == 0)
            throw Error(Err::NoRootInInterval,
                        "interval endpoints must not be roots (shrink the interval)");
        if (slo == shi)
            throw Error(Err::NoRootInInterval, "no sign change over the interval");
        int nroots = sturm_root_count(poly_, lo_, hi_);
        if (nroots == 0) throw Error(Err::NoRootInInterval, "Sturm count is zero");
        if (nroots > 1)
            throw Error(Err::MultipleRootsSuspected, "interval isolates more than one root");
    }

    int degree() const { return poly_.degree(); }
    const Poly& min_poly() const { return poly_; }
    const std::vector<Int>& min_poly_int() const { return int_coeffs_; }
    const Rat& iv_lo() const { return lo_; }
    const Rat& iv_hi() const { return hi_; }

    // Exact rational value of lambda; only valid for degree-1 fields.
    Rat rational_root() const { return lo_; }

    // Halve the isolating interval, keeping the root. Pure: returns endpoints.
    std::pair<Rat, Rat> bisect(const Rat& lo, const Rat& hi) const {
        Rat mid = (lo + hi) / 2;
        int smid = poly_.eval(mid).sign();
        if (smid == 0) return {mid, mid}; // cannot happen after the screen for degree >= 2
        if (smid == poly_.eval(lo).sign()) return {mid, hi};
        return {lo, mid};
    }

    bool same_field(const NumberField& o) const {
        if (int_coeffs_ != o.int_coeffs_) return false;
        if (this == &o) return true;
        if (degree() == 1) return lo_ == o.lo_;
        // Same polynomial: equal iff the intervals isolate the same root.
        Rat lo = std::max(lo_, o.lo_), hi = std::min(hi_, o.hi_);
        if (lo >= hi) return false;
        return sturm_root_count(poly_, lo, hi) == 1;
    }

private:
    Poly poly_;                   // monic
    std::vector<Int> int_coeffs_; // primitive integer form
    Rat lo_, hi_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

inline FieldPtr nf_new(const Poly& min_poly, const Rat& lo, const Rat& hi) {
    return std::make_shared<const NumberField>(min_poly, lo, hi);
}

inline FieldPtr nf_rationals() {
    // Q presented as Q(lambda) with lambda = 0.
    return nf_new(Poly::x(), Rat(-1), Rat(1));
}

class NFElem {
public:
    NFElem() = default;
    NFElem(FieldPtr field, Poly value)
        : field_(std::move(field)), val_(reduce(std::move(value), *field_)) {}

    static NFElem from_rational(FieldPtr field, const Rat& r) {
        return NFElem(std::move(field), Poly::constant(r));
    }

    static NFElem generator(FieldPtr field) { return NFElem(std::move(field), Poly::x()); }

    const FieldPtr& field() const { return field_; }
    const Poly& poly() const { return val_; }
    bool is_zero() const { return val_.is_zero(); }

    bool is_rational() const { return val_.degree() <= 0; }
    Rat rational_value() const {
        if (!is_rational()) throw Error(Err::FieldMismatch, "element is not rational");
        return val_.coeff(0);
    }

    NFElem operator+(const NFElem& o) const { return bin(o, val_ + o.val_); }
    NFElem operator-(const NFElem& o) const { return bin(o, val_ - o.val_); }
    NFElem operator*(const NFElem& o) const { return bin(o, val_ * o.val_); }

    NFElem operator/(const NFElem& o) const {
        check_same(o);
        if (o.is_zero()) throw Error(Err::DivisionByZero, "division by zero field element");
        auto [g, s, t] = poly_xgcd(o.val_, field_->min_poly());
        if (g.degree() != 0)
            throw Error(Err::FieldMismatch,
                        "element not invertible; minimal polynomial is reducible");
        return NFElem(field_, val_ * s);
    }

    NFElem operator-() const { return NFElem(field_, val_ * Rat(-1)); }

    bool operator==(const NFElem& o) const {
        check_same(o);
        return val_ == o.val_;
    }
    bool operator!=(const NFElem& o) const { return !(*this == o); }

    // Exact sign of the element evaluated at lambda.
    int sign() const {
        if (val_.is_zero()) return 0;
        if (field_->degree() == 1) return val_.eval(field_->rational_root()).sign();
        // Zero test robust even against a reducible min_poly that slipped
        // through the screen: the element vanishes at lambda iff
        // gcd(val, min_poly) has a root in the isolating interval.
        Poly g = poly_gcd(val_, field_->min_poly());
        if (g.degree() >= 1 &&
            sturm_root_count(g, field_->iv_lo(), field_->iv_hi()) >= 1)
            return 0;
        Rat lo = field_->iv_lo(), hi = field_->iv_hi();
        for (;;) {
            RatInterval v = val_.eval(RatInterval(lo, hi));
            if (!v.contains_zero()) return v.lo.sign() > 0 ? 1 : -1;
            auto [nlo, nhi] = field_->bisect(lo, hi);
            lo = std::move(nlo);
            hi = std::move(nhi);
        }
    }

    bool operator<(const NFElem& o) const { return (*this - o).sign() < 0; }
    bool operator>(const NFElem& o) const { return (*this - o).sign() > 0; }

private:
    static Poly reduce(Poly v, const NumberField& f) { return v.mod(f.min_poly()); }

    void check_same(const NFElem& o) const {
        if (!field_ || !o.field_)
            throw Error(Err::FieldMismatch, "uninitialised field element");
        if (field_ != o.field_ && !field_->same_field(*o.field_))
            throw Error(Err::FieldMismatch, "elements from different number fields");
    }

    NFElem bin(const NFElem& o, Poly r) const {
        check_same(o);
        return NFElem(field_, std::move(r));
    }

    FieldPtr field_;
    Poly val_;
};

// Text form of an element: poly:<c0>,<c1>,...;field:<m0>,...;iv:<lo>,<hi>
// with rationals as p/q. Degree-1 fields emit the bare rational.
inline std::string nf_to_string(const NFElem& e) {
    if (e.field()->degree() == 1 || e.is_rational()) {
        if (e.field()->degree() == 1)
            return rat_to_string(e.poly().eval(e.field()->rational_root()));
    }
    std::ostringstream os;
    os << "poly:";
    int deg = e.field()->degree();
    for (int i = 0; i < deg; ++i) {
        if (i) os << ",";
        os << rat_to_string(e.poly().coeff(i));
    }
    os << ";field:";
    const auto& mc = e.field()->min_poly_int();
    for (size_t i = 0; i < mc.size(); ++i) {
        if (i) os << ",";
        os << mc[i].str();
    }
    os << ";iv:" << rat_to_string(e.field()->iv_lo()) << ","
       << rat_to_string(e.field()->iv_hi());
    return os.str();
}

namespace detail {
inline std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    out.push_back(cur);
    return out;
}
} // namespace detail

// Parses the element format above; `hint` is reused when it matches the
// field named in the text, so elements of one file share a field object.
inline NFElem nf_from_string(const std::string& s, const FieldPtr& hint = nullptr) {
    if (s.find("poly:") == std::string::npos) {
        Rat r = rat_from_string(s);
        FieldPtr f = (hint && hint->degree() == 1 && hint->rational_root() == 0)
                         ? hint
                         : nf_rationals();
        return NFElem::from_rational(f, r);
    }
    auto sections = detail::split_list(s, ';');
    if (sections.size() != 3) throw Error(Err::ParseError, "element needs poly/field/iv: " + s);
    auto want = [&](size_t i, const std::string& key) {
        if (sections[i].rfind(key, 0) != 0)
            throw Error(Err::ParseError, "expected '" + key + "' in element: " + s);
        return sections[i].substr(key.size());
    };
    std::vector<Rat> cs;
    for (const auto& t : detail::split_list(want(0, "poly:"), ',')) cs.push_back(rat_from_string(t));
    std::vector<Rat> ms;
    for (const auto& t : detail::split_list(want(1, "field:"), ',')) ms.push_back(rat_from_string(t));
    auto iv = detail::split_list(want(2, "iv:"), ',');
    if (iv.size() != 2) throw Error(Err::ParseError, "iv needs two endpoints: " + s);
    Poly mp{std::vector<Rat>(ms)};
    FieldPtr f;
    if (hint) {
        NumberField probe(mp, rat_from_string(iv[0]), rat_from_string(iv[1]));
        if (hint->same_field(probe)) f = hint;
    }
    if (!f) f = nf_new(mp, rat_from_string(iv[0]), rat_from_string(iv[1]));
    return NFElem(f, Poly(std::move(cs)));
}

} // namespace trax

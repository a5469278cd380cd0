#pragma once

#include <string>

#include "uqd/rational.hpp"

namespace uqd {

/// Homogeneous linear form c_a*alpha + c_b*beta + c_g*gamma with exact
/// rational coefficients. These are the arguments of every sinh factor
/// before evaluation at a point of the parameter plane.
struct LinForm3 {
    Rational ca, cb, cg;

    LinForm3() = default;
    LinForm3(Rational a, Rational b, Rational g)
        : ca(std::move(a)), cb(std::move(b)), cg(std::move(g)) {}

    Rational eval(const Rational& alpha, const Rational& beta, const Rational& gamma) const {
        return ca * alpha + cb * beta + cg * gamma;
    }

    bool is_zero() const { return ca.is_zero() && cb.is_zero() && cg.is_zero(); }

    friend LinForm3 operator+(const LinForm3& f, const LinForm3& g) {
        return {f.ca + g.ca, f.cb + g.cb, f.cg + g.cg};
    }
    friend LinForm3 operator-(const LinForm3& f, const LinForm3& g) {
        return {f.ca - g.ca, f.cb - g.cb, f.cg - g.cg};
    }
    friend LinForm3 operator*(const Rational& c, const LinForm3& f) {
        return {c * f.ca, c * f.cb, c * f.cg};
    }

    /// Leading (first nonzero) coefficient; zero form yields 0.
    Rational leading() const {
        if (!ca.is_zero()) return ca;
        if (!cb.is_zero()) return cb;
        return cg;
    }

    /// Form divided by its leading coefficient. Two forms are proportional
    /// iff their normalized forms are equal.
    LinForm3 normalized() const {
        Rational l = leading();
        if (l.is_zero()) return *this;
        Rational inv = l.reciprocal();
        return {inv * ca, inv * cb, inv * cg};
    }

    friend bool operator==(const LinForm3&, const LinForm3&) = default;

    /// Total order, used as a map key when grouping proportional forms.
    friend bool operator<(const LinForm3& f, const LinForm3& g) {
        if (f.ca != g.ca) return f.ca < g.ca;
        if (f.cb != g.cb) return f.cb < g.cb;
        return f.cg < g.cg;
    }

    std::string to_string() const {
        return "(" + ca.to_string() + ")a+(" + cb.to_string() + ")b+(" + cg.to_string() + ")g";
    }
};

/// Value constant + slope*s along a one-parameter path.
struct AffineForm {
    Rational constant;
    Rational slope;

    Rational eval(const Rational& s) const { return constant + slope * s; }
    bool vanishes_at_origin() const { return constant.is_zero(); }
    bool identically_zero() const { return constant.is_zero() && slope.is_zero(); }
};

} // namespace uqd

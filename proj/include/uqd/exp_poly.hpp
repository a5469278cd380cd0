#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "uqd/sinh_product.hpp"

namespace uqd {

/// Finite Laurent polynomial in w = e^{x/kappa} with exact rational
/// coefficients, keyed by integer exponent. Expanding sinh factors over a
/// common exponent scale turns identities between sums of sinh products
/// into exactly decidable polynomial identities.
using ExpPoly = std::map<long long, Rational>;

namespace detail {

inline void poly_add_scaled(ExpPoly& dst, const ExpPoly& src, const Rational& c) {
    for (const auto& [e, v] : src) {
        Rational& slot = dst[e];
        slot += v * c;
        if (slot.is_zero()) dst.erase(e);
    }
}

/// Multiplies poly by (w^e - w^{-e}) / 2.
inline ExpPoly poly_mul_sinh(const ExpPoly& poly, long long e) {
    ExpPoly r;
    const Rational half(1, 2);
    for (const auto& [d, v] : poly) {
        Rational hv = v * half;
        Rational& up = r[d + e];
        up += hv;
        if (up.is_zero()) r.erase(d + e);
        Rational& down = r[d - e];
        down -= hv;
        if (down.is_zero()) r.erase(d - e);
    }
    return r;
}

} // namespace detail

/// One additive term: coeff * prod sinh(x*a) over the multiset of arguments.
struct SinhSumTerm {
    Rational coeff;
    SinhProduct::ArgMultiset args;
};

/// Expands coeff * prod sinh(x*a) as a Laurent polynomial in w = e^{x/kappa}.
/// Every a*kappa must be an integer.
inline ExpPoly expand_sinh_term(const SinhSumTerm& term, const BigInt& kappa) {
    ExpPoly p;
    p[0] = term.coeff;
    for (const auto& [a, m] : term.args) {
        Rational scaled = a * Rational(kappa);
        if (!scaled.is_integer())
            throw std::logic_error("expand_sinh_term: kappa does not clear argument");
        long long e = scaled.numerator().to_long_long();
        for (int i = 0; i < m; ++i) p = detail::poly_mul_sinh(p, e);
    }
    return p;
}

/// Decides  sum(lhs) == sum(rhs)  for sums of canonical sinh products
/// (constants are products with empty multisets).
///
/// The identity is cleared over the pointwise-max denominator multiset, a
/// common numerator factor is divided out, and both sides are expanded as
/// Laurent polynomials over a common integer exponent scale.
inline bool sinh_sums_equal(std::span<const SinhProduct> lhs,
                            std::span<const SinhProduct> rhs) {
    using Multiset = SinhProduct::ArgMultiset;

    // Common denominator: pointwise max multiplicity over all terms.
    Multiset common_den;
    auto absorb_den = [&](const SinhProduct& p) {
        for (const auto& [a, m] : p.denominator_args()) {
            int& slot = common_den[a];
            slot = std::max(slot, m);
        }
    };
    for (const auto& p : lhs) absorb_den(p);
    for (const auto& p : rhs) absorb_den(p);

    // Numerator of each term after clearing: own numerator plus the part of
    // the common denominator its own denominator does not cover.
    auto cleared = [&](const SinhProduct& p) {
        SinhSumTerm t;
        t.coeff = p.coeff();
        t.args = p.numerator_args();
        for (const auto& [a, m] : common_den) {
            auto it = p.denominator_args().find(a);
            int extra = m - (it == p.denominator_args().end() ? 0 : it->second);
            if (extra > 0) t.args[a] += extra;
        }
        return t;
    };

    std::vector<SinhSumTerm> lterms, rterms;
    for (const auto& p : lhs)
        if (!p.is_zero()) lterms.push_back(cleared(p));
    for (const auto& p : rhs)
        if (!p.is_zero()) rterms.push_back(cleared(p));
    if (lterms.empty() && rterms.empty()) return true;

    // Divide out the numerator factors shared by every term on both sides.
    Multiset shared;
    bool first = true;
    for (const auto* terms : {&lterms, &rterms})
        for (const auto& t : *terms) {
            if (first) {
                shared = t.args;
                first = false;
                continue;
            }
            for (auto it = shared.begin(); it != shared.end();) {
                auto jt = t.args.find(it->first);
                int m = jt == t.args.end() ? 0 : jt->second;
                it->second = std::min(it->second, m);
                if (it->second == 0)
                    it = shared.erase(it);
                else
                    ++it;
            }
        }
    if (!shared.empty())
        for (auto* terms : {&lterms, &rterms})
            for (auto& t : *terms)
                for (const auto& [a, m] : shared) {
                    auto it = t.args.find(a);
                    it->second -= m;
                    if (it->second == 0) t.args.erase(it);
                }

    // Common exponent scale.
    BigInt kappa(1);
    for (const auto* terms : {&lterms, &rterms})
        for (const auto& t : *terms)
            for (const auto& [a, m] : t.args) kappa = BigInt::lcm(kappa, a.denominator());

    ExpPoly diff;
    for (const auto& t : lterms) detail::poly_add_scaled(diff, expand_sinh_term(t, kappa), Rational(1));
    for (const auto& t : rterms) detail::poly_add_scaled(diff, expand_sinh_term(t, kappa), Rational(-1));
    return diff.empty();
}

} // namespace uqd

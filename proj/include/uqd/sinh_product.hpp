#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uqd/rational.hpp"

namespace uqd {

/// Classification of a raw term list that may contain zero arguments.
/// A zero in the numerator only kills the product, a zero in the
/// denominator only makes it singular, zeros on both sides leave the value
/// undetermined until a limiting direction is chosen.
enum class TermClass { Regular, Zero, Singular, Indeterminate };

inline const char* to_string(TermClass c) {
    switch (c) {
        case TermClass::Regular: return "regular";
        case TermClass::Zero: return "zero";
        case TermClass::Singular: return "singular";
        case TermClass::Indeterminate: return "indeterminate";
    }
    return "?";
}

/// Canonical value coeff * prod sinh(x*a_i) / prod sinh(x*m_j).
///
/// Canonical form: all arguments strictly positive (sign flips absorbed into
/// the coefficient through oddness of sinh), no argument shared between the
/// two multisets, and coeff == 0 implies both multisets empty. Two canonical
/// values are equal as functions of x iff they are structurally identical.
class SinhProduct {
public:
    using ArgMultiset = std::map<Rational, int>;

    SinhProduct() = default;

    static SinhProduct constant(Rational c) {
        SinhProduct p;
        p.coeff_ = std::move(c);
        return p;
    }

    static SinhProduct zero() { return constant(Rational(0)); }
    static SinhProduct one() { return constant(Rational(1)); }

    const Rational& coeff() const { return coeff_; }
    const ArgMultiset& numerator_args() const { return num_; }
    const ArgMultiset& denominator_args() const { return den_; }

    bool is_zero() const { return coeff_.is_zero(); }
    bool is_constant() const { return num_.empty() && den_.empty(); }

    int numerator_count() const { return count(num_); }
    int denominator_count() const { return count(den_); }
    bool balanced() const { return numerator_count() == denominator_count(); }

    /// Value of the x -> 0+ limit; defined only for balanced products.
    Rational dimension_limit() const {
        if (!balanced())
            throw std::domain_error("dimension_limit: unbalanced sinh product");
        Rational r = coeff_;
        for (const auto& [a, m] : num_)
            for (int i = 0; i < m; ++i) r *= a;
        for (const auto& [a, m] : den_)
            for (int i = 0; i < m; ++i) r /= a;
        return r;
    }

    /// Signed log-magnitude at x > 0: returns {sign, log|value|}.
    /// Robust for products whose value overflows double.
    std::pair<int, double> eval_log(double x) const {
        if (coeff_.is_zero()) return {0, -std::numeric_limits<double>::infinity()};
        int sign = coeff_.sign();
        double lg = std::log(std::fabs(coeff_.to_double()));
        for (const auto& [a, m] : num_) lg += m * log_sinh(x * a.to_double());
        for (const auto& [a, m] : den_) lg -= m * log_sinh(x * a.to_double());
        return {sign, lg};
    }

    /// Plain numeric evaluation at x > 0. Debugging aid only; equality of
    /// values is always decided on canonical forms, never numerically.
    double eval_numeric(double x) const {
        auto [sign, lg] = eval_log(x);
        return sign * std::exp(lg);
    }

    friend SinhProduct multiply(const SinhProduct& a, const SinhProduct& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        SinhProduct r;
        r.coeff_ = a.coeff_ * b.coeff_;
        r.num_ = a.num_;
        r.den_ = a.den_;
        for (const auto& [arg, m] : b.num_) r.num_[arg] += m;
        for (const auto& [arg, m] : b.den_) r.den_[arg] += m;
        r.cancel();
        return r;
    }

    /// Exact quotient a / b as a formal product (arguments may move between
    /// the multisets; result is canonical).
    friend SinhProduct divide(const SinhProduct& a, const SinhProduct& b) {
        if (b.is_zero()) throw std::domain_error("divide: zero sinh product");
        SinhProduct inv;
        inv.coeff_ = b.coeff_.reciprocal();
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        return multiply(a, inv);
    }

    /// Scales the coefficient by a nonzero rational.
    SinhProduct scaled(const Rational& c) const {
        if (c.is_zero()) return zero();
        SinhProduct r = *this;
        r.coeff_ = r.coeff_ * c;
        return r;
    }

    friend bool operator==(const SinhProduct&, const SinhProduct&) = default;

    std::string to_string() const {
        std::string s = coeff_.to_string();
        if (!num_.empty()) {
            s += " * sinh[";
            s += join(num_);
            s += "]";
        }
        if (!den_.empty()) {
            s += " / sinh[";
            s += join(den_);
            s += "]";
        }
        return s;
    }

    /// Building block for make_term; inserts one argument with sign
    /// absorption. Argument must be nonzero.
    void push_numerator(Rational a) { push(num_, std::move(a)); }
    void push_denominator(Rational a) {
        push(den_, std::move(a));
    }
    void finish() { cancel(); }
    void set_coeff(Rational c) { coeff_ = std::move(c); }

private:
    Rational coeff_ = Rational(0);
    ArgMultiset num_;
    ArgMultiset den_;

    static int count(const ArgMultiset& m) {
        int n = 0;
        for (const auto& [a, k] : m) n += k;
        return n;
    }

    void push(ArgMultiset& side, Rational a) {
        if (a.is_negative()) {
            coeff_ = -coeff_;
            a = -a;
        }
        side[std::move(a)] += 1;
    }

    void cancel() {
        if (coeff_.is_zero()) {
            num_.clear();
            den_.clear();
            return;
        }
        auto it = num_.begin();
        while (it != num_.end()) {
            auto jt = den_.find(it->first);
            if (jt != den_.end()) {
                int c = std::min(it->second, jt->second);
                it->second -= c;
                jt->second -= c;
                if (jt->second == 0) den_.erase(jt);
            }
            if (it->second == 0)
                it = num_.erase(it);
            else
                ++it;
        }
    }

    static std::string join(const ArgMultiset& m) {
        std::string s;
        bool first = true;
        for (const auto& [a, k] : m)
            for (int i = 0; i < k; ++i) {
                if (!first) s += " ";
                s += a.to_string();
                first = false;
            }
        return s;
    }

    static double log_sinh(double y) {
        // y > 0 for canonical arguments and x > 0.
        if (y < 20.0) return std::log(std::sinh(y));
        return y - std::log(2.0) + std::log1p(-std::exp(-2.0 * y));
    }
};

/// Result of classifying and canonicalizing a raw term.
struct TermResult {
    TermClass cls = TermClass::Regular;
    SinhProduct value;                     // valid for Regular and Zero
    std::optional<Rational> offending_den; // set for Singular
};

/// Classifies a raw term list and, for Regular/Zero inputs, returns the
/// canonical product: negative arguments are flipped with the coefficient
/// negated, and common arguments are cancelled with multiplicity.
inline TermResult make_term(Rational coeff, std::span<const Rational> num,
                            std::span<const Rational> den) {
    bool zero_num = false;
    std::optional<Rational> zero_den;
    for (const auto& a : num)
        if (a.is_zero()) zero_num = true;
    for (const auto& a : den)
        if (a.is_zero() && !zero_den) zero_den = a;

    TermResult r;
    if (zero_den) {
        r.cls = zero_num ? TermClass::Indeterminate : TermClass::Singular;
        r.offending_den = zero_den;
        return r;
    }
    if (zero_num) {
        r.cls = TermClass::Zero;
        r.value = SinhProduct::zero();
        return r;
    }
    r.cls = TermClass::Regular;
    SinhProduct p;
    p.set_coeff(std::move(coeff));
    if (!p.is_zero()) {
        for (const auto& a : num) p.push_numerator(a);
        for (const auto& a : den) p.push_denominator(a);
        p.finish();
    }
    r.value = std::move(p);
    return r;
}

inline TermResult make_term(Rational coeff, const std::vector<Rational>& num,
                            const std::vector<Rational>& den) {
    return make_term(std::move(coeff), std::span<const Rational>(num),
                     std::span<const Rational>(den));
}

} // namespace uqd

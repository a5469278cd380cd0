#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uqd/linform.hpp"
#include "uqd/sinh_product.hpp"
#include "uqd/vogel.hpp"

namespace uqd {

/// Cartan-power index: k copies of the second antisymmetric summand, n
/// copies of the adjoint.
struct CartanPowerIndex {
    int k = 0;
    int n = 0;

    friend bool operator==(const CartanPowerIndex&, const CartanPowerIndex&) = default;
};

/// One multiplicative factor of the universal product, before evaluation:
/// paired lists of linear forms (one numerator and one denominator argument
/// per product index).
struct SymbolicFactor {
    std::string name;
    std::vector<LinForm3> num;
    std::vector<LinForm3> den;
};

namespace detail {

inline LinForm3 quarter_form(long long ca, long long cb, long long cg) {
    const Rational q(1, 4);
    return {q * rat(ca), q * rat(cb), q * rat(cg)};
}

} // namespace detail

/// The thirteen factors of the universal quantum-dimension product. Every
/// argument form carries the global 1/4 scale, so an argument value r stands
/// for sinh(x*r) directly.
inline std::array<SymbolicFactor, 13> l_terms(const CartanPowerIndex& idx) {
    using detail::quarter_form;
    const long long k = idx.k, n = idx.n;
    std::array<SymbolicFactor, 13> fs;

    fs[0].name = "L31";
    fs[0].num.push_back(quarter_form(3 * k + n - 4, -2, -2));
    fs[0].den.push_back(quarter_form(4, 2, 2));

    fs[1].name = "L32";
    fs[1].num.push_back(quarter_form(3 * k + 2 * n - 3, -2, -2));
    fs[1].den.push_back(quarter_form(3, 2, 2));

    fs[2].name = "L21s1";
    fs[3].name = "L21s2";
    for (long long i = 1; i <= 2 * k + n; ++i) {
        fs[2].num.push_back(quarter_form(i - 5, -2, -2));
        fs[2].den.push_back(quarter_form(i - 2, -2, 0));
        fs[3].num.push_back(quarter_form(3 - i, 1, 2));
        fs[3].den.push_back(quarter_form(2 - i, 1, 1));
    }

    fs[4].name = "L21s3";
    fs[4].num.push_back(quarter_form(3 - 2 * k - n, 2, 1));
    fs[4].den.push_back(quarter_form(3, 2, 1));

    fs[5].name = "L10s1";
    fs[6].name = "L10s2";
    fs[7].name = "L10s3";
    for (long long i = 1; i <= k; ++i) {
        fs[5].num.push_back(quarter_form(3 - i, 0, 2));
        fs[5].den.push_back(quarter_form(-i, 0, 0));
        fs[6].num.push_back(quarter_form(3 - i, 1, 1));
        fs[6].den.push_back(quarter_form(2 - i, 1, 0));
        fs[7].num.push_back(quarter_form(i - 3, -2, 0));
        fs[7].den.push_back(quarter_form(2 - i, 0, 1));
    }

    fs[8].name = "L11s1";
    fs[9].name = "L11s2";
    fs[10].name = "L11s3";
    for (long long i = 1; i <= k + n; ++i) {
        fs[8].num.push_back(quarter_form(4 - i, 2, 1));
        fs[8].den.push_back(quarter_form(i + 1, 0, 0));
        fs[9].num.push_back(quarter_form(2 - i, 1, 1));
        fs[9].den.push_back(quarter_form(1 - i, 1, 0));
        fs[10].num.push_back(quarter_form(i - 2, -2, 0));
        fs[10].den.push_back(quarter_form(1 - i, 0, 1));
    }

    fs[11].name = "L01";
    fs[11].num.push_back(quarter_form(1 + n, 0, 0));
    fs[11].den.push_back(quarter_form(1, 0, 0));

    fs[12].name = "Lc2";
    for (long long i = 1; i <= k; ++i) {
        fs[12].num.push_back(quarter_form(4 - i - k - n, 2, 1));
        fs[12].den.push_back(quarter_form(i + k + n - 2, 0, -2));
    }

    return fs;
}

/// Outcome of evaluating the universal product at a point.
struct XResult {
    TermClass cls = TermClass::Regular;
    SinhProduct value; // valid for Regular and Zero
    std::vector<LinForm3> vanishing_num; // zero-valued argument forms (diagnostics)
    std::vector<LinForm3> vanishing_den;
};

/// Evaluates the universal product at a slot point (permutations are applied
/// by permuting the point before the call).
///
/// The value at the point is defined as the limit along a generic approach
/// inside the parameter plane. Zero-valued numerator and denominator forms
/// that are proportional as forms make a removable pair contributing the
/// ratio of their leading coefficients; only unpaired zeros decide between
/// Zero, Singular and Indeterminate.
inline XResult universal_x(const CartanPowerIndex& idx, const VogelPoint& slot) {
    if (idx.k < 0 || idx.n < 0)
        throw std::invalid_argument("universal_x: powers must be non-negative");
    auto factors = l_terms(idx);

    struct ZeroClass {
        std::vector<Rational> num_leads;
        std::vector<Rational> den_leads;
    };
    std::map<LinForm3, ZeroClass> classes;
    std::vector<Rational> num_args, den_args;
    XResult res;

    auto feed = [&](const LinForm3& f, bool numerator) {
        Rational v = f.eval(slot.alpha, slot.beta, slot.gamma);
        if (v.is_zero()) {
            auto& cls = classes[f.normalized()];
            (numerator ? cls.num_leads : cls.den_leads).push_back(f.leading());
            (numerator ? res.vanishing_num : res.vanishing_den).push_back(f);
        } else {
            (numerator ? num_args : den_args).push_back(std::move(v));
        }
    };
    for (const auto& fac : factors) {
        for (const auto& f : fac.num) feed(f, true);
        for (const auto& f : fac.den) feed(f, false);
    }

    int excess_num = 0, excess_den = 0;
    Rational coeff(1);
    for (const auto& [h, zc] : classes) {
        int a = static_cast<int>(zc.num_leads.size());
        int b = static_cast<int>(zc.den_leads.size());
        if (a > b) excess_num += a - b;
        if (b > a) excess_den += b - a;
        if (a == b) {
            for (const auto& c : zc.num_leads) coeff *= c;
            for (const auto& c : zc.den_leads) coeff /= c;
        }
    }

    if (excess_num > 0 && excess_den > 0) {
        res.cls = TermClass::Indeterminate;
        return res;
    }
    if (excess_den > 0) {
        res.cls = TermClass::Singular;
        return res;
    }
    if (excess_num > 0) {
        res.cls = TermClass::Zero;
        res.value = SinhProduct::zero();
        return res;
    }
    auto term = make_term(std::move(coeff), num_args, den_args);
    res.cls = TermClass::Regular;
    res.value = std::move(term.value);
    return res;
}

/// Outcome of restricting the universal product to a line and taking the
/// limit at a point of the line.
struct LimitResult {
    enum class Status { Value, IdenticallyZero, Singular, CountMismatch };
    Status status = Status::Value;
    SinhProduct value; // valid for Value and IdenticallyZero
    int vanishing_num = 0, vanishing_den = 0; // first-order counts (diagnostics)

    bool ok() const { return status == Status::Value || status == Status::IdenticallyZero; }
};

inline const char* to_string(LimitResult::Status s) {
    using St = LimitResult::Status;
    switch (s) {
        case St::Value: return "value";
        case St::IdenticallyZero: return "identically-zero";
        case St::Singular: return "singular";
        case St::CountMismatch: return "count-mismatch";
    }
    return "?";
}

/// Limit of the permuted universal product at `target`, approached inside
/// `line`. Arguments vanishing identically along the line are all mutually
/// proportional (to the line constraint) and cancel in matched
/// numerator/denominator pairs; an unmatched identically-zero numerator
/// makes the restriction vanish on the whole line, an unmatched
/// identically-zero denominator is singular. First-order zeros contribute
/// the ratio of their slopes along the path, provided the counts match.
inline LimitResult line_limit(const CartanPowerIndex& idx, const Perm3& perm, Line line,
                              const VogelPoint& target,
                              std::optional<LineDirection> direction = std::nullopt) {
    if (!lies_on(target, line))
        throw std::invalid_argument("line_limit: target point not on line");
    LineDirection dir = direction ? *direction : canonical_direction(line);
    LinForm3 constraint = line_constraint(line);
    if (!constraint.eval(dir.da, dir.db, dir.dg).is_zero())
        throw std::invalid_argument("line_limit: direction leaves the line");
    if (dir.da.is_zero() && dir.db.is_zero() && dir.dg.is_zero())
        throw std::invalid_argument("line_limit: zero direction");
    // A direction parallel to the target only rescales the point; it cannot
    // separate first-order zeros from arguments vanishing on the whole line.
    bool parallel = dir.da * target.beta == dir.db * target.alpha &&
                    dir.da * target.gamma == dir.dg * target.alpha &&
                    dir.db * target.gamma == dir.dg * target.beta;
    if (parallel)
        throw std::invalid_argument("line_limit: direction parallel to the target point");

    VogelPoint slot_base = permute(target, perm);
    VogelPoint probe{rat(1), rat(1), rat(1)}; // off every line
    VogelPoint slot_dir = permute(VogelPoint{dir.da, dir.db, dir.dg}, perm);
    VogelPoint slot_probe = permute(probe, perm);

    std::vector<Rational> num_args, den_args;
    std::vector<Rational> num_slopes, den_slopes;
    std::vector<Rational> iz_num, iz_den; // probe values of identically-zero forms

    auto feed = [&](const LinForm3& f, bool numerator) {
        // Argument restricted to the path: constant + slope * s.
        AffineForm along{f.eval(slot_base.alpha, slot_base.beta, slot_base.gamma),
                         f.eval(slot_dir.alpha, slot_dir.beta, slot_dir.gamma)};
        if (!along.vanishes_at_origin()) {
            (numerator ? num_args : den_args).push_back(std::move(along.constant));
            return;
        }
        if (!along.identically_zero()) {
            (numerator ? num_slopes : den_slopes).push_back(std::move(along.slope));
            return;
        }
        (numerator ? iz_num : iz_den)
            .push_back(f.eval(slot_probe.alpha, slot_probe.beta, slot_probe.gamma));
    };
    for (const auto& fac : l_terms(idx)) {
        for (const auto& f : fac.num) feed(f, true);
        for (const auto& f : fac.den) feed(f, false);
    }

    LimitResult res;
    res.vanishing_num = static_cast<int>(num_slopes.size());
    res.vanishing_den = static_cast<int>(den_slopes.size());

    if (iz_num.size() > iz_den.size()) {
        res.status = LimitResult::Status::IdenticallyZero;
        res.value = SinhProduct::zero();
        return res;
    }
    if (iz_den.size() > iz_num.size()) {
        res.status = LimitResult::Status::Singular;
        return res;
    }
    if (num_slopes.size() != den_slopes.size()) {
        res.status = LimitResult::Status::CountMismatch;
        return res;
    }

    Rational coeff(1);
    for (const auto& c : iz_num) coeff *= c;
    for (const auto& c : iz_den) coeff /= c;
    for (const auto& c : num_slopes) coeff *= c;
    for (const auto& c : den_slopes) coeff /= c;

    auto term = make_term(std::move(coeff), num_args, den_args);
    res.status = LimitResult::Status::Value;
    res.value = std::move(term.value);
    return res;
}

/// Dimension of the algebra at a point: -(2t-a)(2t-b)(2t-g)/(abg).
inline Rational adjoint_dim(const VogelPoint& p) {
    if (p.alpha.is_zero() || p.beta.is_zero() || p.gamma.is_zero())
        throw std::domain_error("adjoint_dim: zero parameter");
    Rational twot = rat(2) * p.t();
    return -((twot - p.alpha) * (twot - p.beta) * (twot - p.gamma)) /
           (p.alpha * p.beta * p.gamma);
}

/// Second Casimir eigenvalue on the (k, n) family:
/// alpha*(3k - 3k^2 + n - n^2 - 3kn) + t*(4k + 2n).
inline Rational universal_casimir(const CartanPowerIndex& idx, const VogelPoint& p) {
    long long k = idx.k, n = idx.n;
    Rational poly = rat(3 * k - 3 * k * k + n - n * n - 3 * k * n);
    return p.alpha * poly + p.t() * rat(4 * k + 2 * n);
}

/// Dimension of the symmetric-square summand attached to the first slot.
struct Y2Result {
    bool singular = false;
    Rational value;
};

inline Y2Result y2_dim(const VogelPoint& p) {
    const Rational& a = p.alpha;
    const Rational& b = p.beta;
    const Rational& g = p.gamma;
    Rational t = p.t();
    Rational den = a * a * (a - b) * b * (a - g) * g;
    if (den.is_zero()) return {true, Rational(0)};
    Rational twot = rat(2) * t;
    Rational num = (twot - rat(3) * a) * (b - twot) * (g - twot) * t * (b + t) * (g + t);
    return {false, num / den};
}

/// Slot variants: 0 -> alpha slot, 1 -> beta slot, 2 -> gamma slot.
inline Y2Result y2_dim_slot(const VogelPoint& p, int slot) {
    switch (slot) {
        case 0: return y2_dim(p);
        case 1: return y2_dim(VogelPoint{p.beta, p.alpha, p.gamma});
        case 2: return y2_dim(VogelPoint{p.gamma, p.beta, p.alpha});
        default: throw std::invalid_argument("y2_dim_slot: slot must be 0, 1 or 2");
    }
}

} // namespace uqd

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uqd {

/// Arbitrary-precision signed integer.
///
/// Limbs are little-endian in base 10^9, which keeps decimal I/O trivial and
/// every intermediate product inside 64 bits. Division follows the classical
/// normalized long-division scheme.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long u = v < 0 ? -static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (u != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(u % kBase));
            u /= kBase;
        }
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s) {
        bool neg = false;
        std::size_t pos = 0;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos == s.size())
            throw std::invalid_argument("BigInt: empty numeral");
        BigInt r;
        // Parse in 9-digit chunks from the front.
        std::size_t first = s.size();
        for (std::size_t i = pos; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in numeral");
        }
        (void)first;
        for (std::size_t i = pos; i < s.size(); i += 9) {
            std::size_t n = std::min<std::size_t>(9, s.size() - i);
            std::uint32_t chunk = 0;
            for (std::size_t j = 0; j < n; ++j)
                chunk = chunk * 10 + static_cast<std::uint32_t>(s[i + j] - '0');
            std::uint32_t scale = 1;
            for (std::size_t j = 0; j < n; ++j) scale *= 10;
            r.mul_small(scale);
            r.add_small(chunk);
        }
        r.sign_ = r.limbs_.empty() ? 0 : (neg ? -1 : 1);
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_negative() const { return sign_ < 0; }

    bool is_even() const {
        return limbs_.empty() || (limbs_[0] % 2u) == 0;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt{};
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a.limbs_[i];
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry != 0) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        r.trim();
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    /// Truncated quotient and remainder: a = q*b + r with |r| < |b| and
    /// sign(r) == sign(a) (or r == 0).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(a.limbs_, b.limbs_) < 0) {
            q = BigInt{};
            r = a;
            return;
        }
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.limbs_, b.limbs_, qm, rm);
        q.limbs_ = std::move(qm);
        q.trim();
        q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        r.limbs_ = std::move(rm);
        r.trim();
        r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_)
            return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (a.sign_ < 0) c = -c;
        return c <=> 0;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.limbs_.empty() ? 0 : 1;
        b.sign_ = b.limbs_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    static BigInt lcm(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt{};
        return (a * b).abs() / gcd(a, b);
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string s;
        if (sign_ < 0) s.push_back('-');
        char buf[16];
        std::snprintf(buf, sizeof buf, "%u", limbs_.back());
        s += buf;
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
            s += buf;
        }
        return s;
    }

    /// Lossy conversion; may overflow to +/-inf for huge values.
    double to_double() const {
        double v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
        return sign_ < 0 ? -v : v;
    }

    /// Checked conversion, throws when the value does not fit.
    long long to_long_long() const {
        long long v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (v > (std::numeric_limits<long long>::max() - static_cast<long long>(limbs_[i])) / kBase)
                throw std::overflow_error("BigInt: value exceeds long long");
            v = v * kBase + limbs_[i];
        }
        return sign_ < 0 ? -v : v;
    }

    std::size_t limb_count() const { return limbs_.size(); }

private:
    static constexpr std::int64_t kBase = 1000000000;

    std::vector<std::uint32_t> limbs_;
    int sign_ = 0;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }

    void mul_small(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(l) * m + carry;
            l = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
        trim();
    }

    void add_small(std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; carry != 0 && i < limbs_.size(); ++i) {
            std::uint64_t cur = limbs_[i] + carry;
            limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& hi = a.size() >= b.size() ? a : b;
        const auto& lo = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = hi;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = r[i] + carry + (i < lo.size() ? lo[i] : 0u);
            r[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
            if (carry == 0 && i >= lo.size()) break;
        }
        if (carry != 0) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Magnitude division, |u| >= |v|, v nonzero.
    static void divmod_mag(std::vector<std::uint32_t> u, std::vector<std::uint32_t> v,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        if (v.size() == 1) {
            std::uint64_t d = v[0];
            q.assign(u.size(), 0);
            std::uint64_t rem = 0;
            for (std::size_t i = u.size(); i-- > 0;) {
                std::uint64_t cur = rem * kBase + u[i];
                q[i] = static_cast<std::uint32_t>(cur / d);
                rem = cur % d;
            }
            r.clear();
            if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }

        // Normalize so the top divisor limb is at least base/2 equivalents.
        std::uint32_t scale = static_cast<std::uint32_t>(kBase / (static_cast<std::uint64_t>(v.back()) + 1));
        if (scale > 1) {
            scale_mag(u, scale);
            scale_mag(v, scale);
        }
        std::size_t n = v.size(), m = u.size();
        u.push_back(0);
        q.assign(m - n + 1, 0);
        std::uint64_t vtop = v[n - 1], vnext = v[n - 2];
        for (std::size_t j = m - n + 1; j-- > 0;) {
            std::uint64_t num = static_cast<std::uint64_t>(u[j + n]) * kBase + u[j + n - 1];
            std::uint64_t qhat = num / vtop;
            std::uint64_t rhat = num % vtop;
            while (qhat >= static_cast<std::uint64_t>(kBase) ||
                   qhat * vnext > rhat * kBase + u[j + n - 2]) {
                --qhat;
                rhat += vtop;
                if (rhat >= static_cast<std::uint64_t>(kBase)) break;
            }
            // Multiply-subtract qhat*v from u[j..j+n].
            std::uint64_t borrow = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + borrow;
                std::uint64_t sub = p % kBase;
                borrow = p / kBase;
                if (u[j + i] < sub) {
                    u[j + i] = static_cast<std::uint32_t>(u[j + i] + kBase - sub);
                    ++borrow;
                } else {
                    u[j + i] = static_cast<std::uint32_t>(u[j + i] - sub);
                }
            }
            if (u[j + n] < borrow) {
                // qhat was one too large; add v back.
                --qhat;
                std::uint64_t carry = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(u[j + i]) + v[i] + carry;
                    u[j + i] = static_cast<std::uint32_t>(cur % kBase);
                    carry = cur / kBase;
                }
                u[j + n] = static_cast<std::uint32_t>(u[j + n] + carry - borrow);
            } else {
                u[j + n] = static_cast<std::uint32_t>(u[j + n] - borrow);
            }
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        u.resize(n);
        if (scale > 1) {
            std::uint64_t rem = 0;
            for (std::size_t i = u.size(); i-- > 0;) {
                std::uint64_t cur = rem * kBase + u[i];
                u[i] = static_cast<std::uint32_t>(cur / scale);
                rem = cur % scale;
            }
        }
        while (!u.empty() && u.back() == 0) u.pop_back();
        r = std::move(u);
    }

    static void scale_mag(std::vector<std::uint32_t>& a, std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& l : a) {
            std::uint64_t cur = static_cast<std::uint64_t>(l) * m + carry;
            l = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry != 0) {
            a.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
    }
};

} // namespace uqd

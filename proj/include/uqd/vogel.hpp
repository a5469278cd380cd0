#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uqd/linform.hpp"
#include "uqd/rational.hpp"

namespace uqd {

/// Simple Lie algebra identifier: classical family with rank, or one of the
/// five exceptional algebras.
struct AlgebraId {
    char family = 'A'; // 'A','B','C','D','G','F','E'
    int rank = 1;

    friend bool operator==(const AlgebraId&, const AlgebraId&) = default;

    std::string to_string() const { return family + std::to_string(rank); }

    bool is_exceptional() const { return family == 'G' || family == 'F' || family == 'E'; }

    /// Accepts "A3".."E8" and the alias "so8" (= D4).
    static AlgebraId parse(std::string_view s) {
        if (s == "so8" || s == "SO8") return {'D', 4};
        if (s.size() < 2) throw std::invalid_argument("bad algebra id: " + std::string(s));
        char f = static_cast<char>(std::toupper(s[0]));
        int rank = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("bad algebra id: " + std::string(s));
            rank = rank * 10 + (s[i] - '0');
        }
        AlgebraId id{f, rank};
        id.validate();
        return id;
    }

    void validate() const {
        switch (family) {
            case 'A':
                if (rank < 1) throw std::invalid_argument("A requires rank >= 1");
                return;
            case 'B':
                if (rank < 2) throw std::invalid_argument("B requires rank >= 2");
                return;
            case 'C':
                if (rank < 3) throw std::invalid_argument("C requires rank >= 3");
                return;
            case 'D':
                if (rank < 4) throw std::invalid_argument("D requires rank >= 4");
                return;
            case 'G':
                if (rank != 2) throw std::invalid_argument("only G2 exists");
                return;
            case 'F':
                if (rank != 4) throw std::invalid_argument("only F4 exists");
                return;
            case 'E':
                if (rank < 6 || rank > 8) throw std::invalid_argument("only E6, E7, E8 exist");
                return;
            default:
                throw std::invalid_argument("unknown family");
        }
    }
};

/// Point of the parameter plane. t is always alpha+beta+gamma.
struct VogelPoint {
    Rational alpha, beta, gamma;

    Rational t() const { return alpha + beta + gamma; }

    friend bool operator==(const VogelPoint&, const VogelPoint&) = default;

    std::string to_string() const {
        return "(" + alpha.to_string() + ", " + beta.to_string() + ", " + gamma.to_string() + ")";
    }
};

/// Table of parameter values, one representative point per algebra.
inline VogelPoint vogel_point(const AlgebraId& id) {
    id.validate();
    switch (id.family) {
        case 'A': // sl(rank+1)
            return {rat(-2), rat(2), rat(id.rank + 1)};
        case 'B': // so(2*rank+1)
            return {rat(-2), rat(4), rat(2 * id.rank - 3)};
        case 'C': // sp(2*rank)
            return {rat(-2), rat(1), rat(id.rank + 2)};
        case 'D': // so(2*rank)
            return {rat(-2), rat(4), rat(2 * id.rank - 4)};
        default: {
            // Exceptional series: (-2, n+4, 2n+4), the representative lying
            // on the line gamma = 2(alpha+beta).
            Rational n;
            if (id.family == 'G') n = rat(-2, 3);
            else if (id.family == 'F') n = rat(1);
            else if (id.rank == 6) n = rat(2);
            else if (id.rank == 7) n = rat(4);
            else n = rat(8);
            return {rat(-2), n + rat(4), rat(2) * n + rat(4)};
        }
    }
}

/// The four distinguished lines of the parameter plane.
enum class Line { SL, SO, SP, EXC };

inline const char* to_string(Line l) {
    switch (l) {
        case Line::SL: return "sl";
        case Line::SO: return "so";
        case Line::SP: return "sp";
        case Line::EXC: return "exc";
    }
    return "?";
}

inline Line parse_line(std::string_view s) {
    if (s == "sl") return Line::SL;
    if (s == "so") return Line::SO;
    if (s == "sp") return Line::SP;
    if (s == "exc") return Line::EXC;
    throw std::invalid_argument("bad line name: " + std::string(s));
}

/// Linear form vanishing exactly on the line.
inline LinForm3 line_constraint(Line l) {
    switch (l) {
        case Line::SL: return {rat(1), rat(1), rat(0)};            // alpha + beta
        case Line::SO: return {rat(2), rat(1), rat(0)};            // 2 alpha + beta
        case Line::SP: return {rat(1), rat(2), rat(0)};            // alpha + 2 beta
        case Line::EXC: return {rat(2), rat(2), rat(-1)};          // 2(alpha+beta) - gamma
    }
    throw std::logic_error("unreachable");
}

inline bool lies_on(const VogelPoint& p, Line l) {
    return line_constraint(l).eval(p.alpha, p.beta, p.gamma).is_zero();
}

/// Lines through the table point of an algebra. D4 sits on both the
/// orthogonal and the exceptional line.
inline std::vector<Line> lines_of(const AlgebraId& id) {
    switch (id.family) {
        case 'A': return {Line::SL};
        case 'B': return {Line::SO};
        case 'C': return {Line::SP};
        case 'D':
            if (id.rank == 4) return {Line::SO, Line::EXC};
            return {Line::SO};
        default: return {Line::EXC};
    }
}

/// Direction vector inside the plane of a line. The canonical direction has
/// first nonzero entry +1 and keeps gamma fixed; a second independent
/// direction is available for invariance checks.
struct LineDirection {
    Rational da, db, dg;
};

inline LineDirection canonical_direction(Line l) {
    switch (l) {
        case Line::SL: return {rat(1), rat(-1), rat(0)};
        case Line::SO: return {rat(1), rat(-2), rat(0)};
        case Line::SP: return {rat(1), rat(-1, 2), rat(0)};
        case Line::EXC: return {rat(1), rat(-1), rat(0)};
    }
    throw std::logic_error("unreachable");
}

inline LineDirection secondary_direction(Line l) {
    switch (l) {
        case Line::SL: return {rat(0), rat(0), rat(1)};
        case Line::SO: return {rat(0), rat(0), rat(1)};
        case Line::SP: return {rat(0), rat(0), rat(1)};
        case Line::EXC: return {rat(1), rat(0), rat(2)};
    }
    throw std::logic_error("unreachable");
}

/// Straight path s -> base + s*direction staying inside a line's plane.
struct LinePath {
    VogelPoint base;
    LineDirection dir;

    VogelPoint at(const Rational& s) const {
        return {base.alpha + s * dir.da, base.beta + s * dir.db, base.gamma + s * dir.dg};
    }
};

inline LinePath canonical_path(Line l, const VogelPoint& base) {
    if (!lies_on(base, l))
        throw std::invalid_argument("canonical_path: base point not on line");
    return {base, canonical_direction(l)};
}

/// Permutation of the three parameter slots. `slot_source[j]` names which
/// component of the original point fills slot j; "bag" means the first slot
/// receives beta, the second alpha, the third gamma.
struct Perm3 {
    std::array<int, 3> slot_source{0, 1, 2};

    static Perm3 identity() { return {}; }

    static Perm3 parse(std::string_view s) {
        if (s.size() != 3) throw std::invalid_argument("bad permutation: " + std::string(s));
        Perm3 p;
        bool seen[3] = {false, false, false};
        for (int j = 0; j < 3; ++j) {
            int c;
            switch (s[j]) {
                case 'a': c = 0; break;
                case 'b': c = 1; break;
                case 'g': c = 2; break;
                default: throw std::invalid_argument("bad permutation: " + std::string(s));
            }
            if (seen[c]) throw std::invalid_argument("bad permutation: " + std::string(s));
            seen[c] = true;
            p.slot_source[j] = c;
        }
        return p;
    }

    std::string to_string() const {
        const char letters[3] = {'a', 'b', 'g'};
        return {letters[slot_source[0]], letters[slot_source[1]], letters[slot_source[2]]};
    }

    friend bool operator==(const Perm3&, const Perm3&) = default;
};

/// Reorders the components of a point; t is unchanged.
inline VogelPoint permute(const VogelPoint& p, const Perm3& perm) {
    const Rational* src[3] = {&p.alpha, &p.beta, &p.gamma};
    return {*src[perm.slot_source[0]], *src[perm.slot_source[1]], *src[perm.slot_source[2]]};
}

/// Applies the permutation to a direction vector (used to push a path in
/// original coordinates through to slot coordinates).
inline LineDirection permute(const LineDirection& d, const Perm3& perm) {
    const Rational* src[3] = {&d.da, &d.db, &d.dg};
    return {*src[perm.slot_source[0]], *src[perm.slot_source[1]], *src[perm.slot_source[2]]};
}

} // namespace uqd

#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "uqd/rootsys.hpp"
#include "uqd/universal.hpp"
#include "uqd/vogel.hpp"

namespace uqd {

// Data-set identifiers run 2..8: sets 2 and 3 carry the proved
// identity-permutation values; 4..8 carry the conjectural permuted values
// (4/5 exceptional, 6/7 classical patterns, 8 the so(8) lines).

enum class CellBasis { Proved, Conjectural };

inline const char* to_string(CellBasis b) {
    return b == CellBasis::Proved ? "proved" : "conjectural";
}

enum class VerdictStatus { Match, Mismatch, SkippedBelowStableRank, LimitCountMismatch };

inline const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Match: return "match";
        case VerdictStatus::Mismatch: return "mismatch";
        case VerdictStatus::SkippedBelowStableRank: return "skipped-below-stable-rank";
        case VerdictStatus::LimitCountMismatch: return "limit-count-mismatch";
    }
    return "?";
}

/// One verification cell, fully instantiated at a concrete algebra.
struct TableEntry {
    int table = 0;
    AlgebraId algebra;
    CartanPowerIndex idx;
    Perm3 perm;
    std::optional<Line> line; // forced approach line (marked cells, so(8) rows)
    RepSpec expected;
    CellBasis basis = CellBasis::Conjectural;
    bool below_stable_rank = false;
    std::string note; // provenance of committed readings for ambiguous cells
};

struct VerdictRecord {
    TableEntry entry;
    VerdictStatus status = VerdictStatus::Match;
    std::string computed;
    std::string expected;
    double millis = 0;
};

namespace detail {

inline Labels weight_of_nodes(int rank, std::initializer_list<long long> nodes) {
    Labels l(rank, 0);
    for (long long node : nodes) l[static_cast<std::size_t>(node - 1)] += 1;
    return l;
}

// Normalizes a slot permutation using the symmetry of the product in its
// last two slots: the representative is determined by the first slot.
inline Perm3 normalize_perm(const Perm3& p) {
    switch (p.slot_source[0]) {
        case 0: return Perm3::parse("abg");
        case 1: return Perm3::parse("bag");
        default: return Perm3::parse("gab");
    }
}

} // namespace detail

/// Stable-rank margin for the classical permuted patterns; below it the
/// printed pattern is not claimed and cells are skipped.
inline int stable_rank_margin(char family, const CartanPowerIndex& idx) {
    switch (family) {
        case 'A': return 3 * idx.k + 2 * idx.n + 3;
        case 'B':
        case 'D': return 2 * idx.n + 5;
        case 'C': return 2 * idx.k + idx.n + 2;
        default: return 0;
    }
}

/// Expected value of a cell, or nullopt when no table covers it (the
/// permuted k = 0 column and the cycled n = 0 classical column are known
/// separately and are not asserted; so(8) rows outside the printed columns
/// likewise).
inline std::optional<TableEntry> expected_rep(const AlgebraId& algebra,
                                              const CartanPowerIndex& idx, const Perm3& perm_in,
                                              std::optional<Line> line = std::nullopt) {
    using detail::weight_of_nodes;
    Perm3 perm = detail::normalize_perm(perm_in);
    const bool identity = perm == Perm3::identity();
    const bool bag = perm == Perm3::parse("bag");
    const bool gab = perm == Perm3::parse("gab");
    const int k = idx.k, n = idx.n, rank = algebra.rank;

    TableEntry e;
    e.algebra = algebra;
    e.idx = idx;
    e.perm = perm;
    e.line = line;

    if (identity) {
        // Proved identity-permutation cells.
        e.table = algebra.is_exceptional() ? 3 : 2;
        e.basis = CellBasis::Proved;
        bool zero = (algebra == AlgebraId{'A', 1} && k >= 1) ||
                    (algebra == AlgebraId{'B', 2} && k >= 2) ||
                    (algebra.family == 'C' && k >= 2);
        if (zero) {
            e.expected = RepSpec::zero();
            return e;
        }
        RepSpec spec;
        for (const auto& w : family_weights(algebra, k, n)) spec.terms.emplace_back(1, w);
        e.expected = std::move(spec);
        return e;
    }

    // so(8) has its own table, one row per (permutation, line).
    if (algebra == AlgebraId{'D', 4} && (bag || gab)) {
        if (!line) return std::nullopt;
        static const std::pair<int, int> cols[] = {{1, 0}, {1, 1}, {1, 2}, {1, 3},
                                                   {2, 0}, {2, 1}, {3, 0}};
        bool in_cols = false;
        for (auto [ck, cn] : cols)
            if (ck == k && cn == n) in_cols = true;
        if (!in_cols) return std::nullopt;
        e.table = 8;
        e.basis = CellBasis::Conjectural;
        const Labels x2 = x2_labels(algebra)[0];
        const Labels ad = adjoint_labels(algebra);
        auto W = [&](Labels l, long long c = 1) { return RepSpec::weight(std::move(l), c); };
        RepSpec spec;
        if (*line == Line::EXC && bag) {
            if (k == 1 && n == 0) spec = W(x2);
            else if (k == 1 && n == 1) spec = W(x2, 2);
            else if (k == 1 && n == 2) {
                // Committed reading: the doubled fundamental weights (the
                // full triality orbit of 2w1), fixed by the computed limit.
                spec.terms = {{1, Labels{2, 0, 0, 0}},
                              {1, Labels{0, 0, 2, 0}},
                              {1, Labels{0, 0, 0, 2}}};
                e.note = "doubled labels fixed by the computed limit";
            } else if (k == 1 && n == 3) spec = RepSpec::of_constant(rat(-2));
            else if (k == 2 && n == 0) spec = W(x2);
            else if (k == 2 && n == 1) spec = W(ad);
            else spec = RepSpec::of_constant(rat(3)); // (3,0)
        } else if (*line == Line::EXC && gab) {
            if (k == 1 && n == 0) spec = W(x2);
            else if (k == 1 && n == 1) spec = W(x2, -1);
            else if (k == 1 && n == 2) spec = RepSpec::zero();
            else if (k == 1 && n == 3) spec = RepSpec::of_constant(rat(1));
            else if (k == 2 && n == 0) spec = W(x2);
            else if (k == 2 && n == 1) spec = W(ad);
            else spec = RepSpec::zero(); // (3,0)
        } else if (*line == Line::SO && bag) {
            if (k == 1 && n == 0) spec = W(x2);
            else if (k == 1 && n == 1) spec = W(x2);
            else if (k == 1 && n == 2) {
                spec = RepSpec::weight(Labels{2, 0, 0, 0});
                e.note = "doubled label fixed by the computed limit";
            } else if (k == 1 && n == 3) spec = RepSpec::of_constant(rat(-1));
            else spec = RepSpec::zero();
        } else if (*line == Line::SO && gab) {
            spec = (k == 1 && n == 0) ? W(x2) : RepSpec::zero();
        } else {
            return std::nullopt;
        }
        e.expected = std::move(spec);
        return e;
    }

    if (k == 0) return std::nullopt; // covered by earlier adjoint-power results

    if (algebra.is_exceptional() && bag) {
        e.table = 4;
        e.basis = CellBasis::Conjectural;
        auto W = [&](std::initializer_list<long long> nodes, long long c = 1) {
            return RepSpec::weight(weight_of_nodes(rank, nodes), c);
        };
        RepSpec spec; // zero by default
        std::optional<Line> mark;
        if (algebra.family == 'G') {
            if (k == 1 && n == 0) spec = RepSpec::weight(Labels{3, 0});
            else if (k == 1 && n == 1) spec = W({1, 2});
        } else if (algebra.family == 'F') {
            if (k == 1 && n == 0) spec = W({2});
            else if (k == 1 && n == 1) spec = W({3, 4});
            else if (k == 1 && n == 2) spec = W({1, 4});
            else if (k == 2 && n == 0) spec = RepSpec::weight(Labels{0, 0, 0, 3});
        } else if (algebra.rank == 6) {
            if (k == 1 && n == 0) spec = W({3});
            else if (k == 1 && n == 1) {
                spec.terms = {{1, weight_of_nodes(6, {1, 2})}, {1, weight_of_nodes(6, {4, 5})}};
                mark = Line::EXC;
            } else if (k == 1 && n == 2) spec = W({3});
            else if (k == 1 && n == 4) spec = RepSpec::of_constant(rat(-1));
            else if (k == 2 && n == 0) {
                spec.terms = {{1, Labels{3, 0, 0, 0, 0, 0}}, {1, Labels{0, 0, 0, 0, 3, 0}}};
                mark = Line::EXC;
            } else if (k == 2 && n == 1) spec = W({3}, -1);
            else if (k == 2 && n == 2) spec = W({6}, -1);
            else if (k == 3 && n == 0) spec = W({1, 5}, -1);
        } else if (algebra.rank == 7) {
            if (k == 1 && n == 0) spec = W({2});
            else if (k == 1 && n == 1) spec = W({6, 7});
            else if (k == 1 && n == 3) {
                // Committed reading of the overloaded "-2w6": minus the
                // representation with doubled label, fixed by the computed
                // limit (the Casimir eigenvalue agrees as well).
                spec = RepSpec::weight(Labels{0, 0, 0, 0, 0, 2, 0}, -1);
                e.note = "doubled label, not doubled value; fixed by the computed limit";
                mark = Line::EXC;
            } else if (k == 2 && n == 1) {
                spec = W({6, 7}, -1);
                mark = Line::EXC;
            } else if (k == 2 && n == 2) spec = W({5}, -1);
            else if (k == 3 && n == 0) {
                spec = W({2}, -1);
                mark = Line::EXC;
            } else if (k == 3 && n == 1) {
                spec = W({1}, -1);
                mark = Line::EXC;
            } else if (k == 4 && n == 0) spec = RepSpec::of_constant(rat(-1));
        } else { // E8
            if (k == 1 && n == 0) spec = W({6});
            else if (k == 1 && n == 1) spec = W({8});
            else if (k == 1 && n == 2) spec = W({8}, -1);
            else if (k == 1 && n == 3) spec = W({6}, -1);
            else if (k == 1 && n == 5) spec = RepSpec::of_constant(rat(1));
            else if (k == 2 && n == 2) spec = W({6});
            else if (k == 2 && n == 3) spec = W({7});
            else if (k == 3 && n == 0) spec = W({8});
            else if (k == 3 && n == 1) spec = W({1});
        }
        if (!e.line && mark) e.line = mark;
        e.expected = std::move(spec);
        return e;
    }

    if (algebra.is_exceptional() && gab) {
        e.table = 5;
        e.basis = CellBasis::Conjectural;
        RepSpec spec;
        if (k == 1 && n == 0) spec = RepSpec::weight(x2_labels(algebra)[0]);
        else if (k == 1 && n == 1) spec = RepSpec::weight(x2_labels(algebra)[0], -1);
        else if (k == 1 && n == 3) spec = RepSpec::of_constant(rat(1));
        else if (k == 2 && n == 0) spec = RepSpec::weight(x2_labels(algebra)[0]);
        else if (k == 2 && n == 1) spec = RepSpec::weight(adjoint_labels(algebra));
        e.expected = std::move(spec);
        return e;
    }

    if (!algebra.is_exceptional() && bag) {
        e.table = 6;
        e.basis = CellBasis::Conjectural;
        if (rank < stable_rank_margin(algebra.family, idx)) {
            e.below_stable_rank = true;
            return e;
        }
        auto W = [&](std::initializer_list<long long> nodes) {
            return weight_of_nodes(rank, nodes);
        };
        RepSpec spec;
        switch (algebra.family) {
            case 'A': {
                long long i = rank;
                if (k == 1) {
                    spec.terms = {{1, W({1, 1 + n, i - 1 - n})}, {1, W({i, i - n, n + 2})}};
                } else {
                    spec.terms = {{1, W({k, k + n, i + 1 - 2 * k - n})},
                                  {1, W({2 * k + n, i + 1 - k, i + 1 - k - n})}};
                }
                break;
            }
            case 'B':
            case 'D':
                if (k == 1) spec = RepSpec::weight(W({1, 2 * n + 3}));
                break; // k >= 2: zero
            case 'C':
                if (k == 1) spec = RepSpec::weight(W({1, n + 1, n + 2}));
                else spec = RepSpec::weight(W({k, k + n, 2 * k + n}));
                break;
        }
        e.expected = std::move(spec);
        return e;
    }

    if (!algebra.is_exceptional() && gab) {
        e.table = 7;
        e.basis = CellBasis::Conjectural;
        if (n == 0) return std::nullopt; // known separately, not asserted
        RepSpec spec;
        if (algebra.family == 'A' && k == 1 && n == 2) spec = RepSpec::of_constant(rat(-1));
        e.expected = std::move(spec);
        return e;
    }

    return std::nullopt;
}

/// Runs one cell: evaluates the permuted universal product (through the
/// line limit when the cell is marked or the value is indeterminate) and
/// compares exactly against the expected combination.
inline VerdictRecord verify_case(const TableEntry& entry) {
    auto t0 = std::chrono::steady_clock::now();
    VerdictRecord rec;
    rec.entry = entry;
    auto finish = [&](VerdictStatus s) {
        rec.status = s;
        rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                         .count();
        return rec;
    };

    {
        std::string ex;
        if (entry.expected.is_zero()) {
            ex = "0";
        } else {
            if (!entry.expected.constant.is_zero()) ex += entry.expected.constant.to_string();
            for (const auto& [c, w] : entry.expected.terms) {
                if (!ex.empty()) ex += " + ";
                ex += std::to_string(c) + "*[";
                for (std::size_t i = 0; i < w.size(); ++i)
                    ex += (i ? "," : "") + std::to_string(w[i]);
                ex += "]";
            }
        }
        rec.expected = ex;
    }

    if (entry.below_stable_rank) return finish(VerdictStatus::SkippedBelowStableRank);

    VogelPoint p = vogel_point(entry.algebra);
    VogelPoint slot = permute(p, entry.perm);
    auto x = universal_x(entry.idx, slot);

    bool computed_zero = false;
    SinhProduct value;
    if (entry.line || x.cls == TermClass::Indeterminate) {
        Line line;
        if (entry.line) {
            line = *entry.line;
        } else {
            auto lines = lines_of(entry.algebra);
            line = lines.front();
        }
        auto lim = line_limit(entry.idx, entry.perm, line, p);
        switch (lim.status) {
            case LimitResult::Status::Value:
                value = lim.value;
                break;
            case LimitResult::Status::IdenticallyZero:
                computed_zero = true;
                break;
            case LimitResult::Status::Singular:
                rec.computed = "singular on line";
                return finish(VerdictStatus::Mismatch);
            case LimitResult::Status::CountMismatch:
                rec.computed = "vanishing-order mismatch (num " +
                               std::to_string(lim.vanishing_num) + ", den " +
                               std::to_string(lim.vanishing_den) + ")";
                return finish(VerdictStatus::LimitCountMismatch);
        }
        // A marked cell that also evaluates directly must agree.
        if (x.cls == TermClass::Regular && lim.status == LimitResult::Status::Value &&
            !(x.value == lim.value)) {
            rec.computed = "line limit disagrees with direct value";
            return finish(VerdictStatus::Mismatch);
        }
        if (x.cls == TermClass::Zero && lim.status != LimitResult::Status::IdenticallyZero) {
            rec.computed = "line limit disagrees with direct zero";
            return finish(VerdictStatus::Mismatch);
        }
    } else {
        switch (x.cls) {
            case TermClass::Regular:
                value = x.value;
                break;
            case TermClass::Zero:
                computed_zero = true;
                break;
            default:
                rec.computed = "singular at point";
                return finish(VerdictStatus::Mismatch);
        }
    }

    if (computed_zero) {
        rec.computed = "0";
        return finish(entry.expected.is_zero() ? VerdictStatus::Match : VerdictStatus::Mismatch);
    }
    rec.computed = value.to_string();
    if (entry.expected.is_zero()) return finish(VerdictStatus::Mismatch);

    auto rs = build_root_system(entry.algebra);
    auto sum = qdim_of_spec(*rs, entry.expected);
    return finish(equals_qdim_sum(value, sum) ? VerdictStatus::Match : VerdictStatus::Mismatch);
}

struct SweepConfig {
    std::vector<int> tables = {2, 3, 4, 5, 6, 7, 8};
    int max_rank = 12;
    int max_k = 4;
    int max_n = 4;
    int jobs = 1;

    bool has_table(int t) const {
        for (int x : tables)
            if (x == t) return true;
        return false;
    }
};

struct Report {
    SweepConfig config;
    std::vector<VerdictRecord> records;

    int count(VerdictStatus s) const {
        int n = 0;
        for (const auto& r : records)
            if (r.status == s) ++n;
        return n;
    }
    bool all_match() const {
        return count(VerdictStatus::Mismatch) == 0 && count(VerdictStatus::LimitCountMismatch) == 0;
    }
};

/// Enumerates every instantiated cell of the selected data sets.
inline std::vector<TableEntry> enumerate_cases(const SweepConfig& cfg) {
    std::vector<TableEntry> out;
    auto add = [&](std::optional<TableEntry> e) {
        if (e) out.push_back(std::move(*e));
    };

    std::vector<AlgebraId> classical;
    for (int r = 1; r <= cfg.max_rank; ++r) classical.push_back({'A', r});
    for (int r = 2; r <= cfg.max_rank; ++r) classical.push_back({'B', r});
    for (int r = 3; r <= cfg.max_rank; ++r) classical.push_back({'C', r});
    for (int r = 4; r <= cfg.max_rank; ++r) classical.push_back({'D', r});
    const std::vector<AlgebraId> exceptional = {{'G', 2}, {'F', 4}, {'E', 6}, {'E', 7}, {'E', 8}};

    Perm3 id = Perm3::identity(), bag = Perm3::parse("bag"), gab = Perm3::parse("gab");

    if (cfg.has_table(2))
        for (const auto& a : classical)
            for (int k = 0; k <= cfg.max_k; ++k)
                for (int n = 0; n <= cfg.max_n; ++n) add(expected_rep(a, {k, n}, id));
    if (cfg.has_table(3))
        for (const auto& a : exceptional)
            for (int k = 0; k <= cfg.max_k; ++k)
                for (int n = 0; n <= cfg.max_n; ++n) add(expected_rep(a, {k, n}, id));
    if (cfg.has_table(4))
        for (const auto& a : exceptional)
            for (int k = 1; k <= cfg.max_k; ++k)
                for (int n = 0; n <= cfg.max_n; ++n) add(expected_rep(a, {k, n}, bag));
    if (cfg.has_table(5))
        for (const auto& a : exceptional)
            for (int k = 1; k <= cfg.max_k; ++k)
                for (int n = 0; n <= cfg.max_n; ++n) add(expected_rep(a, {k, n}, gab));
    if (cfg.has_table(6))
        for (const auto& a : classical) {
            if (a.family == 'A' && a.rank == 1) continue;
            if (a == AlgebraId{'D', 4}) continue; // handled by its own table
            for (int k = 1; k <= cfg.max_k; ++k)
                for (int n = 0; n <= cfg.max_n; ++n) add(expected_rep(a, {k, n}, bag));
        }
    if (cfg.has_table(7))
        for (const auto& a : classical) {
            if (a.family == 'A' && a.rank == 1) continue;
            if (a == AlgebraId{'D', 4}) continue;
            for (int k = 1; k <= cfg.max_k; ++k)
                for (int n = 1; n <= cfg.max_n; ++n) add(expected_rep(a, {k, n}, gab));
        }
    if (cfg.has_table(8) && cfg.max_rank >= 4)
        for (Line line : {Line::EXC, Line::SO})
            for (const Perm3& perm : {bag, gab})
                for (auto [k, n] : {std::pair{1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1},
                                    {3, 0}}) {
                    if (k > cfg.max_k || n > cfg.max_n) continue;
                    add(expected_rep(AlgebraId{'D', 4}, {k, n}, perm, line));
                }
    return out;
}

/// Runs all selected cells, optionally across worker threads. Record order
/// is the enumeration order regardless of the worker count.
inline Report verify_sweep(const SweepConfig& cfg) {
    Report report;
    report.config = cfg;
    auto cases = enumerate_cases(cfg);
    report.records.resize(cases.size());
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) report.records[i] = verify_case(cases[i]);
        return report;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            report.records[i] = verify_case(cases[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return report;
}

} // namespace uqd

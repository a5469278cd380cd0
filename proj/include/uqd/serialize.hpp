#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "uqd/rootsys.hpp"
#include "uqd/sinh_product.hpp"
#include "uqd/tables.hpp"

namespace uqd {

using Json = nlohmann::ordered_json;

/// Interchange form {"coeff":"p/q","num":["a/b",...],"den":[...]} with
/// arguments ascending and multiplicities expanded. Bit-exact: rationals are
/// decimal strings.
inline Json to_json(const SinhProduct& p) {
    Json j;
    j["coeff"] = p.coeff().to_string();
    Json num = Json::array(), den = Json::array();
    for (const auto& [a, m] : p.numerator_args())
        for (int i = 0; i < m; ++i) num.push_back(a.to_string());
    for (const auto& [a, m] : p.denominator_args())
        for (int i = 0; i < m; ++i) den.push_back(a.to_string());
    j["num"] = std::move(num);
    j["den"] = std::move(den);
    return j;
}

inline SinhProduct sinh_product_from_json(const Json& j) {
    std::vector<Rational> num, den;
    for (const auto& s : j.at("num")) num.push_back(Rational::from_string(s.get<std::string>()));
    for (const auto& s : j.at("den")) den.push_back(Rational::from_string(s.get<std::string>()));
    auto r = make_term(Rational::from_string(j.at("coeff").get<std::string>()), num, den);
    if (r.cls != TermClass::Regular && r.cls != TermClass::Zero)
        throw std::invalid_argument("sinh_product_from_json: degenerate arguments");
    return r.value;
}

inline Json to_json(const RepSpec& spec) {
    Json j;
    j["constant"] = spec.constant.to_string();
    Json terms = Json::array();
    for (const auto& [c, w] : spec.terms) {
        Json t;
        t["coeff"] = c;
        t["weight"] = w;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline Json to_json(const TableEntry& e) {
    Json j;
    j["table"] = e.table;
    j["algebra"] = e.algebra.to_string();
    j["k"] = e.idx.k;
    j["n"] = e.idx.n;
    j["perm"] = e.perm.to_string();
    if (e.line) j["line"] = to_string(*e.line);
    else j["line"] = nullptr;
    j["expected"] = to_json(e.expected);
    j["basis"] = to_string(e.basis);
    if (e.below_stable_rank) j["below_stable_rank"] = true;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

inline Json to_json(const Report& report) {
    Json j;
    j["version"] = 1;
    Json cfg;
    cfg["tables"] = report.config.tables;
    cfg["max_rank"] = report.config.max_rank;
    cfg["max_k"] = report.config.max_k;
    cfg["max_n"] = report.config.max_n;
    j["config"] = std::move(cfg);
    Json summary;
    summary["match"] = report.count(VerdictStatus::Match);
    summary["mismatch"] = report.count(VerdictStatus::Mismatch);
    summary["skipped_below_stable_rank"] = report.count(VerdictStatus::SkippedBelowStableRank);
    summary["limit_count_mismatch"] = report.count(VerdictStatus::LimitCountMismatch);
    j["summary"] = std::move(summary);
    Json records = Json::array();
    for (const auto& r : report.records) {
        Json rec = to_json(r.entry);
        rec["status"] = to_string(r.status);
        rec["computed"] = r.computed;
        rec["expected_summary"] = r.expected;
        rec["ms"] = r.millis;
        records.push_back(std::move(rec));
    }
    j["records"] = std::move(records);
    return j;
}

inline std::string report_to_text(const Report& report) {
    std::ostringstream os;
    os << "set  algebra  k n perm line  basis        status                      time\n";
    for (const auto& r : report.records) {
        os << std::left << std::setw(5) << r.entry.table << std::setw(9)
           << r.entry.algebra.to_string() << std::setw(2) << r.entry.idx.k << std::setw(2)
           << r.entry.idx.n << std::setw(5) << r.entry.perm.to_string() << std::setw(6)
           << (r.entry.line ? to_string(*r.entry.line) : "-") << std::setw(13)
           << to_string(r.entry.basis) << std::setw(28) << to_string(r.status) << std::fixed
           << std::setprecision(1) << r.millis << "ms\n";
    }
    os << "match " << report.count(VerdictStatus::Match) << ", mismatch "
       << report.count(VerdictStatus::Mismatch) << ", skipped "
       << report.count(VerdictStatus::SkippedBelowStableRank) << ", limit-count-mismatch "
       << report.count(VerdictStatus::LimitCountMismatch) << "\n";
    return os.str();
}

namespace detail {

inline Json rule_record(int table, std::string family, std::string k_rule, std::string n_rule,
                        std::string expected, const char* basis) {
    Json j;
    j["table"] = table;
    j["family"] = std::move(family);
    j["k"] = std::move(k_rule);
    j["n"] = std::move(n_rule);
    j["expected"] = std::move(expected);
    j["basis"] = basis;
    return j;
}

} // namespace detail

/// The shipped cell data: one record per printed cell or cell rule,
/// mirroring the verification tables. Concrete permuted cells are emitted
/// from expected_rep so the document cannot drift from the engine.
inline Json tables_data_json() {
    Json doc;
    doc["version"] = 1;
    doc["description"] =
        "Verification cells for the universal quantum-dimension product: "
        "identity-permutation values (sets 2-3), permuted values for the "
        "exceptional algebras (4: swap of the first two slots, 5: cycle "
        "moving the third slot first), stable classical patterns (6-7) and "
        "the so(8) line restrictions (8).";
    Json records = Json::array();

    using detail::rule_record;
    const char* prop = "proved";
    const char* conj = "conjectural";

    // Set 2: identity permutation, classical families; one record per
    // printed row/column rule.
    for (const char* fam : {"A1", "A(i>=2)", "B2", "B(i>2)", "C(i>2)", "D(i>3)"}) {
        bool a1 = std::string(fam) == "A1";
        bool b2 = std::string(fam) == "B2";
        bool c = std::string(fam) == "C(i>2)";
        records.push_back(rule_record(2, fam, "0", "any", "n*ad", prop));
        records.push_back(rule_record(2, fam, "1", "any", a1 ? "0" : "x2 + n*ad", prop));
        records.push_back(
            rule_record(2, fam, ">1", "any", (a1 || b2 || c) ? "0" : "k*x2 + n*ad", prop));
    }
    // Set 3: identity permutation, exceptional algebras.
    records.push_back(rule_record(3, "G2,F4,E6,E7,E8", "any", "any", "k*x2 + n*ad", prop));

    // Sets 4, 5, 8: concrete printed cells.
    auto push_concrete = [&](const AlgebraId& a, int k, int n, const Perm3& perm,
                             std::optional<Line> line) {
        auto e = expected_rep(a, {k, n}, perm, line);
        if (e) records.push_back(to_json(*e));
    };
    const std::pair<int, int> t4_rows[] = {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                           {2, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 0}, {3, 1},
                                           {4, 0}};
    const AlgebraId excs[] = {{'G', 2}, {'F', 4}, {'E', 6}, {'E', 7}, {'E', 8}};
    for (auto [k, n] : t4_rows)
        for (const auto& a : excs) push_concrete(a, k, n, Perm3::parse("bag"), std::nullopt);
    const std::pair<int, int> t5_cols[] = {{1, 0}, {1, 1}, {1, 3}, {2, 0}, {2, 1}};
    for (const auto& a : excs)
        for (auto [k, n] : t5_cols) push_concrete(a, k, n, Perm3::parse("gab"), std::nullopt);

    // Sets 6-7: stable classical patterns, one record per printed cell.
    records.push_back(rule_record(6, "A", "1", "any",
                                  "(w1 + w{1+n} + w{i-1-n}) (+) (wi + w{i-n} + w{n+2})", conj));
    records.push_back(rule_record(
        6, "A", ">=2", "any",
        "(wk + w{k+n} + w{i+1-2k-n}) (+) (w{2k+n} + w{i+1-k} + w{i+1-k-n})", conj));
    records.push_back(rule_record(6, "B", "1", "any", "w1 + w{2n+3}", conj));
    records.push_back(rule_record(6, "B", ">=2", "any", "0", conj));
    records.push_back(rule_record(6, "C", "1", "any", "w1 + w{n+1} + w{n+2}", conj));
    records.push_back(rule_record(6, "C", ">=2", "any", "wk + w{k+n} + w{2k+n}", conj));
    records.push_back(rule_record(6, "D", "1", "any", "w1 + w{2n+3}", conj));
    records.push_back(rule_record(6, "D", ">=2", "any", "0", conj));
    records.push_back(rule_record(7, "A", "1", "2", "-1", conj));
    records.push_back(rule_record(7, "A,B,C,D", "any other", ">=1", "0", conj));

    // Set 8: so(8) on both of its lines.
    for (Line line : {Line::EXC, Line::SO})
        for (const char* perm : {"bag", "gab"})
            for (auto [k, n] : {std::pair{1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 0}})
                push_concrete(AlgebraId{'D', 4}, k, n, Perm3::parse(perm), line);

    doc["records"] = std::move(records);
    return doc;
}

/// The committed node numbering and normalization, per family.
inline Json numbering_data_json() {
    Json doc;
    doc["version"] = 1;
    doc["description"] =
        "Committed Dynkin node numbering: classical chains numbered from the "
        "long end (vector node first); B/C short/long end node last; D fork "
        "nodes last two; G2 node 1 short; F4 nodes 1-2 long, 3-4 short; "
        "E-series chain 1..(rank-1) with the branch node attached to chain "
        "node 3 and numbered last. Bilinear form normalized so long roots "
        "have squared length 2 (adjoint Casimir = 2t).";
    Json algebras = Json::array();
    for (const char* name : {"A4", "B4", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"}) {
        AlgebraId id = AlgebraId::parse(name);
        auto rs = build_root_system(id);
        Json a;
        a["algebra"] = id.to_string();
        a["rank"] = id.rank;
        a["cartan"] = rs->cartan;
        Json d = Json::array();
        for (const auto& h : rs->half_norms) d.push_back(h.to_string());
        a["half_norms"] = std::move(d);
        a["adjoint"] = adjoint_labels(id);
        Json x2 = Json::array();
        for (const auto& w : x2_labels(id)) x2.push_back(w);
        a["x2"] = std::move(x2);
        a["positive_roots"] = rs->positive_roots.size();
        algebras.push_back(std::move(a));
    }
    doc["algebras"] = std::move(algebras);
    return doc;
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace uqd

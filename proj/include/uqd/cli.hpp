#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uqd/serialize.hpp"
#include "uqd/tables.hpp"

namespace uqd::cli {

// Exit codes: 0 success, 1 sweep mismatch, 2 usage error, 3 singular or
// vanishing-order-mismatch result.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;
inline constexpr int kSingular = 3;

namespace detail {

inline VogelPoint point_from_options(const std::string& algebra, const std::string& alpha,
                                     const std::string& beta, const std::string& gamma) {
    if (!algebra.empty()) return vogel_point(AlgebraId::parse(algebra));
    if (alpha.empty() || beta.empty() || gamma.empty())
        throw CLI::ValidationError("either --algebra or all of --alpha/--beta/--gamma required");
    return {Rational::from_string(alpha), Rational::from_string(beta),
            Rational::from_string(gamma)};
}

inline void emit(const Json& j, const std::string& text, const std::string& format,
                 std::ostream& out) {
    if (format == "text") out << text;
    else out << dump_json(j);
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact universal quantum dimensions and their Weyl-formula verification"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    // qdim: Weyl pipeline at a table algebra.
    auto* qdim = app.add_subcommand("qdim", "quantum dimension of the (k,n) family weight");
    std::string q_algebra;
    int q_k = 0, q_n = 0;
    qdim->add_option("--algebra", q_algebra)->required();
    qdim->add_option("--k", q_k)->check(CLI::NonNegativeNumber)->required();
    qdim->add_option("--n", q_n)->check(CLI::NonNegativeNumber)->required();

    // universal: the parameter-plane product.
    auto* uni = app.add_subcommand("universal", "evaluate the universal product at a point");
    std::string u_algebra, u_alpha, u_beta, u_gamma, u_perm = "abg";
    int u_k = 0, u_n = 0;
    uni->add_option("--algebra", u_algebra);
    uni->add_option("--alpha", u_alpha);
    uni->add_option("--beta", u_beta);
    uni->add_option("--gamma", u_gamma);
    uni->add_option("--perm", u_perm);
    uni->add_option("--k", u_k)->check(CLI::NonNegativeNumber)->required();
    uni->add_option("--n", u_n)->check(CLI::NonNegativeNumber)->required();

    // limit: restriction to a line.
    auto* lim = app.add_subcommand("limit", "limit of the permuted product along a line");
    std::string l_algebra, l_perm = "abg", l_line;
    int l_k = 0, l_n = 0;
    lim->add_option("--algebra", l_algebra)->required();
    lim->add_option("--perm", l_perm);
    lim->add_option("--line", l_line)->required();
    lim->add_option("--k", l_k)->check(CLI::NonNegativeNumber)->required();
    lim->add_option("--n", l_n)->check(CLI::NonNegativeNumber)->required();

    // verify: table sweep.
    auto* ver = app.add_subcommand("verify", "verify table cells against the Weyl pipeline");
    std::vector<int> v_tables = {2, 3, 4, 5, 6, 7, 8};
    int v_max_k = 4, v_max_n = 4, v_max_rank = 12, v_jobs = 1;
    std::string v_out;
    ver->add_option("--tables", v_tables)->delimiter(',')->check(CLI::Range(2, 8));
    ver->add_option("--max-k", v_max_k)->check(CLI::PositiveNumber);
    ver->add_option("--max-n", v_max_n)->check(CLI::NonNegativeNumber);
    ver->add_option("--max-rank", v_max_rank)->check(CLI::Range(4, 64));
    ver->add_option("--jobs", v_jobs)->check(CLI::PositiveNumber);
    ver->add_option("--out", v_out);

    // tables: shipped cell data.
    auto* tab = app.add_subcommand("tables", "print or dump the shipped cell data");
    std::string t_dump;
    bool t_numbering = false;
    tab->add_option("--dump", t_dump);
    tab->add_flag("--numbering", t_numbering, "emit the node-numbering data instead");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*qdim) {
            AlgebraId id = AlgebraId::parse(q_algebra);
            auto weights = family_weights(id, q_k, q_n);
            auto rs = build_root_system(id);
            Json j;
            j["algebra"] = id.to_string();
            j["k"] = q_k;
            j["n"] = q_n;
            Json terms = Json::array();
            Rational total(0);
            std::string text;
            for (const auto& w : weights) {
                auto q = weyl_qdim(*rs, w);
                Rational d = q.dimension_limit();
                total += d;
                Json t;
                t["weight"] = w;
                t["qdim"] = to_json(q);
                t["dimension"] = d.to_string();
                terms.push_back(std::move(t));
                text += q.to_string() + "  (dimension " + d.to_string() + ")\n";
            }
            j["terms"] = std::move(terms);
            j["dimension"] = total.to_string();
            text += "dimension " + total.to_string() + "\n";
            detail::emit(j, text, format, out);
            return kOk;
        }

        if (*uni) {
            VogelPoint p = detail::point_from_options(u_algebra, u_alpha, u_beta, u_gamma);
            VogelPoint slot = permute(p, Perm3::parse(u_perm));
            auto x = universal_x({u_k, u_n}, slot);
            Json j;
            j["point"] = Json::array({slot.alpha.to_string(), slot.beta.to_string(),
                                      slot.gamma.to_string()});
            j["k"] = u_k;
            j["n"] = u_n;
            j["class"] = to_string(x.cls);
            std::string text = std::string("class: ") + to_string(x.cls) + "\n";
            if (x.cls == TermClass::Regular || x.cls == TermClass::Zero) {
                j["value"] = to_json(x.value);
                text += x.value.to_string() + "\n";
                if (x.value.balanced()) {
                    j["dimension"] = x.value.dimension_limit().to_string();
                    text += "dimension " + x.value.dimension_limit().to_string() + "\n";
                }
            }
            if (x.cls == TermClass::Indeterminate) {
                j["hint"] = "indeterminate at this point; use the limit command with a line";
                text += "indeterminate at this point; use the limit command with a line\n";
            }
            detail::emit(j, text, format, out);
            return x.cls == TermClass::Singular ? kSingular : kOk;
        }

        if (*lim) {
            AlgebraId id = AlgebraId::parse(l_algebra);
            Line line = parse_line(l_line);
            auto r = line_limit({l_k, l_n}, Perm3::parse(l_perm), line, vogel_point(id));
            Json j;
            j["algebra"] = id.to_string();
            j["k"] = l_k;
            j["n"] = l_n;
            j["perm"] = l_perm;
            j["line"] = l_line;
            j["status"] = to_string(r.status);
            std::string text = std::string("status: ") + to_string(r.status) + "\n";
            if (r.ok()) {
                j["value"] = to_json(r.value);
                text += r.value.to_string() + "\n";
                if (r.value.balanced()) {
                    j["dimension"] = r.value.dimension_limit().to_string();
                    text += "dimension " + r.value.dimension_limit().to_string() + "\n";
                }
            }
            detail::emit(j, text, format, out);
            return r.ok() ? kOk : kSingular;
        }

        if (*ver) {
            SweepConfig cfg;
            cfg.tables = v_tables;
            cfg.max_k = v_max_k;
            cfg.max_n = v_max_n;
            cfg.max_rank = v_max_rank;
            cfg.jobs = v_jobs;
            Report report = verify_sweep(cfg);
            Json j = to_json(report);
            std::string text = report_to_text(report);
            if (!v_out.empty()) {
                std::ofstream f(v_out, std::ios::binary);
                if (!f) {
                    err << "cannot write " << v_out << "\n";
                    return kUsage;
                }
                f << dump_json(j);
                out << text;
            } else {
                detail::emit(j, text, format, out);
            }
            if (report.count(VerdictStatus::Mismatch) > 0) return kMismatch;
            if (report.count(VerdictStatus::LimitCountMismatch) > 0) return kSingular;
            return kOk;
        }

        if (*tab) {
            Json doc = t_numbering ? numbering_data_json() : tables_data_json();
            if (!t_dump.empty()) {
                std::ofstream f(t_dump, std::ios::binary);
                if (!f) {
                    err << "cannot write " << t_dump << "\n";
                    return kUsage;
                }
                f << dump_json(doc);
            } else {
                out << dump_json(doc);
            }
            return kOk;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace uqd::cli

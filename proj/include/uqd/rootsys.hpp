#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uqd/exp_poly.hpp"
#include "uqd/sinh_product.hpp"
#include "uqd/vogel.hpp"

namespace uqd {

using Labels = std::vector<long long>; // Dynkin labels

/// Explicit rational realization of a simple root system.
///
/// Everything lives in the simple-root coordinate basis: a vector v stands
/// for sum v_i * alpha_i. The bilinear form is fixed by the Cartan matrix
/// together with the half-norms d_i = (alpha_i, alpha_i)/2, normalized so
/// long roots have squared length 2 (the normalization that makes the
/// adjoint Casimir equal 2t on the parameter table).
struct RootSystem {
    AlgebraId algebra;
    int rank = 0;
    std::vector<std::vector<int>> cartan;        // C[i][j] = <alpha_i, alpha_j^vee>
    std::vector<Rational> half_norms;            // d_i
    std::vector<std::vector<Rational>> gram;     // (alpha_i, alpha_j)
    std::vector<std::vector<Rational>> fweights; // omega_i in simple-root coords
    std::vector<Rational> rho;                   // sum of fundamental weights
    std::vector<std::vector<int>> positive_roots;

    std::vector<Rational> weight_from_labels(std::span<const long long> labels) const {
        if (static_cast<int>(labels.size()) != rank)
            throw std::invalid_argument("weight_from_labels: wrong label count for " +
                                        algebra.to_string());
        std::vector<Rational> v(rank, Rational(0));
        for (int i = 0; i < rank; ++i) {
            if (labels[i] == 0) continue;
            Rational c = rat(labels[i]);
            for (int j = 0; j < rank; ++j) v[j] += c * fweights[i][j];
        }
        return v;
    }

    /// Dynkin labels <v, alpha_j^vee> of a vector in root coordinates.
    std::vector<Rational> labels_of(const std::vector<Rational>& v) const {
        std::vector<Rational> l(rank, Rational(0));
        for (int j = 0; j < rank; ++j)
            for (int i = 0; i < rank; ++i)
                if (!v[i].is_zero()) l[j] += v[i] * rat(cartan[i][j]);
        return l;
    }

    Rational inner(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
        Rational r(0);
        for (int i = 0; i < rank; ++i) {
            if (u[i].is_zero()) continue;
            for (int j = 0; j < rank; ++j) {
                if (v[j].is_zero()) continue;
                r += u[i] * v[j] * gram[i][j];
            }
        }
        return r;
    }

    Rational inner_root(const std::vector<int>& root, const std::vector<Rational>& v) const {
        Rational r(0);
        for (int i = 0; i < rank; ++i) {
            if (root[i] == 0) continue;
            for (int j = 0; j < rank; ++j) {
                if (v[j].is_zero()) continue;
                r += rat(root[i]) * v[j] * gram[i][j];
            }
        }
        return r;
    }
};

namespace detail {

inline void make_chain(std::vector<std::vector<int>>& c, int i, int j) {
    c[i][j] = -1;
    c[j][i] = -1;
}

inline std::pair<std::vector<std::vector<int>>, std::vector<Rational>>
cartan_data(const AlgebraId& id) {
    id.validate();
    int n = id.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    std::vector<Rational> d(n, Rational(1));
    switch (id.family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) make_chain(c, i, i + 1);
            break;
        case 'B':
            for (int i = 0; i + 1 < n; ++i) make_chain(c, i, i + 1);
            c[n - 2][n - 1] = -2; // last node short
            d[n - 1] = rat(1, 2);
            break;
        case 'C':
            for (int i = 0; i + 1 < n; ++i) make_chain(c, i, i + 1);
            c[n - 1][n - 2] = -2; // last node long, others short
            for (int i = 0; i + 1 < n; ++i) d[i] = rat(1, 2);
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) make_chain(c, i, i + 1);
            make_chain(c, n - 3, n - 1);
            break;
        case 'G':
            c[0][1] = -1;
            c[1][0] = -3; // node 1 short, node 2 long
            d[0] = rat(1, 3);
            break;
        case 'F':
            make_chain(c, 0, 1);
            make_chain(c, 2, 3);
            c[1][2] = -2; // nodes 1,2 long; 3,4 short
            c[2][1] = -1;
            d[2] = rat(1, 2);
            d[3] = rat(1, 2);
            break;
        case 'E':
            for (int i = 0; i + 2 < n; ++i) make_chain(c, i, i + 1);
            make_chain(c, 2, n - 1); // branch node attached to third chain node
            break;
    }
    return {std::move(c), std::move(d)};
}

inline std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
    int n = static_cast<int>(m.size());
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("invert: singular matrix");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = m[col][col].reciprocal();
        for (int j = 0; j < n; ++j) {
            m[col][j] *= p;
            inv[col][j] *= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace detail

inline std::shared_ptr<const RootSystem> build_root_system(const AlgebraId& id) {
    struct Cache {
        std::mutex mu;
        std::map<std::pair<char, int>, std::shared_ptr<const RootSystem>> entries;
    };
    static Cache cache;
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.entries.find({id.family, id.rank});
        if (it != cache.entries.end()) return it->second;
    }

    auto rs = std::make_shared<RootSystem>();
    rs->algebra = id;
    rs->rank = id.rank;
    auto [cartan, d] = detail::cartan_data(id);
    rs->cartan = cartan;
    rs->half_norms = d;
    int n = id.rank;

    rs->gram.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs->gram[i][j] = d[j] * rat(cartan[i][j]);

    std::vector<std::vector<Rational>> cr(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cr[i][j] = rat(cartan[i][j]);
    rs->fweights = detail::invert(std::move(cr)); // row i = omega_i

    rs->rho.assign(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rs->rho[j] += rs->fweights[i][j];

    // Positive roots by height, via root strings read off the Cartan matrix.
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(std::move(e));
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& beta : frontier) {
            for (int i = 0; i < n; ++i) {
                long long pairing = 0;
                for (int m = 0; m < n; ++m) pairing += static_cast<long long>(beta[m]) * cartan[m][i];
                int q = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[i] -= 1;
                    bool nonneg = true;
                    for (int m = 0; m < n; ++m)
                        if (down[m] < 0) nonneg = false;
                    if (!nonneg || !roots.count(down)) break;
                    ++q;
                }
                if (q - pairing >= 1) {
                    std::vector<int> up = beta;
                    up[i] += 1;
                    if (roots.insert(up).second) next.push_back(std::move(up));
                }
            }
        }
        frontier = std::move(next);
    }
    rs->positive_roots.assign(roots.begin(), roots.end());

    std::lock_guard<std::mutex> lock(cache.mu);
    auto [it, inserted] = cache.entries.emplace(std::pair<char, int>{id.family, id.rank},
                                                std::shared_ptr<const RootSystem>(rs));
    return it->second;
}

namespace detail {

inline void require_dominant(const RootSystem& rs, std::span<const long long> labels) {
    if (static_cast<int>(labels.size()) != rs.rank)
        throw std::invalid_argument("weight has wrong rank for " + rs.algebra.to_string());
    for (long long l : labels)
        if (l < 0) throw std::invalid_argument("weight is not dominant");
}

} // namespace detail

/// Weyl character on the principal line: prod over positive roots of
/// sinh(x (mu, lambda+rho) / 2) / sinh(x (mu, rho) / 2), canonicalized.
inline SinhProduct weyl_qdim(const RootSystem& rs, std::span<const long long> labels) {
    detail::require_dominant(rs, labels);
    auto lambda = rs.weight_from_labels(labels);
    std::vector<Rational> lam_rho(rs.rank);
    for (int i = 0; i < rs.rank; ++i) lam_rho[i] = lambda[i] + rs.rho[i];
    const Rational half(1, 2);
    std::vector<Rational> num, den;
    num.reserve(rs.positive_roots.size());
    den.reserve(rs.positive_roots.size());
    for (const auto& mu : rs.positive_roots) {
        num.push_back(half * rs.inner_root(mu, lam_rho));
        den.push_back(half * rs.inner_root(mu, rs.rho));
    }
    auto term = make_term(Rational(1), num, den);
    if (term.cls != TermClass::Regular)
        throw std::logic_error("weyl_qdim: degenerate factor");
    return term.value;
}

inline SinhProduct weyl_qdim(const RootSystem& rs, const Labels& labels) {
    return weyl_qdim(rs, std::span<const long long>(labels));
}

/// Ordinary dimension: x -> 0 limit of the quantum dimension.
inline BigInt weyl_dim(const RootSystem& rs, const Labels& labels) {
    Rational d = weyl_qdim(rs, labels).dimension_limit();
    if (!d.is_integer() || !(d.numerator().sign() > 0))
        throw std::logic_error("weyl_dim: limit is not a positive integer");
    return d.numerator();
}

/// Second Casimir eigenvalue (lambda, lambda + 2 rho) in the table
/// normalization.
inline Rational casimir(const RootSystem& rs, const Labels& labels) {
    detail::require_dominant(rs, labels);
    auto lambda = rs.weight_from_labels(labels);
    std::vector<Rational> shifted(rs.rank);
    for (int i = 0; i < rs.rank; ++i) shifted[i] = lambda[i] + rat(2) * rs.rho[i];
    return rs.inner(lambda, shifted);
}

/// Highest weight of the adjoint representation, per the committed node
/// numbering.
inline Labels adjoint_labels(const AlgebraId& id) {
    id.validate();
    int n = id.rank;
    Labels l(n, 0);
    switch (id.family) {
        case 'A':
            if (n == 1) {
                l[0] = 2;
            } else {
                l[0] = 1;
                l[n - 1] = 1;
            }
            return l;
        case 'B':
            if (n == 2) {
                l[1] = 2;
            } else {
                l[1] = 1;
            }
            return l;
        case 'C':
            l[0] = 2;
            return l;
        case 'D':
            l[1] = 1;
            return l;
        case 'G':
            l[1] = 1;
            return l;
        case 'F':
            l[0] = 1;
            return l;
        case 'E':
            if (n == 6) l[5] = 1;
            else if (n == 7) l[0] = 1;
            else l[6] = 1;
            return l;
    }
    throw std::logic_error("unreachable");
}

/// Highest weight(s) of the non-adjoint summand of the antisymmetric square.
/// The A series contributes a conjugate pair (empty for A1, where the
/// summand vanishes).
inline std::vector<Labels> x2_labels(const AlgebraId& id) {
    id.validate();
    int n = id.rank;
    switch (id.family) {
        case 'A': {
            if (n == 1) return {};
            Labels u(n, 0), v(n, 0);
            u[0] = 2;
            u[n - 2] += 1; // 2 w1 + w_{n-1}; for A2 this folds to 3 w1
            v[n - 1] = 2;
            v[1] += 1; // w2 + 2 w_n; folds to 3 w2 for A2
            return {u, v};
        }
        case 'B': {
            Labels l(n, 0);
            if (n == 2) {
                l = {1, 2};
            } else if (n == 3) {
                l = {1, 0, 2};
            } else {
                l[0] = 1;
                l[2] = 1;
            }
            return {l};
        }
        case 'C': {
            Labels l(n, 0);
            l[0] = 2;
            l[1] = 1;
            return {l};
        }
        case 'D': {
            Labels l(n, 0);
            if (n == 4) {
                l = {1, 0, 1, 1};
            } else {
                l[0] = 1;
                l[2] = 1;
            }
            return {l};
        }
        case 'G':
            return {Labels{3, 0}};
        case 'F':
            return {Labels{0, 1, 0, 0}};
        case 'E': {
            Labels l(n, 0);
            if (n == 6) l[2] = 1;
            else if (n == 7) l[1] = 1;
            else l[5] = 1;
            return {l};
        }
    }
    throw std::logic_error("unreachable");
}

/// Highest weights of the (k, n) Cartan-power family: k copies of the
/// antisymmetric-square summand plus n copies of the adjoint. One weight in
/// general; for the A series with k >= 1 a conjugate pair. Empty for A1 with
/// k >= 1 (the summand vanishes there).
inline std::vector<Labels> family_weights(const AlgebraId& id, int k, int n) {
    if (k < 0 || n < 0) throw std::invalid_argument("family_weights: negative power");
    Labels ad = adjoint_labels(id);
    auto x2 = x2_labels(id);
    if (k == 0 || x2.size() <= 1) {
        if (k >= 1 && x2.empty()) return {};
        Labels w(id.rank, 0);
        for (int i = 0; i < id.rank; ++i) {
            w[i] = static_cast<long long>(n) * ad[i];
            if (k >= 1) w[i] += static_cast<long long>(k) * x2[0][i];
        }
        return {w};
    }
    std::vector<Labels> out;
    for (const auto& branch : x2) {
        Labels w(id.rank, 0);
        for (int i = 0; i < id.rank; ++i)
            w[i] = static_cast<long long>(k) * branch[i] + static_cast<long long>(n) * ad[i];
        out.push_back(std::move(w));
    }
    return out;
}

/// Non-trivial Dynkin diagram automorphisms as node permutations
/// (perm[i] = image of node i).
inline std::vector<std::vector<int>> diagram_automorphisms(const AlgebraId& id) {
    int n = id.rank;
    std::vector<std::vector<int>> out;
    auto identity = [&] {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        return p;
    };
    switch (id.family) {
        case 'A':
            if (n >= 2) {
                auto p = identity();
                std::reverse(p.begin(), p.end());
                out.push_back(p);
            }
            break;
        case 'D':
            if (n == 4) {
                // Full triality on the three outer nodes 0, 2, 3.
                for (auto [a, b, c] : {std::array<int, 3>{0, 3, 2}, {2, 0, 3}, {2, 3, 0},
                                       {3, 0, 2}, {3, 2, 0}}) {
                    auto p = identity();
                    p[0] = a;
                    p[2] = b;
                    p[3] = c;
                    out.push_back(p);
                }
            } else {
                auto p = identity();
                std::swap(p[n - 2], p[n - 1]);
                out.push_back(p);
            }
            break;
        case 'E':
            if (n == 6) {
                auto p = identity();
                std::swap(p[0], p[4]);
                std::swap(p[1], p[3]);
                out.push_back(p);
            }
            break;
        default:
            break;
    }
    return out;
}

inline Labels apply_node_permutation(const Labels& l, const std::vector<int>& perm) {
    Labels r(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) r[perm[i]] = l[i];
    return r;
}

/// Formal integer combination of dominant weights plus a rational constant;
/// the shape of every expected table value.
struct RepSpec {
    Rational constant;
    std::vector<std::pair<long long, Labels>> terms; // (coefficient, weight)

    bool is_zero() const { return constant.is_zero() && terms.empty(); }

    static RepSpec zero() { return {}; }
    static RepSpec of_constant(Rational c) {
        RepSpec s;
        s.constant = std::move(c);
        return s;
    }
    static RepSpec weight(Labels l, long long coeff = 1) {
        RepSpec s;
        s.terms.emplace_back(coeff, std::move(l));
        return s;
    }
};

/// Evaluated spec: rational constant plus signed canonical products.
struct QdimSum {
    Rational constant;
    std::vector<SinhProduct> terms;

    Rational dimension() const {
        Rational d = constant;
        for (const auto& t : terms) d += t.dimension_limit();
        return d;
    }

    std::pair<int, double> eval_log(double x) const; // defined in numeric helpers below
};

inline QdimSum qdim_of_spec(const RootSystem& rs, const RepSpec& spec) {
    QdimSum s;
    s.constant = spec.constant;
    for (const auto& [coeff, labels] : spec.terms)
        s.terms.push_back(weyl_qdim(rs, labels).scaled(rat(coeff)));
    return s;
}

/// Signed log-magnitude of the sum at x > 0, robust to huge values.
inline std::pair<int, double> QdimSum::eval_log(double x) const {
    std::vector<std::pair<int, double>> parts;
    if (!constant.is_zero())
        parts.emplace_back(constant.sign(), std::log(std::fabs(constant.to_double())));
    for (const auto& t : terms)
        if (!t.is_zero()) parts.emplace_back(t.eval_log(x));
    if (parts.empty()) return {0, -std::numeric_limits<double>::infinity()};
    auto top = *std::max_element(parts.begin(), parts.end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; });
    long double acc = 0;
    for (const auto& [sg, lg] : parts) acc += sg * std::exp(static_cast<long double>(lg) - top.second);
    if (acc == 0) return {0, -std::numeric_limits<double>::infinity()};
    int sign = acc < 0 ? -1 : 1;
    return {sign, top.second + static_cast<double>(std::log(std::fabs(acc)))};
}

/// Exact equality between a single canonical product and an evaluated spec.
/// Decided by the dimension limit plus the cleared exponential-polynomial
/// identity; for a bare single-term spec this reduces to canonical equality.
inline bool equals_qdim_sum(const SinhProduct& value, const QdimSum& sum) {
    if (sum.constant.is_zero() && sum.terms.size() == 1)
        return value == sum.terms[0];
    if (sum.terms.empty())
        return value == SinhProduct::constant(sum.constant);
    if (value.dimension_limit() != sum.dimension()) return false;
    std::vector<SinhProduct> lhs{value};
    std::vector<SinhProduct> rhs = sum.terms;
    if (!sum.constant.is_zero()) rhs.push_back(SinhProduct::constant(sum.constant));
    return sinh_sums_equal(lhs, rhs);
}

} // namespace uqd

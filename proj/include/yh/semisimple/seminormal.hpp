#pragma once
// Semisimplicity gate, interpolation idempotents E_t, the seminormal basis
// e_st = E_s m_st E_t and the gamma_t scalars.

#include "yh/cellular/murphy.hpp"

#include <map>
#include <random>

namespace yh {

struct GateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CriterionResult {
    bool ok = true;
    std::string witness;  // first vanishing factor
};

// prod_k (1 + q^2 + ... + q^{2(k-1)}) * prod_{i<j} prod_{|l|<n} (q^{2l} v_i - v_j)
inline CriterionResult semisimplicity_criterion(const Algebra& Y) {
    const int n = Y.n();
    const Scalar q2 = Y.q() * Y.q();
    for (int k = 1; k <= n; ++k) {
        Scalar s(0), p(1);
        for (int j = 0; j < k; ++j, p *= q2) s += p;
        if (s.is_zero()) return {false, "1 + q^2 + ... + q^" + std::to_string(2 * (k - 1)) + " = 0"};
    }
    for (int i = 1; i <= Y.d(); ++i)
        for (int j = i + 1; j <= Y.d(); ++j)
            for (int l = 1 - n; l < n; ++l) {
                Scalar f = q2.pow(l) * Y.v()[static_cast<std::size_t>(i - 1)] - Y.v()[static_cast<std::size_t>(j - 1)];
                if (f.is_zero())
                    return {false, "q^" + std::to_string(2 * l) + " v_" + std::to_string(i) + " - v_" + std::to_string(j) + " = 0"};
            }
    return {};
}

inline std::vector<RDTableau> all_standard_tableaux(int r, int d, int n) {
    std::vector<RDTableau> out;
    for (const auto& lam : enumerate_rd_partitions(r, d, n))
        for (auto& t : standard_tableaux(lam)) out.push_back(std::move(t));
    return out;
}

// C(k) and its framing counterpart over every standard tableau of size n.
struct ContentTables {
    std::vector<std::vector<Scalar>> C, Cbar;  // index k-1
};

inline ContentTables content_tables(const Algebra& Y) {
    ContentTables T;
    T.C.resize(static_cast<std::size_t>(Y.n()));
    T.Cbar.resize(static_cast<std::size_t>(Y.n()));
    auto add = [](std::vector<Scalar>& v, const Scalar& x) {
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    };
    for (const auto& t : all_standard_tableaux(Y.r(), Y.d(), Y.n()))
        for (int k = 1; k <= Y.n(); ++k) {
            add(T.C[static_cast<std::size_t>(k - 1)], content(Y, t, k));
            add(T.Cbar[static_cast<std::size_t>(k - 1)], framing_eigenvalue(Y, t, k));
        }
    return T;
}

// Distinct standard tableaux must differ in some content or r-position.
inline CriterionResult separation(const Algebra& Y) {
    auto tabs = all_standard_tableaux(Y.r(), Y.d(), Y.n());
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < tabs.size(); ++i) {
        std::string key;
        for (int k = 1; k <= Y.n(); ++k) key += content(Y, tabs[i], k).str() + "|" + framing_eigenvalue(Y, tabs[i], k).str() + ";";
        auto [it, fresh] = seen.emplace(key, i);
        if (!fresh) return {false, tabs[it->second].str() + " and " + tabs[i].str() + " share contents"};
    }
    return {};
}

inline void require_semisimple(const Algebra& Y) {
    auto c = semisimplicity_criterion(Y);
    if (!c.ok) throw GateError("semisimplicity criterion fails: " + c.witness);
    auto s = separation(Y);
    if (!s.ok) throw GateError("contents do not separate tableaux: " + s.witness);
}

inline Element rmul_linear_X(const Algebra& Y, const Element& x, int k, const Scalar& c, const Scalar& den) {
    return den.inverse() * (Y.rmul_X(x, k) - c * x);
}
inline Element rmul_linear_t(const Algebra& Y, const Element& x, int k, const Scalar& c, const Scalar& den) {
    return den.inverse() * (Y.rmul_t(x, k) - c * x);
}

// x E_t with E_t the product of Lagrange factors over the global content sets.
inline Element rmul_interpolation(const Algebra& Y, const ContentTables& T, Element x, const RDTableau& t) {
    for (int k = 1; k <= Y.n(); ++k) {
        Scalar ct = content(Y, t, k);
        for (const auto& c : T.C[static_cast<std::size_t>(k - 1)])
            if (c != ct) x = rmul_linear_X(Y, x, k, c, ct - c);
        const Scalar& zt = framing_eigenvalue(Y, t, k);
        for (const auto& c : T.Cbar[static_cast<std::size_t>(k - 1)])
            if (c != zt) x = rmul_linear_t(Y, x, k, c, zt - c);
    }
    return x;
}

inline Element idempotent_interpolation(const Algebra& Y, const ContentTables& T, const RDTableau& t) {
    if (t.size() != Y.n() || !t.is_standard()) throw std::invalid_argument("need a standard tableau of size n");
    return rmul_interpolation(Y, T, Y.one(), t);
}
inline Element idempotent_interpolation(const Algebra& Y, const RDTableau& t) {
    require_semisimple(Y);
    return idempotent_interpolation(Y, content_tables(Y), t);
}

// Node-by-node form: E_t = E_u prod over addable nodes of the shape of u.
// Stopping at level m gives E of the first m entries inside Y_n.
inline Element idempotent_prefix(const Algebra& Y, const RDTableau& t, int m) {
    Element x = Y.one();
    for (int j = 1; j <= m; ++j) {
        RDPartition mu = t.restricted_shape(j - 1);
        const RDNode& th = t.node(j);
        Scalar c = content(Y, t, j);
        const Scalar& z = Y.zeta(th.k);
        for (const auto& nd : mu.addable()) {
            Scalar c2 = Y.v()[static_cast<std::size_t>(nd.l - 1)] * Y.q().pow(2 * (nd.b - nd.a));
            if (c2 != c) x = rmul_linear_X(Y, x, j, c2, c - c2);
        }
        for (const auto& nd : mu.addable())
            if (nd.k != th.k) x = rmul_linear_t(Y, x, j, Y.zeta(nd.k), z - Y.zeta(nd.k));
    }
    return x;
}

inline Element idempotent_inductive(const Algebra& Y, const RDTableau& t) {
    if (t.size() != Y.n() || !t.is_standard()) throw std::invalid_argument("need a standard tableau of size n");
    return idempotent_prefix(Y, t, Y.n());
}

// E_t evaluated at the eigenvalues of s: the scalar with E_s E_t = value * E_s
// once E_s X_k = c_s(k) E_s and E_s t_k = zeta E_s are known.
inline Scalar interpolation_at(const Algebra& Y, const ContentTables& T, const RDTableau& t, const RDTableau& s) {
    Scalar out(1);
    for (int k = 1; k <= Y.n(); ++k) {
        Scalar ct = content(Y, t, k), cs = content(Y, s, k);
        for (const auto& c : T.C[static_cast<std::size_t>(k - 1)])
            if (c != ct) out *= (cs - c) / (ct - c);
        const Scalar &zt = framing_eigenvalue(Y, t, k), &zs = framing_eigenvalue(Y, s, k);
        for (const auto& c : T.Cbar[static_cast<std::size_t>(k - 1)])
            if (c != zt) out *= (zs - c) / (zt - c);
    }
    return out;
}

struct SeminormalDatum {
    ContentTables tables;
    std::vector<std::vector<Element>> E;  // [shape][t]
    std::vector<Element> e;               // aligned with CellularBasis::elements()
    std::vector<std::vector<Scalar>> gamma;
};

// gamma from e_st e_tv = gamma e_sv.
inline std::optional<Scalar> extract_gamma(const Element& prod, const Element& esv) {
    if (esv.is_zero()) return std::nullopt;
    const auto& [idx, c] = esv.terms().front();
    Scalar g = prod.coeff(idx) / c;
    if (!(prod == g * esv)) return std::nullopt;
    return g;
}

inline SeminormalDatum seminormal_basis(const CellularBasis& C) {
    const Algebra& Y = C.algebra();
    require_semisimple(Y);
    SeminormalDatum S;
    S.tables = content_tables(Y);
    for (std::size_t a = 0; a < C.shapes().size(); ++a) {
        S.E.emplace_back();
        for (const auto& t : C.tableaux(a)) S.E.back().push_back(idempotent_interpolation(Y, S.tables, t));
    }
    for (const auto& b : C.elements()) {
        const auto& T = C.tableaux(b.shape);
        // E_s m_st E_t = ((m_st E_t)^* E_s)^*, all idempotents being star-fixed.
        Element right = rmul_interpolation(Y, S.tables, b.value, T[b.t]);
        S.e.push_back(Y.star(rmul_interpolation(Y, S.tables, Y.star(right), T[b.s])));
    }
    for (std::size_t a = 0; a < C.shapes().size(); ++a) {
        S.gamma.emplace_back();
        for (std::size_t t = 0; t < C.tableaux(a).size(); ++t) {
            const Element& ett = S.e[C.position(a, t, t)];
            auto g = extract_gamma(ett * ett, ett);
            if (!g || g->is_zero()) throw std::logic_error("gamma undefined for " + C.tableaux(a)[t].str());
            S.gamma.back().push_back(*g);
        }
    }
    return S;
}

// Properties (i)-(v) of the seminormal basis and the two constructions of E_t.
inline std::vector<CheckResult> verify_seminormal(const CellularBasis& C, const SeminormalDatum& S, std::uint64_t seed = 1, int samples = 40) {
    const Algebra& Y = C.algebra();
    const int n = Y.n();
    std::vector<CheckResult> out;
    std::size_t ntab = 0;
    for (std::size_t a = 0; a < C.shapes().size(); ++a) ntab += C.tableaux(a).size();
    auto tab = [&](std::size_t a, std::size_t t) -> const RDTableau& { return C.tableaux(a)[t]; };
    {
        CheckBuilder b("(i) e_st form a basis");
        EchelonSpace sp(Y.dim());
        for (const auto& x : S.e) sp.insert(x.terms());
        b.expect(sp.rank() == Y.dim(), "rank " + std::to_string(sp.rank()) + " of " + std::to_string(Y.dim()));
        out.push_back(b.result());
    }
    {
        CheckBuilder b("(ii) e_st X_k = c_t(k) e_st, e_st t_k = zeta e_st, e_st E_t = e_st");
        for (std::size_t p = 0; p < C.size(); ++p) {
            const auto& el = C.elements()[p];
            const RDTableau& t = tab(el.shape, el.t);
            const Element& x = S.e[p];
            for (int k = 1; k <= n && b.passed(); ++k) {
                b.expect_lazy(Y.rmul_X(x, k) == content(Y, t, k) * x, [&] { return C.label(p) + " X_" + std::to_string(k); });
                b.expect_lazy(Y.rmul_t(x, k) == framing_eigenvalue(Y, t, k) * x, [&] { return C.label(p) + " t_" + std::to_string(k); });
            }
            b.expect_lazy(rmul_interpolation(Y, S.tables, x, t) == x, [&] { return C.label(p) + " E_t"; });
        }
        out.push_back(b.result());
    }
    {
        // All pairs through the eigen-relations; a seeded sample by direct products.
        CheckBuilder b("(ii) e_st e_uv = delta_tu gamma_t e_sv");
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, C.size() - 1);
        for (int i = 0; i < samples; ++i) {
            std::size_t p1 = pick(rng), p2 = pick(rng);
            if (i % 2 == 0) {
                // force a matching middle tableau half of the time
                const auto& e1 = C.elements()[p1];
                std::size_t v = std::uniform_int_distribution<std::size_t>(0, C.tableaux(e1.shape).size() - 1)(rng);
                p2 = C.position(e1.shape, e1.t, v);
            }
            const auto &e1 = C.elements()[p1], &e2 = C.elements()[p2];
            Element prod = S.e[p1] * S.e[p2];
            Element expect = Y.zero();
            if (e1.shape == e2.shape && e1.t == e2.s) expect = S.gamma[e1.shape][e1.t] * S.e[C.position(e1.shape, e1.s, e2.t)];
            b.expect_lazy(prod == expect, [&] { return C.label(p1) + " * " + C.label(p2); });
        }
        for (std::size_t a = 0; a < C.shapes().size(); ++a)
            for (std::size_t t = 0; t < C.tableaux(a).size(); ++t)
                for (std::size_t a2 = 0; a2 < C.shapes().size(); ++a2)
                    for (std::size_t u = 0; u < C.tableaux(a2).size(); ++u) {
                        Scalar v = interpolation_at(Y, S.tables, tab(a2, u), tab(a, t));
                        bool same = a == a2 && t == u;
                        b.expect_lazy(same ? v.is_one() : v.is_zero(), [&] { return "E_" + tab(a2, u).str() + " at " + tab(a, t).str(); });
                    }
        out.push_back(b.result());
    }
    {
        CheckBuilder b("gamma_t nonzero and independent of the probe");
        for (std::size_t a = 0; a < C.shapes().size(); ++a) {
            const auto& T = C.tableaux(a);
            for (std::size_t t = 0; t < T.size(); ++t) {
                const Scalar& g = S.gamma[a][t];
                b.expect_lazy(!g.is_zero(), [&] { return T[t].str(); });
                std::vector<std::pair<std::size_t, std::size_t>> probes{{0, T.size() - 1}, {T.size() - 1, 0}, {0, 0}};
                for (auto [s, v] : probes) {
                    Element prod = S.e[C.position(a, s, t)] * S.e[C.position(a, t, v)];
                    auto g2 = extract_gamma(prod, S.e[C.position(a, s, v)]);
                    b.expect_lazy(g2 && *g2 == g, [&] { return T[t].str() + " probe s=" + T[s].str() + " v=" + T[v].str(); });
                }
            }
        }
        out.push_back(b.result());
    }
    {
        CheckBuilder b("(iii) E_t = e_tt / gamma_t, idempotent, sum to 1, count");
        Element sum = Y.zero();
        for (std::size_t a = 0; a < C.shapes().size(); ++a)
            for (std::size_t t = 0; t < C.tableaux(a).size(); ++t) {
                const Element& E = S.E[a][t];
                sum += E;
                b.expect_lazy(S.gamma[a][t].inverse() * S.e[C.position(a, t, t)] == E, [&] { return "e_tt/gamma " + tab(a, t).str(); });
                b.expect_lazy(rmul_interpolation(Y, S.tables, E, tab(a, t)) == E, [&] { return "E^2 " + tab(a, t).str(); });
                b.expect_lazy(Y.star(E) == E, [&] { return "star " + tab(a, t).str(); });
            }
        b.expect(sum == Y.one(), "sum of E_t is not 1");
        std::size_t sq = 0;
        for (std::size_t a = 0; a < C.shapes().size(); ++a) sq += C.tableaux(a).size() * C.tableaux(a).size();
        b.expect(sq == Y.dim(), "sum |Std|^2 = " + std::to_string(sq));
        out.push_back(b.result());
    }
    {
        CheckBuilder b("(iii) E_s E_t = 0 on sampled pairs by direct product");
        std::vector<std::pair<std::size_t, std::size_t>> flat;
        for (std::size_t a = 0; a < C.shapes().size(); ++a)
            for (std::size_t t = 0; t < C.tableaux(a).size(); ++t) flat.emplace_back(a, t);
        std::mt19937_64 rng(seed + 1);
        std::uniform_int_distribution<std::size_t> pick(0, flat.size() - 1);
        bool all = flat.size() <= 16;
        std::size_t rounds = all ? flat.size() * flat.size() : static_cast<std::size_t>(samples);
        for (std::size_t i = 0; i < rounds; ++i) {
            std::size_t x = all ? i / flat.size() : pick(rng), y = all ? i % flat.size() : pick(rng);
            if (x == y) continue;
            auto [a1, t1] = flat[x];
            auto [a2, t2] = flat[y];
            b.expect_lazy(rmul_interpolation(Y, S.tables, S.E[a1][t1], tab(a2, t2)).is_zero(),
                          [&] { return tab(a1, t1).str() + " " + tab(a2, t2).str(); });
        }
        out.push_back(b.result());
    }
    {
        CheckBuilder b("(iv) X_k E_t = E_t X_k = c_t(k) E_t, same for t_k");
        for (std::size_t a = 0; a < C.shapes().size(); ++a)
            for (std::size_t t = 0; t < C.tableaux(a).size(); ++t) {
                const Element& E = S.E[a][t];
                for (int k = 1; k <= n; ++k) {
                    Element r1 = Y.rmul_X(E, k), r2 = Y.rmul_t(E, k);
                    Scalar c = content(Y, tab(a, t), k);
                    const Scalar& z = framing_eigenvalue(Y, tab(a, t), k);
                    b.expect_lazy(r1 == c * E && Y.star(r1) == r1, [&] { return tab(a, t).str() + " X_" + std::to_string(k); });
                    b.expect_lazy(r2 == z * E && Y.star(r2) == r2, [&] { return tab(a, t).str() + " t_" + std::to_string(k); });
                }
            }
        out.push_back(b.result());
    }
    {
        CheckBuilder b("(v) JM subalgebra has dimension sum |Std| and is spanned by the E_t");
        EchelonSpace jm(Y.dim());
        std::vector<Element> frontier{Y.one()};
        jm.insert(Y.one().terms());
        while (!frontier.empty()) {
            std::vector<Element> next;
            for (const auto& x : frontier)
                for (int k = 1; k <= n; ++k)
                    for (Element y : {Y.rmul_X(x, k), Y.rmul_t(x, k)})
                        if (jm.insert(y.terms())) next.push_back(std::move(y));
            frontier = std::move(next);
        }
        b.expect(jm.rank() == ntab, "dimension " + std::to_string(jm.rank()) + ", expected " + std::to_string(ntab));
        EchelonSpace es(Y.dim());
        for (const auto& row : S.E)
            for (const auto& E : row) {
                b.expect_lazy(jm.contains(E.terms()), [&] { return "an E_t outside the JM span"; });
                es.insert(E.terms());
            }
        b.expect(es.rank() == ntab, "E_t span has rank " + std::to_string(es.rank()));
        out.push_back(b.result());
    }
    {
        CheckBuilder b("interpolation and node-by-node formulas agree");
        for (std::size_t a = 0; a < C.shapes().size(); ++a)
            for (std::size_t t = 0; t < C.tableaux(a).size(); ++t)
                b.expect_lazy(idempotent_inductive(Y, tab(a, t)) == S.E[a][t], [&] { return tab(a, t).str(); });
        out.push_back(b.result());
    }
    return out;
}

}  // namespace yh

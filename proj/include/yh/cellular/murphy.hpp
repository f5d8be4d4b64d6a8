#pragma once
// Murphy-type basis m_st = g_{d(s)}^* m_lambda g_{d(t)} and the exact checks
// of the cellular axioms and of the JM triangularity against it.

#include "yh/checks/report.hpp"
#include "yh/combi/tableau.hpp"
#include "yh/kernel/algebra.hpp"

#include <map>
#include <optional>

namespace yh {

// x g_w through a reduced word of w.
inline Element rmul_perm(const Algebra& Y, Element x, const Permutation& w) {
    for (int i : w.reduced_word()) x = Y.rmul_g(x, i);
    return x;
}

// c_t(k) = v_l q^{2(b-a)} for the node of k.
inline Scalar content(const Algebra& Y, const RDTableau& t, int k) {
    return Y.v()[static_cast<std::size_t>(t.d_position(k) - 1)] * Y.q().pow(2 * t.content_exponent(k));
}
inline const Scalar& framing_eigenvalue(const Algebra& Y, const RDTableau& t, int k) { return Y.zeta(t.r_position(k)); }

inline bool strictly_dominates(const RDPartition& mu, const RDPartition& lambda) { return !(mu == lambda) && dominates(mu, lambda); }

struct MurphyDatum {
    RDPartition shape;
    Element u, E, ua, x, m;  // u_lambda, E_{A_lambda}, u_a^+, x_lambda, m_lambda
};

inline MurphyDatum murphy_datum(const Algebra& Y, const RDPartition& shape) {
    if (shape.r() != Y.r() || shape.d() != Y.d() || shape.size() != Y.n()) throw std::invalid_argument("shape does not fit the algebra");
    MurphyDatum D{shape, Y.one(), Y.E(set_partition_of(shape)), Y.one(), Y.zero(), Y.zero()};
    int end = 0;
    for (int k = 1; k <= Y.r(); ++k) {
        int b = end;
        end += shape.block_size(k);
        if (shape.block_size(k) > 0) D.u = D.u * Y.u(end, k);
        int a = 0;
        for (int l = 1; l <= Y.d(); ++l) {
            for (int j = 1; j <= a; ++j) D.ua = D.ua * (Y.X(b + j) - Y.scalar(Y.v()[static_cast<std::size_t>(l - 1)]));
            a += shape.comp(k, l).size();
        }
    }
    Terms xs;
    for (const auto& w : young_subgroup(shape)) xs.emplace_back(Y.index(0, 0, w.lex_rank()), Y.q().pow(w.length()));
    std::sort(xs.begin(), xs.end(), [](const Term& p, const Term& q) { return p.first < q.first; });
    D.x = Y.make(std::move(xs));
    D.m = D.u * D.E * D.ua * D.x;
    return D;
}

// The orderings of the four factors that must all give m_lambda.
inline std::vector<std::pair<std::string, Element>> murphy_forms(const MurphyDatum& D) {
    return {{"u E u+ x", D.u * D.E * D.ua * D.x},
            {"u E x u+", D.u * D.E * D.x * D.ua},
            {"u x E u+", D.u * D.x * D.E * D.ua},
            {"x u E u+", D.x * D.u * D.E * D.ua},
            {"x u+ u E", D.x * D.ua * D.u * D.E}};
}

// Row-standard s, t of the datum's shape.
inline Element murphy_m_st(const Algebra& Y, const MurphyDatum& D, const RDTableau& s, const RDTableau& t) {
    if (!(s.shape() == D.shape) || !(t.shape() == D.shape)) throw std::invalid_argument("tableau shape differs from m_lambda");
    // g_{d(s)}^* m = (m g_{d(s)})^* since m is star-fixed.
    Element left = Y.star(rmul_perm(Y, D.m, coset_rep(s).perm));
    return rmul_perm(Y, left, coset_rep(t).perm);
}

struct CellularBasisElement {
    std::size_t shape;  // index into CellularBasis::shapes()
    std::size_t s, t;   // indices into the standard tableaux of that shape
    Element value;
};

class CellularBasis {
public:
    explicit CellularBasis(AlgebraPtr Y) : Y_(std::move(Y)), space_(Y_->dim(), true) {
        for (const auto& lam : enumerate_rd_partitions(Y_->r(), Y_->d(), Y_->n())) {
            shapes_.push_back(lam);
            data_.push_back(murphy_datum(*Y_, lam));
            tabs_.push_back(standard_tableaux(lam));
        }
        for (std::size_t a = 0; a < shapes_.size(); ++a) {
            const auto& T = tabs_[a];
            // m_lambda g_{d(s)} once per s; m_st = (m_lambda g_{d(s)})^* g_{d(t)}
            std::vector<Element> left;
            for (const auto& s : T) left.push_back(Y_->star(rmul_perm(*Y_, data_[a].m, coset_rep(s).perm)));
            for (std::size_t i = 0; i < T.size(); ++i)
                for (std::size_t j = 0; j < T.size(); ++j) {
                    pos_[{a, i, j}] = elems_.size();
                    elems_.push_back({a, i, j, rmul_perm(*Y_, left[i], coset_rep(T[j]).perm)});
                    space_.insert(elems_.back().value.terms());
                }
        }
    }

    const Algebra& algebra() const { return *Y_; }
    const std::vector<RDPartition>& shapes() const { return shapes_; }
    const MurphyDatum& datum(std::size_t a) const { return data_[a]; }
    const std::vector<RDTableau>& tableaux(std::size_t a) const { return tabs_[a]; }
    const std::vector<CellularBasisElement>& elements() const { return elems_; }
    const CellularBasisElement& at(std::size_t a, std::size_t s, std::size_t t) const { return elems_[pos_.at({a, s, t})]; }
    std::size_t position(std::size_t a, std::size_t s, std::size_t t) const { return pos_.at({a, s, t}); }
    std::size_t rank() const { return space_.rank(); }
    std::size_t size() const { return elems_.size(); }
    std::optional<std::size_t> shape_index(const RDPartition& lam) const {
        for (std::size_t a = 0; a < shapes_.size(); ++a)
            if (shapes_[a] == lam) return a;
        return std::nullopt;
    }
    std::string label(std::size_t pos) const {
        const auto& b = elems_[pos];
        return "m[" + tabs_[b.shape][b.s].str() + "," + tabs_[b.shape][b.t].str() + "]";
    }

    // Coefficients of x in the cellular basis, keyed by basis position.
    SparseVec coordinates(const Element& x) const {
        auto co = space_.coordinates(x.terms());
        if (!co) throw std::logic_error("element outside the span of the cellular basis");
        return *co;
    }

private:
    AlgebraPtr Y_;
    std::vector<RDPartition> shapes_;
    std::vector<MurphyDatum> data_;
    std::vector<std::vector<RDTableau>> tabs_;
    std::vector<CellularBasisElement> elems_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> pos_;
    EchelonSpace space_;
};

inline std::vector<std::pair<std::string, Element>> cellular_generators(const Algebra& Y) {
    std::vector<std::pair<std::string, Element>> gens;
    for (int i = 1; i < Y.n(); ++i) gens.emplace_back("g_" + std::to_string(i), Y.g(i));
    for (int j = 1; j <= Y.n(); ++j) gens.emplace_back("t_" + std::to_string(j), Y.t(j));
    if (Y.n() >= 1) gens.emplace_back("X_1", Y.X(1));
    return gens;
}

// (C1)-(C3) plus the lemmas the construction rests on.
inline std::vector<CheckResult> verify_cellularity(const CellularBasis& C) {
    const Algebra& Y = C.algebra();
    std::vector<CheckResult> out;
    std::uint64_t expect = 1;
    for (int k = 1; k <= Y.n(); ++k) expect *= static_cast<std::uint64_t>(k * Y.r() * Y.d());
    {
        CheckBuilder b("(C1) basis size and independence");
        b.expect(C.size() == expect && C.rank() == expect,
                 std::to_string(C.size()) + " elements of rank " + std::to_string(C.rank()) + ", expected " + std::to_string(expect));
        out.push_back(b.result());
    }
    {
        CheckBuilder b("(C2) star(m_st) = m_ts");
        for (std::size_t p = 0; p < C.size(); ++p) {
            const auto& e = C.elements()[p];
            b.expect_lazy(Y.star(e.value) == C.at(e.shape, e.t, e.s).value, [&] { return C.label(p); });
        }
        out.push_back(b.result());
    }
    {
        CheckBuilder b("(C3) m_st a = sum_u r(a) m_su mod strictly dominating shapes");
        for (const auto& [name, a] : cellular_generators(Y)) {
            for (std::size_t lam = 0; lam < C.shapes().size(); ++lam) {
                const auto& T = C.tableaux(lam);
                for (std::size_t t = 0; t < T.size(); ++t) {
                    std::optional<std::map<std::size_t, Scalar>> ref;
                    for (std::size_t s = 0; s < T.size(); ++s) {
                        std::map<std::size_t, Scalar> coeffs;
                        std::string bad;
                        for (const auto& [p, c] : C.coordinates(C.at(lam, s, t).value * a)) {
                            const auto& e = C.elements()[p];
                            if (e.shape == lam) {
                                if (e.s != s) bad = "term " + C.label(p) + " has the wrong left tableau";
                                coeffs.emplace(e.t, c);
                            } else if (!strictly_dominates(C.shapes()[e.shape], C.shapes()[lam])) {
                                bad = "residual term " + C.label(p) + " not in a strictly dominating shape";
                            }
                        }
                        if (bad.empty() && ref && *ref != coeffs) bad = "coefficients differ from those at s = t^lambda";
                        if (!ref) ref = coeffs;
                        if (!b.expect_lazy(bad.empty(), [&] { return C.label(C.position(lam, s, t)) + " * " + name + ": " + bad; })) break;
                    }
                }
            }
        }
        out.push_back(b.result());
    }
    {
        CheckBuilder b("five factor orderings of m_lambda agree");
        for (std::size_t lam = 0; lam < C.shapes().size(); ++lam)
            for (const auto& [name, f] : murphy_forms(C.datum(lam)))
                b.expect_lazy(f == C.datum(lam).m, [&] { return C.shapes()[lam].str() + " " + name; });
        out.push_back(b.result());
    }
    {
        CheckBuilder b("m_lambda g_w = q^l(w) m_lambda on the Young subgroup");
        for (std::size_t lam = 0; lam < C.shapes().size(); ++lam) {
            const Element& m = C.datum(lam).m;
            for (const auto& w : young_subgroup(C.shapes()[lam]))
                b.expect_lazy(rmul_perm(Y, m, w) == Y.q().pow(w.length()) * m, [&] { return C.shapes()[lam].str() + " w=" + w.str(); });
        }
        out.push_back(b.result());
    }
    {
        CheckBuilder b("m_st e_ij = 0 across r-positions of t");
        for (const auto& e : C.elements()) {
            const RDTableau& t = C.tableaux(e.shape)[e.t];
            for (int i = 1; i <= Y.n(); ++i)
                for (int j = i + 1; j <= Y.n(); ++j)
                    if (t.r_position(i) != t.r_position(j))
                        b.expect_lazy(Y.mul(e.value, Y.e(i, j)).is_zero(),
                                      [&] { return t.str() + " i=" + std::to_string(i) + " j=" + std::to_string(j); });
        }
        out.push_back(b.result());
    }
    {
        // Tableaux with every r-block a single column in the last d-position.
        CheckBuilder b("m_ss over column tableaux span the t-subalgebra and give 1");
        EchelonSpace ts(Y.dim(), true);
        std::size_t count = 0;
        for (std::size_t lam = 0; lam < C.shapes().size(); ++lam) {
            const RDPartition& sh = C.shapes()[lam];
            bool column = true;
            for (int k = 1; k <= Y.r(); ++k)
                for (int l = 1; l <= Y.d(); ++l) {
                    const Partition& p = sh.comp(k, l);
                    if (l < Y.d() ? p.size() != 0 : p.size() != p.length()) column = false;
                }
            if (!column) continue;
            for (std::size_t s = 0; s < C.tableaux(lam).size(); ++s) {
                const Element& m = C.at(lam, s, s).value;
                bool in_t = true;
                for (const auto& [idx, c] : m.terms()) {
                    Word w = Y.word(idx);
                    if (!w.w.is_identity() || std::any_of(w.alpha.begin(), w.alpha.end(), [](int x) { return x != 0; })) in_t = false;
                }
                b.expect_lazy(in_t, [&] { return C.label(C.position(lam, s, s)) + " has X or g terms"; });
                ts.insert(m.terms());
                ++count;
            }
        }
        std::uint64_t rn = 1;
        for (int k = 0; k < Y.n(); ++k) rn *= static_cast<std::uint64_t>(Y.r());
        b.expect(count == rn && ts.rank() == rn, "rank " + std::to_string(ts.rank()) + " of " + std::to_string(count) + ", expected r^n");
        b.expect(ts.contains(Y.one().terms()), "1 outside their span");
        out.push_back(b.result());
    }
    return out;
}

// m_{t^lambda t} L = C_t m_{t^lambda t} + sum_{s > t} a_s m_{t^lambda s} mod strictly dominating shapes.
inline std::vector<CheckResult> verify_jm(const CellularBasis& C) {
    const Algebra& Y = C.algebra();
    std::vector<CheckResult> out;
    for (int kind = 0; kind < 2; ++kind) {
        CheckBuilder b(kind == 0 ? "X_k triangular with diagonal c_t(k)" : "t_k triangular with diagonal zeta_p(k)");
        for (int k = 1; k <= Y.n(); ++k) {
            Element L = kind == 0 ? Y.X(k) : Y.t(k);
            for (std::size_t lam = 0; lam < C.shapes().size(); ++lam) {
                const auto& T = C.tableaux(lam);
                std::size_t top = static_cast<std::size_t>(std::find(T.begin(), T.end(), initial_tableau(C.shapes()[lam])) - T.begin());
                for (std::size_t t = 0; t < T.size(); ++t) {
                    Scalar diag = kind == 0 ? content(Y, T[t], k) : framing_eigenvalue(Y, T[t], k);
                    std::string bad;
                    bool seen = false;
                    for (const auto& [p, c] : C.coordinates(C.at(lam, top, t).value * L)) {
                        const auto& e = C.elements()[p];
                        if (e.shape != lam) {
                            if (!strictly_dominates(C.shapes()[e.shape], C.shapes()[lam])) bad = "residual " + C.label(p) + " not strictly dominating";
                        } else if (e.s != top) {
                            bad = "term " + C.label(p) + " off the t^lambda row";
                        } else if (e.t == t) {
                            seen = true;
                            if (c != diag) bad = "diagonal " + c.str() + ", expected " + diag.str();
                        } else if (!dominates_tableau(T[e.t], T[t])) {
                            bad = "term " + C.label(p) + " not above t";
                        }
                    }
                    if (bad.empty() && !seen && !diag.is_zero()) bad = "diagonal coefficient missing";
                    b.expect_lazy(bad.empty(), [&] { return T[t].str() + " k=" + std::to_string(k) + ": " + bad; });
                }
            }
        }
        out.push_back(b.result());
    }
    return out;
}

}  // namespace yh

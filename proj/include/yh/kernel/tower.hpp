#pragma once
// Y_n inside Y_{n+1}: the coset family X_j^a t_j^b g_j..g_n, the bimodule
// summands, the projection theta onto Y_n, and the trace form on Y_{r,m}.

#include "yh/checks/report.hpp"
#include "yh/kernel/algebra.hpp"

#include <random>
#include <tuple>

namespace yh {

// Word-level inclusion Y_n -> Y_{n+1}.
inline std::uint32_t embed_index(const Algebra& small, const Algebra& big, std::uint32_t idx) {
    Word w = small.word(idx);
    w.alpha.push_back(0);
    w.beta.push_back(0);
    std::vector<int> im;
    for (int i = 1; i <= small.n(); ++i) im.push_back(w.w(i));
    im.push_back(small.n() + 1);
    w.w = Permutation(im);
    return big.index(w);
}

inline Element embed(const Algebra& small, const Algebra& big, const Element& x) {
    Terms t;
    for (const auto& [i, c] : x.terms()) t.emplace_back(embed_index(small, big, i), c);
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    return big.make(std::move(t));
}

struct CosetBlock {
    int j, a, b;  // X_j^a t_j^b g_j..g_n
    friend bool operator<(const CosetBlock& x, const CosetBlock& y) { return std::tie(x.j, x.a, x.b) < std::tie(y.j, y.a, y.b); }
    friend bool operator==(const CosetBlock& x, const CosetBlock& y) { return x.j == y.j && x.a == y.a && x.b == y.b; }
    std::string str() const { return "X_" + std::to_string(j) + "^" + std::to_string(a) + " t_" + std::to_string(j) + "^" + std::to_string(b); }
};

class Tower {
public:
    // small has index n, big has index n+1 and the same parameters.
    Tower(AlgebraPtr small, AlgebraPtr big) : small_(std::move(small)), big_(std::move(big)), space_(big_->dim(), true) {
        if (big_->n() != small_->n() + 1 || !small_->same_parameters(*big_))
            throw std::invalid_argument("tower needs Y_n and Y_{n+1} with equal parameters");
        const int n = small_->n();
        for (int j = 1; j <= n + 1; ++j)
            for (int a = 0; a < big_->d(); ++a)
                for (int b = 0; b < big_->r(); ++b) {
                    Element c = big_->one();
                    for (int m = 0; m < a; ++m) c = big_->rmul_X(c, j);
                    for (int m = 0; m < b; ++m) c = big_->rmul_t(c, j);
                    for (int i = j; i <= n; ++i) c = big_->rmul_g(c, i);
                    blocks_.push_back({CosetBlock{j, a, b}, c});
                }
        for (const auto& blk : blocks_)
            for (std::uint32_t y = 0; y < small_->dim(); ++y) {
                Element v = blk.second * big_->basis(embed_index(*small_, *big_, y));
                space_.insert(v.terms());
                gens_.push_back({blk.first, y});
                vecs_.push_back(std::move(v));
            }
    }

    const Algebra& small() const { return *small_; }
    const Algebra& big() const { return *big_; }
    std::size_t rank() const { return space_.rank(); }
    std::size_t family_size() const { return gens_.size(); }
    const std::vector<Element>& family() const { return vecs_; }
    const std::vector<std::pair<CosetBlock, std::uint32_t>>& generators() const { return gens_; }
    const std::vector<std::pair<CosetBlock, Element>>& blocks() const { return blocks_; }

    // Right Y_n coefficients of x per coset block.
    std::map<CosetBlock, Element> decompose(const Element& x) const {
        auto co = space_.coordinates(x.terms());
        if (!co) throw std::logic_error("element outside the coset span");
        std::map<CosetBlock, Accumulated> acc;
        for (const auto& [g, c] : *co) acc[gens_[g].first].emplace_back(gens_[g].second, c);
        std::map<CosetBlock, Element> out;
        for (auto& [blk, terms] : acc) {
            std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
            out.emplace(blk, small_->make(std::move(terms)));
        }
        return out;
    }

    // Projection onto the summand Y_n = X_{n+1}^0 t_{n+1}^0 Y_n.
    Element theta(const Element& x) const {
        auto parts = decompose(x);
        auto it = parts.find(CosetBlock{small_->n() + 1, 0, 0});
        return it == parts.end() ? small_->zero() : it->second;
    }

private:
    using Accumulated = Terms;
    AlgebraPtr small_, big_;
    EchelonSpace space_;
    std::vector<std::pair<CosetBlock, Element>> blocks_;
    std::vector<std::pair<CosetBlock, std::uint32_t>> gens_;
    std::vector<Element> vecs_;
};

inline std::uint64_t tower_expected_rank(int r, int d, int n1) {
    std::uint64_t e = factorial(n1);
    for (int k = 0; k < n1; ++k) e *= static_cast<std::uint64_t>(r * d);
    return e;
}

inline std::vector<CheckResult> tower_checks(const Tower& T, std::uint64_t seed = 1, int samples = 10) {
    const Algebra& S = T.small();
    const Algebra& B = T.big();
    const int n = S.n();
    std::vector<CheckResult> out;
    std::uint64_t expect = tower_expected_rank(B.r(), B.d(), n + 1);
    {
        CheckBuilder b("coset family is a basis");
        b.expect(T.rank() == expect && T.family_size() == expect,
                 "rank " + std::to_string(T.rank()) + " of " + std::to_string(T.family_size()) + ", expected " + std::to_string(expect));
        out.push_back(b.result());
    }
    // Split the family into the g_n-part (j <= n) and the X_{n+1}^a t_{n+1}^b summands.
    EchelonSpace mid(B.dim());
    std::map<std::pair<int, int>, EchelonSpace> tops;
    std::size_t top_rank = 0;
    for (std::size_t k = 0; k < T.family_size(); ++k) {
        const auto& blk = T.generators()[k].first;
        const auto& v = T.family()[k].terms();
        if (blk.j <= n) {
            mid.insert(v);
        } else {
            auto key = std::make_pair(blk.a, blk.b);
            tops.try_emplace(key, B.dim());
            top_rank += tops.at(key).insert(v);
        }
    }
    std::uint64_t expect_mid = expect / static_cast<std::uint64_t>(n + 1) * static_cast<std::uint64_t>(n);
    {
        CheckBuilder b("summand ranks add up");
        b.expect(mid.rank() == expect_mid && mid.rank() + top_rank == expect,
                 "g_n part " + std::to_string(mid.rank()) + " (expected " + std::to_string(expect_mid) + "), X_{n+1} parts " +
                     std::to_string(top_rank));
        out.push_back(b.result());
    }
    {
        // Y_n generators acting on the left keep each summand; g_n lies in the middle one.
        CheckBuilder b("summands are Y_n-bimodules");
        std::vector<std::pair<std::string, Element>> gens;
        for (int i = 1; i < n; ++i) gens.emplace_back("g_" + std::to_string(i), B.g(i));
        for (int j = 1; j <= n; ++j) gens.emplace_back("t_" + std::to_string(j), B.t(j));
        if (n >= 1) gens.emplace_back("X_1", B.X(1));
        if (n >= 1) b.expect(mid.contains(B.g(n).terms()), "g_n outside the middle summand");
        for (std::size_t k = 0; k < T.family_size(); ++k) {
            const auto& blk = T.generators()[k].first;
            for (const auto& [name, gx] : gens) {
                Element w = gx * T.family()[k];
                bool ok = blk.j <= n ? mid.contains(w.terms()) : tops.at({blk.a, blk.b}).contains(w.terms());
                if (!b.expect_lazy(ok, [&] { return name + " * (" + blk.str() + " g.. y" + std::to_string(T.generators()[k].second) + ")"; }))
                    break;
            }
        }
        out.push_back(b.result());
    }
    {
        CheckBuilder b("theta fixes Y_n and kills the other X_{n+1} t_{n+1} summands");
        b.expect(T.theta(B.one()) == S.one(), "theta(1) != 1");
        for (int a = 0; a < B.d(); ++a)
            for (int c = 0; c < B.r(); ++c) {
                if (a == 0 && c == 0) continue;
                Element x = B.one();
                for (int m = 0; m < a; ++m) x = B.rmul_X(x, n + 1);
                for (int m = 0; m < c; ++m) x = B.rmul_t(x, n + 1);
                b.expect_lazy(T.theta(x).is_zero(), [&] { return "a=" + std::to_string(a) + " b=" + std::to_string(c); });
            }
        out.push_back(b.result());
    }
    {
        CheckBuilder b("theta is a bimodule map");
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint32_t> ps(0, S.dim() - 1), pb(0, B.dim() - 1);
        for (int s = 0; s < samples; ++s) {
            std::uint32_t y1 = ps(rng), y2 = ps(rng), x = pb(rng);
            Element lhs = T.theta(B.basis(embed_index(S, B, y1)) * B.basis(x) * B.basis(embed_index(S, B, y2)));
            Element rhs = S.basis(y1) * T.theta(B.basis(x)) * S.basis(y2);
            b.expect_lazy(lhs == rhs, [&] { return "y1=" + S.word_str(y1) + " x=" + B.word_str(x) + " y2=" + S.word_str(y2); });
        }
        out.push_back(b.result());
    }
    if (n >= 1) {
        // g_n..g_i X_i^a g_i..g_n has X_{n+1}^a-component exactly 1.
        CheckBuilder b("X_{n+1}^a component of g_n..g_i X_i^a g_i..g_n is 1");
        for (int i = 1; i <= n; ++i)
            for (int a = 0; a < B.d(); ++a) {
                Element x = B.one();
                for (int k = n; k >= i; --k) x = B.rmul_g(x, k);
                for (int m = 0; m < a; ++m) x = B.rmul_X(x, i);
                for (int k = i; k <= n; ++k) x = B.rmul_g(x, k);
                auto parts = T.decompose(x);
                auto it = parts.find(CosetBlock{n + 1, a, 0});
                bool ok = it != parts.end() && it->second == S.one();
                b.expect_lazy(ok, [&] {
                    return "i=" + std::to_string(i) + " a=" + std::to_string(a) + ": " + (it == parts.end() ? "0" : it->second.str());
                });
            }
        out.push_back(b.result());
    }
    return out;
}

// Trace form on Y_{r,m}: theta_1 o ... o theta_m. Returns its values on the word basis.
inline std::vector<Scalar> trace_on_words(int r, int m, int d, const Scalar& q, const std::vector<Scalar>& v) {
    std::vector<AlgebraPtr> algs;
    for (int k = 0; k <= m; ++k) algs.push_back(Algebra::create(r, k, d, q, v));
    std::vector<Tower> towers;
    for (int k = 0; k < m; ++k) towers.emplace_back(algs[static_cast<std::size_t>(k)], algs[static_cast<std::size_t>(k + 1)]);
    std::vector<Scalar> out;
    for (std::uint32_t w = 0; w < algs.back()->dim(); ++w) {
        Element x = algs.back()->basis(w);
        for (int k = m - 1; k >= 0; --k) x = towers[static_cast<std::size_t>(k)].theta(x);
        out.push_back(x.coeff(0));
    }
    return out;
}

// Gram matrix of (x, y) -> tr(xy) on the word basis of Y_{r,m}.
inline Matrix frobenius_gram(int r, int m, int d, const Scalar& q, const std::vector<Scalar>& v) {
    std::vector<Scalar> tr = trace_on_words(r, m, d, q, v);
    AlgebraPtr Y = Algebra::create(r, m, d, q, v);
    Matrix G(Y->dim(), std::vector<Scalar>(Y->dim(), Scalar(0)));
    for (std::uint32_t i = 0; i < Y->dim(); ++i)
        for (std::uint32_t j = 0; j < Y->dim(); ++j) {
            Scalar s(0);
            Element prod = Y->basis(i) * Y->basis(j);
            for (const auto& [k, c] : prod.terms()) s += c * tr[k];
            G[i][j] = s;
        }
    return G;
}

}  // namespace yh

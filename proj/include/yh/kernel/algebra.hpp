#pragma once
// Y_{r,n}^d on the word basis X^alpha t^beta g_w. Two layers: an affine layer
// (unbounded X exponents, push rules only) used to bootstrap one reduction
// rule X_k^d -> ... per index, and the cyclotomic layer where every product is
// kept in normal form.

#include "yh/combi/permutation.hpp"
#include "yh/combi/tableau.hpp"
#include "yh/kernel/element.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <mutex>
#include <optional>
#include <sstream>

namespace yh {

struct Word {
    std::vector<int> alpha;  // 0 <= alpha_i < d
    std::vector<int> beta;   // 0 <= beta_i < r
    Permutation w;
};

struct AffineWord {
    std::vector<int> alpha;  // any integers
    std::uint32_t B = 0;     // packed beta
    std::uint32_t P = 0;     // permutation rank
    friend bool operator<(const AffineWord& x, const AffineWord& y) {
        return std::tie(x.alpha, x.B, x.P) < std::tie(y.alpha, y.B, y.P);
    }
    friend bool operator==(const AffineWord& x, const AffineWord& y) {
        return x.alpha == y.alpha && x.B == y.B && x.P == y.P;
    }
};
using AffineElement = std::map<AffineWord, Scalar>;

// One term of a bootstrapped rule X_k^d -> sum c X^alpha t^B g_P.
struct RuleTerm {
    std::vector<int> alpha;
    std::uint32_t B;
    std::uint32_t P;
    Scalar c;
};

class Algebra : public std::enable_shared_from_this<Algebra> {
    struct Private {};

public:
    static AlgebraPtr create(int r, int n, int d, const Scalar& q, const std::vector<Scalar>& v) {
        return std::make_shared<const Algebra>(Private{}, r, n, d, q, v);
    }

    Algebra(Private, int r, int n, int d, const Scalar& q, const std::vector<Scalar>& v) : r_(r), n_(n), d_(d) {
        if (r < 1 || n < 0 || d < 1) throw std::invalid_argument("r and d must be positive, n nonnegative");
        if (static_cast<int>(v.size()) != d) throw std::invalid_argument("need exactly d parameters v");
        q_ = q;
        if (q_.is_zero()) throw std::invalid_argument("q must be nonzero");
        for (const auto& x : v) {
            if (x.is_zero()) throw std::invalid_argument("v_i must be nonzero");
            v_.push_back(x);
        }
        qc_ = q_ - q_.inverse();
        inv_r_ = Scalar(BigRational(1, r_));
        for (int k = 1; k <= r_; ++k) zeta_.push_back(CyclotomicScalar::zeta_power(r_, k));
        build_tables();
        build_push();
        bootstrap();
    }

    // ---- parameters
    int r() const { return r_; }
    int n() const { return n_; }
    int d() const { return d_; }
    const Scalar& q() const { return q_; }
    const std::vector<Scalar>& v() const { return v_; }
    // a_1..a_d with f_1 = X^d + a_1 X^{d-1} + ... + a_d (index 0 holds a_1).
    const std::vector<Scalar>& a() const { return a_; }
    // q - q^{-1}
    const Scalar& qc() const { return qc_; }
    // zeta_k = zeta^{k-1}, 1 <= k <= r
    const Scalar& zeta(int k) const { return zeta_.at(static_cast<std::size_t>(k - 1)); }
    std::uint32_t dim() const { return dim_; }
    bool same_parameters(const Algebra& o) const {
        return r_ == o.r_ && d_ == o.d_ && q_ == o.q_ && v_ == o.v_;
    }

    // ---- word indexing: ((A * r^n) + B) * n! + P, which is the canonical order.
    std::uint32_t index(std::uint32_t A, std::uint32_t B, std::uint32_t P) const { return (A * nB_ + B) * nP_ + P; }
    std::uint32_t index(const Word& w) const {
        check_word(w);
        return index(pack(w.alpha, d_), pack(w.beta, r_), w.w.lex_rank());
    }
    Word word(std::uint32_t idx) const {
        if (idx >= dim_) throw std::out_of_range("word index");
        return Word{alpha_tab_[idx / (nP_ * nB_)], beta_tab_[(idx / nP_) % nB_], perms_[idx % nP_]};
    }
    std::uint32_t alpha_part(std::uint32_t idx) const { return idx / (nP_ * nB_); }
    std::uint32_t beta_part(std::uint32_t idx) const { return (idx / nP_) % nB_; }
    std::uint32_t perm_part(std::uint32_t idx) const { return idx % nP_; }
    const Permutation& perm(std::uint32_t P) const { return perms_[P]; }
    std::uint32_t perm_count() const { return nP_; }
    std::uint32_t beta_count() const { return nB_; }
    std::uint32_t alpha_count() const { return nA_; }
    std::uint32_t pack_beta(const std::vector<int>& beta) const { return pack(beta, r_); }
    std::uint32_t pack_alpha(const std::vector<int>& alpha) const { return pack(alpha, d_); }

    std::string word_str(std::uint32_t idx) const {
        Word w = word(idx);
        std::string s;
        auto add = [&](const std::string& f) { s += (s.empty() ? "" : "*") + f; };
        for (int k = 0; k < n_; ++k)
            if (w.alpha[static_cast<std::size_t>(k)])
                add("X" + std::to_string(k + 1) +
                    (w.alpha[static_cast<std::size_t>(k)] > 1 ? "^" + std::to_string(w.alpha[static_cast<std::size_t>(k)]) : ""));
        for (int k = 0; k < n_; ++k)
            if (w.beta[static_cast<std::size_t>(k)])
                add("t" + std::to_string(k + 1) +
                    (w.beta[static_cast<std::size_t>(k)] > 1 ? "^" + std::to_string(w.beta[static_cast<std::size_t>(k)]) : ""));
        if (!w.w.is_identity()) add("g" + w.w.str());
        return s.empty() ? "1" : s;
    }

    // ---- elements
    Element make(Terms t) const { return Element(self(), std::move(t)); }
    Element zero() const { return make({}); }
    Element scalar(const Scalar& c) const { return c.is_zero() ? zero() : make({{index(0, 0, 0), c}}); }
    Element one() const { return scalar(Scalar(1)); }
    Element word_element(const Word& w, const Scalar& c = Scalar(1)) const { return make({{index(w), c}}); }
    Element basis(std::uint32_t idx) const {
        if (idx >= dim_) throw std::out_of_range("word index");
        return make({{idx, Scalar(1)}});
    }
    Element t(int j) const {
        check_pos(j);
        return make({{index(0, pvr_[static_cast<std::size_t>(j - 1)] % nB_, 0), Scalar(1)}});
    }
    Element t_pow(int j, int s) const {
        check_pos(j);
        return make({{index(0, beshift(0, j, j, 0, s), 0), Scalar(1)}});
    }
    Element g(int i) const {
        check_gen(i);
        return make({{index(0, 0, rs_[i - 1]), Scalar(1)}});
    }
    Element g_perm(const Permutation& w) const {
        if (w.size() != n_) throw std::invalid_argument("permutation size");
        return make({{index(0, 0, w.lex_rank()), Scalar(1)}});
    }
    Element g_inv(int i) const { return g(i) - qc_ * e(i); }
    Element e(int i, int k) const {
        check_pos(i);
        check_pos(k);
        if (i == k) return one();
        Accumulator acc(dim_);
        for (int s = 0; s < r_; ++s) acc.add(index(0, beshift(0, i, k, s, 0), 0), inv_r_);
        return make(acc.take());
    }
    Element e(int i) const {
        check_gen(i);
        return e(i, i + 1);
    }
    Element E(const SetPartition& A) const {
        Element out = one();
        for (const auto& blk : A.blocks)
            for (std::size_t x = 0; x < blk.size(); ++x)
                for (std::size_t y = x + 1; y < blk.size(); ++y) out = mul(out, e(blk[x], blk[y]));
        return out;
    }
    Element X(int k) const {
        check_pos(k);
        std::vector<int> gam(static_cast<std::size_t>(n_), 0);
        gam[static_cast<std::size_t>(k - 1)] = 1;
        std::lock_guard<std::recursive_mutex> lock(mu_);
        return make(nfx(gam));
    }
    Element X_inv(int k) const {
        check_pos(k);
        return make(inv_terms_[static_cast<std::size_t>(k - 1)]);
    }
    // u_{i,k} = prod_{l != k} (t_i - zeta_l)
    Element u(int i, int k) const {
        check_pos(i);
        if (k < 1 || k > r_) throw std::out_of_range("r-position");
        Element out = one();
        for (int l = 1; l <= r_; ++l)
            if (l != k) out = mul(out, t(i) - scalar(zeta(l)));
        return out;
    }
    // Normal form of X^gamma for any integer vector gamma.
    Element X_monomial(const std::vector<int>& gamma) const {
        if (static_cast<int>(gamma.size()) != n_) throw std::invalid_argument("exponent vector size");
        std::lock_guard<std::recursive_mutex> lock(mu_);
        return make(nfx(gamma));
    }

    // ---- products
    Element mul(const Element& x, const Element& y) const {
        check_owner(x);
        check_owner(y);
        return make(multiply(x.terms(), y.terms()));
    }
    Element rmul_X(const Element& x, int k) const {
        check_owner(x);
        check_pos(k);
        return make(rmulX(x.terms(), k));
    }
    Element rmul_g(const Element& x, int i) const {
        check_owner(x);
        check_gen(i);
        Accumulator acc(dim_);
        for (const auto& [idx, c] : x.terms()) {
            std::uint32_t A = alpha_part(idx);
            fin_rmul_g(beta_part(idx), perm_part(idx), i, c,
                       [&](std::uint32_t B, std::uint32_t P, const Scalar& cc) { acc.add(index(A, B, P), cc); });
        }
        return make(acc.take());
    }
    Element rmul_t(const Element& x, int j) const {
        check_owner(x);
        check_pos(j);
        Terms out;
        out.reserve(x.size());
        for (const auto& [idx, c] : x.terms()) {
            std::uint32_t P = perm_part(idx);
            int jj = perms_[inv_[P]](j);
            out.emplace_back(index(alpha_part(idx), beshift(beta_part(idx), jj, jj, 0, 1), P), c);
        }
        std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        return make(std::move(out));
    }
    Element lmul_t(int j, const Element& x) const {
        check_owner(x);
        check_pos(j);
        Terms out;
        out.reserve(x.size());
        for (const auto& [idx, c] : x.terms())
            out.emplace_back(index(alpha_part(idx), beshift(beta_part(idx), j, j, 0, 1), perm_part(idx)), c);
        std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        return make(std::move(out));
    }
    Element lmul_g(int i, const Element& x) const { return mul(g(i), x); }

    // The anti-involution fixing every generator.
    Element star(const Element& x) const {
        check_owner(x);
        Accumulator acc(dim_);
        for (const auto& [idx, c] : x.terms()) acc.add_scaled(star_word(idx), c);
        return make(acc.take());
    }

    // ---- affine layer
    AffineElement affine_identity() const { return {{AffineWord{std::vector<int>(static_cast<std::size_t>(n_), 0), 0, 0}, Scalar(1)}}; }
    AffineElement affine_rmul_g(const AffineElement& x, int i) const {
        check_gen(i);
        AffineElement out;
        for (const auto& [w, c] : x)
            fin_rmul_g(w.B, w.P, i, c, [&](std::uint32_t B, std::uint32_t P, const Scalar& cc) {
                affine_add(out, AffineWord{w.alpha, B, P}, cc);
            });
        return out;
    }
    AffineElement affine_rmul_e(const AffineElement& x, int i) const {
        check_gen(i);
        AffineElement out;
        for (const auto& [w, c] : x)
            fin_rmul_e(w.B, w.P, i, c, [&](std::uint32_t B, std::uint32_t P, const Scalar& cc) {
                affine_add(out, AffineWord{w.alpha, B, P}, cc);
            });
        return out;
    }
    AffineElement affine_rmul_g_inv(const AffineElement& x, int i) const {
        AffineElement out = affine_rmul_g(x, i);
        for (const auto& [w, c] : affine_rmul_e(x, i)) affine_add(out, w, -qc_ * c);
        return out;
    }
    AffineElement affine_rmul_t(const AffineElement& x, int j) const {
        check_pos(j);
        AffineElement out;
        for (const auto& [w, c] : x) {
            int jj = perms_[inv_[w.P]](j);
            affine_add(out, AffineWord{w.alpha, beshift(w.B, jj, jj, 0, 1), w.P}, c);
        }
        return out;
    }
    // Right multiplication by X_j^{sign}, sign = +1 or -1.
    AffineElement affine_rmul_X(const AffineElement& x, int j, int sign = 1) const {
        check_pos(j);
        const auto& table = sign > 0 ? push_pos_ : push_neg_;
        AffineElement out;
        for (const auto& [w, c] : x)
            for (const auto& pt : table[w.P * static_cast<std::uint32_t>(n_) + static_cast<std::uint32_t>(j - 1)]) {
                AffineWord nw{w.alpha, badd(w.B, pt.B), pt.P};
                nw.alpha[static_cast<std::size_t>(pt.k)] += sign;
                affine_add(out, nw, c * pt.c);
            }
        return out;
    }
    // Cyclotomic normal form of an affine element.
    Element from_affine(const AffineElement& x) const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        Accumulator acc(dim_);
        for (const auto& [w, c] : x) acc_rmul_fin(acc, nfx(w.alpha), w.B, w.P, c);
        return make(acc.take());
    }
    // f_k and h_k in the affine layer.
    AffineElement affine_f(int k) const { return affine_chain(k, false); }
    AffineElement affine_h(int k) const { return affine_chain(k, true); }
    const std::vector<RuleTerm>& rule(int k) const {
        check_pos(k);
        return rules_[static_cast<std::size_t>(k - 1)];
    }

    std::string element_str(const Terms& t) const {
        if (t.empty()) return "0";
        std::string s;
        for (const auto& [idx, c] : t) {
            if (!s.empty()) s += " + ";
            std::string w = word_str(idx);
            if (w == "1") {
                s += "(" + c.str() + ")";
            } else {
                s += (c.is_one() ? "" : "(" + c.str() + ")*") + w;
            }
        }
        return s;
    }

private:
    struct PushTerm {
        int k;  // 0-based X index
        std::uint32_t B;
        std::uint32_t P;
        Scalar c;
    };
    struct FinTerm {
        std::uint32_t B;
        std::uint32_t P;
        Scalar c;
    };

    int r_, n_, d_;
    Scalar q_, qc_, inv_r_;
    std::vector<Scalar> v_, a_, zeta_;
    std::uint32_t nA_ = 1, nB_ = 1, nP_ = 1, dim_ = 1;
    std::vector<std::uint32_t> pvd_, pvr_;
    std::vector<std::vector<int>> alpha_tab_, beta_tab_;
    std::vector<Permutation> perms_;
    std::vector<std::uint32_t> inv_, rs_;  // rs_[P*(n-1) + i-1] = rank of P s_i
    std::vector<int> len_;
    std::vector<std::uint32_t> tperm_;  // g_P t^B = t^{tperm} g_P
    std::vector<std::vector<PushTerm>> push_pos_, push_neg_;
    std::vector<std::vector<RuleTerm>> rules_;
    std::vector<Terms> inv_terms_;

    mutable std::recursive_mutex mu_;
    mutable std::vector<std::optional<std::vector<FinTerm>>> gtab_;
    mutable std::vector<std::optional<Terms>> rx_cache_, star_cache_;
    mutable std::map<std::vector<int>, Terms> nfx_cache_;

    AlgebraPtr self() const { return shared_from_this(); }

    void check_owner(const Element& x) const {
        if (x.algebra() && x.algebra().get() != this) throw std::invalid_argument("element belongs to another algebra");
    }
    void check_pos(int j) const {
        if (j < 1 || j > n_) throw std::out_of_range("position index " + std::to_string(j) + " outside 1.." + std::to_string(n_));
    }
    void check_gen(int i) const {
        if (i < 1 || i >= n_) throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n_ - 1));
    }
    void check_word(const Word& w) const {
        if (static_cast<int>(w.alpha.size()) != n_ || static_cast<int>(w.beta.size()) != n_ || w.w.size() != n_)
            throw std::invalid_argument("word size mismatch");
        for (int x : w.alpha)
            if (x < 0 || x >= d_) throw std::invalid_argument("alpha entry outside [0,d)");
        for (int x : w.beta)
            if (x < 0 || x >= r_) throw std::invalid_argument("beta entry outside [0,r)");
    }
    std::uint32_t pack(const std::vector<int>& digits, int base) const {
        std::uint32_t x = 0;
        for (int v : digits) x = x * static_cast<std::uint32_t>(base) + static_cast<std::uint32_t>(v);
        return x;
    }

    // ---- packed beta arithmetic (digit k has place value r^{n-k})
    int bdigit(std::uint32_t B, int k) const { return static_cast<int>((B / pvr_[static_cast<std::size_t>(k - 1)]) % static_cast<std::uint32_t>(r_)); }
    std::uint32_t badd(std::uint32_t B1, std::uint32_t B2) const {
        if (r_ == 1) return 0;
        if (B2 == 0) return B1;
        std::uint32_t out = 0;
        for (int k = 1; k <= n_; ++k)
            out = out * static_cast<std::uint32_t>(r_) + static_cast<std::uint32_t>((bdigit(B1, k) + bdigit(B2, k)) % r_);
        return out;
    }
    // digit a += s, digit b -= s (plus extra on digit a when a == b)
    std::uint32_t beshift(std::uint32_t B, int a, int b, int s, int extra) const {
        if (r_ == 1) return 0;
        auto shift = [&](std::uint32_t x, int pos, int by) {
            int dg = bdigit(x, pos);
            int nd = ((dg + by) % r_ + r_) % r_;
            return x + static_cast<std::uint32_t>(nd) * pvr_[static_cast<std::size_t>(pos - 1)] -
                   static_cast<std::uint32_t>(dg) * pvr_[static_cast<std::size_t>(pos - 1)];
        };
        if (a == b) return shift(B, a, extra);
        return shift(shift(B, a, s + extra), b, -s);
    }

    void build_tables() {
        for (int k = 0; k < n_; ++k) {
            nA_ *= static_cast<std::uint32_t>(d_);
            nB_ *= static_cast<std::uint32_t>(r_);
        }
        nP_ = static_cast<std::uint32_t>(factorial(n_));
        std::uint64_t dim = static_cast<std::uint64_t>(nA_) * nB_ * nP_;
        if (dim > 5000000) throw std::invalid_argument("algebra dimension too large");
        dim_ = static_cast<std::uint32_t>(dim);
        pvd_.assign(static_cast<std::size_t>(n_), 1);
        pvr_.assign(static_cast<std::size_t>(n_), 1);
        for (int k = n_ - 2; k >= 0; --k) {
            pvd_[static_cast<std::size_t>(k)] = pvd_[static_cast<std::size_t>(k + 1)] * static_cast<std::uint32_t>(d_);
            pvr_[static_cast<std::size_t>(k)] = pvr_[static_cast<std::size_t>(k + 1)] * static_cast<std::uint32_t>(r_);
        }
        auto unpack = [&](std::uint32_t x, int base) {
            std::vector<int> v(static_cast<std::size_t>(n_));
            for (int k = n_ - 1; k >= 0; --k) {
                v[static_cast<std::size_t>(k)] = static_cast<int>(x % static_cast<std::uint32_t>(base));
                x /= static_cast<std::uint32_t>(base);
            }
            return v;
        };
        for (std::uint32_t A = 0; A < nA_; ++A) alpha_tab_.push_back(unpack(A, d_));
        for (std::uint32_t B = 0; B < nB_; ++B) beta_tab_.push_back(unpack(B, r_));
        for (std::uint32_t P = 0; P < nP_; ++P) perms_.push_back(Permutation::from_lex_rank(n_, P));
        for (std::uint32_t P = 0; P < nP_; ++P) {
            inv_.push_back(perms_[P].inverse().lex_rank());
            len_.push_back(perms_[P].length());
            for (int i = 1; i < n_; ++i) rs_.push_back((perms_[P] * Permutation::simple(n_, i)).lex_rank());
        }
        tperm_.assign(static_cast<std::size_t>(nB_) * nP_, 0);
        for (std::uint32_t B = 0; B < nB_; ++B)
            for (std::uint32_t P = 0; P < nP_; ++P) {
                std::vector<int> nb(static_cast<std::size_t>(n_));
                for (int k = 1; k <= n_; ++k)
                    nb[static_cast<std::size_t>(k - 1)] = beta_tab_[B][static_cast<std::size_t>(perms_[P](k) - 1)];
                tperm_[B * nP_ + P] = pack(nb, r_);
            }
        gtab_.resize(static_cast<std::size_t>(nP_) * nP_);
        rx_cache_.resize(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(n_));
        star_cache_.resize(dim_);
    }

    std::uint32_t rs(std::uint32_t P, int i) const { return rs_[P * static_cast<std::uint32_t>(n_ - 1) + static_cast<std::uint32_t>(i - 1)]; }

    // t^B g_P g_i
    template <class F>
    void fin_rmul_g(std::uint32_t B, std::uint32_t P, int i, const Scalar& c, F&& out) const {
        std::uint32_t Pn = rs(P, i);
        out(B, Pn, c);
        if (len_[Pn] < len_[P]) {
            const Permutation& pinv = perms_[inv_[P]];
            int a = pinv(i + 1), b = pinv(i);
            Scalar cc = c * qc_ * inv_r_;
            for (int s = 0; s < r_; ++s) out(beshift(B, a, b, s, 0), P, cc);
        }
    }
    // t^B g_P e_i = t^B e_{(i)P^{-1},(i+1)P^{-1}} g_P
    template <class F>
    void fin_rmul_e(std::uint32_t B, std::uint32_t P, int i, const Scalar& c, F&& out) const {
        const Permutation& pinv = perms_[inv_[P]];
        int a = pinv(i), b = pinv(i + 1);
        Scalar cc = c * inv_r_;
        for (int s = 0; s < r_; ++s) out(beshift(B, a, b, s, 0), P, cc);
    }

    static void affine_add(AffineElement& x, const AffineWord& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = x.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) x.erase(it);
        }
    }

    // g_v g_u
    const std::vector<FinTerm>& gprod(std::uint32_t v, std::uint32_t u) const {
        auto& slot = gtab_[static_cast<std::size_t>(v) * nP_ + u];
        if (slot) return *slot;
        std::map<std::pair<std::uint32_t, std::uint32_t>, Scalar> cur{{{0, v}, Scalar(1)}};
        for (int i : perms_[u].reduced_word()) {
            std::map<std::pair<std::uint32_t, std::uint32_t>, Scalar> next;
            for (const auto& [key, c] : cur)
                fin_rmul_g(key.first, key.second, i, c, [&](std::uint32_t B, std::uint32_t P, const Scalar& cc) {
                    auto [it, ins] = next.emplace(std::make_pair(B, P), cc);
                    if (!ins) it->second += cc;
                });
            cur.clear();
            for (auto& [key, c] : next)
                if (!c.is_zero()) cur.emplace(key, c);
        }
        std::vector<FinTerm> out;
        for (const auto& [key, c] : cur) out.push_back({key.first, key.second, c});
        slot = std::move(out);
        return *slot;
    }

    // Push table: g_w X_j^{+-1} = sum c X_k^{+-1} t^B g_P.
    void build_push() {
        push_pos_.assign(static_cast<std::size_t>(nP_) * n_, {});
        push_neg_.assign(static_cast<std::size_t>(nP_) * n_, {});
        std::vector<std::uint32_t> order(nP_);
        std::iota(order.begin(), order.end(), 0u);
        std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) { return len_[x] < len_[y]; });
        auto slot = [&](std::vector<std::vector<PushTerm>>& t, std::uint32_t P, int j) -> std::vector<PushTerm>& {
            return t[P * static_cast<std::uint32_t>(n_) + static_cast<std::uint32_t>(j - 1)];
        };
        using Key = std::tuple<int, std::uint32_t, std::uint32_t>;
        auto times_g = [&](const std::vector<PushTerm>& src, int i, const Scalar& s, std::map<Key, Scalar>& acc) {
            for (const auto& pt : src)
                fin_rmul_g(pt.B, pt.P, i, pt.c * s, [&](std::uint32_t B, std::uint32_t P, const Scalar& cc) {
                    acc[Key{pt.k, B, P}] += cc;
                });
        };
        auto times_e = [&](const std::vector<PushTerm>& src, int i, const Scalar& s, std::map<Key, Scalar>& acc) {
            for (const auto& pt : src)
                fin_rmul_e(pt.B, pt.P, i, pt.c * s, [&](std::uint32_t B, std::uint32_t P, const Scalar& cc) {
                    acc[Key{pt.k, B, P}] += cc;
                });
        };
        auto flush = [&](std::map<Key, Scalar>& acc, std::vector<PushTerm>& dst) {
            for (const auto& [key, c] : acc)
                if (!c.is_zero()) dst.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
        };
        for (std::uint32_t P : order) {
            if (len_[P] == 0) {
                for (int j = 1; j <= n_; ++j) {
                    slot(push_pos_, P, j) = {{j - 1, 0, P, Scalar(1)}};
                    slot(push_neg_, P, j) = {{j - 1, 0, P, Scalar(1)}};
                }
                continue;
            }
            int i = 1;
            while (!perms_[P].has_right_descent(i)) ++i;
            std::uint32_t Pp = rs(P, i);
            for (int j = 1; j <= n_; ++j) {
                std::map<Key, Scalar> pos, neg;
                if (j != i && j != i + 1) {
                    times_g(slot(push_pos_, Pp, j), i, Scalar(1), pos);
                    times_g(slot(push_neg_, Pp, j), i, Scalar(1), neg);
                } else if (j == i) {
                    times_g(slot(push_pos_, Pp, i + 1), i, Scalar(1), pos);
                    times_e(slot(push_pos_, Pp, i + 1), i, -qc_, pos);
                    times_g(slot(push_neg_, Pp, i + 1), i, Scalar(1), neg);
                    times_e(slot(push_neg_, Pp, i), i, qc_, neg);
                } else {
                    times_g(slot(push_pos_, Pp, i), i, Scalar(1), pos);
                    times_e(slot(push_pos_, Pp, i + 1), i, qc_, pos);
                    times_g(slot(push_neg_, Pp, i), i, Scalar(1), neg);
                    times_e(slot(push_neg_, Pp, i), i, -qc_, neg);
                }
                flush(pos, slot(push_pos_, P, j));
                flush(neg, slot(push_neg_, P, j));
            }
        }
    }

    // g_{k-1}..g_1 f_1 g_1..g_{k-1}, or with inverses on the right for h_k.
    AffineElement affine_chain(int k, bool inverse_right) const {
        check_pos(k);
        AffineElement x = affine_identity();
        for (int i = k - 1; i >= 1; --i) x = affine_rmul_g(x, i);
        AffineElement f;
        AffineElement pw = x;
        for (int m = 0; m <= d_; ++m) {
            Scalar c = m == d_ ? Scalar(1) : a_[static_cast<std::size_t>(d_ - m - 1)];
            for (const auto& [w, cc] : pw) affine_add(f, w, c * cc);
            if (m < d_) pw = affine_rmul_X(pw, 1, 1);
        }
        for (int i = 1; i < k; ++i) f = inverse_right ? affine_rmul_g_inv(f, i) : affine_rmul_g(f, i);
        return f;
    }

    void bootstrap() {
        // f_1 = prod (X - v_i): coefficients low to high
        std::vector<Scalar> f{Scalar(1)};
        for (const auto& vi : v_) {
            std::vector<Scalar> g(f.size() + 1, Scalar(0));
            for (std::size_t m = 0; m < f.size(); ++m) {
                g[m + 1] += f[m];
                g[m] -= vi * f[m];
            }
            f = g;
        }
        a_.clear();
        for (int k = 1; k <= d_; ++k) a_.push_back(f[static_cast<std::size_t>(d_ - k)]);

        for (int k = 1; k <= n_; ++k) {
            AffineElement fk = affine_f(k);
            std::vector<int> lead(static_cast<std::size_t>(n_), 0);
            lead[static_cast<std::size_t>(k - 1)] = d_;
            std::vector<RuleTerm> rule;
            bool seen_lead = false;
            for (const auto& [w, c] : fk) {
                if (w.alpha == lead && w.B == 0 && w.P == 0) {
                    if (!c.is_one()) throw std::logic_error("leading coefficient of f_k is not 1");
                    seen_lead = true;
                    continue;
                }
                for (int j = 1; j <= n_; ++j) {
                    int e = w.alpha[static_cast<std::size_t>(j - 1)];
                    if (e < 0 || (j == k && e >= d_) || (j > k && e != 0))
                        throw std::logic_error("f_k has a term outside the expected leading-term shape");
                }
                rule.push_back({w.alpha, w.B, w.P, -c});
            }
            if (!seen_lead) throw std::logic_error("f_k lacks its leading term");
            rules_.push_back(std::move(rule));
        }
        // X_1^{-1} = -a_d^{-1}(X_1^{d-1} + a_1 X_1^{d-2} + ... + a_{d-1})
        Scalar ad_inv = a_.back().inverse();
        Terms inv1;
        for (int m = 0; m < d_; ++m) {
            Scalar c = m == d_ - 1 ? Scalar(1) : a_[static_cast<std::size_t>(d_ - 2 - m)];
            c = -ad_inv * c;
            if (!c.is_zero() && n_ > 0) inv1.emplace_back(index(static_cast<std::uint32_t>(m) * pvd_[0], 0, 0), c);
        }
        if (n_ == 0) return;
        inv_terms_.push_back(inv1);
        for (int k = 2; k <= n_; ++k) {
            Terms gi = terms_add(Terms{{index(0, 0, rs(0, k - 1)), Scalar(1)}}, e_terms(k - 1, k), -qc_);
            inv_terms_.push_back(multiply(multiply(gi, inv_terms_.back()), gi));
        }
    }

    Terms e_terms(int i, int k) const {
        Accumulator acc(dim_);
        for (int s = 0; s < r_; ++s) acc.add(index(0, beshift(0, i, k, s, 0), 0), inv_r_);
        return acc.take();
    }

    // c * (X^A t^Bx g_Px)(t^B g_P)
    void acc_word_fin(Accumulator& acc, std::uint32_t A, std::uint32_t Bx, std::uint32_t Px, std::uint32_t B, std::uint32_t P,
                      const Scalar& c) const {
        std::uint32_t B1 = badd(Bx, tperm_[B * nP_ + Px]);
        if (P == 0) {
            acc.add(index(A, B1, Px), c);
            return;
        }
        for (const auto& ft : gprod(Px, P)) acc.add(index(A, badd(B1, ft.B), ft.P), c * ft.c);
    }
    void acc_rmul_fin(Accumulator& acc, const Terms& x, std::uint32_t B, std::uint32_t P, const Scalar& c) const {
        for (const auto& [idx, cx] : x)
            acc_word_fin(acc, alpha_part(idx), beta_part(idx), perm_part(idx), B, P, c * cx);
    }

    // Normal form of X^gamma. Caller holds mu_.
    const Terms& nfx(const std::vector<int>& gamma) const {
        auto it = nfx_cache_.find(gamma);
        if (it != nfx_cache_.end()) return it->second;
        Terms out;
        int top = -1;
        bool negative = false;
        for (int k = 0; k < n_; ++k) {
            if (gamma[static_cast<std::size_t>(k)] >= d_) top = k;
            if (gamma[static_cast<std::size_t>(k)] < 0) negative = true;
        }
        if (negative) {
            std::vector<int> pos = gamma;
            for (auto& x : pos) x = std::max(x, 0);
            out = nfx(pos);
            for (int k = 0; k < n_; ++k)
                for (int m = gamma[static_cast<std::size_t>(k)]; m < 0; ++m) out = multiply(out, inv_terms_[static_cast<std::size_t>(k)]);
        } else if (top < 0) {
            out = {{index(pack(gamma, d_), 0, 0), Scalar(1)}};
        } else {
            Accumulator acc(dim_);
            for (const auto& rt : rules_[static_cast<std::size_t>(top)]) {
                std::vector<int> delta = gamma;
                delta[static_cast<std::size_t>(top)] -= d_;
                for (int j = 0; j < n_; ++j) delta[static_cast<std::size_t>(j)] += rt.alpha[static_cast<std::size_t>(j)];
                Terms sub = nfx(delta);
                acc_rmul_fin(acc, sub, rt.B, rt.P, rt.c);
            }
            out = acc.take();
        }
        return nfx_cache_.emplace(gamma, std::move(out)).first->second;
    }

    // word * X_k, cached
    const Terms& rmulX_word(std::uint32_t idx, int k) const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto& slot = rx_cache_[static_cast<std::size_t>(idx) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(k - 1)];
        if (slot) return *slot;
        std::uint32_t A = alpha_part(idx), B = beta_part(idx), P = perm_part(idx);
        const std::vector<int>& alpha = alpha_tab_[A];
        Accumulator acc(dim_);
        for (const auto& pt : push_pos_[P * static_cast<std::uint32_t>(n_) + static_cast<std::uint32_t>(k - 1)]) {
            std::uint32_t Bn = badd(B, pt.B);
            if (alpha[static_cast<std::size_t>(pt.k)] + 1 < d_) {
                acc.add(index(A + pvd_[static_cast<std::size_t>(pt.k)], Bn, pt.P), pt.c);
            } else {
                std::vector<int> gam = alpha;
                gam[static_cast<std::size_t>(pt.k)] += 1;
                Terms sub = nfx(gam);
                acc_rmul_fin(acc, sub, Bn, pt.P, pt.c);
            }
        }
        slot = acc.take();
        return *slot;
    }

    Terms rmulX(const Terms& x, int k) const {
        Accumulator acc(dim_);
        for (const auto& [idx, c] : x) acc.add_scaled(rmulX_word(idx, k), c);
        return acc.take();
    }

    Terms multiply(const Terms& x, const Terms& y) const {
        if (x.empty() || y.empty()) return {};
        std::map<std::uint32_t, Terms> z;  // x * X^alpha keyed by packed alpha
        std::function<const Terms&(std::uint32_t)> zx = [&](std::uint32_t A) -> const Terms& {
            auto it = z.find(A);
            if (it != z.end()) return it->second;
            if (A == 0) return z.emplace(0, x).first->second;
            const std::vector<int>& alpha = alpha_tab_[A];
            int k = n_ - 1;
            while (alpha[static_cast<std::size_t>(k)] == 0) --k;
            Terms prev = zx(A - pvd_[static_cast<std::size_t>(k)]);
            return z.emplace(A, rmulX(prev, k + 1)).first->second;
        };
        Accumulator acc(dim_);
        for (const auto& [idx, c] : y) acc_rmul_fin(acc, zx(alpha_part(idx)), beta_part(idx), perm_part(idx), c);
        return acc.take();
    }

    // star(X^a t^b g_w) = g_{w^{-1}} t^b X^a
    const Terms& star_word(std::uint32_t idx) const {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto& slot = star_cache_[idx];
        if (slot) return *slot;
        std::uint32_t A = alpha_part(idx), B = beta_part(idx), P = perm_part(idx);
        std::uint32_t Pi = inv_[P];
        Terms cur{{index(0, tperm_[B * nP_ + Pi], Pi), Scalar(1)}};
        const std::vector<int>& alpha = alpha_tab_[A];
        for (int k = 1; k <= n_; ++k)
            for (int m = 0; m < alpha[static_cast<std::size_t>(k - 1)]; ++m) cur = rmulX(cur, k);
        slot = std::move(cur);
        return *slot;
    }
};

inline Element operator*(const Element& a, const Element& b) {
    const AlgebraPtr& alg = a.algebra() ? a.algebra() : b.algebra();
    if (!alg) throw std::invalid_argument("product of unbound elements");
    return alg->mul(a, b);
}

inline std::string Element::str() const { return alg_ ? alg_->element_str(terms_) : std::string("0"); }

}  // namespace yh

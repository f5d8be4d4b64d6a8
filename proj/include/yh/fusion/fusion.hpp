#pragma once
// Baxterized generators, the phi chain and the staged consecutive evaluation
// that rebuilds E_t from a rational function in one spectral variable u.

#include "yh/fields/poly.hpp"
#include "yh/semisimple/seminormal.hpp"

#include "json.hpp"

#include <functional>
#include <set>
#include <iomanip>
#include <sstream>

namespace yh {

// Polynomial in u with coefficients in the algebra, low to high.
class AlgPoly {
public:
    AlgPoly() = default;
    explicit AlgPoly(const Algebra& Y) : Y_(&Y) {}
    AlgPoly(const Algebra& Y, std::vector<Element> c) : Y_(&Y), c_(std::move(c)) { trim(); }
    static AlgPoly constant(const Element& x) { return AlgPoly(*x.algebra(), {x}); }

    const Algebra& algebra() const { return *Y_; }
    const std::vector<Element>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Element coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Y_->zero(); }

    friend AlgPoly operator+(const AlgPoly& a, const AlgPoly& b) {
        std::vector<Element> c;
        for (std::size_t k = 0; k < std::max(a.c_.size(), b.c_.size()); ++k) c.push_back(a.coeff(k) + b.coeff(k));
        return AlgPoly(*a.Y_, std::move(c));
    }
    friend AlgPoly operator*(const ScalarPoly& p, const AlgPoly& a) {
        if (p.is_zero() || a.is_zero()) return AlgPoly(*a.Y_);
        std::vector<Element> c(a.c_.size() + p.coeffs().size() - 1, a.Y_->zero());
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            if (!p.coeffs()[i].is_zero())
                for (std::size_t j = 0; j < a.c_.size(); ++j) c[i + j] += p.coeffs()[i] * a.c_[j];
        return AlgPoly(*a.Y_, std::move(c));
    }
    friend AlgPoly operator*(const AlgPoly& a, const AlgPoly& b) {
        if (a.is_zero() || b.is_zero()) return AlgPoly(*a.Y_);
        std::vector<Element> c(a.c_.size() + b.c_.size() - 1, a.Y_->zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return AlgPoly(*a.Y_, std::move(c));
    }
    friend bool operator==(const AlgPoly& a, const AlgPoly& b) { return a.c_ == b.c_; }

    // Coefficientwise linear map.
    AlgPoly map(const std::function<Element(const Element&)>& f) const {
        std::vector<Element> c;
        for (const auto& x : c_) c.push_back(f(x));
        return AlgPoly(*Y_, std::move(c));
    }
    Element eval(const Scalar& x) const {
        Element out = Y_->zero();
        for (std::size_t k = c_.size(); k-- > 0;) out = x * out + c_[k];
        return out;
    }
    // Synthetic division by (u - a); the remainder is the value at a.
    std::pair<AlgPoly, Element> divide_linear(const Scalar& a) const {
        if (c_.empty()) return {*this, Y_->zero()};
        std::vector<Element> q(c_.size() - 1, Y_->zero());
        Element carry = c_.back();
        for (std::size_t k = c_.size() - 1; k-- > 0;) {
            q[k] = carry;
            carry = c_[k] + a * carry;
        }
        return {AlgPoly(*Y_, std::move(q)), carry};
    }
    // The scalar polynomial carried by one word.
    ScalarPoly word_poly(std::uint32_t idx) const {
        std::vector<Scalar> c;
        for (const auto& x : c_) c.push_back(x.coeff(idx));
        return ScalarPoly(std::move(c));
    }

private:
    const Algebra* Y_ = nullptr;
    std::vector<Element> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// num(u) / den(u) with den monic.
class AlgRatFun {
public:
    AlgRatFun(AlgPoly num, ScalarPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ArithmeticError("zero denominator");
        Scalar li = den_.lead().inverse();
        den_ = ScalarPoly(li) * den_;
        num_ = ScalarPoly(li) * num_;
    }
    explicit AlgRatFun(AlgPoly num) : AlgRatFun(std::move(num), ScalarPoly(Scalar(1))) {}

    const AlgPoly& num() const { return num_; }
    const ScalarPoly& den() const { return den_; }

    friend AlgRatFun operator*(const AlgRatFun& a, const AlgRatFun& b) { return AlgRatFun(a.num_ * b.num_, a.den_ * b.den_); }
    friend AlgRatFun operator*(const ScalarRatFun& f, const AlgRatFun& a) { return AlgRatFun(f.num() * a.num_, f.den() * a.den_); }
    // Cross-multiplied comparison.
    friend bool operator==(const AlgRatFun& a, const AlgRatFun& b) { return b.den_ * a.num_ == a.den_ * b.num_; }

    // Remove scalar factors common to den and every word.
    AlgRatFun reduced() const {
        ScalarPoly g = den_;
        std::set<std::uint32_t> words;
        for (const auto& x : num_.coeffs())
            for (const auto& [idx, c] : x.terms()) words.insert(idx);
        for (auto idx : words) {
            if (g.degree() <= 0) break;
            g = poly_gcd(g, num_.word_poly(idx));
        }
        if (g.degree() <= 0) return *this;
        AlgPoly num(num_.algebra());
        for (auto idx : words) {
            ScalarPoly p = ScalarPoly::divmod(num_.word_poly(idx), g).first;
            num = num + p * AlgPoly::constant(num_.algebra().basis(idx));
        }
        return AlgRatFun(num, ScalarPoly::divmod(den_, g).first);
    }

private:
    AlgPoly num_;
    ScalarPoly den_;
};

struct EvalRecord {
    Scalar point;
    ScalarPoly den_before, den_after;
    int multiplicity = 0;
};

// Factor (u - x)^m out of den, divide it out of num exactly, then substitute.
inline Element evaluate_with_cancellation(const AlgRatFun& f, const Scalar& x, EvalRecord* rec = nullptr) {
    auto [m, rest] = f.den().split_root(x);
    AlgPoly num = f.num();
    for (int j = 0; j < m; ++j) {
        auto [quo, rem] = num.divide_linear(x);
        if (!rem.is_zero())
            throw PoleError("genuine pole at u = " + x.str() + ": order " + std::to_string(m) + ", numerator vanishes to order " +
                                std::to_string(j),
                            ScalarPoly::linear_root(x), m - j);
        num = std::move(quo);
    }
    if (rec) *rec = {x, f.den(), rest, m};
    return rest.eval(x).inverse() * num.eval(x);
}

// Left multiplications through the anti-involution.
inline Element lmul_g(const Algebra& Y, int i, const Element& x) { return Y.star(Y.rmul_g(Y.star(x), i)); }
inline Element lmul_X(const Algebra& Y, int k, const Element& x) { return Y.star(Y.rmul_X(Y.star(x), k)); }
inline Element lmul_e(const Algebra& Y, int i, const Element& x) {
    Element acc = Y.zero(), y = x;
    // (1/r) sum_s t_i^s t_{i+1}^{-s}
    for (int s = 0; s < Y.r(); ++s) {
        acc += y;
        Element z = Y.lmul_t(i, y);
        for (int j = 0; j < Y.r() - 1; ++j) z = Y.lmul_t(i + 1, z);
        y = std::move(z);
    }
    return BigRational(1, Y.r()) * acc;
}
inline Element lmul_g_inv(const Algebra& Y, int i, const Element& x) { return lmul_g(Y, i, x) - Y.qc() * lmul_e(Y, i, x); }

// a and b are constants or the variable u.
inline AlgRatFun baxterized_g(const Algebra& Y, int i, const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly diff = a - b;
    if (diff.is_zero()) throw PoleError("g_" + std::to_string(i) + "(a,b) at a = b", ScalarPoly(Scalar(1)), 1);
    AlgPoly num = diff * AlgPoly::constant(Y.g(i)) + (ScalarPoly(Y.qc()) * b) * AlgPoly::constant(Y.e(i));
    return AlgRatFun(num, diff);
}
inline Element baxterized_g(const Algebra& Y, int i, const Scalar& a, const Scalar& b) {
    if (a == b) throw PoleError("g_" + std::to_string(i) + "(a,b) at a = b = " + a.str(), ScalarPoly::linear_root(a), 1);
    return Y.g(i) + (Y.qc() * b / (a - b)) * Y.e(i);
}

inline ScalarPoly cyclotomic_poly(const Algebra& Y) {
    ScalarPoly f(Scalar(1));
    for (const auto& v : Y.v()) f = f * ScalarPoly::linear_root(v);
    return f;
}

// (f_1(u) - f_1(X_1)) / (u - X_1) = sum_m a_m sum_{j<m} u^j X_1^{m-1-j}.
inline AlgPoly phi1(const Algebra& Y) {
    ScalarPoly f = cyclotomic_poly(Y);
    std::vector<Element> powers{Y.one()};
    for (int m = 1; m < Y.d(); ++m) powers.push_back(Y.rmul_X(powers.back(), 1));
    std::vector<Element> c(static_cast<std::size_t>(std::max(Y.d(), 1)), Y.zero());
    for (int m = 1; m <= f.degree(); ++m)
        for (int j = 0; j < m; ++j) c[static_cast<std::size_t>(j)] += f.coeff(static_cast<std::size_t>(m)) * powers[static_cast<std::size_t>(m - 1 - j)];
    AlgPoly p(Y, std::move(c));
    // (u - X_1) p(u) must equal f_1(u) since f_1(X_1) = 0
    AlgPoly check = ScalarPoly::x() * p + AlgPoly(Y, {-Y.X(1)}) * p;
    if (!(check == f * AlgPoly::constant(Y.one()))) throw std::logic_error("phi_1 division left a remainder");
    return p;
}

// Left multiplication of x(u) by phi_k(c_1..c_{k-1}, u); denominators prod (u - c_j).
inline AlgRatFun lmul_phi(const Algebra& Y, const std::vector<Scalar>& c, const AlgPoly& x) {
    const int k = static_cast<int>(c.size()) + 1;
    AlgPoly y = x;
    for (int i = k - 1; i >= 1; --i) y = y.map([&](const Element& e) { return lmul_g_inv(Y, i, e); });
    // phi_1(u) on the left: the coefficient of X_1^p is sum_{m>p} a_m u^{m-1-p}
    ScalarPoly f = cyclotomic_poly(Y);
    AlgPoly acc(Y), xp = y;
    for (int p = 0; p < f.degree(); ++p) {
        if (p > 0) xp = xp.map([&](const Element& e) { return lmul_X(Y, 1, e); });
        std::vector<Scalar> sp(static_cast<std::size_t>(f.degree() - p), Scalar(0));
        for (int m = p + 1; m <= f.degree(); ++m) sp[static_cast<std::size_t>(m - 1 - p)] = f.coeff(static_cast<std::size_t>(m));
        acc = acc + ScalarPoly(sp) * xp;
    }
    ScalarPoly den(Scalar(1));
    for (int i = 1; i <= k - 1; ++i) {
        const Scalar& ci = c[static_cast<std::size_t>(i - 1)];
        // ((u - c_i) g_i + (q - q^{-1}) c_i e_i) / (u - c_i)
        AlgPoly gpart = ScalarPoly::linear_root(ci) * acc.map([&](const Element& e) { return lmul_g(Y, i, e); });
        AlgPoly epart = ScalarPoly(Y.qc() * ci) * acc.map([&](const Element& e) { return lmul_e(Y, i, e); });
        acc = gpart + epart;
        den = den * ScalarPoly::linear_root(ci);
    }
    return AlgRatFun(acc, den);
}

// phi_k as a rational function, for inspection.
inline AlgRatFun phi_chain(const Algebra& Y, const std::vector<Scalar>& c) {
    if (static_cast<int>(c.size()) + 1 > Y.n()) throw std::invalid_argument("phi_k needs k <= n");
    return lmul_phi(Y, c, AlgPoly::constant(Y.one()));
}

// sum_s v^{r-1-s} t_i^s, the polynomial (prod_xi (v - xi)) / (v - t_i).
inline AlgPoly gamma_factor(const Algebra& Y, int i) {
    std::vector<Element> c(static_cast<std::size_t>(Y.r()), Y.zero());
    for (int s = 0; s < Y.r(); ++s) c[static_cast<std::size_t>(Y.r() - 1 - s)] = Y.t_pow(i, s);
    return AlgPoly(Y, std::move(c));
}
inline Element lmul_gamma_at(const Algebra& Y, int i, const Scalar& z, const Element& x) {
    Element acc = Y.zero(), y = x;
    for (int s = 0; s < Y.r(); ++s) {
        acc += z.pow(Y.r() - 1 - s) * y;
        y = Y.lmul_t(i, y);
    }
    return acc;
}

// [a]_q = q^{a-1} + q^{a-3} + ... + q^{1-a}
inline Scalar q_integer(const Scalar& q, int a) {
    Scalar s(0);
    for (int j = a - 1; j >= 1 - a; j -= 2) s += q.pow(j);
    return s;
}

inline Scalar F_T_lambda(const Algebra& Y, const RDPartition& lam) {
    Scalar out(1);
    for (const auto& nd : lam.nodes())
        for (int k = 1; k <= Y.r(); ++k)
            if (k != nd.k) out *= Y.zeta(nd.k) - Y.zeta(k);
    return out;
}

// cc(theta) = column - row.
inline Scalar F_lambda(const Algebra& Y, const RDPartition& lam) {
    const Scalar& q = Y.q();
    Scalar out(1);
    for (const auto& nd : lam.nodes()) {
        const Partition& own = lam.comp(nd.k, nd.l);
        int cc = nd.b - nd.a;
        out *= q_integer(q, hook_length(own, nd.a, nd.b)) / q.pow(cc);
        for (int k = 1; k <= Y.d(); ++k) {
            if (k == nd.l) continue;
            int h = generalized_hook(own, nd.a, nd.b, lam.comp(nd.k, k));
            out *= (Y.v()[static_cast<std::size_t>(nd.l - 1)] * q.pow(h) - Y.v()[static_cast<std::size_t>(k - 1)] * q.pow(-h)) / q.pow(-cc);
        }
    }
    return out;
}

struct FusionConstants {
    Scalar FT_lambda, F_lambda;
    ScalarRatFun FT_t;  // in v
    ScalarRatFun F_t;   // in u
};

inline FusionConstants fusion_constants(const Algebra& Y, const RDTableau& t) {
    if (!t.is_standard() || t.size() < 1) throw std::invalid_argument("need a nonempty standard tableau");
    const int n = t.size();
    FusionConstants F{F_T_lambda(Y, t.shape()), F_lambda(Y, t.shape()), ScalarRatFun(), ScalarRatFun()};
    const int pn = t.r_position(n);
    ScalarPoly den(Scalar(1));
    for (int k = 1; k <= Y.r(); ++k)
        if (k != pn) den = den * ScalarPoly::linear_root(Y.zeta(k));
    F.FT_t = ScalarRatFun(ScalarPoly(Scalar(1)), den);
    ScalarPoly num = ScalarPoly::linear_root(content(Y, t, n)), d2 = cyclotomic_poly(Y);
    const Scalar qc2 = Y.qc() * Y.qc();
    for (int i = 1; i < n; ++i) {
        ScalarPoly lin = ScalarPoly::linear_root(content(Y, t, i));
        num = num * lin * lin;
        ScalarPoly dd = lin * lin;
        if (t.r_position(i) == pn) dd = dd - ScalarPoly(std::vector<Scalar>{Scalar(0), qc2 * content(Y, t, i)});
        d2 = d2 * dd;
    }
    F.F_t = ScalarRatFun(num, d2);
    return F;
}

// The two regularity identities at the last entry of t.
inline std::vector<CheckResult> regularity_checks(const Algebra& Y, const RDTableau& t) {
    const int n = t.size();
    FusionConstants F = fusion_constants(Y, t);
    RDPartition mu = t.restricted_shape(n - 1);
    const Scalar& z = Y.zeta(t.r_position(n));
    CheckBuilder a("F_t^T(zeta_pn) = zeta_pn / r = F_mu^T / F_lambda^T"), b("F_t(c_n) = F_mu / F_lambda");
    try {
        Scalar v = F.FT_t.eval(z);
        a.expect_lazy(v == z / Scalar(Y.r()) && v == F_T_lambda(Y, mu) / F.FT_lambda, [&] { return t.str() + ": " + v.str(); });
    } catch (const PoleError& e) {
        a.fail(t.str() + ": " + e.what());
    }
    try {
        Scalar v = F.F_t.eval(content(Y, t, n));
        b.expect_lazy(v == F_lambda(Y, mu) / F.F_lambda, [&] { return t.str() + ": " + v.str(); });
    } catch (const PoleError& e) {
        b.fail(t.str() + ": " + e.what());
    }
    return {a.result(), b.result()};
}

inline std::string element_digest(const Element& x) {
    std::size_t h = std::hash<std::string>{}(x.algebra()->element_str(x.terms()));
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << h;
    return s.str();
}

struct FusionStep {
    int k = 0;
    EvalRecord eval;
    Element value;  // the evaluated prefix idempotent
};

struct FusionResult {
    Element E;
    Scalar prefactor;         // 1 / (F_lambda^T F_lambda)
    Element unnormalised;     // Phi evaluated consecutively
    std::vector<FusionStep> steps;
    nlohmann::json trace() const {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& s : steps)
            j.push_back({{"step", s.k},
                         {"point", s.eval.point.str()},
                         {"denominator_before", s.eval.den_before.str()},
                         {"denominator_after", s.eval.den_after.str()},
                         {"cancelled_order", s.eval.multiplicity},
                         {"digest", element_digest(s.value)}});
        return j;
    }
};

// Staged evaluation: at step k, F_t^T F_t(u) phi~_k(c_1..c_{k-1}, u, v) E_{k-1} at v = zeta_{p_k}, then u = c_k.
// The raw Phi chain is carried alongside and normalised once at the end.
inline FusionResult fusion_idempotent(const Algebra& Y, const RDTableau& t) {
    if (t.size() != Y.n() || !t.is_standard()) throw std::invalid_argument("need a standard tableau of size n");
    require_semisimple(Y);
    FusionResult R{Y.one(), Scalar(1), Y.one(), {}};
    std::vector<Scalar> c;
    for (int k = 1; k <= Y.n(); ++k) {
        RDTableau pre = t;
        while (pre.size() > k) pre = pre.remove_last();
        FusionConstants F = fusion_constants(Y, pre);
        const Scalar& z = Y.zeta(t.r_position(k));
        Scalar cT = F.FT_t.eval(z);
        Scalar ck = content(Y, t, k);
        AlgRatFun f = lmul_phi(Y, c, AlgPoly::constant(lmul_gamma_at(Y, k, z, R.E)));
        FusionStep st{k, {}, Y.zero()};
        try {
            st.value = cT * evaluate_with_cancellation(F.F_t * f, ck, &st.eval);
            AlgRatFun raw = lmul_phi(Y, c, AlgPoly::constant(lmul_gamma_at(Y, k, z, R.unnormalised)));
            R.unnormalised = evaluate_with_cancellation(raw, ck);
        } catch (const PoleError& e) {
            throw PoleError("fusion step " + std::to_string(k) + ": " + e.what(), e.factor, e.multiplicity);
        }
        R.E = st.value;
        R.steps.push_back(std::move(st));
        c.push_back(ck);
    }
    R.prefactor = (F_T_lambda(Y, t.shape()) * F_lambda(Y, t.shape())).inverse();
    return R;
}

// E_u as a sum over one-node extensions, and the (u - c_n)/(u - X_n) evaluation on that sum.
inline std::vector<CheckResult> branching_checks(const Algebra& Y, const RDTableau& t) {
    const int n = Y.n();
    CheckBuilder a("E_u = sum of E_s over one-node extensions"), b("(u - c_n)/(u - X_n) (v - zeta)/(v - t_n) E_u at v, u gives E_t");
    RDTableau u = t.remove_last();
    Element Eu = idempotent_prefix(Y, t, n - 1);
    Element sum = Y.zero(), limit = Y.zero();
    const Scalar cn = content(Y, t, n);
    for (const auto& nd : u.shape().addable()) {
        auto rows = u.rows();
        auto& comp = rows[static_cast<std::size_t>((nd.k - 1) * Y.d() + nd.l - 1)];
        if (static_cast<int>(comp.size()) < nd.a) comp.resize(static_cast<std::size_t>(nd.a));
        comp[static_cast<std::size_t>(nd.a - 1)].push_back(n);
        RDPartition sh = u.shape();
        sh.comp(nd.k, nd.l) = Partition([&] {
            std::vector<int> p;
            for (const auto& row : comp) p.push_back(static_cast<int>(row.size()));
            return p;
        }());
        RDTableau s(sh, rows);
        Element Es = idempotent_prefix(Y, s, n);
        sum += Es;
        // spectral value of the rational function on E_s
        Scalar cs = content(Y, s, n);
        if (s.r_position(n) == t.r_position(n) && cs == cn) limit += Es;
    }
    a.expect(sum == Eu, t.str());
    b.expect(limit == idempotent_prefix(Y, t, n), t.str());
    return {a.result(), b.result()};
}


inline std::vector<Scalar> default_spectral_points() {
    return {Scalar(3), Scalar(-2), Scalar(BigRational(1, 2)), Scalar(BigRational(7, 3)), Scalar(11)};
}

// Yang-Baxter and unitarity at every triple or pair of distinct points, and
// once more with the first spectral parameter kept as the variable u.
inline std::vector<CheckResult> baxter_checks(const Algebra& Y, const std::vector<Scalar>& pts = default_spectral_points()) {
    CheckBuilder yb("Yang-Baxter for g_i(a,b)"), un("unitarity g_i(a,b) g_i(b,a)");
    const int n = Y.n();
    const Scalar qc2 = Y.qc() * Y.qc();
    for (int i = 1; i + 1 < n; ++i)
        for (const auto& a : pts)
            for (const auto& b : pts)
                for (const auto& c : pts) {
                    if (a == b || a == c || b == c) continue;
                    Element lhs = baxterized_g(Y, i, a, b) * baxterized_g(Y, i + 1, a, c) * baxterized_g(Y, i, b, c);
                    Element rhs = baxterized_g(Y, i + 1, b, c) * baxterized_g(Y, i, a, c) * baxterized_g(Y, i + 1, a, b);
                    yb.expect_lazy(lhs == rhs, [&] { return "i=" + std::to_string(i) + " a=" + a.str() + " b=" + b.str() + " c=" + c.str(); });
                }
    for (int i = 1; i < n; ++i)
        for (const auto& a : pts)
            for (const auto& b : pts) {
                if (a == b) continue;
                Element lhs = baxterized_g(Y, i, a, b) * baxterized_g(Y, i, b, a);
                Element rhs = Y.one() - (qc2 * a * b / ((a - b) * (a - b))) * Y.e(i);
                un.expect_lazy(lhs == rhs, [&] { return "i=" + std::to_string(i) + " a=" + a.str() + " b=" + b.str(); });
            }
    const ScalarPoly u = ScalarPoly::x();
    for (int i = 1; i < n; ++i)
        for (const auto& b : pts) {
            AlgRatFun lhs = baxterized_g(Y, i, u, ScalarPoly(b)) * baxterized_g(Y, i, ScalarPoly(b), u);
            ScalarPoly dd = (u - ScalarPoly(b)) * (u - ScalarPoly(b));
            AlgRatFun rhs(dd * AlgPoly::constant(Y.one()) + (ScalarPoly(-qc2 * b) * u) * AlgPoly::constant(Y.e(i)), dd);
            un.expect_lazy(lhs == rhs, [&] { return "symbolic a, i=" + std::to_string(i) + " b=" + b.str(); });
            if (i + 1 >= n) continue;
            for (const auto& c : pts) {
                if (b == c) continue;
                ScalarPoly B(b), C(c);
                AlgRatFun l = baxterized_g(Y, i, u, B) * baxterized_g(Y, i + 1, u, C) * AlgRatFun(AlgPoly::constant(baxterized_g(Y, i, b, c)));
                AlgRatFun r = AlgRatFun(AlgPoly::constant(baxterized_g(Y, i + 1, b, c))) * baxterized_g(Y, i, u, C) * baxterized_g(Y, i + 1, u, B);
                yb.expect_lazy(l == r, [&] { return "symbolic a, i=" + std::to_string(i) + " b=" + b.str() + " c=" + c.str(); });
            }
        }
    return {yb.result(), un.result()};
}

// Regularity at every prefix size up to max_n, fusion against interpolation at size n.
inline std::vector<CheckResult> verify_fusion(const Algebra& Y, int max_regular_n) {
    require_semisimple(Y);
    std::vector<CheckResult> out = baxter_checks(Y);
    CheckBuilder ra("F_t^T(zeta_pn) = F_mu^T / F_lambda^T for all tableaux"), rb("F_t(c_n) = F_mu / F_lambda for all tableaux");
    for (int m = 1; m <= max_regular_n; ++m)
        for (const auto& t : all_standard_tableaux(Y.r(), Y.d(), m)) {
            auto rc = regularity_checks(Y, t);
            ra.expect(rc[0].passed, rc[0].witness);
            rb.expect(rc[1].passed, rc[1].witness);
        }
    out.push_back(ra.result());
    out.push_back(rb.result());
    CheckBuilder fe("fusion = interpolation for every standard tableau"), raw("raw Phi over F_lambda^T F_lambda = interpolation"),
        br("branching sum and spectral limit");
    auto T = content_tables(Y);
    for (const auto& t : all_standard_tableaux(Y.r(), Y.d(), Y.n())) {
        try {
            FusionResult R = fusion_idempotent(Y, t);
            Element E = idempotent_interpolation(Y, T, t);
            fe.expect_lazy(R.E == E, [&] { return t.str(); });
            raw.expect_lazy(R.prefactor * R.unnormalised == E, [&] { return t.str(); });
        } catch (const PoleError& e) {
            fe.fail(t.str() + ": " + e.what());
        }
        for (const auto& c : branching_checks(Y, t)) br.expect(c.passed, c.name + " " + c.witness);
    }
    out.push_back(fe.result());
    out.push_back(raw.result());
    out.push_back(br.result());
    return out;
}

inline RDTableau worked_example_tableau() { return RDTableau::from_nested(2, 2, {{{{1, 3}}, {}}, {{{2}}, {{4}}}}); }

// zeta_1^2 zeta_2^2 / (16 (q + q^{-1}) (v_1 - v_2) (v_2 q - v_1 q^{-1}) (v_1 q - v_2 q^{-1})^2)
inline Scalar worked_example_prefactor(const Algebra& Y) {
    const Scalar &q = Y.q(), &v1 = Y.v()[0], &v2 = Y.v()[1], &z1 = Y.zeta(1), &z2 = Y.zeta(2);
    const Scalar qi = q.inverse(), w = v1 * q - v2 * qi;
    return z1 * z1 * z2 * z2 / (Scalar(16) * (q + qi) * (v1 - v2) * (v2 * q - v1 * qi) * w * w);
}

struct ExampleReport {
    std::vector<CheckResult> checks;
    FusionResult fusion;
};

inline ExampleReport worked_example(const Algebra& Y) {
    if (Y.r() != 2 || Y.d() != 2 || Y.n() != 4) throw std::invalid_argument("the worked example needs r = d = 2, n = 4");
    RDTableau t = worked_example_tableau();
    ExampleReport rep{{}, fusion_idempotent(Y, t)};
    CheckBuilder pf("1/(F_lambda^T F_lambda) equals the closed-form prefactor"), ft("F_lambda^T = 16 zeta_1^-2 zeta_2^-2"),
        eq("staged fusion equals interpolation E_t"), rw("prefactor times raw Phi equals E_t");
    Scalar want = worked_example_prefactor(Y);
    pf.expect_lazy(rep.fusion.prefactor == want, [&] { return rep.fusion.prefactor.str() + " vs " + want.str(); });
    Scalar z1 = Y.zeta(1), z2 = Y.zeta(2);
    ft.expect(F_T_lambda(Y, t.shape()) == Scalar(16) / (z1 * z1 * z2 * z2), F_T_lambda(Y, t.shape()).str());
    Element E = idempotent_interpolation(Y, content_tables(Y), t);
    eq.expect(rep.fusion.E == E, "E_t mismatch");
    rw.expect(rep.fusion.prefactor * rep.fusion.unnormalised == E, "raw Phi mismatch");
    rep.checks = {pf.result(), ft.result(), eq.result(), rw.result()};
    return rep;
}

}  // namespace yh

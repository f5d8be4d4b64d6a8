#pragma once
// Univariate polynomials and rational functions over Q(zeta_N).

#include "yh/fields/cyclotomic.hpp"

#include <string>
#include <utility>
#include <vector>

namespace yh {

class ScalarPoly {
public:
    ScalarPoly() = default;
    ScalarPoly(const Scalar& c) {  // NOLINT: constants embed
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit ScalarPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ScalarPoly x() { return ScalarPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
    // u - a
    static ScalarPoly linear_root(const Scalar& a) { return ScalarPoly(std::vector<Scalar>{-a, Scalar(1)}); }

    const std::vector<Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
    const Scalar& lead() const { return c_.back(); }

    Scalar eval(const Scalar& x) const {
        Scalar acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
        std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()), Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return ScalarPoly(std::move(out));
    }
    friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) {
        std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()), Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
        return ScalarPoly(std::move(out));
    }
    ScalarPoly operator-() const { return ScalarPoly() - *this; }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return ScalarPoly(std::move(out));
    }
    friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ScalarPoly& a, const ScalarPoly& b) { return !(a == b); }

    ScalarPoly monic() const {
        if (is_zero()) return {};
        Scalar inv = lead().inverse();
        std::vector<Scalar> out = c_;
        for (auto& c : out) c *= inv;
        return ScalarPoly(std::move(out));
    }

    // Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<ScalarPoly, ScalarPoly> divmod(const ScalarPoly& a, const ScalarPoly& b) {
        if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
        if (a.degree() < b.degree()) return {ScalarPoly(), a};
        std::vector<Scalar> rem = a.c_;
        std::vector<Scalar> quo(a.c_.size() - b.c_.size() + 1, Scalar(0));
        Scalar inv = b.lead().inverse();
        for (std::size_t k = quo.size(); k-- > 0;) {
            Scalar c = rem[k + b.c_.size() - 1] * inv;
            quo[k] = c;
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= c * b.c_[j];
        }
        rem.resize(b.c_.size() - 1, Scalar(0));
        return {ScalarPoly(std::move(quo)), ScalarPoly(std::move(rem))};
    }

    // Multiplicity of the root a, and the cofactor with the root divided out.
    std::pair<int, ScalarPoly> split_root(const Scalar& a) const {
        int m = 0;
        ScalarPoly p = *this;
        while (!p.is_zero()) {
            auto [q, r] = divmod(p, linear_root(a));
            if (!r.is_zero()) break;
            p = q;
            ++m;
        }
        return {m, p};
    }

    std::string str(const std::string& var = "u") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string c = c_[k].str();
            if (k == 0) {
                out += c;
            } else {
                if (!c_[k].is_one()) out += "(" + c + ")*";
                out += var + (k > 1 ? "^" + std::to_string(k) : "");
            }
        }
        return out;
    }

private:
    std::vector<Scalar> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

inline ScalarPoly poly_gcd(ScalarPoly a, ScalarPoly b) {
    while (!b.is_zero()) {
        auto r = ScalarPoly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

struct PoleError : ArithmeticError {
    ScalarPoly factor;
    int multiplicity;
    PoleError(const std::string& msg, ScalarPoly f, int m) : ArithmeticError(msg), factor(std::move(f)), multiplicity(m) {}
};

class ScalarRatFun {
public:
    ScalarRatFun() : num_(), den_(Scalar(1)) {}
    ScalarRatFun(const ScalarPoly& p) : num_(p), den_(Scalar(1)) {}  // NOLINT
    ScalarRatFun(const Scalar& c) : num_(c), den_(Scalar(1)) {}      // NOLINT
    ScalarRatFun(ScalarPoly num, ScalarPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const ScalarPoly& num() const { return num_; }
    const ScalarPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend ScalarRatFun operator+(const ScalarRatFun& a, const ScalarRatFun& b) {
        return ScalarRatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ScalarRatFun operator-(const ScalarRatFun& a, const ScalarRatFun& b) {
        return ScalarRatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ScalarRatFun operator*(const ScalarRatFun& a, const ScalarRatFun& b) {
        return ScalarRatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend ScalarRatFun operator/(const ScalarRatFun& a, const ScalarRatFun& b) {
        if (b.is_zero()) throw ArithmeticError("rational function division by zero");
        return ScalarRatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const ScalarRatFun& a, const ScalarRatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    Scalar eval(const Scalar& x) const {
        Scalar d = den_.eval(x);
        if (d.is_zero()) {
            auto [m, rest] = den_.split_root(x);
            throw PoleError("pole at u = " + x.str(), ScalarPoly::linear_root(x), m);
        }
        return num_.eval(x) / d;
    }

    std::string str(const std::string& var = "u") const {
        if (den_.degree() == 0) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    ScalarPoly num_, den_;

    void normalize() {
        if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = ScalarPoly(Scalar(1));
            return;
        }
        ScalarPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = ScalarPoly::divmod(num_, g).first;
            den_ = ScalarPoly::divmod(den_, g).first;
        }
        Scalar lead_inv = den_.lead().inverse();
        num_ = num_ * ScalarPoly(lead_inv);
        den_ = den_ * ScalarPoly(lead_inv);
    }
};

inline ScalarRatFun ratfun_normalize(const ScalarPoly& num, const ScalarPoly& den) { return ScalarRatFun(num, den); }

}  // namespace yh

#pragma once
// The cyclotomic field Q(zeta_N) as Q[x]/Phi_N(x), dense coefficient vectors.

#include "yh/fields/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

namespace yh {

namespace detail {

using QVec = std::vector<BigRational>;

inline void trim(QVec& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Exact division of integer-coefficient polynomials (divisor monic).
inline QVec divide_monic(QVec num, const QVec& den) {
    trim(num);
    QVec quo(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
    for (std::size_t k = quo.size(); k-- > 0;) {
        BigRational c = num[k + den.size() - 1];
        quo[k] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw ArithmeticError("inexact polynomial division");
    return quo;
}

struct CycloData {
    QVec phi;                   // Phi_N, low to high, monic
    std::vector<QVec> reduce;   // reduce[k] = x^k mod Phi_N for k < 2*deg
};

inline QVec compute_phi(int N) {
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
    QVec acc(static_cast<std::size_t>(N) + 1);
    acc[0] = -1;
    acc[static_cast<std::size_t>(N)] = 1;
    for (int d = 1; d < N; ++d)
        if (N % d == 0) acc = divide_monic(acc, compute_phi(d));
    return acc;
}

inline const CycloData& cyclo_data(int N) {
    static std::mutex mu;
    static std::map<int, CycloData> cache;
    if (N < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    CycloData data;
    data.phi = compute_phi(N);
    std::size_t deg = data.phi.size() - 1;
    data.reduce.resize(2 * deg + 1);
    for (std::size_t k = 0; k < data.reduce.size(); ++k) {
        QVec v(deg);
        if (k < deg) {
            v[k] = 1;
        } else {
            const QVec& prev = data.reduce[k - 1];
            QVec shifted(deg + 1);
            for (std::size_t j = 0; j < deg; ++j) shifted[j + 1] = prev[j];
            BigRational top = shifted[deg];
            for (std::size_t j = 0; j < deg; ++j) v[j] = shifted[j] - top * data.phi[j];
        }
        data.reduce[k] = v;
    }
    return cache.emplace(N, std::move(data)).first->second;
}

}  // namespace detail

inline int euler_phi(int N) {
    int result = N;
    for (int p = 2; p * p <= N; ++p) {
        if (N % p != 0) continue;
        while (N % p == 0) N /= p;
        result -= result / p;
    }
    if (N > 1) result -= result / N;
    return result;
}

// Phi_N with rational coefficients, low to high.
inline std::vector<BigRational> cyclotomic_polynomial_coeffs(int N) { return detail::cyclo_data(N).phi; }

class CyclotomicScalar {
public:
    using Coeffs = boost::container::small_vector<BigRational, 2>;

    CyclotomicScalar() : order_(1), c_(1) {}
    CyclotomicScalar(const BigRational& q) : order_(1), c_(1, q) {}   // NOLINT: rationals embed
    CyclotomicScalar(std::int64_t n) : order_(1), c_(1, BigRational(n)) {}  // NOLINT
    CyclotomicScalar(int n) : order_(1), c_(1, BigRational(n)) {}           // NOLINT
    CyclotomicScalar(int order, Coeffs coeffs) : order_(order), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != euler_phi(order_))
            throw std::invalid_argument("coefficient vector length must be phi(N)");
    }

    static CyclotomicScalar rational(int order, const BigRational& q) {
        Coeffs c(static_cast<std::size_t>(euler_phi(order)));
        c[0] = q;
        return CyclotomicScalar(order, std::move(c));
    }
    // zeta^{k-1} in Q(zeta_N), zeta = exp(2 pi i / N).
    static CyclotomicScalar zeta_power(int N, long k) {
        long e = ((k - 1) % N + N) % N;
        const auto& data = detail::cyclo_data(N);
        std::size_t deg = data.phi.size() - 1;
        detail::QVec v(deg);
        if (static_cast<std::size_t>(e) < deg) {
            v[static_cast<std::size_t>(e)] = 1;
        } else {
            v = data.reduce[deg];
            for (long j = static_cast<long>(deg) + 1; j <= e; ++j) {
                detail::QVec shifted(deg + 1);
                for (std::size_t i = 0; i < deg; ++i) shifted[i + 1] = v[i];
                BigRational top = shifted[deg];
                for (std::size_t i = 0; i < deg; ++i) v[i] = shifted[i] - top * data.phi[i];
            }
        }
        return CyclotomicScalar(N, Coeffs(v.begin(), v.end()));
    }

    int order() const { return order_; }
    const Coeffs& coeffs() const { return c_; }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    bool is_one() const { return c_[0].is_one() && is_rational(); }
    const BigRational& rational_part() const { return c_[0]; }

    CyclotomicScalar lift(int order) const {
        if (order == order_) return *this;
        if (!is_rational()) throw ArithmeticError("cannot mix cyclotomic orders");
        return rational(order, c_[0]);
    }

    friend CyclotomicScalar operator+(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        if (a.c_.size() == 1 && b.c_.size() == 1)
            return CyclotomicScalar(a.order_ == 1 ? b.order_ : a.order_, Coeffs(1, a.c_[0] + b.c_[0]));
        int N = common_order(a, b);
        CyclotomicScalar x = a.lift(N), y = b.lift(N);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend CyclotomicScalar operator-(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        if (a.c_.size() == 1 && b.c_.size() == 1)
            return CyclotomicScalar(a.order_ == 1 ? b.order_ : a.order_, Coeffs(1, a.c_[0] - b.c_[0]));
        int N = common_order(a, b);
        CyclotomicScalar x = a.lift(N), y = b.lift(N);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    CyclotomicScalar operator-() const {
        CyclotomicScalar x = *this;
        for (auto& c : x.c_) c = -c;
        return x;
    }
    friend CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        if (a.c_.size() == 1 && b.c_.size() == 1)
            return CyclotomicScalar(a.order_ == 1 ? b.order_ : a.order_, Coeffs(1, a.c_[0] * b.c_[0]));
        if (a.c_.size() == 1 || a.is_rational()) return b.scaled(a.c_[0]).lifted_order(common_order(a, b));
        if (b.c_.size() == 1 || b.is_rational()) return a.scaled(b.c_[0]).lifted_order(common_order(a, b));
        int N = common_order(a, b);
        const auto& data = detail::cyclo_data(N);
        std::size_t deg = a.c_.size();
        detail::QVec prod(2 * deg - 1);
        for (std::size_t i = 0; i < deg; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < deg; ++j)
                if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
        }
        Coeffs out(deg);
        for (std::size_t k = 0; k < prod.size(); ++k) {
            if (prod[k].is_zero()) continue;
            if (k < deg) {
                out[k] += prod[k];
            } else {
                const auto& red = data.reduce[k];
                for (std::size_t j = 0; j < deg; ++j)
                    if (!red[j].is_zero()) out[j] += prod[k] * red[j];
            }
        }
        return CyclotomicScalar(N, std::move(out));
    }
    CyclotomicScalar inverse() const {
        if (is_zero()) throw ArithmeticError("division by zero in Q(zeta)");
        if (is_rational()) {
            CyclotomicScalar x = *this;
            x.c_[0] = c_[0].inverse();
            return x;
        }
        // Extended Euclid: find s with s*a = 1 mod Phi_N.
        const auto& data = detail::cyclo_data(order_);
        detail::QVec r0 = data.phi, r1(c_.begin(), c_.end());
        detail::trim(r1);
        detail::QVec s0, s1{BigRational(1)};
        while (!(r1.size() == 1)) {
            auto [q, rem] = divmod(r0, r1);
            detail::QVec s2 = sub(s0, mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        BigRational inv = r1[0].inverse();
        std::size_t deg = c_.size();
        Coeffs out(deg);
        detail::QVec s = s1;
        // s may have degree >= deg only transiently; reduce via table.
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k].is_zero()) continue;
            if (k < deg) {
                out[k] += s[k] * inv;
            } else {
                const auto& red = data.reduce[k];
                for (std::size_t j = 0; j < deg; ++j) out[j] += s[k] * inv * red[j];
            }
        }
        return CyclotomicScalar(order_, std::move(out));
    }
    friend CyclotomicScalar operator/(const CyclotomicScalar& a, const CyclotomicScalar& b) { return a * b.inverse(); }
    CyclotomicScalar& operator+=(const CyclotomicScalar& o) {
        if (c_.size() == 1 && o.c_.size() == 1) {
            c_[0] += o.c_[0];
            if (order_ == 1) order_ = o.order_;
            return *this;
        }
        return *this = *this + o;
    }
    CyclotomicScalar& operator-=(const CyclotomicScalar& o) {
        if (c_.size() == 1 && o.c_.size() == 1) {
            c_[0] -= o.c_[0];
            if (order_ == 1) order_ = o.order_;
            return *this;
        }
        return *this = *this - o;
    }
    CyclotomicScalar& operator*=(const CyclotomicScalar& o) { return *this = *this * o; }
    CyclotomicScalar& operator/=(const CyclotomicScalar& o) { return *this = *this / o; }

    CyclotomicScalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CyclotomicScalar result = CyclotomicScalar(1).lift(order_ == 1 ? 1 : order_);
        CyclotomicScalar base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        if (a.c_.size() == b.c_.size() && (a.order_ == b.order_ || a.c_.size() == 1)) return a.c_ == b.c_;
        if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
        return false;
    }
    friend bool operator!=(const CyclotomicScalar& a, const CyclotomicScalar& b) { return !(a == b); }

    std::size_t hash() const {
        std::size_t h = 0;
        for (const auto& c : c_) h = h * 31 + c.hash();
        return h;
    }

    std::string str() const {
        if (is_rational()) return c_[0].str();
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0) {
                os << c_[i].str();
            } else {
                if (!c_[i].is_one()) os << "(" << c_[i].str() << ")*";
                os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
            }
        }
        return os.str();
    }

private:
    int order_;
    Coeffs c_;

    static int common_order(const CyclotomicScalar& a, const CyclotomicScalar& b) {
        if (a.order_ == b.order_) return a.order_;
        if (a.c_.size() == 1 && b.c_.size() == 1) return a.order_ == 1 ? b.order_ : a.order_;
        if (a.is_rational()) return b.order_;
        if (b.is_rational()) return a.order_;
        throw ArithmeticError("cannot mix cyclotomic orders " + std::to_string(a.order_) + " and " +
                              std::to_string(b.order_));
    }
    CyclotomicScalar scaled(const BigRational& s) const {
        CyclotomicScalar x = *this;
        for (auto& c : x.c_) c *= s;
        return x;
    }
    CyclotomicScalar lifted_order(int N) const { return lift(N); }

    static detail::QVec mul(const detail::QVec& a, const detail::QVec& b) {
        if (a.empty() || b.empty()) return {};
        detail::QVec p(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
        detail::trim(p);
        return p;
    }
    static detail::QVec sub(const detail::QVec& a, const detail::QVec& b) {
        detail::QVec p(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < a.size(); ++i) p[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) p[i] -= b[i];
        detail::trim(p);
        return p;
    }
    static std::pair<detail::QVec, detail::QVec> divmod(detail::QVec a, const detail::QVec& b) {
        detail::trim(a);
        if (a.size() < b.size()) return {{}, a};
        detail::QVec q(a.size() - b.size() + 1);
        BigRational lead_inv = b.back().inverse();
        for (std::size_t k = q.size(); k-- > 0;) {
            BigRational c = a[k + b.size() - 1] * lead_inv;
            q[k] = c;
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
        }
        detail::trim(a);
        detail::trim(q);
        return {q, a};
    }
};

using Scalar = CyclotomicScalar;

}  // namespace yh

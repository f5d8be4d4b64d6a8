#pragma once
// Exact rationals with an inline int64 fast path; values that overflow are
// promoted to GMP and demoted again when they fit.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace yh {

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class BigRational {
public:
    BigRational() = default;
    BigRational(std::int64_t n) : num_(n) {}  // NOLINT: implicit from integers is intended
    BigRational(int n) : num_(n) {}           // NOLINT
    BigRational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw ArithmeticError("rational with zero denominator");
        set_reduced(static_cast<__int128>(n), static_cast<__int128>(d));
    }
    explicit BigRational(const mpq_class& q) { set_big(q); }

    static BigRational parse(const std::string& s) {
        mpq_class q;
        std::string t = s;
        while (!t.empty() && (t.front() == ' ' || t.front() == '+')) t.erase(t.begin());
        while (!t.empty() && t.back() == ' ') t.pop_back();
        if (t.empty() || q.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational: '" + s + "'");
        if (q.get_den() == 0) throw ArithmeticError("rational with zero denominator");
        q.canonicalize();
        return BigRational(q);
    }

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
    int sign() const {
        if (big_) return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }

    mpq_class to_mpq() const {
        if (big_) return *big_;
        mpq_class q;
        mpz_set_si(q.get_num_mpz_t(), num_);
        mpz_set_si(q.get_den_mpz_t(), den_);
        return q;
    }
    mpz_class numerator() const { return to_mpq().get_num(); }
    mpz_class denominator() const { return to_mpq().get_den(); }

    std::string str() const {
        if (!big_) return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
        return big_->get_str();
    }
    std::string num_str() const { return big_ ? big_->get_num().get_str() : std::to_string(num_); }
    std::string den_str() const { return big_ ? big_->get_den().get_str() : std::to_string(den_); }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) {
                std::int64_t s;
                if (!__builtin_add_overflow(a.num_, b.num_, &s)) return BigRational(s);
            }
            BigRational r;
            r.set_reduced(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
            return r;
        }
        return from_mpq(a.to_mpq() + b.to_mpq());
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        if (!a.big_ && !b.big_) {
            if (a.den_ == 1 && b.den_ == 1) {
                std::int64_t s;
                if (!__builtin_sub_overflow(a.num_, b.num_, &s)) return BigRational(s);
            }
            BigRational r;
            r.set_reduced(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
            return r;
        }
        return from_mpq(a.to_mpq() - b.to_mpq());
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        if (!a.big_ && !b.big_) {
            if (a.num_ == 0 || b.num_ == 0) return BigRational();
            std::int64_t g1 = std::gcd(a.num_, b.den_);
            std::int64_t g2 = std::gcd(b.num_, a.den_);
            __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
            __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
            BigRational r;
            r.set_coprime(n, d);
            return r;
        }
        return from_mpq(a.to_mpq() * b.to_mpq());
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) { return a * b.inverse(); }
    BigRational operator-() const {
        if (!big_ && num_ != INT64_MIN) {
            BigRational r = *this;
            r.num_ = -num_;
            return r;
        }
        return from_mpq(-to_mpq());
    }
    BigRational inverse() const {
        if (is_zero()) throw ArithmeticError("division by zero");
        if (!big_ && num_ != INT64_MIN) {
            BigRational r;
            r.num_ = num_ > 0 ? den_ : -den_;
            r.den_ = num_ > 0 ? num_ : -num_;
            return r;
        }
        mpq_class q = to_mpq();
        mpq_inv(q.get_mpq_t(), q.get_mpq_t());
        return from_mpq(q);
    }
    BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
    BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
    BigRational& operator*=(const BigRational& o) { return *this = *this * o; }
    BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;  // canonical: small values are never stored big
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        if (!a.big_ && !b.big_)
            return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
        return a.to_mpq() < b.to_mpq();
    }

    std::size_t hash() const {
        if (!big_) return std::hash<std::int64_t>()(num_) * 1000003u ^ std::hash<std::int64_t>()(den_);
        return std::hash<std::string>()(big_->get_str());
    }

    static BigRational from_mpq(mpq_class q) {
        BigRational r;
        r.set_big(q);
        return r;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;

    static unsigned __int128 uabs(__int128 x) { return x < 0 ? static_cast<unsigned __int128>(-x) : x; }
    static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
        while (b != 0) {
            if ((a >> 64) == 0 && (b >> 64) == 0) return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
            unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    static bool fits(__int128 x) { return x >= INT64_MIN && x <= INT64_MAX; }
    static mpz_class to_mpz(__int128 x) {
        bool neg = x < 0;
        unsigned __int128 u = uabs(x);
        mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
        mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
        mpz_class z = (hi << 64) + lo;
        return neg ? mpz_class(-z) : z;
    }

    void set_reduced(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            big_.reset();
            return;
        }
        unsigned __int128 g = gcd128(uabs(n), static_cast<unsigned __int128>(d));
        set_coprime(n / static_cast<__int128>(g), d / static_cast<__int128>(g));
    }
    void set_coprime(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            big_.reset();
            return;
        }
        mpq_class q;
        q.get_num() = to_mpz(n);
        q.get_den() = to_mpz(d);
        big_ = std::make_shared<const mpq_class>(q);
        num_ = 0;
        den_ = 1;
    }
    void set_big(const mpq_class& q) {
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
            num_ = q.get_num().get_si();
            den_ = q.get_den().get_si();
            big_.reset();
        } else {
            big_ = std::make_shared<const mpq_class>(q);
            num_ = 0;
            den_ = 1;
        }
    }
};

}  // namespace yh

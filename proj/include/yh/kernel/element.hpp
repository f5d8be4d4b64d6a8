#pragma once
// Sparse elements over the word basis, plus a dense scratch accumulator.

#include "yh/fields/linalg.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace yh {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

using Term = std::pair<std::uint32_t, Scalar>;
using Terms = std::vector<Term>;  // sorted by index, no zero coefficients

// Dense accumulator with a touched list. Buffers are recycled per thread.
class Accumulator {
public:
    explicit Accumulator(std::size_t dim) : buf_(acquire(dim)) {}
    ~Accumulator() { release(std::move(buf_)); }
    Accumulator(const Accumulator&) = delete;
    Accumulator& operator=(const Accumulator&) = delete;

    void add(std::uint32_t i, const Scalar& c) {
        if (c.is_zero()) return;
        if (!buf_->used[i]) {
            buf_->used[i] = 1;
            buf_->touched.push_back(i);
            buf_->val[i] = c;
        } else {
            buf_->val[i] += c;
        }
    }
    void add_scaled(const Terms& x, const Scalar& c) {
        if (c.is_zero()) return;
        bool unit = c.is_one();
        for (const auto& [i, v] : x) add(i, unit ? v : v * c);
    }
    // Collects the nonzero entries in index order and clears the buffer.
    Terms take() {
        auto& t = buf_->touched;
        std::sort(t.begin(), t.end());
        Terms out;
        out.reserve(t.size());
        for (std::uint32_t i : t) {
            if (!buf_->val[i].is_zero()) out.emplace_back(i, std::move(buf_->val[i]));
            buf_->used[i] = 0;
        }
        t.clear();
        return out;
    }

private:
    struct Buffer {
        std::vector<Scalar> val;
        std::vector<unsigned char> used;
        std::vector<std::uint32_t> touched;
    };
    std::unique_ptr<Buffer> buf_;

    static std::vector<std::unique_ptr<Buffer>>& pool() {
        thread_local std::vector<std::unique_ptr<Buffer>> p;
        return p;
    }
    static std::unique_ptr<Buffer> acquire(std::size_t dim) {
        auto& p = pool();
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k]->val.size() == dim) {
                auto b = std::move(p[k]);
                p.erase(p.begin() + static_cast<std::ptrdiff_t>(k));
                return b;
            }
        }
        auto b = std::make_unique<Buffer>();
        b->val.resize(dim);
        b->used.assign(dim, 0);
        return b;
    }
    static void release(std::unique_ptr<Buffer> b) {
        if (!b) return;
        b->touched.clear();
        auto& p = pool();
        if (p.size() < 8) p.push_back(std::move(b));
    }
};

inline Terms terms_add(const Terms& a, const Terms& b, const Scalar& sb = Scalar(1)) {
    Terms out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, b[j].second * sb);
            ++j;
        } else {
            Scalar c = a[i].second + b[j].second * sb;
            if (!c.is_zero()) out.emplace_back(a[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

inline Terms terms_scale(const Terms& a, const Scalar& c) {
    if (c.is_zero()) return {};
    Terms out = a;
    for (auto& t : out) t.second *= c;
    return out;
}

// An element of Y_{r,n}^d: a sparse combination of normal words.
class Element {
public:
    Element() = default;
    explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}
    Element(AlgebraPtr alg, Terms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {}

    const AlgebraPtr& algebra() const { return alg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coeff(std::uint32_t idx) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                                   [](const Term& t, std::uint32_t i) { return t.first < i; });
        return it != terms_.end() && it->first == idx ? it->second : Scalar(0);
    }

    friend Element operator+(const Element& a, const Element& b) {
        return Element(pick(a, b), terms_add(a.terms_, b.terms_));
    }
    friend Element operator-(const Element& a, const Element& b) {
        return Element(pick(a, b), terms_add(a.terms_, b.terms_, Scalar(-1)));
    }
    Element operator-() const { return Element(alg_, terms_scale(terms_, Scalar(-1))); }
    friend Element operator*(const Scalar& c, const Element& a) { return Element(a.alg_, terms_scale(a.terms_, c)); }
    friend Element operator*(const Element& a, const Scalar& c) { return c * a; }
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    friend Element operator*(const Element& a, const Element& b);  // algebra product, defined with Algebra
    Element& operator*=(const Element& o) { return *this = *this * o; }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    std::string str() const;  // defined with Algebra

private:
    AlgebraPtr alg_;
    Terms terms_;

    static AlgebraPtr pick(const Element& a, const Element& b) {
        if (a.alg_ && b.alg_ && a.alg_ != b.alg_) throw std::invalid_argument("elements from different algebras");
        return a.alg_ ? a.alg_ : b.alg_;
    }
};

}  // namespace yh

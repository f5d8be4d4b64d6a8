#pragma once
// Permutations of {1..n} acting on the right: (i)(uv) = ((i)u)v.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace yh {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n) : im_(static_cast<std::size_t>(n)) { std::iota(im_.begin(), im_.end(), 1); }
    explicit Permutation(std::vector<int> images) : im_(std::move(images)) {
        std::vector<bool> seen(im_.size() + 1, false);
        for (int x : im_) {
            if (x < 1 || x > static_cast<int>(im_.size()) || seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("not a permutation");
            seen[static_cast<std::size_t>(x)] = true;
        }
    }

    static Permutation simple(int n, int i) {
        if (i < 1 || i >= n) throw std::out_of_range("simple reflection index");
        Permutation p(n);
        std::swap(p.im_[static_cast<std::size_t>(i - 1)], p.im_[static_cast<std::size_t>(i)]);
        return p;
    }
    // Product s_{w[0]} s_{w[1]} ... in the right-action convention.
    static Permutation from_word(int n, const std::vector<int>& word) {
        Permutation p(n);
        for (int i : word) p = p * simple(n, i);
        return p;
    }

    int size() const { return static_cast<int>(im_.size()); }
    const std::vector<int>& images() const { return im_; }
    // (i)w for 1-based i.
    int operator()(int i) const { return im_[static_cast<std::size_t>(i - 1)]; }

    friend Permutation operator*(const Permutation& u, const Permutation& v) {
        Permutation w;
        w.im_.resize(u.im_.size());
        for (std::size_t i = 0; i < u.im_.size(); ++i) w.im_[i] = v(u.im_[i]);
        return w;
    }
    Permutation inverse() const {
        Permutation w;
        w.im_.resize(im_.size());
        for (std::size_t i = 0; i < im_.size(); ++i) w.im_[static_cast<std::size_t>(im_[i] - 1)] = static_cast<int>(i) + 1;
        return w;
    }
    friend bool operator==(const Permutation& a, const Permutation& b) { return a.im_ == b.im_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return a.im_ != b.im_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.im_ < b.im_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < im_.size(); ++i)
            if (im_[i] != static_cast<int>(i) + 1) return false;
        return true;
    }
    int length() const {
        int inv = 0;
        for (std::size_t i = 0; i < im_.size(); ++i)
            for (std::size_t j = i + 1; j < im_.size(); ++j) inv += im_[i] > im_[j];
        return inv;
    }
    // l(w s_i) < l(w): the value i+1 occurs before the value i.
    bool has_right_descent(int i) const {
        auto pi = std::find(im_.begin(), im_.end(), i), pj = std::find(im_.begin(), im_.end(), i + 1);
        return pj < pi;
    }
    // l(s_i w) < l(w): (i)w > (i+1)w.
    bool has_left_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

    // Reduced word [i_1..i_k] with w = s_{i_1} ... s_{i_k}.
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        Permutation w = *this;
        int n = size();
        while (!w.is_identity()) {
            for (int i = 1; i < n; ++i) {
                if (w.has_right_descent(i)) {
                    word.push_back(i);
                    w = w * simple(n, i);
                    break;
                }
            }
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    // Lexicographic rank among all permutations of size n.
    std::uint32_t lex_rank() const {
        std::uint32_t rank = 0;
        std::size_t n = im_.size();
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t smaller = 0;
            for (std::size_t j = i + 1; j < n; ++j) smaller += im_[j] < im_[i];
            rank = rank * static_cast<std::uint32_t>(n - i) + smaller;
        }
        return rank;
    }
    static Permutation from_lex_rank(int n, std::uint32_t rank) {
        std::vector<std::uint32_t> digits(static_cast<std::size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            std::uint32_t base = static_cast<std::uint32_t>(n - i);
            digits[static_cast<std::size_t>(i)] = rank % base;
            rank /= base;
        }
        std::vector<int> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), 1);
        std::vector<int> im;
        for (int i = 0; i < n; ++i) {
            auto it = pool.begin() + digits[static_cast<std::size_t>(i)];
            im.push_back(*it);
            pool.erase(it);
        }
        return Permutation(std::move(im));
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < im_.size(); ++i) s += (i ? "," : "") + std::to_string(im_[i]);
        return s + "]";
    }

private:
    std::vector<int> im_;
};

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace yh

#pragma once
// (r,d)-partitions, (r,d)-tableaux, dominance, contents, hooks, set partitions.

#include "yh/combi/permutation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace yh {

// A composition; a partition when the parts are non-increasing. Trailing zeros
// are dropped.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { normalize(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize(); }

    void normalize() {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }
    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    // 1-based row length, zero beyond the last row.
    int row(int x) const { return x >= 1 && x <= length() ? parts[static_cast<std::size_t>(x - 1)] : 0; }
    bool is_partition() const {
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (parts[i] > parts[i - 1]) return false;
        return true;
    }
    Partition conjugate() const {
        std::vector<int> c(static_cast<std::size_t>(row(1)), 0);
        for (int p : parts)
            for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
        return Partition(c);
    }
    int column(int y) const { return conjugate().row(y); }
    bool contains(int x, int y) const { return x >= 1 && y >= 1 && y <= row(x); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }

    std::string str() const {
        if (parts.empty()) return "()";
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }
};

// All partitions of m, largest first (reverse lexicographic).
inline std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

// Hook length of node (x,y) in lambda.
inline int hook_length(const Partition& lambda, int x, int y) {
    if (!lambda.contains(x, y)) throw std::out_of_range("node outside shape");
    return lambda.row(x) + lambda.column(y) - x - y + 1;
}
// Generalized hook lambda_x + mu'_y - x - y + 1.
inline int generalized_hook(const Partition& lambda, int x, int y, const Partition& mu) {
    if (!lambda.contains(x, y)) throw std::out_of_range("node outside shape");
    return lambda.row(x) + mu.column(y) - x - y + 1;
}

struct RDNode {
    int a = 0, b = 0;  // row, column (1-based)
    int k = 0, l = 0;  // r-position, d-position (1-based)
    friend bool operator==(const RDNode& x, const RDNode& y) {
        return x.a == y.a && x.b == y.b && x.k == y.k && x.l == y.l;
    }
    friend bool operator<(const RDNode& x, const RDNode& y) {
        return std::tie(x.k, x.l, x.a, x.b) < std::tie(y.k, y.l, y.a, y.b);
    }
    std::string str() const {
        return "((" + std::to_string(a) + "," + std::to_string(b) + ")," + std::to_string(k) + "," + std::to_string(l) + ")";
    }
};

// r-tuple of d-tuples of partitions; component (k,l) stored at (k-1)*d + (l-1).
class RDPartition {
public:
    RDPartition() = default;
    RDPartition(int r, int d) : r_(r), d_(d), comps_(static_cast<std::size_t>(r * d)) {}
    RDPartition(int r, int d, std::vector<Partition> comps) : r_(r), d_(d), comps_(std::move(comps)) {
        if (static_cast<int>(comps_.size()) != r * d) throw std::invalid_argument("need r*d components");
    }
    // Nested form: outer index k, inner index l.
    static RDPartition from_nested(const std::vector<std::vector<Partition>>& nested) {
        int r = static_cast<int>(nested.size());
        int d = r ? static_cast<int>(nested[0].size()) : 0;
        std::vector<Partition> comps;
        for (const auto& blk : nested) {
            if (static_cast<int>(blk.size()) != d) throw std::invalid_argument("ragged (r,d)-partition");
            for (const auto& p : blk) comps.push_back(p);
        }
        return RDPartition(r, d, comps);
    }

    int r() const { return r_; }
    int d() const { return d_; }
    const Partition& comp(int k, int l) const { return comps_[idx(k, l)]; }
    Partition& comp(int k, int l) { return comps_[idx(k, l)]; }
    const std::vector<Partition>& flat() const { return comps_; }
    int size() const {
        int s = 0;
        for (const auto& p : comps_) s += p.size();
        return s;
    }
    // |lambda^{(k)}|
    int block_size(int k) const {
        int s = 0;
        for (int l = 1; l <= d_; ++l) s += comp(k, l).size();
        return s;
    }
    bool is_partition() const {
        for (const auto& p : comps_)
            if (!p.is_partition()) return false;
        return true;
    }
    bool contains(const RDNode& nd) const { return comp(nd.k, nd.l).contains(nd.a, nd.b); }

    std::vector<RDNode> nodes() const {
        std::vector<RDNode> out;
        for (int k = 1; k <= r_; ++k)
            for (int l = 1; l <= d_; ++l) {
                const Partition& p = comp(k, l);
                for (int a = 1; a <= p.length(); ++a)
                    for (int b = 1; b <= p.row(a); ++b) out.push_back({a, b, k, l});
            }
        return out;
    }
    std::vector<RDNode> addable() const {
        std::vector<RDNode> out;
        for (int k = 1; k <= r_; ++k)
            for (int l = 1; l <= d_; ++l) {
                const Partition& p = comp(k, l);
                for (int a = 1; a <= p.length() + 1; ++a) {
                    int b = p.row(a) + 1;
                    if (a == 1 || p.row(a - 1) >= b) out.push_back({a, b, k, l});
                }
            }
        return out;
    }
    std::vector<RDNode> removable() const {
        std::vector<RDNode> out;
        for (int k = 1; k <= r_; ++k)
            for (int l = 1; l <= d_; ++l) {
                const Partition& p = comp(k, l);
                for (int a = 1; a <= p.length(); ++a)
                    if (p.row(a + 1) < p.row(a)) out.push_back({a, p.row(a), k, l});
            }
        return out;
    }
    RDPartition with_node(const RDNode& nd, int delta) const {
        RDPartition out = *this;
        Partition& p = out.comp(nd.k, nd.l);
        if (static_cast<int>(p.parts.size()) < nd.a) p.parts.resize(static_cast<std::size_t>(nd.a), 0);
        p.parts[static_cast<std::size_t>(nd.a - 1)] += delta;
        p.normalize();
        return out;
    }

    friend bool operator==(const RDPartition& x, const RDPartition& y) {
        return x.r_ == y.r_ && x.d_ == y.d_ && x.comps_ == y.comps_;
    }
    friend bool operator<(const RDPartition& x, const RDPartition& y) { return x.comps_ < y.comps_; }

    std::string str() const {
        std::string s = "(";
        for (int k = 1; k <= r_; ++k) {
            s += (k > 1 ? "," : "") + std::string("(");
            for (int l = 1; l <= d_; ++l) s += (l > 1 ? "," : "") + comp(k, l).str();
            s += ")";
        }
        return s + ")";
    }

private:
    int r_ = 0, d_ = 0;
    std::vector<Partition> comps_;
    std::size_t idx(int k, int l) const {
        if (k < 1 || k > r_ || l < 1 || l > d_) throw std::out_of_range("component position");
        return static_cast<std::size_t>((k - 1) * d_ + (l - 1));
    }
};

// Deterministic order: component sizes in decreasing lexicographic order, then
// partitions largest first within each component.
inline std::vector<RDPartition> enumerate_rd_partitions(int r, int d, int n) {
    std::vector<RDPartition> out;
    int m = r * d;
    std::vector<Partition> cur(static_cast<std::size_t>(m));
    std::function<void(int, int)> rec = [&](int c, int left) {
        if (c == m - 1) {
            for (const auto& p : partitions_of(left)) {
                cur[static_cast<std::size_t>(c)] = p;
                out.emplace_back(r, d, cur);
            }
            return;
        }
        for (int s = left; s >= 0; --s)
            for (const auto& p : partitions_of(s)) {
                cur[static_cast<std::size_t>(c)] = p;
                rec(c + 1, left - s);
            }
    };
    if (m == 0) return out;
    rec(0, n);
    return out;
}

// lambda dominates mu: cumulative sizes along the flattened component order,
// compared after every row of every component.
inline bool dominates(const RDPartition& lambda, const RDPartition& mu) {
    if (lambda.r() != mu.r() || lambda.d() != mu.d()) throw std::invalid_argument("shape type mismatch");
    int base_l = 0, base_m = 0;
    for (std::size_t c = 0; c < lambda.flat().size(); ++c) {
        const Partition& pl = lambda.flat()[c];
        const Partition& pm = mu.flat()[c];
        int len = std::max(pl.length(), pm.length());
        int sl = base_l, sm = base_m;
        if (sl < sm) return false;
        for (int p = 1; p <= len; ++p) {
            sl += pl.row(p);
            sm += pm.row(p);
            if (sl < sm) return false;
        }
        base_l = sl;
        base_m = sm;
    }
    return true;
}

class RDTableau {
public:
    RDTableau() = default;
    // rows[c][a-1] lists the entries of row a of flat component c.
    RDTableau(RDPartition shape, std::vector<std::vector<std::vector<int>>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        build_index();
    }
    static RDTableau from_nested(int r, int d, const std::vector<std::vector<std::vector<std::vector<int>>>>& nested) {
        std::vector<std::vector<std::vector<int>>> rows;
        std::vector<Partition> comps;
        for (const auto& blk : nested)
            for (const auto& comp : blk) {
                rows.push_back(comp);
                std::vector<int> parts;
                for (const auto& row : comp) parts.push_back(static_cast<int>(row.size()));
                comps.emplace_back(parts);
            }
        return RDTableau(RDPartition(r, d, comps), rows);
    }

    const RDPartition& shape() const { return shape_; }
    int size() const { return static_cast<int>(node_of_.size()); }
    const std::vector<std::vector<std::vector<int>>>& rows() const { return rows_; }
    const RDNode& node(int i) const {
        if (i < 1 || i > size()) throw std::out_of_range("tableau entry out of range");
        return node_of_[static_cast<std::size_t>(i - 1)];
    }
    int entry(const RDNode& nd) const {
        return rows_[static_cast<std::size_t>((nd.k - 1) * shape_.d() + nd.l - 1)][static_cast<std::size_t>(nd.a - 1)]
                    [static_cast<std::size_t>(nd.b - 1)];
    }
    int r_position(int i) const { return node(i).k; }
    int d_position(int i) const { return node(i).l; }
    // b - a, the exponent in c_t(i) = v_l q^{2(b-a)}.
    int content_exponent(int i) const { return node(i).b - node(i).a; }

    bool is_row_standard() const {
        for (const auto& comp : rows_)
            for (const auto& row : comp)
                for (std::size_t j = 1; j < row.size(); ++j)
                    if (row[j] <= row[j - 1]) return false;
        return true;
    }
    bool is_standard() const {
        if (!is_row_standard()) return false;
        for (const auto& comp : rows_)
            for (std::size_t a = 1; a < comp.size(); ++a)
                for (std::size_t b = 0; b < comp[a].size(); ++b)
                    if (b >= comp[a - 1].size() || comp[a][b] <= comp[a - 1][b]) return false;
        return true;
    }

    // Entry i replaced by (i)w.
    RDTableau act(const Permutation& w) const {
        auto rows = rows_;
        for (auto& comp : rows)
            for (auto& row : comp)
                for (auto& x : row) x = w(x);
        return RDTableau(shape_, rows);
    }
    // Shape of the subtableau holding 1..m (a composition-valued shape in general).
    RDPartition restricted_shape(int m) const {
        std::vector<Partition> comps;
        for (const auto& comp : rows_) {
            std::vector<int> parts;
            for (const auto& row : comp) {
                int c = 0;
                for (int x : row) c += x <= m;
                parts.push_back(c);
            }
            comps.emplace_back(parts);
        }
        return RDPartition(shape_.r(), shape_.d(), comps);
    }
    // Remove the entry n (largest); requires it to sit in a removable node.
    RDTableau remove_last() const {
        int n = size();
        RDNode nd = node(n);
        auto rows = rows_;
        auto& row = rows[static_cast<std::size_t>((nd.k - 1) * shape_.d() + nd.l - 1)][static_cast<std::size_t>(nd.a - 1)];
        if (row.back() != n) throw std::invalid_argument("largest entry is not at the end of its row");
        row.pop_back();
        auto& comp = rows[static_cast<std::size_t>((nd.k - 1) * shape_.d() + nd.l - 1)];
        while (!comp.empty() && comp.back().empty()) comp.pop_back();
        return RDTableau(shape_.with_node(nd, -1), rows);
    }

    friend bool operator==(const RDTableau& x, const RDTableau& y) { return x.rows_ == y.rows_ && x.shape_ == y.shape_; }
    friend bool operator<(const RDTableau& x, const RDTableau& y) {
        if (!(x.shape_ == y.shape_)) return x.shape_ < y.shape_;
        return x.rows_ < y.rows_;
    }

    std::string str() const {
        std::string s = "(";
        int d = shape_.d();
        for (int k = 1; k <= shape_.r(); ++k) {
            s += (k > 1 ? "," : "") + std::string("(");
            for (int l = 1; l <= d; ++l) {
                const auto& comp = rows_[static_cast<std::size_t>((k - 1) * d + l - 1)];
                std::string cs;
                for (std::size_t a = 0; a < comp.size(); ++a) {
                    if (a) cs += "|";
                    for (std::size_t b = 0; b < comp[a].size(); ++b) cs += (b ? " " : "") + std::to_string(comp[a][b]);
                }
                s += (l > 1 ? "," : "") + (cs.empty() ? std::string("-") : cs);
            }
            s += ")";
        }
        return s + ")";
    }

private:
    RDPartition shape_;
    std::vector<std::vector<std::vector<int>>> rows_;
    std::vector<RDNode> node_of_;

    void build_index() {
        if (rows_.size() != shape_.flat().size()) throw std::invalid_argument("tableau/shape mismatch");
        int n = 0;
        for (const auto& comp : rows_)
            for (const auto& row : comp) n += static_cast<int>(row.size());
        node_of_.assign(static_cast<std::size_t>(n), RDNode{});
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        int d = shape_.d();
        for (std::size_t c = 0; c < rows_.size(); ++c) {
            const Partition& p = shape_.flat()[c];
            for (std::size_t a = 0; a < rows_[c].size(); ++a) {
                if (static_cast<int>(rows_[c][a].size()) != p.row(static_cast<int>(a) + 1))
                    throw std::invalid_argument("tableau row length does not match shape");
                for (std::size_t b = 0; b < rows_[c][a].size(); ++b) {
                    int x = rows_[c][a][b];
                    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
                        throw std::invalid_argument("tableau entries must be 1..n, each once");
                    seen[static_cast<std::size_t>(x)] = true;
                    node_of_[static_cast<std::size_t>(x - 1)] = RDNode{static_cast<int>(a) + 1, static_cast<int>(b) + 1,
                                                                       static_cast<int>(c) / d + 1, static_cast<int>(c) % d + 1};
                }
            }
            if (static_cast<int>(rows_[c].size()) != p.length())
                throw std::invalid_argument("tableau row count does not match shape");
        }
    }
};

// t^lambda: 1..n along the rows, components in the order (1,1),(1,2),...,(2,1),...
inline RDTableau initial_tableau(const RDPartition& shape) {
    std::vector<std::vector<std::vector<int>>> rows;
    int next = 1;
    for (const auto& p : shape.flat()) {
        std::vector<std::vector<int>> comp;
        for (int len : p.parts) {
            std::vector<int> row;
            for (int j = 0; j < len; ++j) row.push_back(next++);
            comp.push_back(row);
        }
        rows.push_back(comp);
    }
    return RDTableau(shape, rows);
}

// All standard tableaux, built by adding 1..n to addable nodes inside the shape.
inline std::vector<RDTableau> standard_tableaux(const RDPartition& shape) {
    std::vector<RDTableau> out;
    int n = shape.size();
    std::vector<std::vector<std::vector<int>>> rows(shape.flat().size());
    RDPartition cur(shape.r(), shape.d());
    std::function<void(int)> rec = [&](int next) {
        if (next > n) {
            out.emplace_back(shape, rows);
            return;
        }
        for (const RDNode& nd : cur.addable()) {
            if (!shape.contains(nd)) continue;
            auto& comp = rows[static_cast<std::size_t>((nd.k - 1) * shape.d() + nd.l - 1)];
            if (static_cast<int>(comp.size()) < nd.a) comp.emplace_back();
            comp[static_cast<std::size_t>(nd.a - 1)].push_back(next);
            RDPartition saved = cur;
            cur = cur.with_node(nd, +1);
            rec(next + 1);
            cur = saved;
            comp[static_cast<std::size_t>(nd.a - 1)].pop_back();
            if (comp.back().empty()) comp.pop_back();
        }
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

// All row-standard tableaux of a shape (rows increasing, columns unconstrained).
inline std::vector<RDTableau> row_standard_tableaux(const RDPartition& shape) {
    std::vector<RDTableau> out;
    int n = shape.size();
    std::vector<int> lens;
    for (const auto& p : shape.flat())
        for (int len : p.parts) lens.push_back(len);
    std::vector<std::vector<int>> chosen(lens.size());
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t row, std::size_t pos, int minv) {
        if (row == lens.size()) {
            std::vector<std::vector<std::vector<int>>> rows;
            std::size_t ri = 0;
            for (const auto& p : shape.flat()) {
                std::vector<std::vector<int>> comp;
                for (std::size_t a = 0; a < p.parts.size(); ++a) comp.push_back(chosen[ri++]);
                rows.push_back(comp);
            }
            out.emplace_back(shape, rows);
            return;
        }
        if (pos == static_cast<std::size_t>(lens[row])) {
            rec(row + 1, 0, 1);
            return;
        }
        for (int x = minv; x <= n; ++x) {
            if (used[static_cast<std::size_t>(x)]) continue;
            used[static_cast<std::size_t>(x)] = true;
            chosen[row].push_back(x);
            rec(row, pos + 1, x + 1);
            chosen[row].pop_back();
            used[static_cast<std::size_t>(x)] = false;
        }
    };
    rec(0, 0, 1);
    std::sort(out.begin(), out.end());
    return out;
}

// s dominates t: shape(s restricted to 1..k) dominates shape(t restricted) for all k.
inline bool dominates_tableau(const RDTableau& s, const RDTableau& t) {
    if (s.size() != t.size()) throw std::invalid_argument("tableaux of different sizes");
    for (int k = 1; k <= s.size(); ++k)
        if (!dominates(s.restricted_shape(k), t.restricted_shape(k))) return false;
    return true;
}

// d(t) with t = t^lambda d(t), together with a reduced word.
struct CosetRep {
    Permutation perm;
    std::vector<int> word;
};
inline CosetRep coset_rep(const RDTableau& t) {
    if (!t.is_row_standard()) throw std::invalid_argument("coset representative needs a row-standard tableau");
    RDTableau t0 = initial_tableau(t.shape());
    std::vector<int> im(static_cast<std::size_t>(t.size()));
    for (int i = 1; i <= t.size(); ++i) im[static_cast<std::size_t>(i - 1)] = t.entry(t0.node(i));
    Permutation p(im);
    return {p, p.reduced_word()};
}

struct SetPartition {
    std::vector<std::vector<int>> blocks;  // each block sorted; blocks ordered by minima

    void canonicalize() {
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        blocks.erase(std::remove_if(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); }), blocks.end());
        std::sort(blocks.begin(), blocks.end());
    }
    // A w: apply w to every element.
    SetPartition act(const Permutation& w) const {
        SetPartition out = *this;
        for (auto& b : out.blocks)
            for (auto& x : b) x = w(x);
        out.canonicalize();
        return out;
    }
    friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.blocks == b.blocks; }
    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            s += (i ? "," : "") + std::string("{");
            for (std::size_t j = 0; j < blocks[i].size(); ++j) s += (j ? "," : "") + std::to_string(blocks[i][j]);
            s += "}";
        }
        return s + "}";
    }
};

// Every set partition of {1..n}, by restricted growth strings.
inline std::vector<SetPartition> all_set_partitions(int n) {
    std::vector<SetPartition> out;
    std::vector<int> rg(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            SetPartition A;
            A.blocks.assign(static_cast<std::size_t>(used), {});
            for (int j = 0; j < n; ++j) A.blocks[static_cast<std::size_t>(rg[static_cast<std::size_t>(j)])].push_back(j + 1);
            A.canonicalize();
            out.push_back(A);
            return;
        }
        for (int b = 0; b <= used && b < n; ++b) {
            rg[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    if (n == 0) return {SetPartition{}};
    rec(0, 0);
    return out;
}

// A_lambda: consecutive blocks sized by the nonempty r-blocks of lambda.
inline SetPartition set_partition_of(const RDPartition& lambda) {
    SetPartition A;
    int next = 1;
    for (int k = 1; k <= lambda.r(); ++k) {
        int s = lambda.block_size(k);
        if (s == 0) continue;
        std::vector<int> b;
        for (int j = 0; j < s; ++j) b.push_back(next++);
        A.blocks.push_back(b);
    }
    return A;
}

// Row stabilizer of t^lambda (the Young subgroup S_lambda).
inline std::vector<Permutation> young_subgroup(const RDPartition& lambda) {
    int n = lambda.size();
    std::vector<std::pair<int, int>> intervals;
    int next = 1;
    for (const auto& p : lambda.flat())
        for (int len : p.parts) {
            intervals.emplace_back(next, next + len - 1);
            next += len;
        }
    std::vector<Permutation> out{Permutation(n)};
    for (auto [lo, hi] : intervals) {
        if (hi <= lo) continue;
        std::vector<int> seg(static_cast<std::size_t>(hi - lo + 1));
        std::iota(seg.begin(), seg.end(), lo);
        std::vector<Permutation> next_out;
        do {
            std::vector<int> im(static_cast<std::size_t>(n));
            std::iota(im.begin(), im.end(), 1);
            for (int i = lo; i <= hi; ++i) im[static_cast<std::size_t>(i - 1)] = seg[static_cast<std::size_t>(i - lo)];
            Permutation p(im);
            for (const auto& w : out) next_out.push_back(w * p);
        } while (std::next_permutation(seg.begin(), seg.end()));
        out = std::move(next_out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace yh

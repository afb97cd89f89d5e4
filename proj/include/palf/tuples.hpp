#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "palf/contfrac.hpp"

namespace palf {

/// Admissible tuple of nonnegative integers whose continued fraction
/// evaluates to exactly 0.  Such tuples index the minimal symplectic
/// fillings of a lens space; we call the set of them of length k the zero
/// set Z_k.  A member is either (0) or consists of positive entries only.
class ZTuple {
public:
    explicit ZTuple(Tuple entries) : entries_(std::move(entries)) {
        if (!is_member(entries_)) throw std::invalid_argument("ZTuple: not in the zero set");
    }

    static bool is_member(const Tuple& t) {
        if (t.empty()) return false;
        for (Entry e : t)
            if (e < 0) return false;
        if (!is_admissible(t)) return false;
        auto v = evaluate(t);
        return v.has_value() && v->is_zero();
    }

    const Tuple& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    /// 1-based component access, matching the index conventions of every
    /// operation in this module.
    Entry at(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }

    friend bool operator==(const ZTuple& a, const ZTuple& b) { return a.entries_ == b.entries_; }
    friend bool operator<(const ZTuple& a, const ZTuple& b) { return a.entries_ < b.entries_; }

private:
    Tuple entries_;
};

/// (1, 2, ..., 2, 1) of length l >= 2; (0) for l = 1.  These are exactly the
/// height-zero tuples and they index the minimal resolutions.
inline ZTuple u_tuple(int l) {
    if (l < 1) throw std::invalid_argument("u_tuple: length must be positive");
    if (l == 1) return ZTuple({0});
    Tuple t(static_cast<std::size_t>(l), 2);
    t.front() = 1;
    t.back() = 1;
    return ZTuple(std::move(t));
}

inline bool is_u_tuple(const ZTuple& t) {
    return t == u_tuple(t.size());
}

/// hgt(n) = |n| - 2(k-1): the number of interior blowups separating n from a
/// height-zero tuple, and the number of lantern substitutions separating the
/// corresponding filling from the minimal resolution.
inline Entry height(const ZTuple& t) {
    Entry sum = 0;
    for (Entry e : t.entries()) sum += e;
    return sum - 2 * (t.size() - 1);
}

/// Strict blowup at the j-th term, 1 <= j <= r.  Interior j increments the
/// j-th and (j+1)-st entries around an inserted 1; j = r appends (n_r+1, 1).
inline ZTuple strict_blowup(const ZTuple& t, int j) {
    const Tuple& n = t.entries();
    const int r = t.size();
    if (j < 1 || j > r) throw std::invalid_argument("strict_blowup: index out of range");
    Tuple out;
    out.reserve(n.size() + 1);
    if (j == r) {
        out.assign(n.begin(), n.end());
        out.back() += 1;
        out.push_back(1);
    } else {
        out.assign(n.begin(), n.begin() + (j - 1));
        out.push_back(n[static_cast<std::size_t>(j - 1)] + 1);
        out.push_back(1);
        out.push_back(n[static_cast<std::size_t>(j)] + 1);
        out.insert(out.end(), n.begin() + (j + 1), n.end());
    }
    return ZTuple(std::move(out));
}

/// Strict blowdown at the i-th term, 2 <= i <= r+1: the left inverse of
/// strict_blowup, so strict_blowdown(strict_blowup(t, j), j+1) == t.  The
/// entry removed must equal 1, and membership in the zero set is re-verified
/// on the result.
inline ZTuple strict_blowdown(const ZTuple& t, int i) {
    const Tuple& n = t.entries();
    const int len = t.size();
    if (i < 2 || i > len) throw std::invalid_argument("strict_blowdown: index out of range");
    if (n[static_cast<std::size_t>(i - 1)] != 1)
        throw std::invalid_argument("strict_blowdown: entry at index is not 1");
    Tuple out(n);
    out.erase(out.begin() + (i - 1));
    out[static_cast<std::size_t>(i - 2)] -= 1;
    if (i <= len - 1) out[static_cast<std::size_t>(i - 1)] -= 1;
    return ZTuple(std::move(out));  // throws if the result left the zero set
}

/// The canonical descent from a tuple to its height-zero base: repeatedly
/// blow down at the leftmost index >= 2 holding a 1.  Exactly height(t)
/// steps.  steps[i] = (tuple before step i, 1-based blowdown index).
struct BlowdownTrace {
    std::vector<std::pair<ZTuple, int>> steps;
    ZTuple terminal;
};

inline BlowdownTrace leftmost_blowdown_trace(const ZTuple& t) {
    std::vector<std::pair<ZTuple, int>> steps;
    ZTuple cur = t;
    while (height(cur) > 0) {
        int idx = 0;
        for (int i = 2; i <= cur.size(); ++i) {
            if (cur.at(i) == 1) {
                idx = i;
                break;
            }
        }
        if (idx == 0 || idx == cur.size())
            throw std::logic_error("leftmost_blowdown_trace: no interior 1 at positive height");
        ZTuple next = strict_blowdown(cur, idx);
        steps.emplace_back(cur, idx);
        cur = std::move(next);
    }
    if (!is_u_tuple(cur))
        throw std::logic_error("leftmost_blowdown_trace: terminal tuple is not height-zero canonical");
    return BlowdownTrace{std::move(steps), std::move(cur)};
}

/// All tuples of the zero set bounded componentwise by the expansion of
/// p/(p-q): Lisca's index set for the minimal symplectic fillings of
/// L(p, q).  Depth-first over entries, right to left, pruning on the
/// admissibility of every suffix.  Result is sorted lexicographically.
inline std::vector<ZTuple> enumerate_fillings(Entry p, Entry q) {
    const Tuple bound = hj_expansion(p, p - q).entries;
    const int k = static_cast<int>(bound.size());
    std::vector<ZTuple> found;
    Tuple work(static_cast<std::size_t>(k), 0);

    // At position i (0-based) the value x of the suffix starting at i+1 is
    // known and strictly positive; suffixes starting at index >= 1 must stay
    // strictly positive and the full value must be exactly zero.
    std::function<void(int, const Fraction&)> dfs = [&](int i, const Fraction& x) {
        for (Entry v = 0; v <= bound[static_cast<std::size_t>(i)]; ++v) {
            Fraction xi = (i == k - 1) ? Fraction(v) : Fraction(v) - x.reciprocal();
            work[static_cast<std::size_t>(i)] = v;
            if (i == 0) {
                if (xi.is_zero()) found.emplace_back(work);
            } else if (xi.is_positive()) {
                dfs(i - 1, xi);
            }
        }
    };
    dfs(k - 1, Fraction(1));
    std::sort(found.begin(), found.end());
    return found;
}

/// Removes the 1-based j-th entry.
inline Tuple omit(const Tuple& m, int j) {
    if (j < 1 || j > static_cast<int>(m.size())) throw std::invalid_argument("omit: index out of range");
    Tuple out(m);
    out.erase(out.begin() + (j - 1));
    return out;
}

/// Inserts value at the 1-based j-th position, so that
/// splice(omit(m, j), j, m_j) == m.
inline Tuple splice(const Tuple& z, int j, Entry value) {
    if (j < 1 || j > static_cast<int>(z.size()) + 1)
        throw std::invalid_argument("splice: index out of range");
    Tuple out(z);
    out.insert(out.begin() + (j - 1), value);
    return out;
}

/// One stage of the interpolating chain between a filling and its minimal
/// resolution: the tuple n_i together with the multiplicity tuple
/// m_i = n + m - n_i (which may have negative components away from the
/// endpoints).
struct ChainEntry {
    ZTuple n;
    Tuple m;
};

/// The interpolating sequence n_0 = u_k, ..., n_s = n with hgt(n_i) = i,
/// built by the recursion seq(n) = [u_k] ++ psi_j(seq(n')) where
/// n = psi_j(n') along the leftmost blowdown trace.  Each step of the
/// sequence is realized by a single lantern substitution on monodromies.
inline std::vector<ChainEntry> lemma_tuple_sequence(const ZTuple& n, const Tuple& m) {
    const int k = n.size();
    if (static_cast<int>(m.size()) != k)
        throw std::invalid_argument("lemma_tuple_sequence: tuple lengths differ");
    if (height(n) < 1) throw std::invalid_argument("lemma_tuple_sequence: height must be >= 1");

    std::function<std::vector<ZTuple>(const ZTuple&)> seq = [&](const ZTuple& t) {
        std::vector<ZTuple> out;
        if (height(t) == 0) {
            out.push_back(t);
            return out;
        }
        int idx = 0;
        for (int i = 2; i <= t.size(); ++i) {
            if (t.at(i) == 1) {
                idx = i;
                break;
            }
        }
        ZTuple reduced = strict_blowdown(t, idx);
        const int j = idx - 1;
        out.push_back(u_tuple(t.size()));
        for (const ZTuple& x : seq(reduced)) out.push_back(strict_blowup(x, j));
        return out;
    };

    Tuple total(m);
    for (int i = 0; i < k; ++i) total[static_cast<std::size_t>(i)] += n.at(i + 1);

    std::vector<ChainEntry> chain;
    for (const ZTuple& ni : seq(n)) {
        Tuple mi(total);
        for (int i = 0; i < k; ++i) mi[static_cast<std::size_t>(i)] -= ni.at(i + 1);
        chain.push_back(ChainEntry{ni, std::move(mi)});
    }
    return chain;
}

/// Indices i of the chain whose multiplicity tuple m_i is componentwise
/// nonnegative.  Consecutive indices bound the portions of the substitution
/// script that assemble into single rational blowdowns.
inline std::vector<int> blowdown_grouping(const std::vector<ChainEntry>& chain) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(chain.size()); ++i) {
        bool nonneg = true;
        for (Entry e : chain[static_cast<std::size_t>(i)].m)
            if (e < 0) nonneg = false;
        if (nonneg) idx.push_back(i);
    }
    return idx;
}

}  // namespace palf

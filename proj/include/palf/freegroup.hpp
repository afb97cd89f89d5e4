#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "palf/contfrac.hpp"

namespace palf {

/// Freely reduced word over generators x_1, x_2, ...; a letter +g stands
/// for x_g and -g for its inverse.  Reduction happens on every append, so
/// stored words never contain an adjacent cancelling pair.
struct FreeWord {
    std::vector<int> letters;

    void append(int g) {
        if (!letters.empty() && letters.back() == -g)
            letters.pop_back();
        else
            letters.push_back(g);
    }

    void append(const FreeWord& w) {
        for (int g : w.letters) append(g);
    }

    void append_inverse(const FreeWord& w) {
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) append(-*it);
    }

    FreeWord inverse() const {
        FreeWord out;
        out.letters.reserve(letters.size());
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(-*it);
        return out;
    }

    bool operator==(const FreeWord&) const = default;
};

inline FreeWord generator_word(int g) {
    FreeWord w;
    w.letters.push_back(g);
    return w;
}

/// Endomorphism of a free group of fixed rank, given by generator images.
/// All endomorphisms built here are automorphisms (they come from braids).
struct FreeAuto {
    std::vector<FreeWord> images;  // images[i] = image of x_{i+1}

    int rank() const { return static_cast<int>(images.size()); }

    bool operator==(const FreeAuto&) const = default;
};

inline FreeAuto identity_auto(int rank) {
    FreeAuto a;
    a.images.reserve(static_cast<std::size_t>(rank));
    for (int g = 1; g <= rank; ++g) a.images.push_back(generator_word(g));
    return a;
}

/// Image of a word under an endomorphism (homomorphic extension).
inline FreeWord apply(const FreeAuto& f, const FreeWord& w) {
    FreeWord out;
    for (int g : w.letters) {
        const FreeWord& im = f.images[static_cast<std::size_t>(std::abs(g) - 1)];
        if (g > 0)
            out.append(im);
        else
            out.append_inverse(im);
    }
    return out;
}

/// Functional composition f after g.
inline FreeAuto compose(const FreeAuto& f, const FreeAuto& g) {
    FreeAuto out;
    out.images.reserve(g.images.size());
    for (const FreeWord& w : g.images) out.images.push_back(apply(f, w));
    return out;
}

/// Artin action of the braid generator with 1-based index |letter| on the
/// free group of the given rank; negative letters act by the inverse:
///   sigma_i:   x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i
///   sigma_i^-1: x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
inline FreeAuto artin_generator(int letter, int rank) {
    const int i = std::abs(letter);
    if (i < 1 || i >= rank) throw std::invalid_argument("artin_generator: index out of range");
    FreeAuto a = identity_auto(rank);
    FreeWord& xi = a.images[static_cast<std::size_t>(i - 1)];
    FreeWord& xj = a.images[static_cast<std::size_t>(i)];
    xi.letters.clear();
    xj.letters.clear();
    if (letter > 0) {
        xi.letters = {i, i + 1, -i};
        xj.letters = {i};
    } else {
        xi.letters = {i + 1};
        xj.letters = {-(i + 1), i, i + 1};
    }
    return a;
}

/// Artin automorphism of a braid word (letters left to right, composed
/// functionally).  Braid words are compared through this action: the
/// representation is faithful, so equal images certify equal braids.
inline FreeAuto braid_automorphism(const std::vector<int>& word, int strands) {
    FreeAuto acc = identity_auto(strands);
    for (int letter : word) acc = compose(acc, artin_generator(letter, strands));
    return acc;
}

/// Permutation induced on strand positions by a braid word; the identity
/// permutation characterizes pure braids.
inline std::vector<int> braid_permutation(const std::vector<int>& word, int strands) {
    std::vector<int> perm(static_cast<std::size_t>(strands));
    for (int i = 0; i < strands; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    for (int letter : word) {
        const int i = std::abs(letter);
        std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
    }
    return perm;
}

/// Exponent sums per strand-position pair do not depend on gathering, so
/// crossings where the moving strand passes the skipped strands need a fixed
/// convention.  Gathering letters are positive; right-handed full twists use
/// negative letters.  The pair is pinned by the framed-braid equivalence
/// tests: flipping either convention makes those fail.
inline constexpr int kGatherLetterSign = +1;
inline constexpr int kRightTwistLetterSign = -1;

/// Braid word for the power of a full twist on an arbitrary subset of
/// strands: the subset is gathered next to its leftmost member (passing the
/// skipped strands with kGatherLetterSign crossings), fully twisted there,
/// and returned.  power +1 is one right-handed full twist.
inline std::vector<int> gathered_full_twist(int strands, const std::vector<int>& subset, int power) {
    if (subset.empty()) throw std::invalid_argument("gathered_full_twist: empty subset");
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 1 || subset[i] > strands)
            throw std::invalid_argument("gathered_full_twist: strand out of range");
        if (i > 0 && subset[i] <= subset[i - 1])
            throw std::invalid_argument("gathered_full_twist: subset must be strictly increasing");
    }
    const int m = static_cast<int>(subset.size());
    const int base = subset.front();

    std::vector<int> gather;
    for (int i = 1; i < m; ++i) {
        const int from = subset[static_cast<std::size_t>(i)];
        const int to = base + i;
        for (int pos = from - 1; pos >= to; --pos) gather.push_back(kGatherLetterSign * pos);
    }

    std::vector<int> twist;
    const int reps = m * std::abs(power);
    const int sign = (power >= 0 ? kRightTwistLetterSign : -kRightTwistLetterSign);
    for (int r = 0; r < reps; ++r)
        for (int pos = base; pos < base + m - 1; ++pos) twist.push_back(sign * pos);

    std::vector<int> out = gather;
    out.insert(out.end(), twist.begin(), twist.end());
    for (auto it = gather.rbegin(); it != gather.rend(); ++it) out.push_back(-*it);
    return out;
}

}  // namespace palf

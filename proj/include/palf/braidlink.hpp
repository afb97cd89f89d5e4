#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "palf/freegroup.hpp"
#include "palf/openbook.hpp"
#include "palf/tuples.hpp"

namespace palf {

/// A pure braid word plus an integer framing per strand: the surgery
/// description of S^1 x S^2 underlying both handle pictures of a filling.
struct FramedBraid {
    int strands = 1;
    std::vector<int> word;       // signed Artin generator letters
    std::vector<Entry> framings; // one per strand

    bool is_pure() const {
        std::vector<int> perm = braid_permutation(word, strands);
        for (int i = 0; i < strands; ++i)
            if (perm[static_cast<std::size_t>(i)] != i + 1) return false;
        return true;
    }
};

/// One family of meridional unknots in the surgery picture: `count`
/// parallel copies encircling the strands listed in `linking`, each with
/// framing `framing_sign` (+1 or -1).
struct MarkedUnknots {
    std::vector<int> linking;  // strand indices, 1-based, sorted
    int framing_sign = -1;
    Entry count = 0;
};

/// Full surgery presentation: the framed braid together with the marked
/// unknot families that become the vanishing cycles beyond the stabilizing
/// ones.
struct SurgeryPresentation {
    FramedBraid braid;
    std::vector<MarkedUnknots> marked_unknots;
};

/// New framings after sliding each chain unknot over its right neighbour,
/// rightmost first: n'_k = n_k and n'_i = n_i + n'_{i+1} - 2.
inline std::vector<Entry> slide_framings(const ZTuple& n) {
    const int k = n.size();
    std::vector<Entry> out(static_cast<std::size_t>(k));
    out[static_cast<std::size_t>(k - 1)] = n.at(k);
    for (int i = k - 1; i >= 1; --i)
        out[static_cast<std::size_t>(i - 1)] = n.at(i) + out[static_cast<std::size_t>(i)] - 2;
    return out;
}

/// The braid of the slid chain: for j = 2..k the j-th strand wraps around
/// the first j-1 strands n'_j - 1 times, i.e. the product over j of
/// (sigma_{j-1}^{-1} ... sigma_1^{-1} sigma_1^{-1} ... sigma_{j-1}^{-1})
/// raised to the n'_j - 1.  Framings are the slid framings.
inline FramedBraid braid_word(const std::vector<Entry>& framings) {
    const int k = static_cast<int>(framings.size());
    if (k < 1) throw std::invalid_argument("braid_word: need at least one strand");
    FramedBraid b;
    b.strands = k;
    b.framings = framings;
    for (int j = 2; j <= k; ++j) {
        std::vector<int> block;
        for (int t = j - 1; t >= 1; --t) block.push_back(-t);
        for (int t = 1; t <= j - 1; ++t) block.push_back(-t);
        Entry e = framings[static_cast<std::size_t>(j - 1)] - 1;
        if (e >= 0) {
            for (Entry r = 0; r < e; ++r) b.word.insert(b.word.end(), block.begin(), block.end());
        } else {
            std::vector<int> inv;
            for (auto it = block.rbegin(); it != block.rend(); ++it) inv.push_back(-*it);
            for (Entry r = 0; r < -e; ++r) b.word.insert(b.word.end(), inv.begin(), inv.end());
        }
    }
    return b;
}

/// The framed braid obtained by blowing down the (-1)-curve of every
/// stabilizing twist, in stabilization order: each blowdown inserts one
/// right-handed full twist on the strands the curve links (gathered over
/// the skipped strands) and adds 1 to each linked framing.
inline FramedBraid braid_from_stabilization(const StabilizationTrace& trace) {
    const int k = trace.word.page_holes;
    FramedBraid b;
    b.strands = k;
    b.framings.assign(static_cast<std::size_t>(k), 0);
    for (const ConvexTwist& curve : trace.word.twists) {
        std::vector<int> ft = gathered_full_twist(k, curve.holes, +1);
        b.word.insert(b.word.end(), ft.begin(), ft.end());
        for (int h : curve.holes) b.framings[static_cast<std::size_t>(h - 1)] += 1;
    }
    return b;
}

/// Effect of a strict blowup at the j-th term (1 <= j <= r-1) on the slid
/// framings: entries 1..j gain 1, the new strand takes the old (j+1)-st
/// framing, its right neighbour gains 1, and the tail is unchanged.
inline std::vector<Entry> blowup_framing_effect(const std::vector<Entry>& f, int j) {
    const int r = static_cast<int>(f.size());
    if (j < 1 || j > r - 1) throw std::invalid_argument("blowup_framing_effect: index out of range");
    std::vector<Entry> out;
    out.reserve(f.size() + 1);
    for (int i = 1; i <= j; ++i) out.push_back(f[static_cast<std::size_t>(i - 1)] + 1);
    out.push_back(f[static_cast<std::size_t>(j)]);
    out.push_back(f[static_cast<std::size_t>(j)] + 1);
    for (int i = j + 2; i <= r; ++i) out.push_back(f[static_cast<std::size_t>(i - 1)]);
    return out;
}

/// Pass/fail record for the agreement of the two framed-braid
/// descriptions.  A failure is a reportable counterexample, not an
/// exception.
struct EquivalenceReport {
    Tuple tuple;
    std::vector<Entry> framings_slides;
    std::vector<Entry> framings_blowdowns;
    bool framings_match = false;
    bool braids_match = false;

    bool pass() const { return framings_match && braids_match; }
};

/// Checks that handle slides on the chain and blowdowns of the stabilizing
/// curves produce the same framed braid: framings componentwise, braids by
/// their Artin images on the rank-k free group.
inline EquivalenceReport verify_equivalence(const ZTuple& n) {
    EquivalenceReport rep;
    rep.tuple = n.entries();
    rep.framings_slides = slide_framings(n);
    FramedBraid a = braid_word(rep.framings_slides);
    FramedBraid b = braid_from_stabilization(stabilization_word(n));
    rep.framings_blowdowns = b.framings;
    rep.framings_match = (rep.framings_slides == rep.framings_blowdowns);
    rep.braids_match = (braid_automorphism(a.word, a.strands) == braid_automorphism(b.word, b.strands));
    return rep;
}

}  // namespace palf

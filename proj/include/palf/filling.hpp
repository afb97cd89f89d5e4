#pragma once

#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "palf/braidlink.hpp"
#include "palf/intmatrix.hpp"
#include "palf/openbook.hpp"
#include "palf/tuples.hpp"
#include "palf/twists.hpp"

namespace palf {

/// W(n, m): the 4-manifold fibered over the disk with planar fiber indexed
/// by n, with |m_i| extra vanishing cycles around the first i holes,
/// right-handed where m_i > 0 and left-handed where m_i < 0.  When
/// m = b - n >= 0 for the expansion b of p/(p-q) this is Lisca's filling
/// W_{p,q}(n) of the lens space L(p, q).
struct FillingSpec {
    ZTuple n;
    Tuple m;

    FillingSpec(ZTuple n_, Tuple m_) : n(std::move(n_)), m(std::move(m_)) {
        if (static_cast<int>(m.size()) != n.size())
            throw std::invalid_argument("FillingSpec: tuple lengths differ");
    }

    int k() const { return n.size(); }
    bool positive() const {
        for (Entry e : m)
            if (e < 0) return false;
        return true;
    }
};

inline FillingSpec lisca_filling(Entry p, Entry q, const ZTuple& n) {
    Tuple b = hj_expansion(p, p - q).entries;
    if (static_cast<int>(b.size()) != n.size())
        throw std::invalid_argument("lisca_filling: tuple length does not match the expansion");
    Tuple m(b);
    for (int i = 1; i <= n.size(); ++i) {
        m[static_cast<std::size_t>(i - 1)] -= n.at(i);
        if (m[static_cast<std::size_t>(i - 1)] < 0)
            throw std::invalid_argument("lisca_filling: tuple exceeds the componentwise bound");
    }
    return FillingSpec(n, std::move(m));
}

/// Monodromy factorization of W(n, m): the stabilization word of n followed
/// by |m_i| copies of the twist around the first i holes, for i = 1..k,
/// signed by m_i.  All twists right-handed exactly when m >= 0.
inline TwistWord monodromy(const FillingSpec& spec) {
    TwistWord w = stabilization_word(spec.n).word;
    for (int i = 1; i <= spec.k(); ++i) {
        Entry mi = spec.m[static_cast<std::size_t>(i - 1)];
        const int sign = mi >= 0 ? +1 : -1;
        for (Entry c = 0; c < std::abs(mi); ++c) w.twists.push_back(gamma(i, sign));
    }
    return w;
}

struct InvariantReport {
    Entry euler = 0;
    int b1 = 0;
    int b2 = 0;
    std::vector<Int> h1_torsion;   // invariant factors > 1
    Int boundary_h1_order = 0;     // 0 encodes an infinite group
    bool rational_ball = false;
};

/// Incidence matrix of a twist word: one row per twist, the indicator
/// vector of its hole set (the class of the curve in the first homology of
/// the page; handedness does not change the class).
inline IntMatrix incidence_matrix(const TwistWord& w) {
    IntMatrix m(static_cast<std::size_t>(w.length()), static_cast<std::size_t>(w.page_holes));
    for (std::size_t r = 0; r < w.twists.size(); ++r)
        for (int h : w.twists[r].holes) m.at(r, static_cast<std::size_t>(h - 1)) = 1;
    return m;
}

/// Linking matrix of the closed surgery diagram associated to a twist word:
/// k 0-framed strands (the dotted circles traded for 0-surgeries), one row
/// per twist curve with self-framing -sign.  A twist curve links strand i
/// once when its hole set contains i.  Distinct twist curves sit on
/// distinct pages of the fibration and each bounds in its own page level,
/// so their mutual linking vanishes.
inline IntMatrix surgery_linking_matrix(const TwistWord& w) {
    const std::size_t k = static_cast<std::size_t>(w.page_holes);
    const std::size_t n = static_cast<std::size_t>(w.length());
    IntMatrix m(k + n, k + n);
    for (std::size_t c = 0; c < n; ++c) {
        const ConvexTwist& t = w.twists[c];
        m.at(k + c, k + c) = -t.sign;
        for (int h : t.holes) {
            m.at(static_cast<std::size_t>(h - 1), k + c) = 1;
            m.at(k + c, static_cast<std::size_t>(h - 1)) = 1;
        }
    }
    return m;
}

/// Homological invariants of the 4-manifold carried by a monodromy word,
/// plus the order of the first homology of its boundary.
inline InvariantReport word_invariants(const TwistWord& w) {
    InvariantReport rep;
    const int k = w.page_holes;
    const int n = w.length();
    rep.euler = 1 - k + n;

    std::vector<Int> diag = smith_diagonal(incidence_matrix(w));
    const int r = static_cast<int>(diag.size());
    rep.b1 = k - r;
    rep.b2 = n - r;
    for (const Int& d : diag)
        if (d > 1) rep.h1_torsion.push_back(d);
    rep.rational_ball = (rep.b1 == 0 && rep.b2 == 0);

    Int det = determinant(surgery_linking_matrix(w));
    rep.boundary_h1_order = det < 0 ? Int(-det) : det;
    return rep;
}

inline InvariantReport invariants(const FillingSpec& spec) { return word_invariants(monodromy(spec)); }

/// The height-zero filling W(u_k, b - u_k) together with the plumbing
/// weights -a_i, where [a_1, ..., a_l] expands p/q: the minimal resolution
/// of the singularity with link L(p, q).
struct MinimalResolution {
    FillingSpec spec;
    Tuple weights;  // negative plumbing weights -a_i
};

inline MinimalResolution minimal_resolution(Entry p, Entry q) {
    Tuple b = hj_expansion(p, p - q).entries;
    ZTuple u = u_tuple(static_cast<int>(b.size()));
    Tuple m(b);
    for (int i = 1; i <= u.size(); ++i) m[static_cast<std::size_t>(i - 1)] -= u.at(i);
    Tuple weights = hj_expansion(p, q).entries;
    for (Entry& wgt : weights) wgt = -wgt;
    return MinimalResolution{FillingSpec(std::move(u), std::move(m)), std::move(weights)};
}

/// Absolute handlebody data of the fibration on W(n, m): one dotted circle
/// per strand of the 0-framed braid closure, one 2-handle per vanishing
/// cycle with framing -sign relative to the page.
struct HandleDiagram {
    int one_handles = 0;
    struct TwoHandle {
        std::vector<int> holes;
        int framing = -1;
    };
    std::vector<TwoHandle> two_handles;
    SurgeryPresentation surgery;
};

inline HandleDiagram export_handlebody(const FillingSpec& spec) {
    HandleDiagram d;
    TwistWord w = monodromy(spec);
    d.one_handles = w.page_holes;
    for (const ConvexTwist& t : w.twists)
        d.two_handles.push_back(HandleDiagram::TwoHandle{t.holes, -t.sign});
    d.surgery.braid = braid_word(slide_framings(spec.n));
    for (int i = 1; i <= spec.k(); ++i) {
        Entry mi = spec.m[static_cast<std::size_t>(i - 1)];
        if (mi == 0) continue;
        MarkedUnknots fam;
        for (int h = 1; h <= i; ++h) fam.linking.push_back(h);
        fam.framing_sign = mi > 0 ? -1 : +1;
        fam.count = std::abs(mi);
        d.surgery.marked_unknots.push_back(std::move(fam));
    }
    return d;
}

}  // namespace palf

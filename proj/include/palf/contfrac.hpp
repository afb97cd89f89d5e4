#pragma once

#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "palf/rational.hpp"

namespace palf {

/// Integer tuples are kept as plain vectors; entries may be negative in the
/// multiplicity tuples handled by the filling machinery.
using Entry = long long;
using Tuple = std::vector<Entry>;

/// A minus-sign (Hirzebruch-Jung) continued fraction expansion
/// [a_1, ..., a_l] = a_1 - 1/(a_2 - 1/(... - 1/a_l)) with every a_i >= 2.
/// Only hj_expansion produces values of this type, so the entry bound is an
/// invariant rather than something callers must re-check.
struct CFExpansion {
    Tuple entries;

    bool operator==(const CFExpansion&) const = default;
};

/// Evaluates [t_1, ..., t_k] right to left: x_k = t_k, x_i = t_i - 1/x_{i+1}.
/// Returns nullopt when an intermediate x_{i+1} vanishes; a vanishing
/// denominator is meaningful data (the tuple fails admissibility), not an
/// error.
inline std::optional<Fraction> evaluate(std::span<const Entry> t) {
    if (t.empty()) throw std::invalid_argument("evaluate: empty tuple");
    Fraction x(t.back());
    for (std::size_t i = t.size() - 1; i-- > 0;) {
        if (x.is_zero()) return std::nullopt;
        x = Fraction(t[i]) - x.reciprocal();
    }
    return x;
}

inline std::optional<Fraction> evaluate(const Tuple& t) {
    return evaluate(std::span<const Entry>(t));
}

/// A tuple is admissible when every denominator appearing in its continued
/// fraction is strictly positive, i.e. the tail values x_2, ..., x_k are all
/// defined and > 0.  The full value x_1 itself is unconstrained (members of
/// the zero set evaluate to 0).
inline bool is_admissible(std::span<const Entry> t) {
    if (t.empty()) throw std::invalid_argument("is_admissible: empty tuple");
    Fraction x(t.back());
    for (std::size_t i = t.size() - 1; i-- > 0;) {
        if (!x.is_positive()) return false;
        x = Fraction(t[i]) - x.reciprocal();
    }
    return true;
}

inline bool is_admissible(const Tuple& t) {
    return is_admissible(std::span<const Entry>(t));
}

/// Unique expansion p/q = [a_1, ..., a_l] with all a_i >= 2, for coprime
/// 1 <= q < p.  Computed by repeated ceiling division.
inline CFExpansion hj_expansion(Entry p, Entry q) {
    if (q < 1 || q >= p) throw std::invalid_argument("hj_expansion: need 1 <= q < p");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("hj_expansion: p, q must be coprime");
    CFExpansion cf;
    Int a = p, b = q;
    while (b != 0) {
        Int d = (a + b - 1) / b;  // ceil(a/b); a, b stay positive throughout
        cf.entries.push_back(static_cast<Entry>(d));
        Int next = d * b - a;
        a = b;
        b = next;
    }
    return cf;
}

}  // namespace palf

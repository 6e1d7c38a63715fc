#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "projinv/geometry.hpp"

namespace projinv {

// ---------------------------------------------------------------------------
// Descriptors
// ---------------------------------------------------------------------------

/// Sorted 3-element index subset, the key type of exponent vectors.
using Triple = std::array<int, 3>;

enum class InvariantKind { Zeta, Tau, Sigma, DeltaLines, DeltaPoints, AbsProduct, Zn };

/// Symbolic name of one invariant, so signatures are self-describing.
/// Canonical order: kind first, then indices lexicographically.
struct InvariantDescriptor {
    InvariantKind kind;
    std::array<int, 4> idx{0, 0, 0, 0};
    int arity = 0;

    static InvariantDescriptor zeta(int i, int j) { return {InvariantKind::Zeta, {i, j, 0, 0}, 2}; }
    static InvariantDescriptor tau(int i = 1, int j = 2, int k = 3) {
        return {InvariantKind::Tau, {i, j, k, 0}, 3};
    }
    static InvariantDescriptor sigma(int i = 1, int j = 2, int k = 3, int l = 4) {
        return {InvariantKind::Sigma, {i, j, k, l}, 4};
    }
    static InvariantDescriptor delta_lines(int i, int j, int k) {
        return {InvariantKind::DeltaLines, {i, j, k, 0}, 3};
    }
    static InvariantDescriptor delta_points(int i, int j, int k) {
        return {InvariantKind::DeltaPoints, {i, j, k, 0}, 3};
    }
    static InvariantDescriptor abs_product(int i, int j, int k) {
        return {InvariantKind::AbsProduct, {i, j, k, 0}, 3};
    }
    static InvariantDescriptor zn(int n) { return {InvariantKind::Zn, {n, 0, 0, 0}, 1}; }

    friend auto operator<=>(const InvariantDescriptor&, const InvariantDescriptor&) = default;

    /// Symbol name without indices, e.g. "zeta".
    std::string name() const;
    /// Full display form, e.g. "zeta(1,3)".
    std::string to_string() const;
    /// Indices valid and distinct for an n-point configuration (for zn: idx[0] == n).
    bool valid_for(int n) const;
};

/// Generating set of the field of absolute invariants for n points:
/// n = 2 gives the single generator zeta(1,2); n >= 3 gives 4n-8 descriptors
/// in canonical order. Throws ConfigTooSmall for n < 2.
std::vector<InvariantDescriptor> generating_set(int n);

/// Integer exponents over sorted triples plus the exact weight.
struct ExponentVector {
    std::map<Triple, long> exponents;
    Rational omega;
};

/// Exponents of the primitive relative invariant z_n, weight -1/gcd(n,3).
/// Throws std::invalid_argument for n < 3.
ExponentVector zn_exponents(int n);

// ---------------------------------------------------------------------------
// Generator evaluation
// ---------------------------------------------------------------------------

/// det of the three gradient-line covectors, rows in argument order.
template <class S>
S delta_lines(const Configuration<S>& c, int i, int j, int k) {
    check_distinct_indices(c, {i, j, k});
    return det3(gradient_line(c.at1(i)).h, gradient_line(c.at1(j)).h, gradient_line(c.at1(k)).h);
}

/// det(l_i, l_j, A_i x A_j). The row order fixes the sign; with it the value
/// equals (p_i dx + q_i dy)(p_j dx + q_j dy), dx = x_i - x_j, dy = y_i - y_j,
/// identically, and zeta(i, j) = zeta(j, i).
template <class S>
S zeta(const Configuration<S>& c, int i, int j) {
    check_distinct_indices(c, {i, j});
    const GradientSample<S>&si = c.at1(i), &sj = c.at1(j);
    return det3(gradient_line(si).h, gradient_line(sj).h,
                join(sample_point(si), sample_point(sj)).h);
}

/// Mixed invariant det(l_i, l_j, l_k) · det(A_i, A_j, A_k).
template <class S>
S tau(const Configuration<S>& c, int i = 1, int j = 2, int k = 3) {
    return delta_lines(c, i, j, k) * delta(c, i, j, k);
}

/// Absolute product delta_S · Delta_S for one triple; invariant under any
/// permutation of its indices since both factors flip sign together.
template <class S>
S abs_product(const Configuration<S>& c, int i, int j, int k) {
    return delta(c, i, j, k) * delta_lines(c, i, j, k);
}

/// Fourth-order mixed invariant over points {i, j, k, l}: the product of
/// abs_product over the four 3-element subsets.
template <class S>
S sigma(const Configuration<S>& c, int i, int j, int k, int l) {
    check_distinct_indices(c, {i, j, k, l});
    S r = abs_product(c, i, j, k);
    r *= abs_product(c, i, j, l);
    r *= abs_product(c, i, k, l);
    r *= abs_product(c, j, k, l);
    return r;
}

template <class S>
S sigma(const Configuration<S>& c) {
    if (c.size() < 4) throw ConfigTooSmall(4, c.size());
    return sigma(c, 1, 2, 3, 4);
}

template <class S>
S pow_int(const S& base, long e) {
    if (e < 0) return S(1) / pow_int(base, -e);
    S r(1);
    S b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

/// z_n = prod Delta_S^{m_S} with exponents zn_exponents(n). Throws
/// SingularConfiguration naming the first vanishing denominator triple.
template <class S>
S z_invariant(const Configuration<S>& c) {
    const ExponentVector ev = zn_exponents(c.size());
    S r(1);
    for (const auto& [t, m] : ev.exponents) {
        S d = delta_lines(c, t[0], t[1], t[2]);
        if (m < 0 && d == S(0)) throw SingularConfiguration(t);
        r *= pow_int(d, m);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Signatures
// ---------------------------------------------------------------------------

template <class S>
struct Signature {
    std::vector<std::pair<InvariantDescriptor, S>> entries;
};

template <class S>
S evaluate_one(const Configuration<S>& c, const InvariantDescriptor& d) {
    if (!d.valid_for(c.size()))
        throw IndexError("descriptor " + d.to_string() + " is invalid for n = " +
                         std::to_string(c.size()));
    switch (d.kind) {
        case InvariantKind::Zeta: return zeta(c, d.idx[0], d.idx[1]);
        case InvariantKind::Tau: return tau(c, d.idx[0], d.idx[1], d.idx[2]);
        case InvariantKind::Sigma: return sigma(c, d.idx[0], d.idx[1], d.idx[2], d.idx[3]);
        case InvariantKind::DeltaLines: return delta_lines(c, d.idx[0], d.idx[1], d.idx[2]);
        case InvariantKind::DeltaPoints: return delta(c, d.idx[0], d.idx[1], d.idx[2]);
        case InvariantKind::AbsProduct: return abs_product(c, d.idx[0], d.idx[1], d.idx[2]);
        case InvariantKind::Zn: return z_invariant(c);
    }
    throw std::logic_error("unreachable descriptor kind");
}

/// Values in descriptor order; the first invalid descriptor is reported.
template <class S>
Signature<S> evaluate(const Configuration<S>& c, const std::vector<InvariantDescriptor>& descs) {
    Signature<S> sig;
    sig.entries.reserve(descs.size());
    for (const InvariantDescriptor& d : descs) sig.entries.emplace_back(d, evaluate_one(c, d));
    return sig;
}

}  // namespace projinv

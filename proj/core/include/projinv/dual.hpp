#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "projinv/scalar.hpp"

namespace projinv {

// Forward-mode dual number: a value plus a vector of partial derivatives.
// Arithmetic follows the product and quotient rules exactly, so layered over
// Rational it yields exact Jacobians. An empty partials vector stands for an
// all-zero gradient (constants); binary operations zero-extend the shorter
// operand, which lets generic code create S(0)/S(1) without knowing the
// ambient dimension.
template <class T>
class Dual {
public:
    T value{};
    std::vector<T> partials;

    Dual() = default;
    Dual(const T& v) : value(v) {}            // NOLINT: implicit by design
    Dual(int v) : value(v) {}                 // NOLINT
    Dual(T v, std::vector<T> d) : value(std::move(v)), partials(std::move(d)) {}

    /// Independent variable: unit derivative in direction `index` of `dim`.
    static Dual variable(const T& v, std::size_t dim, std::size_t index) {
        Dual d(v);
        d.partials.assign(dim, T(0));
        d.partials[index] = T(1);
        return d;
    }

    std::size_t dim() const { return partials.size(); }

    /// Partial derivative in direction k (zero if beyond stored size).
    T partial(std::size_t k) const {
        return k < partials.size() ? partials[k] : T(0);
    }

    Dual operator-() const {
        Dual r(-value);
        r.partials.reserve(partials.size());
        for (const T& d : partials) r.partials.push_back(-d);
        return r;
    }

    friend Dual operator+(const Dual& a, const Dual& b) {
        Dual r(a.value + b.value);
        const std::size_t n = std::max(a.dim(), b.dim());
        r.partials.reserve(n);
        for (std::size_t k = 0; k < n; ++k) r.partials.push_back(a.partial(k) + b.partial(k));
        return r;
    }

    friend Dual operator-(const Dual& a, const Dual& b) {
        Dual r(a.value - b.value);
        const std::size_t n = std::max(a.dim(), b.dim());
        r.partials.reserve(n);
        for (std::size_t k = 0; k < n; ++k) r.partials.push_back(a.partial(k) - b.partial(k));
        return r;
    }

    friend Dual operator*(const Dual& a, const Dual& b) {
        Dual r(a.value * b.value);
        const std::size_t n = std::max(a.dim(), b.dim());
        r.partials.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            T d = a.partial(k) * b.value + a.value * b.partial(k);
            r.partials.push_back(std::move(d));
        }
        return r;
    }

    friend Dual operator/(const Dual& a, const Dual& b) {
        Dual r(a.value / b.value);
        const std::size_t n = std::max(a.dim(), b.dim());
        r.partials.reserve(n);
        T den = b.value * b.value;
        for (std::size_t k = 0; k < n; ++k) {
            T d = (a.partial(k) * b.value - a.value * b.partial(k)) / den;
            r.partials.push_back(std::move(d));
        }
        return r;
    }

    Dual& operator+=(const Dual& o) { return *this = *this + o; }
    Dual& operator-=(const Dual& o) { return *this = *this - o; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
    Dual& operator/=(const Dual& o) { return *this = *this / o; }

    // Comparisons look at the value part only; derivatives do not participate.
    // Degeneracy predicates (det == 0, lambda == 0) want exactly that.
    friend bool operator==(const Dual& a, const Dual& b) { return a.value == b.value; }
    friend bool operator!=(const Dual& a, const Dual& b) { return a.value != b.value; }
};

using DualRational = Dual<Rational>;

template <class T>
struct scalar_traits<Dual<T>> {
    static constexpr bool is_exact = scalar_traits<T>::is_exact;
};

}  // namespace projinv

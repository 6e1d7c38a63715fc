#include "projinv/weights.hpp"

#include <stdexcept>

#include "projinv/exact_linalg.hpp"

namespace projinv {

std::vector<Triple> all_triples(int n) {
    std::vector<Triple> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) out.push_back({i, j, k});
    return out;
}

ExponentVector WeightSolution::as_exponent_vector() const {
    if (!integral) throw std::logic_error("WeightSolution is not integral");
    ExponentVector ev;
    ev.omega = omega;
    for (const auto& [t, v] : exponents)
        if (v != 0) ev.exponents[t] = static_cast<long>(v.get_num().get_si());
    return ev;
}

WeightSolution solve_weight_system(int n, const Rational& omega) {
    if (n < 3) throw std::invalid_argument("solve_weight_system: need n >= 3");
    const std::vector<Triple> triples = all_triples(n);
    const std::size_t cols = triples.size();

    // Augmented matrix: n membership rows, one total row, rhs last.
    RatMatrix m(static_cast<std::size_t>(n) + 1, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t c = 0; c < cols; ++c)
        for (int v : triples[c]) m[static_cast<std::size_t>(v - 1)][c] = 1;
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][cols] = Rational(-3) * omega;
    for (std::size_t c = 0; c <= cols; ++c) m[static_cast<std::size_t>(n)][c] = 1;
    m[static_cast<std::size_t>(n)][cols] = Rational(-n) * omega;

    std::vector<int> pivots = rref(m);

    WeightSolution sol;
    sol.omega = omega;
    for (int pc : pivots)
        if (static_cast<std::size_t>(pc) == cols) return sol;  // pivot in rhs: inconsistent
    sol.feasible = true;

    // Free variables are zero, so each pivot row reads m_pivot = rhs directly.
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = m[r][cols];

    sol.integral = true;
    for (std::size_t c = 0; c < cols; ++c) {
        sol.exponents[triples[c]] = x[c];
        if (x[c].get_den() != 1) sol.integral = false;
    }
    return sol;
}

bool verify_weight_solution(int n, const WeightSolution& sol) {
    if (!sol.feasible) return false;
    const Rational point_target = Rational(-3) * sol.omega;
    for (int i = 1; i <= n; ++i) {
        Rational s(0);
        for (const auto& [t, v] : sol.exponents)
            if (t[0] == i || t[1] == i || t[2] == i) s += v;
        if (s != point_target) return false;
    }
    Rational total(0);
    for (const auto& [t, v] : sol.exponents) {
        (void)t;
        total += v;
    }
    return total == Rational(-n) * sol.omega;
}

bool verify_exponents(int n, const ExponentVector& e) {
    for (const auto& [t, mval] : e.exponents) {
        (void)mval;
        if (t[0] < 1 || t[2] > n || t[0] >= t[1] || t[1] >= t[2])
            throw std::invalid_argument("exponent triple invalid for n = " + std::to_string(n));
    }
    const Rational point_target = Rational(-3) * e.omega;
    for (int i = 1; i <= n; ++i) {
        Rational s(0);
        for (const auto& [t, mval] : e.exponents)
            if (t[0] == i || t[1] == i || t[2] == i) s += mval;
        if (s != point_target) return false;
    }
    Rational total(0);
    for (const auto& [t, mval] : e.exponents) {
        (void)t;
        total += mval;
    }
    return total == Rational(-n) * e.omega;
}

}  // namespace projinv

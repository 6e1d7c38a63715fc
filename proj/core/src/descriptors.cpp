#include "projinv/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace projinv {

std::string InvariantDescriptor::name() const {
    switch (kind) {
        case InvariantKind::Zeta: return "zeta";
        case InvariantKind::Tau: return "tau";
        case InvariantKind::Sigma: return "sigma";
        case InvariantKind::DeltaLines: return "delta_lines";
        case InvariantKind::DeltaPoints: return "delta_points";
        case InvariantKind::AbsProduct: return "abs_product";
        case InvariantKind::Zn: return "zn";
    }
    return "?";
}

std::string InvariantDescriptor::to_string() const {
    std::string s = name() + "(";
    for (int a = 0; a < arity; ++a) {
        if (a) s += ",";
        s += std::to_string(idx[a]);
    }
    return s + ")";
}

bool InvariantDescriptor::valid_for(int n) const {
    if (kind == InvariantKind::Zn) return idx[0] == n && n >= 3;
    for (int a = 0; a < arity; ++a) {
        if (idx[a] < 1 || idx[a] > n) return false;
        for (int b = a + 1; b < arity; ++b)
            if (idx[a] == idx[b]) return false;
    }
    return true;
}

std::vector<InvariantDescriptor> generating_set(int n) {
    if (n < 2) throw ConfigTooSmall(2, n);
    std::vector<InvariantDescriptor> out;
    if (n == 2) {
        out.push_back(InvariantDescriptor::zeta(1, 2));
        return out;
    }
    if (n <= 6) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) out.push_back(InvariantDescriptor::zeta(i, j));
        out.push_back(InvariantDescriptor::tau());
        if (n == 4 || n == 5) out.push_back(InvariantDescriptor::sigma());
        std::sort(out.begin(), out.end());
        return out;
    }
    // n >= 7: blocks Z_2 = {12}, Z_3 = {13, 23}, Z_4 = {14, 24, 34},
    // Z_k = {1k..4k} for 5 <= k <= n-1, Z_n = {1n..6n}; 1+2+3+4(n-5)+6 = 4n-8.
    out.push_back(InvariantDescriptor::zeta(1, 2));
    out.push_back(InvariantDescriptor::zeta(1, 3));
    out.push_back(InvariantDescriptor::zeta(2, 3));
    for (int i = 1; i <= 3; ++i) out.push_back(InvariantDescriptor::zeta(i, 4));
    for (int k = 5; k <= n - 1; ++k)
        for (int i = 1; i <= 4; ++i) out.push_back(InvariantDescriptor::zeta(i, k));
    for (int i = 1; i <= 6; ++i) out.push_back(InvariantDescriptor::zeta(i, n));
    std::sort(out.begin(), out.end());
    return out;
}

ExponentVector zn_exponents(int n) {
    if (n < 3) throw std::invalid_argument("zn_exponents: need n >= 3, got " + std::to_string(n));
    ExponentVector ev;
    if (n == 3) {
        ev.exponents[{1, 2, 3}] = 1;
        ev.omega = make_rational(-1, 3);
        return ev;
    }
    if (n == 4) {
        ev.exponents[{1, 2, 3}] = 1;
        ev.exponents[{1, 2, 4}] = 1;
        ev.exponents[{1, 3, 4}] = 1;
        ev.exponents[{2, 3, 4}] = 1;
        ev.omega = Rational(-1);
        return ev;
    }
    const long g = std::gcd(n, 3);
    if (g == 1) {
        for (int i = 5; i <= n; ++i) ev.exponents[{1, 2, i}] = 3;
        ev.exponents[{1, 3, 4}] = n - 3;
        ev.exponents[{2, 3, 4}] = n - 3;
        ev.exponents[{1, 2, 3}] = -(2L * n - 9);
        ev.exponents[{1, 2, 4}] = -(2L * n - 9);
        ev.omega = Rational(-1);
    } else {
        for (int i = 5; i <= n; ++i) ev.exponents[{1, 2, i}] = 1;
        ev.exponents[{1, 3, 4}] = n / 3 - 1;
        ev.exponents[{2, 3, 4}] = n / 3 - 1;
        ev.exponents[{1, 2, 3}] = -(2L * n / 3 - 3);
        ev.exponents[{1, 2, 4}] = -(2L * n / 3 - 3);
        ev.omega = make_rational(-1, 3);
    }
    return ev;
}

}  // namespace projinv

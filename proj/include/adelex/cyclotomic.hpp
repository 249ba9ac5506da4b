/*
 * cyclotomic.hpp
 * --------------
 * Cyclotomic polynomials by exact division, Phi_d = (t^d - 1) / prod_{e|d, e<d} Phi_e,
 * plus the small multiplicative helpers the Kronecker decision needs.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "adelex/int_poly.hpp"

namespace adelex {

inline long euler_phi(long n) {
    if (n <= 0) throw std::invalid_argument("euler_phi requires n >= 1");
    long phi = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        phi -= phi / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) phi -= phi / n;
    return phi;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// The d-th cyclotomic polynomial. Built bottom-up over the divisor lattice
/// of d; every division is exact by construction.
inline IntPoly cyclotomic(long d) {
    if (d < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    namespace zp = detail::zp;
    std::map<long, zp::Z> phi;
    for (long e : divisors(d)) {
        zp::Z acc = zp::power_minus_one(static_cast<int>(e));
        for (long e2 : divisors(e)) {
            if (e2 == e) continue;
            acc = *zp::divide_exact(acc, phi.at(e2));
        }
        phi.emplace(e, std::move(acc));
    }
    return IntPoly(std::move(phi.at(d)));
}

}  // namespace adelex

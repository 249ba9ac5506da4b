/*
 * bigint.hpp
 * ----------
 * Exact arbitrary-precision integer/rational aliases and small number-theory
 * helpers shared across the library: p-adic valuations, deterministic
 * primality, and bounded trial-division factorization.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace adelex {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Thrown when a computation contradicts an identity the library is supposed
/// to certify (these are "impossible" states; the CLI maps them to exit 2).
struct identity_violation : std::logic_error {
    using std::logic_error::logic_error;
};

/// v_p(|n|) for n != 0.
inline int valuation(BigInt n, const BigInt& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero is undefined");
    if (p < 2) throw std::invalid_argument("valuation requires p >= 2");
    if (n < 0) n = -n;
    int v = 0;
    BigInt q, r;
    for (;;) {
        boost::multiprecision::divide_qr(n, p, q, r);
        if (r != 0) break;
        n = std::move(q);
        ++v;
    }
    return v;
}

namespace detail {

inline BigInt powmod(BigInt base, BigInt exp, const BigInt& mod) {
    return boost::multiprecision::powm(base, exp, mod);
}

// One Miller-Rabin round for witness a; n odd, n > 3.
inline bool mr_witness_passes(const BigInt& n, const BigInt& a) {
    BigInt d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    BigInt x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace detail

/// Deterministic primality test. The fixed witness set is a proof for
/// n < 3.3e24, far beyond any leading coefficient this library meets.
inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (int a : small)
        if (!detail::mr_witness_passes(n, a)) return false;
    return true;
}

/// Factor |n| by trial division with primes below `limit`. A cofactor that
/// survives trial division must be prime if it is below limit^2; anything
/// larger is rejected as a user-input anomaly rather than factored further.
inline std::vector<std::pair<BigInt, int>> factor_by_trial_division(
    BigInt n, std::int64_t limit = 1000000) {
    if (n == 0) throw std::invalid_argument("cannot factor zero");
    if (n < 0) n = -n;
    std::vector<std::pair<BigInt, int>> factors;
    auto strip = [&](const BigInt& p) {
        if (n % p != 0) return;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (std::int64_t q = 5; q <= limit && BigInt(q) * q <= n; q += 6) {
        strip(q);
        strip(q + 2);
    }
    if (n > 1) {
        if (n <= BigInt(limit) * limit) {
            factors.emplace_back(n, 1);  // cofactor below limit^2 is prime
        } else {
            throw std::invalid_argument(
                "factorization beyond 10^6 trial division is not attempted");
        }
    }
    return factors;
}

}  // namespace adelex

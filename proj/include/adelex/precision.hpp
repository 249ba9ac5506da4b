/*
 * precision.hpp
 * -------------
 * Working-precision ladder for the archimedean computations. Everything runs
 * on binary floats with a compile-time mantissa: 128 bits by default,
 * escalating by doubling to a 2048-bit cap when a computation cannot certify
 * its result (root separation, unit-circle resolution).
 */
#pragma once

#include <stdexcept>
#include <type_traits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "adelex/bigint.hpp"

namespace adelex {

inline constexpr unsigned kDefaultPrecision = 128;
inline constexpr unsigned kMaxPrecision = 2048;

template <unsigned Bits>
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

template <unsigned Bits>
using Complex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>>,
    boost::multiprecision::et_off>;

/// Unit roundoff of Real<Bits>.
template <unsigned Bits>
inline Real<Bits> unit_roundoff() {
    return boost::multiprecision::ldexp(Real<Bits>(1), 1 - static_cast<int>(Bits));
}

/// Invoke f with std::integral_constant<unsigned, B> for the smallest ladder
/// precision B >= bits (clamped to the cap). All instantiations must return
/// the same type.
template <class F>
decltype(auto) with_precision(unsigned bits, F&& f) {
    if (bits <= 128) return f(std::integral_constant<unsigned, 128>{});
    if (bits <= 256) return f(std::integral_constant<unsigned, 256>{});
    if (bits <= 512) return f(std::integral_constant<unsigned, 512>{});
    if (bits <= 1024) return f(std::integral_constant<unsigned, 1024>{});
    if (bits <= 2048) return f(std::integral_constant<unsigned, 2048>{});
    throw std::invalid_argument("precision above the 2048-bit cap");
}

}  // namespace adelex

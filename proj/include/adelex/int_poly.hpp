/*
 * int_poly.hpp
 * ------------
 * Exact integer univariate polynomials in the normal form used throughout the
 * library: nonzero constant term, positive leading coefficient. A Laurent
 * polynomial determined only up to units +-t^k has exactly one representative
 * of this shape, which makes every downstream invariant deterministic.
 *
 * The detail::zp namespace holds plain dense-vector arithmetic over Z[t]
 * (no normal-form restriction); IntPoly wraps a vector that satisfies the
 * normal form and exposes the domain operations.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adelex/bigint.hpp"

namespace adelex {

namespace detail::zp {

// Coefficient vectors are ascending by degree; empty vector = zero polynomial.
using Z = std::vector<BigInt>;

inline void trim(Z& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Z& a) { return static_cast<int>(a.size()) - 1; }

inline bool is_zero(const Z& a) { return a.empty(); }

inline Z add(const Z& a, const Z& b) {
    Z r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    trim(r);
    return r;
}

inline Z sub(const Z& a, const Z& b) {
    Z r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    trim(r);
    return r;
}

inline Z mul(const Z& a, const Z& b) {
    if (a.empty() || b.empty()) return {};
    Z r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline Z mul_scalar(Z a, const BigInt& c) {
    if (c == 0) return {};
    for (auto& x : a) x *= c;
    return a;
}

inline Z derivative(const Z& a) {
    if (a.size() <= 1) return {};
    Z r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<int>(i);
    trim(r);
    return r;
}

inline BigInt content(const Z& a) {
    BigInt g = 0;
    for (const auto& x : a) g = boost::multiprecision::gcd(g, x);
    return g;  // 0 for the zero polynomial
}

// Divide out the content, keeping signs.
inline Z primitive(Z a) {
    BigInt g = content(a);
    if (g == 0 || g == 1) return a;
    for (auto& x : a) x /= g;
    return a;
}

inline Z negate(Z a) {
    for (auto& x : a) x = -x;
    return a;
}

// Exact division over Z; nullopt if b does not divide a in Z[t].
inline std::optional<Z> divide_exact(Z a, const Z& b) {
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    if (a.empty()) return Z{};
    if (a.size() < b.size()) return std::nullopt;
    Z q(a.size() - b.size() + 1);
    const BigInt& lb = b.back();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        const BigInt& top = a[k + b.size() - 1];
        if (top == 0) continue;
        if (top % lb != 0) return std::nullopt;
        BigInt c = top / lb;
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
    }
    trim(a);
    if (!a.empty()) return std::nullopt;
    trim(q);
    return q;
}

// Fraction-free remainder of a by b: repeatedly r <- lc(b)*r - lc(r)*t^k*b.
// Equals the classical pseudo-remainder up to a power of lc(b); callers take
// primitive parts, so the scaling is immaterial.
inline Z pseudo_rem(Z a, const Z& b) {
    if (b.empty()) throw std::invalid_argument("pseudo_rem by zero");
    const int db = degree(b);
    const BigInt& lb = b.back();
    while (degree(a) >= db) {
        const int k = degree(a) - db;
        BigInt top = a.back();
        for (auto& x : a) x *= lb;
        for (int i = 0; i <= db; ++i) a[static_cast<size_t>(k + i)] -= top * b[static_cast<size_t>(i)];
        trim(a);
    }
    return a;
}

// gcd over Z[t]: primitive PRS, result has positive leading coefficient.
inline Z gcd(Z a, Z b) {
    if (a.empty()) std::swap(a, b);
    if (b.empty()) {
        if (!a.empty() && a.back() < 0) a = negate(std::move(a));
        return a;
    }
    BigInt ca = content(a), cb = content(b);
    BigInt cg = boost::multiprecision::gcd(ca, cb);
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!b.empty()) {
        Z r = primitive(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.back() < 0) a = negate(std::move(a));
    return mul_scalar(std::move(a), cg);
}

inline BigInt eval(const Z& a, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline BigRat eval(const Z& a, const BigRat& x) {
    BigRat acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline Z power_minus_one(int r) {  // t^r - 1
    Z g(static_cast<size_t>(r) + 1);
    g[0] = -1;
    g[static_cast<size_t>(r)] = 1;
    return g;
}

}  // namespace detail::zp

/// Exact integer polynomial in normal form: coeffs[0] != 0, coeffs.back() > 0.
class IntPoly {
  public:
    /// Normalizing constructor: strips the +-t^k Laurent unit (trailing and
    /// leading zero entries, overall sign). Throws on the zero polynomial.
    explicit IntPoly(std::vector<BigInt> raw) : c_(normal_form(std::move(raw))) {}

    IntPoly(std::initializer_list<BigInt> raw) : IntPoly(std::vector<BigInt>(raw)) {}

    /// The spec's normalize operation; `shift` is the exponent of a Laurent
    /// unit t^shift and is discarded.
    static IntPoly normalize(std::vector<BigInt> raw, long shift = 0) {
        (void)shift;
        return IntPoly(std::move(raw));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigInt& coeff(size_t i) const {
        static const BigInt zero = 0;
        return i < c_.size() ? c_[i] : zero;
    }

    const std::vector<BigInt>& coeffs() const { return c_; }

    const BigInt& leading() const { return c_.back(); }
    const BigInt& constant() const { return c_.front(); }

    BigInt operator()(const BigInt& x) const { return detail::zp::eval(c_, x); }
    BigRat operator()(const BigRat& x) const { return detail::zp::eval(c_, x); }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        return IntPoly(detail::zp::mul(a.c_, b.c_));
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPoly& f) {
        for (int i = f.degree(); i >= 0; --i) {
            const BigInt& a = f.coeff(static_cast<size_t>(i));
            if (a == 0 && f.degree() > 0) continue;
            if (i == f.degree()) {
                if (a < 0) os << "-";
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            BigInt m = boost::multiprecision::abs(a);
            if (m != 1 || i == 0) os << m;
            if (i >= 1) {
                os << "t";
                if (i > 1) os << "^" << i;
            }
        }
        return os;
    }

  private:
    static std::vector<BigInt> normal_form(std::vector<BigInt> raw) {
        detail::zp::trim(raw);
        if (raw.empty())
            throw std::invalid_argument("zero polynomial has no normal form");
        size_t low = 0;
        while (raw[low] == 0) ++low;
        if (low > 0) raw.erase(raw.begin(), raw.begin() + static_cast<long>(low));
        if (raw.back() < 0)
            for (auto& x : raw) x = -x;
        return raw;
    }

    std::vector<BigInt> c_;
};

/// gcd of all coefficients (positive).
inline BigInt content(const IntPoly& f) { return detail::zp::content(f.coeffs()); }

/// t^deg f * f(1/t), renormalized. For palindromic f this is f itself.
inline IntPoly reverse(const IntPoly& f) {
    std::vector<BigInt> r(f.coeffs().rbegin(), f.coeffs().rend());
    return IntPoly(std::move(r));
}

inline bool is_palindromic(const IntPoly& f) {
    const auto& c = f.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != c[c.size() - 1 - i]) return false;
    return true;
}

inline bool is_antipalindromic(const IntPoly& f) {
    const auto& c = f.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != -c[c.size() - 1 - i]) return false;
    return true;
}

inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    return IntPoly(detail::zp::gcd(a.coeffs(), b.coeffs()));
}

inline std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
    auto q = detail::zp::divide_exact(a.coeffs(), b.coeffs());
    if (!q || q->empty()) return std::nullopt;
    return IntPoly(std::move(*q));
}

/// Multiplicity-graded squarefree decomposition f = content * prod P_k^k
/// (Yun's algorithm with primitive-part gcds). Factors are primitive with
/// positive leading coefficient; constants yield an empty list.
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    namespace zp = detail::zp;
    std::vector<std::pair<IntPoly, int>> out;
    if (f.degree() == 0) return out;
    zp::Z w = zp::primitive(f.coeffs());
    zp::Z g = zp::gcd(w, zp::derivative(w));
    if (zp::degree(g) == 0) {
        out.emplace_back(IntPoly(std::move(w)), 1);
        return out;
    }
    zp::Z c = *zp::divide_exact(w, g);
    zp::Z d = zp::sub(*zp::divide_exact(zp::derivative(w), g), zp::derivative(c));
    for (int k = 1; zp::degree(c) > 0; ++k) {
        zp::Z a = zp::gcd(c, d);
        if (zp::degree(a) > 0) out.emplace_back(IntPoly(a), k);
        c = *zp::divide_exact(c, a);
        d = zp::sub(*zp::divide_exact(d, a), zp::derivative(c));
    }
    return out;
}

/// Product of the distinct irreducible factors of f (degree-0 input -> 1).
inline IntPoly squarefree_part(const IntPoly& f) {
    auto dec = squarefree_decomposition(f);
    IntPoly g{1};
    for (const auto& [p, k] : dec) g = g * p;
    return g;
}

/// Load-time findings for a candidate Alexander polynomial. Reporting only:
/// nothing here rejects the input.
struct ValidationReport {
    BigInt value_at_one;
    bool is_knot_like = false;   // value_at_one in {+1, -1}
    bool is_reciprocal = false;  // a_i == a_{n-i}
    BigInt content;
    std::vector<std::string> messages;
};

inline ValidationReport validate_alexander(const IntPoly& f) {
    ValidationReport rep;
    rep.value_at_one = f(BigInt(1));
    rep.is_knot_like = rep.value_at_one == 1 || rep.value_at_one == -1;
    rep.is_reciprocal = is_palindromic(f);
    rep.content = content(f);
    if (!rep.is_knot_like)
        rep.messages.push_back("f(1) = " + rep.value_at_one.str() +
                               ", not +-1: not a knot polynomial");
    if (!rep.is_reciprocal) {
        if (is_antipalindromic(f))
            rep.messages.push_back(
                "coefficients are anti-palindromic (a_i = -a_{n-i}); "
                "sign conventions differ across knot tables");
        else
            rep.messages.push_back("coefficients are not palindromic");
    }
    if (rep.content != 1)
        rep.messages.push_back("content " + rep.content.str() +
                               " > 1: coefficients are not relatively prime");
    return rep;
}

}  // namespace adelex

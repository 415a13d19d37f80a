#pragma once

// Signature arithmetic for groups acting on Riemann surfaces: the measure
// mu(sigma) = 2h - 2 + sum(1 - 1/r_i), the Riemann-Hurwitz relation
// 2g - 2 = |G| mu(sigma), normal-form generating vectors <1, b, c> for cyclic
// groups, the catalogue of cyclic-admissible triangle signatures with their
// possible extensions, and the N6/N8 admissibility arithmetic.
//
// Everything here is exact: rationals are arbitrary-precision, no floating
// point anywhere.

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unimap/census.hpp"

namespace unimap {

using Rational = boost::multiprecision::cpp_rational;

/// A signature (h; r_1, ..., r_s): orbit genus plus branching periods >= 2.
/// Signatures differing only by a permutation of the periods compare equal;
/// periods are stored sorted descending.  s = 0 is the surface group (h; -).
class Signature {
public:
    Signature(long long orbit_genus, std::vector<long long> periods)
        : orbit_genus_(orbit_genus), periods_(std::move(periods)) {
        if (orbit_genus_ < 0) throw std::invalid_argument("orbit genus must be >= 0");
        for (long long r : periods_)
            if (r < 2)
                throw std::invalid_argument("period " + std::to_string(r) + " must be >= 2");
        std::sort(periods_.begin(), periods_.end(), std::greater<>());
    }

    long long orbit_genus() const { return orbit_genus_; }
    const std::vector<long long>& periods() const { return periods_; }

    std::string str() const {
        std::string out = "(" + std::to_string(orbit_genus_) + "; ";
        if (periods_.empty()) {
            out += "-";
        } else {
            for (std::size_t i = 0; i < periods_.size(); ++i) {
                if (i > 0) out += ", ";
                out += std::to_string(periods_[i]);
            }
        }
        return out + ")";
    }

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    long long orbit_genus_;
    std::vector<long long> periods_;
};

/// mu(sigma) = 2h - 2 + sum(1 - 1/r_i).  Negative, zero, or positive selects
/// spherical, euclidean, or hyperbolic geometry; 2*pi*mu is hyperbolic area.
inline Rational mu(const Signature& sigma) {
    Rational out = 2 * sigma.orbit_genus() - 2;
    for (long long r : sigma.periods()) out += Rational(r - 1, r);
    return out;
}

/// Solves 2g - 2 = |G| mu(sigma) for g.  Throws if the right-hand side is not
/// an even integer >= -2 (then no surface-kernel action of this shape exists).
inline long long rh_genus(long long group_order, const Signature& sigma) {
    if (group_order < 1) throw std::invalid_argument("group order must be >= 1");
    const Rational rhs = group_order * mu(sigma);
    if (boost::multiprecision::denominator(rhs) != 1)
        throw std::domain_error("no surface-kernel action of this shape: |G| mu(sigma) = " +
                                rhs.str() + " is not an integer");
    const BigInt n = boost::multiprecision::numerator(rhs);
    if (n < -2 || (n + 2) % 2 != 0)
        throw std::domain_error("no surface-kernel action of this shape: 2g - 2 = " + n.str() +
                                " has no genus solution");
    return static_cast<long long>((n + 2) / 2);
}

/// Normal-form generating vector <1, b, c> for Z_n with 1 + b + c = 0 mod n.
/// Degenerate means b or c vanishes mod n: the signature collapses to
/// (0; n, n) (a sphere action with two branch points).
struct GenVector {
    long long n = 1;
    long long b = 0;
    long long c = 0;
    bool degenerate = false;

    std::string str() const {
        return "<1, " + std::to_string(b) + ", " + std::to_string(c) + "> mod " +
               std::to_string(n);
    }

    friend bool operator==(const GenVector&, const GenVector&) = default;
};

inline GenVector normal_form_vector(long long n, long long b) {
    if (n < 2) throw std::invalid_argument("modulus must be >= 2");
    GenVector v;
    v.n = n;
    v.b = ((b % n) + n) % n;
    v.c = ((n - (1 + v.b)) % n + n) % n;
    v.degenerate = (v.b == 0 || v.c == 0);
    return v;
}

/// Signature of the Z_n action with vector <1, b, c>: (0; n, n/(b,n), n/(c,n)),
/// dropping entries whose element vanishes (degenerate case -> (0; n, n)).
inline Signature vector_signature(const GenVector& v) {
    std::vector<long long> periods{v.n};
    if (v.b != 0) periods.push_back(v.n / std::gcd(v.b, v.n));
    if (v.c != 0) periods.push_back(v.n / std::gcd(v.c, v.n));
    return Signature(0, std::move(periods));
}

/// Maclachlan's criterion: an abelian group of order n has a (0; n, m, r)
/// generating vector iff lcm(m, r) = n.
inline bool lcm_condition(long long n, long long m, long long r) {
    return std::lcm(m, r) == n;
}

namespace detail {

inline long long mulmod(long long a, long long b, long long m) {
    return static_cast<long long>(static_cast<unsigned __int128>(a) *
                                  static_cast<unsigned __int128>(b) %
                                  static_cast<unsigned __int128>(m));
}

/// k of the form 2, 4, p^s or 2p^s (p an odd prime): exactly the moduli whose
/// unit group is cyclic, so -1 is the only involution in Aut(Z_k).
inline bool has_cyclic_unit_group(long long k) {
    if (k == 1 || k == 2 || k == 4) return true;
    long long m = k;
    int twos = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++twos;
    }
    if (twos > 1 || m == 1) return false; // 2^a with a >= 3, or 4m handled above
    // m odd > 1: must be a single odd prime power
    const std::vector<long long> primes = prime_divisors(m);
    return primes.size() == 1;
}

} // namespace detail

/// All b with b != 1, b^3 = 1 and 1 + b + b^2 = 0 (mod k): the order-3 twists
/// beta(1) admitting an N6 extension.  Both beta(1) and beta^2(1) appear.
/// Empty unless 9 does not divide k and every prime divisor != 3 of k is
/// 1 mod 3.
inline std::vector<long long> n6_admissible(long long k) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    std::vector<long long> out;
    for (long long b = 2; b < k; ++b) {
        if (detail::mulmod(detail::mulmod(b, b, k), b, k) != 1) continue;
        if ((1 + b + detail::mulmod(b, b, k)) % k != 0) continue;
        out.push_back(b);
    }
    return out;
}

/// Which N8 extension (if any) the parameter t realizes for Z_k acting with
/// vector <1, t, k-(t+1)>.
enum class N8Case {
    None,
    AbelianZ2k,   ///< k odd, t = 1: G = Z_2k, u = k
    AbelianZ2xZk, ///< k even, t = 1: G = Z_2 + Z_k, u = k/2
    NonAbelian    ///< t^2 = 1 mod k, t not in {1, k-1}, unit group not cyclic
};

struct N8Result {
    N8Case kind = N8Case::None;
    long long alpha1 = 0; ///< the order-2 twist alpha(1), for the non-abelian case

    friend bool operator==(const N8Result&, const N8Result&) = default;
};

inline N8Result n8_admissible(long long k, long long t) {
    if (k < 2 || t < 1 || t >= k)
        throw std::invalid_argument("need k >= 2 and 1 <= t < k");
    if (t == 1) return {k % 2 != 0 ? N8Case::AbelianZ2k : N8Case::AbelianZ2xZk, 0};
    if (t == k - 1) return {N8Case::None, 0}; // alpha(1) = -1: c = 0 and u = 1
    if (detail::mulmod(t, t, k) != 1) return {N8Case::None, 0};
    if (detail::has_cyclic_unit_group(k)) return {N8Case::None, 0};
    return {N8Case::NonAbelian, t};
}

/// One row of the cyclic-admissible extension catalogue, instantiated at a
/// concrete signature.
struct ExtensionCase {
    std::string case_name; ///< N6, N8, T1, T4, T8, T9, T10
    Signature sigma;
    Signature sigma_prime;
    long long index = 1; ///< [Lambda(sigma') : Lambda(sigma)] = mu(sigma)/mu(sigma')
    std::string conditions_note;

    friend bool operator==(const ExtensionCase&, const ExtensionCase&) = default;
};

/// Matches a triangle signature (0; a, b, c) against the seven catalogue rows
///
///   N6  (0;k,k,k)    -> (0;3,3,k)    index 3   (k >= 4)
///   N8  (0;k,k,u)    -> (0;2,k,2u)   index 2   (u | k, k >= 3)
///   T1  (0;7,7,7)    -> (0;2,3,7)    index 24
///   T4  (0;8,8,4)    -> (0;2,3,8)    index 12
///   T8  (0;4k,4k,k)  -> (0;2,3,4k)   index 6   (k >= 2)
///   T9  (0;2k,2k,k)  -> (0;2,4,2k)   index 4   (k >= 3)
///   T10 (0;3k,k,3)   -> (0;2,3,3k)   index 4   (k >= 3)
///
/// and returns every row that unifies, in table order.  Non-triangular input
/// matches nothing.
inline std::vector<ExtensionCase> admissible_extensions(const Signature& sigma) {
    std::vector<ExtensionCase> out;
    if (sigma.orbit_genus() != 0 || sigma.periods().size() != 3) return out;
    const std::vector<long long>& ps = sigma.periods(); // sorted descending
    const long long a = ps[0], b = ps[1], c = ps[2];
    const auto add = [&](const char* name, Signature prime, long long index,
                         std::string note) {
        out.push_back({name, sigma, std::move(prime), index, std::move(note)});
    };
    if (a == b && b == c && a >= 4)
        add("N6", Signature(0, {3, 3, a}), 3, "k = " + std::to_string(a));
    if (a == b && a % c == 0 && a >= 3)
        add("N8", Signature(0, {2, a, 2 * c}), 2,
            "k = " + std::to_string(a) + ", u = " + std::to_string(c));
    if (a == 7 && b == 7 && c == 7) add("T1", Signature(0, {2, 3, 7}), 24, "");
    if (a == 8 && b == 8 && c == 4) add("T4", Signature(0, {2, 3, 8}), 12, "");
    if (a == b && a == 4 * c && c >= 2)
        add("T8", Signature(0, {2, 3, a}), 6, "k = " + std::to_string(c));
    if (a == b && a == 2 * c && c >= 3)
        add("T9", Signature(0, {2, 4, a}), 4, "k = " + std::to_string(c));
    if (c == 3 && a == 3 * b && b >= 3)
        add("T10", Signature(0, {2, 3, a}), 4, "k = " + std::to_string(b));
    return out;
}

} // namespace unimap

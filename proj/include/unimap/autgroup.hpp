#pragma once

// Automorphism groups of one-vertex maps.  Aut(M) is the centralizer of the
// monodromy group <x, y> in S_2k; for a one-vertex map it is always <x^p> for
// the smallest divisor p of 2k such that x^p commutes with y.

#include <cassert>
#include <set>
#include <stdexcept>
#include <vector>

#include "unimap/maps.hpp"
#include "unimap/perm.hpp"

namespace unimap {

namespace detail {
inline std::vector<long long> divisors_ascending(long long n) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}
} // namespace detail

/// The period p of a one-vertex map: the smallest divisor p of 2k with x^p
/// commuting with y.  Aut(M) = <x^p> has order 2k/p.
inline long long aut_period(const OneVertexMap& m) {
    const Perm x = m.x();
    const long long two_k = 2 * m.k();
    long long period = two_k;
    for (long long p : detail::divisors_ascending(two_k)) {
        if (commute(power(x, p), m.y())) {
            period = p;
            break;
        }
    }
#ifndef NDEBUG
    // The exponents commuting with y form a subgroup of Z_2k (gcd-closed), so
    // the first commuting divisor is the global minimum and divides the rest.
    for (long long s = 1; s <= two_k; ++s)
        if (commute(power(x, s), m.y())) assert(s % period == 0);
#endif
    return period;
}

struct AutData {
    long long period = 0;      ///< p
    long long order = 0;       ///< |Aut(M)| = 2k/p
    std::vector<Perm> orbit;   ///< the p distinct conjugates x^-s y x^s, s = 0..p-1
    Perm canonical_y{1};       ///< lexicographically minimal member of orbit
};

inline AutData aut_data(const OneVertexMap& m) {
    AutData out;
    out.period = aut_period(m);
    out.order = 2 * m.k() / out.period;
    const Perm x = m.x();
    for (long long s = 0; s < out.period; ++s)
        out.orbit.push_back(conjugate(m.y(), power(x, s)));
    out.canonical_y = *std::min_element(out.orbit.begin(), out.orbit.end());
    assert(std::set<Perm>(out.orbit.begin(), out.orbit.end()).size() ==
           static_cast<std::size_t>(out.period));
    return out;
}

/// Strong-conjugacy equivalence: same k and y2 lies in the x-conjugation
/// orbit of y1.
inline bool are_equivalent(const OneVertexMap& m1, const OneVertexMap& m2) {
    if (m1.k() != m2.k())
        throw std::invalid_argument("maps have different edge counts: " +
                                    std::to_string(m1.k()) + " vs " + std::to_string(m2.k()));
    const AutData data = aut_data(m1);
    for (const Perm& y : data.orbit)
        if (y == m2.y()) return true;
    return false;
}

/// Deterministic class representative: y replaced by the lexicographically
/// minimal conjugate.
inline OneVertexMap canonical_form(const OneVertexMap& m) {
    return OneVertexMap(m.k(), aut_data(m).canonical_y);
}

inline bool is_regular(const OneVertexMap& m) { return aut_period(m) == 1; }

inline bool is_strictly_edge_transitive(const OneVertexMap& m) { return aut_period(m) == 2; }

/// Oracle: scans the full symmetric group on the dart set for elements
/// commuting with both x and y.  Refuses degrees above the cap (default 8,
/// i.e. |S_8| = 40320 candidates).
inline std::vector<Perm> brute_centralizer(const DartMap& m, int degree_cap = 8) {
    if (m.degree() > degree_cap)
        throw std::invalid_argument("degree " + std::to_string(m.degree()) +
                                    " exceeds brute centralizer cap " +
                                    std::to_string(degree_cap));
    std::vector<int> images(static_cast<std::size_t>(m.degree()));
    std::iota(images.begin(), images.end(), 0);
    std::vector<Perm> out;
    do {
        bool ok = true;
        for (int i = 0; i < m.degree() && ok; ++i) {
            const int s = images[static_cast<std::size_t>(i)];
            if (images[static_cast<std::size_t>(m.x()(i))] != m.x()(s) ||
                images[static_cast<std::size_t>(m.y()(i))] != m.y()(s))
                ok = false;
        }
        if (ok) out.push_back(Perm::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Perm> brute_centralizer(const OneVertexMap& m, int degree_cap = 8) {
    return brute_centralizer(m.as_dart_map(), degree_cap);
}

} // namespace unimap

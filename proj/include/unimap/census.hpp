#pragma once

// Counting and enumerating one-vertex maps by automorphism group.
//
// x^p splits the dart set into p cycles C_j = (j, j+p, ..., j+2k-p) of length
// d = 2k/p.  A free involution commuting with x^p either fixes a cycle
// (mapping a -> a+k; possible only when d is even) or transposes a pair of
// cycles with a shift parameter t in [0, d):  i+ap -> j+(a+t)p and back.
// Counting the choices gives the closed forms for nu_bar; removing maps whose
// automorphism group is strictly larger gives nu (an inclusion/exclusion over
// the prime divisors of p, equivalently a Moebius sum); equivalence classes
// number nu/p.

#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unimap/autgroup.hpp"
#include "unimap/maps.hpp"
#include "unimap/perm.hpp"

namespace unimap {

using BigInt = boost::multiprecision::cpp_int;

/// Enumeration/oracle size limits.  These are configuration: the CLI can
/// raise them, formula-only queries ignore them entirely.
struct CensusCaps {
    long long brute_kmax = 7; ///< full (2k-1)!! scans allowed up to this k
    long long gen_kmax = 10;  ///< constructive enumeration allowed up to this k
};

/// (2k-1)!! = (2k-1)(2k-3)...3.1, the number of free involutions in S_2k.
inline BigInt double_factorial_odd(long long k) {
    BigInt out = 1;
    for (long long i = 2 * k - 1; i >= 3; i -= 2) out *= i;
    return out;
}

namespace detail {

inline BigInt factorial(long long n) {
    BigInt out = 1;
    for (long long i = 2; i <= n; ++i) out *= i;
    return out;
}

inline BigInt pow_big(BigInt base, long long exp) {
    BigInt out = 1;
    while (exp-- > 0) out *= base;
    return out;
}

inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    assert(den != 0 && num % den == 0);
    return num / den;
}

inline std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> primes;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

inline void require_divisor(long long k, long long p) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (p < 1 || (2 * k) % p != 0)
        throw std::invalid_argument("p = " + std::to_string(p) + " does not divide 2k = " +
                                    std::to_string(2 * k));
}

} // namespace detail

/// Generation data for one free involution commuting with x^p: which of the
/// p cycles of x^p are fixed, and how the rest pair off (with shifts).
struct CommuterSpec {
    long long k = 1;
    long long p = 1;
    std::vector<int> fixed_cycles; ///< sorted subset of {0..p-1}; empty when d odd
    struct Pairing {
        int i = 0, j = 0;    ///< i < j, cycle indices
        long long shift = 0; ///< in [0, d)
    };
    std::vector<Pairing> pairs;
};

/// Realizes the spec as a free involution of degree 2k.  Distinct valid specs
/// yield distinct involutions.
inline Perm realize(const CommuterSpec& spec) {
    detail::require_divisor(spec.k, spec.p);
    const long long two_k = 2 * spec.k;
    const long long d = two_k / spec.p;
    if (!spec.fixed_cycles.empty() && d % 2 != 0)
        throw std::invalid_argument("fixed cycles require even d = 2k/p");
    std::vector<bool> covered(static_cast<std::size_t>(spec.p), false);
    const auto cover = [&](int j) {
        if (j < 0 || j >= spec.p || covered[static_cast<std::size_t>(j)])
            throw std::invalid_argument("cycle index " + std::to_string(j) +
                                        " out of range or repeated");
        covered[static_cast<std::size_t>(j)] = true;
    };
    std::vector<int> images(static_cast<std::size_t>(two_k));
    for (int j : spec.fixed_cycles) {
        cover(j);
        for (long long a = 0; a < d; ++a) {
            const long long dart = j + a * spec.p;
            images[static_cast<std::size_t>(dart)] = static_cast<int>((dart + spec.k) % two_k);
        }
    }
    for (const auto& pr : spec.pairs) {
        if (pr.i >= pr.j) throw std::invalid_argument("pair must have i < j");
        if (pr.shift < 0 || pr.shift >= d)
            throw std::invalid_argument("shift " + std::to_string(pr.shift) +
                                        " outside [0, " + std::to_string(d) + ")");
        cover(pr.i);
        cover(pr.j);
        for (long long a = 0; a < d; ++a) {
            const long long from = pr.i + a * spec.p;
            const long long to = pr.j + ((a + pr.shift) % d) * spec.p;
            images[static_cast<std::size_t>(from)] = static_cast<int>(to);
            images[static_cast<std::size_t>(to)] = static_cast<int>(from);
        }
    }
    for (bool c : covered)
        if (!c) throw std::invalid_argument("fixed cycles and pairs must partition the cycles");
    Perm y = Perm::from_images(std::move(images));
    assert(is_free_involution(y));
    assert(commute(y, power(standard_cycle(static_cast<int>(two_k)), spec.p)));
    return y;
}

/// Calls fn(spec, y) for every free involution y of degree 2k commuting with
/// x^p, exactly once each.  Order is deterministic: fixed-set mask ascending,
/// pairings in canonical order, shift vectors odometer-style.
template <typename Fn>
inline void for_each_commuting(long long k, long long p, Fn&& fn) {
    detail::require_divisor(k, p);
    const long long d = 2 * k / p;
    if (d % 2 == 0 && p > 62)
        throw std::invalid_argument("enumeration over 2^" + std::to_string(p) +
                                    " fixed-cycle sets is infeasible");
    const int pc = static_cast<int>(p);

    CommuterSpec spec;
    spec.k = k;
    spec.p = p;

    std::vector<CommuterSpec::Pairing> pairs;
    const auto run_shift_odometer = [&](auto&& emit) {
        if (pairs.empty()) {
            spec.pairs = pairs;
            emit();
            return;
        }
        for (auto& pr : pairs) pr.shift = 0;
        while (true) {
            spec.pairs = pairs;
            emit();
            std::size_t idx = pairs.size();
            while (idx > 0) {
                auto& digit = pairs[idx - 1].shift;
                if (++digit < d) break;
                digit = 0;
                --idx;
            }
            if (idx == 0) break;
        }
    };

    const auto recurse_pairings = [&](auto&& self, std::vector<int>& rest, auto&& emit) -> void {
        if (rest.empty()) {
            run_shift_odometer(emit);
            return;
        }
        const int first = rest.front();
        for (std::size_t pick = 1; pick < rest.size(); ++pick) {
            const int partner = rest[pick];
            std::vector<int> remaining;
            for (std::size_t i = 1; i < rest.size(); ++i)
                if (i != pick) remaining.push_back(rest[i]);
            pairs.push_back({first, partner, 0});
            self(self, remaining, emit);
            pairs.pop_back();
        }
    };

    const auto emit_current = [&] { fn(static_cast<const CommuterSpec&>(spec), realize(spec)); };

    if (d % 2 != 0) {
        // No fixed cycles possible; everything pairs off (p is even here).
        assert(p % 2 == 0);
        spec.fixed_cycles.clear();
        std::vector<int> all(pc);
        std::iota(all.begin(), all.end(), 0);
        recurse_pairings(recurse_pairings, all, emit_current);
        return;
    }
    for (std::uint64_t mask = 0; mask < (1ull << pc); ++mask) {
        std::vector<int> fixed, rest;
        for (int j = 0; j < pc; ++j)
            ((mask >> j) & 1ull ? fixed : rest).push_back(j);
        if (rest.size() % 2 != 0) continue;
        spec.fixed_cycles = fixed;
        recurse_pairings(recurse_pairings, rest, emit_current);
    }
}

/// Materialized stream of the involutions commuting with x^p.
inline std::vector<Perm> generate_commuting(long long k, long long p,
                                            const CensusCaps& caps = {}) {
    detail::require_divisor(k, p);
    if (k > caps.gen_kmax)
        throw std::invalid_argument("k = " + std::to_string(k) +
                                    " exceeds generation cap (gen_kmax = " +
                                    std::to_string(caps.gen_kmax) + ")");
    std::vector<Perm> out;
    for_each_commuting(k, p, [&](const CommuterSpec&, const Perm& y) { out.push_back(y); });
    return out;
}

/// nu_bar(k, p): the number of free involutions in S_2k commuting with x^p.
///
///   d even:  sum_{m=0}^{q} (d/2)^m p! / (m! (p-2m)!)
///   d odd:   (d/2)^q p! / q!          (read as d^q p! / (q! 2^q))
///
/// with d = 2k/p and q = floor(p/2).
inline BigInt nu_bar(long long k, long long p) {
    detail::require_divisor(k, p);
    const long long d = 2 * k / p;
    const long long q = p / 2;
    if (d % 2 != 0) {
        assert(p % 2 == 0); // 2k = p*d with d odd forces 2 | p
        return detail::exact_div(detail::pow_big(d, q) * detail::factorial(p),
                                 detail::factorial(q) * detail::pow_big(2, q));
    }
    BigInt total = 0;
    for (long long m = 0; m <= q; ++m)
        total += detail::pow_big(d / 2, m) *
                 detail::exact_div(detail::factorial(p),
                                   detail::factorial(m) * detail::factorial(p - 2 * m));
    return total;
}

/// nu(k, p) as the paper states it: nu_bar plus the alternating sums sigma_i
/// over products of i distinct prime divisors of p.
inline BigInt nu_alternating(long long k, long long p) {
    detail::require_divisor(k, p);
    const std::vector<long long> primes = detail::prime_divisors(p);
    BigInt total = 0;
    const std::size_t s = primes.size();
    for (std::uint64_t mask = 0; mask < (1ull << s); ++mask) {
        long long prod = 1;
        int bits = 0;
        for (std::size_t i = 0; i < s; ++i)
            if ((mask >> i) & 1ull) {
                prod *= primes[i];
                ++bits;
            }
        const BigInt term = nu_bar(k, p / prod);
        total += (bits % 2 == 0) ? term : -term;
    }
    return total;
}

/// Moebius function on 64-bit integers (trial factorization).
inline int moebius(long long n) {
    assert(n >= 1);
    int sign = 1;
    for (long long f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            n /= f;
            if (n % f == 0) return 0;
            sign = -sign;
        }
    }
    if (n > 1) sign = -sign;
    return sign;
}

/// nu(k, p) by Moebius inversion over the divisor lattice:
/// nu_p = sum_{e | p} mu(e) nu_bar(p/e).  Must agree with nu_alternating.
inline BigInt nu(long long k, long long p) {
    detail::require_divisor(k, p);
    BigInt total = 0;
    for (long long e : detail::divisors_ascending(p)) {
        const int mu_e = moebius(e);
        if (mu_e != 0) total += mu_e * nu_bar(k, p / e);
    }
    return total;
}

/// Number of equivalence classes with Aut(M) exactly <x^p>: nu_p / p.
inline BigInt class_count(long long k, long long p) {
    const BigInt n = nu(k, p);
    if (n % p != 0)
        throw std::logic_error("nu(" + std::to_string(k) + ", " + std::to_string(p) +
                               ") = " + n.str() + " is not divisible by p; counting bug");
    return n / p;
}

/// Oracle: enumerates all (2k-1)!! free involutions on 2k symbols, computes
/// each automorphism period by direct commutation tests, and tallies.  Every
/// divisor of 2k appears as a key (possibly with count 0).
inline std::map<long long, BigInt> brute_census(long long k, const CensusCaps& caps = {}) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (k > caps.brute_kmax)
        throw std::invalid_argument("k = " + std::to_string(k) +
                                    " exceeds brute-force cap (brute_kmax = " +
                                    std::to_string(caps.brute_kmax) + ")");
    const int two_k = static_cast<int>(2 * k);
    const std::vector<long long> divisors = detail::divisors_ascending(2 * k);
    std::vector<std::vector<int>> xp_images;
    const Perm x = standard_cycle(two_k);
    for (long long p : divisors) xp_images.push_back(power(x, p).images());

    std::map<long long, BigInt> tally;
    for (long long p : divisors) tally[p] = 0;

    std::vector<int> y(static_cast<std::size_t>(two_k), -1);
    const auto period_of = [&]() -> long long {
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const std::vector<int>& xp = xp_images[i];
            bool ok = true;
            for (int a = 0; a < two_k && ok; ++a)
                if (y[static_cast<std::size_t>(xp[static_cast<std::size_t>(a)])] !=
                    xp[static_cast<std::size_t>(y[static_cast<std::size_t>(a)])])
                    ok = false;
            if (ok) return divisors[i];
        }
        assert(false && "y always commutes with x^{2k} = id");
        return 2 * k;
    };

    const auto enumerate = [&](auto&& self) -> void {
        int first = -1;
        for (int i = 0; i < two_k; ++i)
            if (y[static_cast<std::size_t>(i)] < 0) {
                first = i;
                break;
            }
        if (first < 0) {
            tally[period_of()] += 1;
            return;
        }
        for (int partner = first + 1; partner < two_k; ++partner) {
            if (y[static_cast<std::size_t>(partner)] >= 0) continue;
            y[static_cast<std::size_t>(first)] = partner;
            y[static_cast<std::size_t>(partner)] = first;
            self(self);
            y[static_cast<std::size_t>(first)] = -1;
            y[static_cast<std::size_t>(partner)] = -1;
        }
    };
    enumerate(enumerate);
    return tally;
}

/// One canonical representative per equivalence class whose automorphism
/// group is exactly <x^p>; the list has class_count(k, p) entries, sorted.
inline std::vector<OneVertexMap> class_representatives(long long k, long long p,
                                                       const CensusCaps& caps = {}) {
    detail::require_divisor(k, p);
    if (k > caps.gen_kmax)
        throw std::invalid_argument("k = " + std::to_string(k) +
                                    " exceeds generation cap (gen_kmax = " +
                                    std::to_string(caps.gen_kmax) + ")");
    std::set<Perm> canonical;
    for_each_commuting(k, p, [&](const CommuterSpec&, const Perm& y) {
        const OneVertexMap m(k, y);
        if (aut_period(m) == p) canonical.insert(aut_data(m).canonical_y);
    });
    std::vector<OneVertexMap> out;
    for (const Perm& y : canonical) out.emplace_back(k, y);
    return out;
}

/// Closed-form census row for one divisor p of 2k.
struct CensusRow {
    long long k = 1;
    long long p = 1;
    BigInt nu_bar;  ///< involutions commuting with x^p
    BigInt nu;      ///< maps with Aut exactly <x^p>
    BigInt classes; ///< equivalence classes: nu / p
};

inline std::vector<CensusRow> census_table(long long k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<CensusRow> rows;
    for (long long p : detail::divisors_ascending(2 * k)) {
        CensusRow row;
        row.k = k;
        row.p = p;
        row.nu_bar = nu_bar(k, p);
        row.nu = nu(k, p);
        row.classes = class_count(k, p);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace unimap

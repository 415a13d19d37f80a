#pragma once

// End-to-end self-checks: each suite replays one of the library's identities
// (census partition, oracle equality, generator completeness, extension-table
// indices, classical-curve rows, genus double-computation) and reports the
// first counterexample if any.  The census suites accept an injectable
// nu_bar so fault-injection tests can confirm they actually detect tampering.

#include <functional>
#include <string>
#include <vector>

#include "unimap/census.hpp"
#include "unimap/classify.hpp"
#include "unimap/riemann.hpp"

namespace unimap::verify {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

using NuBarFn = std::function<BigInt(long long, long long)>;

inline NuBarFn default_nu_bar() {
    return [](long long k, long long p) { return nu_bar(k, p); };
}

inline BigInt nu_from(const NuBarFn& nb, long long k, long long p) {
    BigInt total = 0;
    for (long long e : detail::divisors_ascending(p)) {
        const int mu_e = moebius(e);
        if (mu_e != 0) total += mu_e * nb(k, p / e);
    }
    return total;
}

/// Sum over p | 2k of nu_p must be (2k-1)!!, each nu_p divisible by p,
/// nu_bar_1 = nu_1 = 1 and nu_bar_2k = (2k-1)!!.
inline SuiteResult partition_identity(long long kmax, const NuBarFn& nb = default_nu_bar()) {
    SuiteResult r{"partition-identity", true, ""};
    for (long long k = 1; k <= kmax; ++k) {
        const BigInt want = double_factorial_odd(k);
        if (nb(k, 1) != 1 || nu_from(nb, k, 1) != 1) {
            return {r.name, false,
                    "nu_bar(" + std::to_string(k) + ", 1) or nu(" + std::to_string(k) +
                        ", 1) != 1"};
        }
        if (nb(k, 2 * k) != want) {
            return {r.name, false,
                    "nu_bar(" + std::to_string(k) + ", " + std::to_string(2 * k) +
                        ") != (2k-1)!!"};
        }
        BigInt total = 0;
        for (long long p : detail::divisors_ascending(2 * k)) {
            const BigInt np = nu_from(nb, k, p);
            if (np % p != 0)
                return {r.name, false,
                        "first counterexample at (k=" + std::to_string(k) +
                            ", p=" + std::to_string(p) + "): p does not divide nu = " +
                            np.str()};
            total += np;
        }
        if (total != want)
            return {r.name, false,
                    "first counterexample at k=" + std::to_string(k) + ": sum of nu_p = " +
                        total.str() + " != (2k-1)!! = " + want.str()};
    }
    r.detail = "k = 1.." + std::to_string(kmax);
    return r;
}

/// brute_census(k)[p] must equal nu(k, p) for every divisor.
inline SuiteResult oracle_equality(long long kmax, const CensusCaps& caps = {},
                                   const NuBarFn& nb = default_nu_bar()) {
    SuiteResult r{"oracle-equality", true, ""};
    const long long limit = std::min(kmax, caps.brute_kmax);
    for (long long k = 1; k <= limit; ++k) {
        const std::map<long long, BigInt> tally = brute_census(k, caps);
        for (const auto& [p, count] : tally) {
            const BigInt formula = nu_from(nb, k, p);
            if (count != formula)
                return {r.name, false,
                        "first counterexample at (k=" + std::to_string(k) +
                            ", p=" + std::to_string(p) + "): brute " + count.str() +
                            " != formula " + formula.str()};
        }
    }
    r.detail = "k = 1.." + std::to_string(limit);
    return r;
}

/// The constructive stream must emit exactly nu_bar distinct commuting free
/// involutions.
inline SuiteResult generator_completeness(long long kmax, const CensusCaps& caps = {},
                                          const NuBarFn& nb = default_nu_bar()) {
    SuiteResult r{"generator-completeness", true, ""};
    const long long limit = std::min(kmax, caps.gen_kmax);
    for (long long k = 1; k <= limit; ++k) {
        const Perm x = standard_cycle(static_cast<int>(2 * k));
        for (long long p : detail::divisors_ascending(2 * k)) {
            std::set<Perm> seen;
            bool sound = true;
            const Perm xp = power(x, p);
            for_each_commuting(k, p, [&](const CommuterSpec&, const Perm& y) {
                if (!is_free_involution(y) || !commute(y, xp) || !seen.insert(y).second)
                    sound = false;
            });
            if (!sound || BigInt(seen.size()) != nb(k, p))
                return {r.name, false,
                        "first counterexample at (k=" + std::to_string(k) +
                            ", p=" + std::to_string(p) + "): stream has " +
                            std::to_string(seen.size()) + " distinct elements, nu_bar = " +
                            nb(k, p).str()};
        }
    }
    r.detail = "k = 1.." + std::to_string(limit);
    return r;
}

/// Symbolic sweep of the extension catalogue: mu(sigma) must equal
/// index * mu(sigma') on every instantiated row (the multiplicative form also
/// covers euclidean instances where both measures vanish).
inline SuiteResult catalogue_indices(long long sweep_max = 50) {
    SuiteResult r{"extension-catalogue-indices", true, ""};
    std::vector<Signature> inputs;
    for (long long k = 4; k <= sweep_max; ++k) inputs.emplace_back(0, std::vector<long long>{k, k, k});
    for (long long k = 3; k <= sweep_max; ++k)
        for (long long u = 2; u <= k; ++u)
            if (k % u == 0) inputs.emplace_back(0, std::vector<long long>{k, k, u});
    for (long long k = 2; k <= sweep_max; ++k)
        inputs.emplace_back(0, std::vector<long long>{4 * k, 4 * k, k});
    for (long long k = 3; k <= sweep_max; ++k) {
        inputs.emplace_back(0, std::vector<long long>{2 * k, 2 * k, k});
        inputs.emplace_back(0, std::vector<long long>{3 * k, k, 3});
    }
    inputs.emplace_back(0, std::vector<long long>{8, 8, 4});
    long long rows = 0;
    for (const Signature& sigma : inputs) {
        for (const ExtensionCase& e : admissible_extensions(sigma)) {
            ++rows;
            if (mu(e.sigma) != e.index * mu(e.sigma_prime))
                return {r.name, false,
                        "row " + e.case_name + " at " + sigma.str() + ": mu(sigma) != " +
                            std::to_string(e.index) + " * mu(sigma')"};
        }
    }
    r.detail = std::to_string(rows) + " instantiated rows";
    return r;
}

/// The six classical curve rows: generating vectors, signatures and genera.
inline SuiteResult classical_actions(long long g_max = 10) {
    SuiteResult r{"classical-actions", true, ""};
    const auto fail = [&](const std::string& what) { return SuiteResult{r.name, false, what}; };
    for (long long g = 2; g <= g_max; ++g) {
        const GenVector w1 = normal_form_vector(4 * g + 2, 2 * g);
        if (w1.c != 2 * g + 1 || vector_signature(w1) != Signature(0, {4 * g + 2, 2 * g + 1, 2}) ||
            rh_genus(4 * g + 2, vector_signature(w1)) != g)
            return fail("Wiman I at g = " + std::to_string(g));
        const GenVector w2 = normal_form_vector(4 * g, 2 * g - 1);
        if (w2.c != 2 * g || vector_signature(w2) != Signature(0, {4 * g, 4 * g, 2}) ||
            rh_genus(4 * g, vector_signature(w2)) != g)
            return fail("Wiman II at g = " + std::to_string(g));
        const GenVector am = normal_form_vector(2 * g + 2, 1);
        if (am.c != 2 * g || vector_signature(am) != Signature(0, {2 * g + 2, 2 * g + 2, g + 1}) ||
            rh_genus(2 * g + 2, vector_signature(am)) != g)
            return fail("Accola-Maclachlan at g = " + std::to_string(g));
        if (g % 4 == 3) {
            const GenVector ku = normal_form_vector(2 * g + 2, g + 2);
            if (ku.c != g - 1 ||
                vector_signature(ku) != Signature(0, {2 * g + 2, 2 * g + 2, g + 1}) ||
                rh_genus(2 * g + 2, vector_signature(ku)) != g)
                return fail("Kulkarni at g = " + std::to_string(g));
        }
    }
    const GenVector w3 = normal_form_vector(12, 3);
    if (w3.c != 8 || vector_signature(w3) != Signature(0, {12, 4, 3}) ||
        rh_genus(12, vector_signature(w3)) != 3)
        return fail("Wiman III");
    const GenVector kl = normal_form_vector(7, 2);
    if (kl.c != 4 || vector_signature(kl) != Signature(0, {7, 7, 7}) ||
        rh_genus(7, vector_signature(kl)) != 3)
        return fail("Klein");
    r.detail = "g = 2.." + std::to_string(g_max) + " plus Wiman III and Klein";
    return r;
}

/// Every strictly edge-transitive (k, t): face census matches the predicted
/// cycle structure and the Euler genus matches Riemann-Hurwitz (the datum
/// constructor throws on mismatch).
inline SuiteResult genus_double_check(long long k_max = 50) {
    SuiteResult r{"genus-double-check", true, ""};
    long long pairs = 0;
    for (long long k = 2; k <= k_max; ++k) {
        for (long long t = 0; t < k; ++t) {
            if (k % 2 != 0 && t == (k - 1) / 2) continue;
            try {
                const EdgeTransitiveDatum d = edge_transitive_datum(k, t);
                if (profile(pairing_map(k, t)).genus != d.genus)
                    return {r.name, false,
                            "genus mismatch at (k=" + std::to_string(k) +
                                ", t=" + std::to_string(t) + ")"};
                ++pairs;
            } catch (const std::exception& e) {
                return {r.name, false,
                        "failure at (k=" + std::to_string(k) + ", t=" + std::to_string(t) +
                            "): " + e.what()};
            }
        }
    }
    r.detail = std::to_string(pairs) + " (k, t) pairs, k <= " + std::to_string(k_max);
    return r;
}

inline std::vector<SuiteResult> run_all(long long kmax, const CensusCaps& caps = {}) {
    return {
        partition_identity(std::max(kmax, 8ll)),
        oracle_equality(kmax, caps),
        generator_completeness(std::min(kmax, 6ll), caps),
        catalogue_indices(),
        classical_actions(),
        genus_double_check(),
    };
}

} // namespace unimap::verify

#pragma once

// Exact permutation algebra on the dart set {0, ..., degree-1}, with
// disjoint-cycle notation I/O.
//
// Composition convention: compose(a, b) applies b first, then a, i.e.
// compose(a, b)(i) = a(b(i)).  Products written "yx^-1" elsewhere in this
// library mean compose(y, inverse(x)) under this convention.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace unimap {

/// Error thrown by cycle-notation parsing; the message names the offending
/// token and its character position.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An immutable permutation of {0, ..., degree()-1}.
class Perm {
public:
    /// Identity permutation of the given degree (>= 1).
    explicit Perm(int degree) : images_(static_cast<std::size_t>(check_degree(degree))) {
        std::iota(images_.begin(), images_.end(), 0);
    }

    /// Builds a permutation from its image table; validates bijectivity.
    static Perm from_images(std::vector<int> images) {
        const int n = static_cast<int>(images.size());
        if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
        std::vector<bool> seen(images.size(), false);
        for (int v : images) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("image value " + std::to_string(v) +
                                            " out of range [0," + std::to_string(n) + ")");
            if (seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("image value " + std::to_string(v) +
                                            " appears twice; not a bijection");
            seen[static_cast<std::size_t>(v)] = true;
        }
        return Perm(std::move(images), 0);
    }

    int degree() const { return static_cast<int>(images_.size()); }

    /// Image of dart i.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }

    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    // Lexicographic on (degree, images): identities at different degrees are
    // distinct values.
    friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.images_ <=> b.images_;
    }

private:
    Perm(std::vector<int> images, int) : images_(std::move(images)) {}
    static int check_degree(int degree) {
        if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
        return degree;
    }
    std::vector<int> images_;
};

namespace detail {
inline void require_same_degree(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("degree mismatch: " + std::to_string(a.degree()) +
                                    " vs " + std::to_string(b.degree()));
}
} // namespace detail

/// compose(a, b)(i) = a(b(i)): b acts first.
inline Perm compose(const Perm& a, const Perm& b) {
    detail::require_same_degree(a, b);
    std::vector<int> images(static_cast<std::size_t>(a.degree()));
    for (int i = 0; i < a.degree(); ++i) images[static_cast<std::size_t>(i)] = a(b(i));
    return Perm::from_images(std::move(images));
}

inline Perm inverse(const Perm& p) {
    std::vector<int> images(static_cast<std::size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i) images[static_cast<std::size_t>(p(i))] = i;
    return Perm::from_images(std::move(images));
}

/// p^n for any integer n (binary powering; negative n through the inverse).
inline Perm power(const Perm& p, long long n) {
    Perm base = n < 0 ? inverse(p) : p;
    unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1ull
                                 : static_cast<unsigned long long>(n);
    Perm acc(p.degree());
    while (e > 0) {
        if (e & 1ull) acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

/// h^-1 g h under the fixed convention: conjugate(g, h)(i) = h^-1(g(h(i))).
inline Perm conjugate(const Perm& g, const Perm& h) {
    return compose(inverse(h), compose(g, h));
}

inline bool commute(const Perm& a, const Perm& b) {
    detail::require_same_degree(a, b);
    for (int i = 0; i < a.degree(); ++i)
        if (a(b(i)) != b(a(i))) return false;
    return true;
}

/// Disjoint cycles in canonical form: each cycle rotated so its minimum comes
/// first, cycles sorted by minimum, fixed points present as 1-cycles.
struct CycleList {
    int degree = 0;
    std::vector<std::vector<int>> cycles;

    friend bool operator==(const CycleList&, const CycleList&) = default;
};

inline CycleList cycle_decomposition(const Perm& p) {
    CycleList out;
    out.degree = p.degree();
    std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
    for (int start = 0; start < p.degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        for (int i = start; !seen[static_cast<std::size_t>(i)]; i = p(i)) {
            seen[static_cast<std::size_t>(i)] = true;
            cycle.push_back(i);
        }
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

/// Multiset of cycle lengths (sorted ascending); fixed points count as 1s.
inline std::vector<int> cycle_type(const Perm& p) {
    std::vector<int> type;
    for (const auto& c : cycle_decomposition(p).cycles)
        type.push_back(static_cast<int>(c.size()));
    std::sort(type.begin(), type.end());
    return type;
}

/// True iff p^2 = id and p has no fixed point.
inline bool is_free_involution(const Perm& p) {
    for (int i = 0; i < p.degree(); ++i) {
        if (p(i) == i) return false;
        if (p(p(i)) != i) return false;
    }
    return true;
}

/// The standard 2k-cycle (0 1 2 ... 2k-1): i -> i+1 mod 2k.
inline Perm standard_cycle(int two_k) {
    if (two_k < 2 || two_k % 2 != 0)
        throw std::invalid_argument("standard_cycle needs an even degree >= 2, got " +
                                    std::to_string(two_k));
    std::vector<int> images(static_cast<std::size_t>(two_k));
    for (int i = 0; i < two_k; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % two_k;
    return Perm::from_images(std::move(images));
}

/// Renders a cycle list; singleton cycles are omitted unless requested (face
/// circuits print them, permutations do not).  The identity prints as "()".
inline std::string format_cycles(const CycleList& cl, bool with_fixed_points = false) {
    std::string out;
    for (const auto& cycle : cl.cycles) {
        if (cycle.size() == 1 && !with_fixed_points) continue;
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(cycle[i]);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

/// Canonical cycle notation of p (fixed points omitted, identity "()").
inline std::string to_cycle_string(const Perm& p) {
    return format_cycles(cycle_decomposition(p), false);
}

/// Parses whitespace-tolerant disjoint-cycle notation, e.g. "(0 10)(1 17)".
/// Darts not named are fixed points.  Degree must be given explicitly.
inline Perm parse_cycles(const std::string& text, int degree) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);

    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    const auto fail = [&](const std::string& msg, std::size_t at) -> void {
        throw ParseError(msg + " at position " + std::to_string(at));
    };

    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            fail(std::string("expected '(' but found '") + text[pos] + "'", pos);
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (pos >= text.size()) fail("unterminated cycle; missing ')'", pos);
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                fail(std::string("expected integer or ')' but found '") + text[pos] + "'", pos);
            const std::size_t tok_start = pos;
            long long value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                if (value > degree) value = degree; // clamp, reported below
                ++pos;
            }
            if (value >= degree)
                fail("symbol " + text.substr(tok_start, pos - tok_start) + " >= degree " +
                         std::to_string(degree),
                     tok_start);
            const int sym = static_cast<int>(value);
            if (used[static_cast<std::size_t>(sym)])
                fail("repeated symbol " + std::to_string(sym), tok_start);
            used[static_cast<std::size_t>(sym)] = true;
            cycle.push_back(sym);
        }
        for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
            images[static_cast<std::size_t>(cycle[i])] = cycle[i + 1];
        if (cycle.size() >= 2) images[static_cast<std::size_t>(cycle.back())] = cycle.front();
        skip_ws();
    }
    return Perm::from_images(std::move(images));
}

} // namespace unimap

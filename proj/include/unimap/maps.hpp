#pragma once

// Maps on oriented surfaces as permutation pairs (x, y): x rotates the darts
// around each vertex, y is the free involution swapping the two darts of each
// edge.  Face boundaries are the cycles of yx^-1; genus comes from the Euler
// formula V - E + F = 2 - 2g.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "unimap/perm.hpp"

namespace unimap {

/// A validated map: y is a free involution and <x, y> is transitive on darts.
class DartMap {
public:
    DartMap(Perm x, Perm y) : x_(std::move(x)), y_(std::move(y)) {
        detail::require_same_degree(x_, y_);
        if (!is_free_involution(y_))
            throw std::invalid_argument("y is not a free involution: " + to_cycle_string(y_));
        check_transitive();
    }

    const Perm& x() const { return x_; }
    const Perm& y() const { return y_; }
    int degree() const { return x_.degree(); }

    friend bool operator==(const DartMap&, const DartMap&) = default;

private:
    void check_transitive() const {
        // Orbit of dart 0 under <x, y>; a proper orbit witnesses a
        // disconnected underlying graph.
        std::vector<bool> seen(static_cast<std::size_t>(degree()), false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 0;
        while (!stack.empty()) {
            const int d = stack.back();
            stack.pop_back();
            ++count;
            for (int next : {x_(d), y_(d)}) {
                if (!seen[static_cast<std::size_t>(next)]) {
                    seen[static_cast<std::size_t>(next)] = true;
                    stack.push_back(next);
                }
            }
        }
        if (count != degree()) {
            std::string orbit;
            for (int i = 0; i < degree(); ++i)
                if (seen[static_cast<std::size_t>(i)]) orbit += (orbit.empty() ? "" : " ") + std::to_string(i);
            throw std::invalid_argument("<x,y> is not transitive; orbit of dart 0 is {" + orbit +
                                        "} of size " + std::to_string(count) + " < " +
                                        std::to_string(degree()));
        }
    }

    Perm x_;
    Perm y_;
};

/// A one-vertex map with k edges: x is implicitly the standard 2k-cycle, so
/// the map is determined by its free involution y.
class OneVertexMap {
public:
    OneVertexMap(long long k, Perm y) : k_(k), y_(std::move(y)) {
        if (k < 1) throw std::invalid_argument("k must be >= 1");
        if (y_.degree() != 2 * k)
            throw std::invalid_argument("y has degree " + std::to_string(y_.degree()) +
                                        ", expected 2k = " + std::to_string(2 * k));
        if (!is_free_involution(y_))
            throw std::invalid_argument("y is not a free involution: " + to_cycle_string(y_));
    }

    long long k() const { return k_; }
    const Perm& y() const { return y_; }
    Perm x() const { return standard_cycle(static_cast<int>(2 * k_)); }
    DartMap as_dart_map() const { return DartMap(x(), y_); }

    friend bool operator==(const OneVertexMap&, const OneVertexMap&) = default;
    friend std::strong_ordering operator<=>(const OneVertexMap& a, const OneVertexMap& b) {
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        return a.y_ <=> b.y_;
    }

private:
    long long k_;
    Perm y_;
};

inline OneVertexMap one_vertex(long long k, Perm y) { return OneVertexMap(k, std::move(y)); }

/// Boundary circuits of the faces: the cycles of yx^-1, one circuit per face,
/// every dart in exactly one circuit (singleton circuits are real faces).
inline CycleList face_circuits(const DartMap& m) {
    return cycle_decomposition(compose(m.y(), inverse(m.x())));
}

struct MapProfile {
    long long vertices = 0;
    long long edges = 0;
    long long faces = 0;
    long long genus = 0;
    long long type_n = 0; ///< lcm of vertex valences
    long long type_r = 0; ///< lcm of face valences
    std::vector<int> vertex_valences; ///< sorted ascending
    std::vector<int> face_valences;   ///< sorted ascending
    bool uniform = false;

    friend bool operator==(const MapProfile&, const MapProfile&) = default;
};

inline MapProfile profile(const DartMap& m) {
    MapProfile p;
    const CycleList vertices = cycle_decomposition(m.x());
    const CycleList faces = face_circuits(m);
    for (const auto& c : vertices.cycles) p.vertex_valences.push_back(static_cast<int>(c.size()));
    for (const auto& c : faces.cycles) p.face_valences.push_back(static_cast<int>(c.size()));
    std::sort(p.vertex_valences.begin(), p.vertex_valences.end());
    std::sort(p.face_valences.begin(), p.face_valences.end());
    p.vertices = static_cast<long long>(vertices.cycles.size());
    p.faces = static_cast<long long>(faces.cycles.size());
    p.edges = m.degree() / 2;
    const long long chi = p.vertices - p.edges + p.faces;
    if (chi % 2 != 0 || chi > 2)
        throw std::logic_error("Euler characteristic " + std::to_string(chi) +
                               " impossible for a valid map");
    p.genus = (2 - chi) / 2;
    p.type_n = 1;
    for (int v : p.vertex_valences) p.type_n = std::lcm(p.type_n, static_cast<long long>(v));
    p.type_r = 1;
    for (int v : p.face_valences) p.type_r = std::lcm(p.type_r, static_cast<long long>(v));
    p.uniform =
        std::all_of(p.vertex_valences.begin(), p.vertex_valences.end(),
                    [&](int v) { return v == p.type_n; }) &&
        std::all_of(p.face_valences.begin(), p.face_valences.end(),
                    [&](int v) { return v == p.type_r; });
    return p;
}

inline MapProfile profile(const OneVertexMap& m) { return profile(m.as_dart_map()); }

/// Map literals: "k=<int>; y=<cycles>" for one-vertex maps,
/// "x=<cycles>; y=<cycles>; degree=<int>" for general maps.
using MapLiteral = std::variant<OneVertexMap, DartMap>;

inline MapLiteral parse_map_literal(const std::string& text) {
    std::optional<std::string> x_text, y_text;
    std::optional<long long> k, degree;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ';'))
            ++pos;
        if (pos >= text.size()) break;
        const std::size_t eq = text.find('=', pos);
        if (eq == std::string::npos)
            throw ParseError("expected '<key>=<value>' at position " + std::to_string(pos));
        std::string key = text.substr(pos, eq - pos);
        key.erase(std::remove_if(key.begin(), key.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  key.end());
        std::size_t end = text.find(';', eq + 1);
        if (end == std::string::npos) end = text.size();
        const std::string value = text.substr(eq + 1, end - eq - 1);
        if (key == "k") k = std::stoll(value);
        else if (key == "degree") degree = std::stoll(value);
        else if (key == "x") x_text = value;
        else if (key == "y") y_text = value;
        else throw ParseError("unknown key '" + key + "' at position " + std::to_string(pos));
        pos = end;
    }
    if (!y_text) throw ParseError("map literal needs a y=<cycles> entry");
    if (k && !x_text && !degree) {
        if (*k < 1) throw std::invalid_argument("k must be >= 1");
        return OneVertexMap(*k, parse_cycles(*y_text, static_cast<int>(2 * *k)));
    }
    if (x_text && degree && !k) {
        const int n = static_cast<int>(*degree);
        return DartMap(parse_cycles(*x_text, n), parse_cycles(*y_text, n));
    }
    throw ParseError("map literal must be either 'k=<int>; y=<cycles>' or "
                     "'x=<cycles>; y=<cycles>; degree=<int>'");
}

inline std::string to_literal(const OneVertexMap& m) {
    return "k=" + std::to_string(m.k()) + "; y=" + to_cycle_string(m.y());
}

inline std::string to_literal(const DartMap& m) {
    return "x=" + to_cycle_string(m.x()) + "; y=" + to_cycle_string(m.y()) +
           "; degree=" + std::to_string(m.degree());
}

} // namespace unimap

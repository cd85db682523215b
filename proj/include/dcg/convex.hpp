#pragma once

#include <bitset>
#include <compare>
#include <stdexcept>
#include <vector>

namespace dcg {

// A convex point set: 2n points identified with the integers 0..2n-1 in
// counterclockwise order. Every geometric predicate reduces to cyclic index
// arithmetic; no coordinates anywhere.
struct ConvexConfig {
    int size;

    explicit ConvexConfig(int points) : size(points) {
        if (points < 2 || points % 2 != 0)
            throw std::invalid_argument("convex config needs an even point count >= 2");
    }

    bool valid_point(int p) const { return 0 <= p && p < size; }
    int next(int p) const { return p + 1 == size ? 0 : p + 1; }
    int prev(int p) const { return p == 0 ? size - 1 : p - 1; }

    // number of points strictly inside the ccw arc from a to b
    int arc_gap(int a, int b) const { return (b - a + size - 1) % size; }

    // x strictly inside the ccw arc (a, b)
    bool in_open_arc(int x, int a, int b) const {
        int rel = (x - a + size) % size;
        return rel > 0 && rel < (b - a + size) % size;
    }

    friend bool operator==(const ConvexConfig&, const ConvexConfig&) = default;
};

struct Chord {
    int a = 0, b = 0;  // endpoint-normalized: a < b

    Chord() = default;
    Chord(int x, int y) : a(x), b(y) {
        if (a > b) std::swap(a, b);
    }

    bool touches(int p) const { return a == p || b == p; }
    int other(int p) const { return a == p ? b : a; }

    friend bool operator==(const Chord&, const Chord&) = default;
    friend auto operator<=>(const Chord&, const Chord&) = default;
};

enum class EdgeClass { PerimeterEven, PerimeterOdd, Diagonal };
enum class Parity { Even, Odd };

bool chords_cross(const ConvexConfig& cfg, Chord e1, Chord e2);
EdgeClass classify_edge(const ConvexConfig& cfg, Chord e);
bool is_perimeter(const ConvexConfig& cfg, Chord e);
bool is_noncrossing(const ConvexConfig& cfg, const std::vector<Chord>& edges);

// Perimeter edge {i, i+1 mod 2n} is even iff i is even.
inline Parity perimeter_parity(const ConvexConfig& cfg, Chord e) {
    int i = (e.b == cfg.size - 1 && e.a == 0) ? e.b : e.a;
    return i % 2 == 0 ? Parity::Even : Parity::Odd;
}

// Bitmask machinery over the chord universe of one configuration.
// 256 bits cover every configuration this project runs at desk scale.
using ChordSet = std::bitset<256>;

struct ChordTable {
    ConvexConfig cfg;
    std::vector<Chord> chords;             // all chords, lexicographic
    std::vector<std::vector<int>> index;   // index[a][b] -> position in chords
    std::vector<ChordSet> cross;           // cross[i]: chords properly crossing chords[i]

    explicit ChordTable(const ConvexConfig& c);

    int idx(Chord e) const { return index[e.a][e.b]; }
    ChordSet mask_of(const std::vector<Chord>& edges) const {
        ChordSet s;
        for (Chord e : edges) s.set(idx(e));
        return s;
    }
};

}  // namespace dcg

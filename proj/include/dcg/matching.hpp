#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcg/convex.hpp"

namespace dcg {

// A plane perfect matching on a convex configuration. Edges are kept in
// canonical sorted order, so equality is set equality and the enumeration
// order below is reproducible across runs.
class PlaneMatching {
public:
    static PlaneMatching from_chords(const ConvexConfig& cfg, std::vector<Chord> chords);

    const std::vector<Chord>& edges() const { return edges_; }
    int points() const { return points_; }
    ConvexConfig config() const { return ConvexConfig(points_); }

    bool contains(Chord e) const;
    // the matching edge covering point p
    Chord edge_at(int p) const;
    std::vector<Chord> diagonals() const;
    std::vector<Chord> perimeter_edges() const;

    friend bool operator==(const PlaneMatching&, const PlaneMatching&) = default;
    friend auto operator<=>(const PlaneMatching&, const PlaneMatching&) = default;

private:
    PlaneMatching(int points, std::vector<Chord> sorted) : points_(points), edges_(std::move(sorted)) {}
    int points_ = 0;
    std::vector<Chord> edges_;
    friend std::vector<PlaneMatching> enumerate_matchings(const ConvexConfig&);
};

// All plane perfect matchings in lexicographic order of their sorted chord
// lists; the count is the Catalan number C(n).
std::vector<PlaneMatching> enumerate_matchings(const ConvexConfig& cfg);

PlaneMatching perimeter_matching(const ConvexConfig& cfg, Parity parity);

// --- semicycles and rotation -------------------------------------------

enum class SemicycleKind { InsideCycle, Semiear };

// X: k >= 2 matching edges such that no edge of the host matching meets the
// interior of conv(X). boundary is the 2k-cycle around conv(X); the kind is
// InsideCycle iff the boundary carries at least two diagonals.
struct Semicycle {
    std::vector<Chord> members;   // sorted
    std::vector<Chord> boundary;  // consecutive hull sides of the member endpoints
    SemicycleKind kind = SemicycleKind::Semiear;

    std::vector<int> vertex_list() const;  // sorted endpoint list
};

std::optional<Semicycle> is_semicycle(const PlaneMatching& m, const std::vector<Chord>& x);

// Replace X by boundary(X) \ X. The symmetric difference of input and output
// is exactly the boundary cycle.
PlaneMatching rotate(const PlaneMatching& m, const Semicycle& x);

// Simultaneous rotation of pairwise vertex-disjoint semicycles.
PlaneMatching rotate_all(const PlaneMatching& m, const std::vector<Semicycle>& xs);

// All semicycles of m (the matching-edge subsets passing is_semicycle).
// Exponential in n; intended for desk-scale searches only.
std::vector<Semicycle> all_semicycles(const PlaneMatching& m);

// --- dual tree -----------------------------------------------------------

// blue = odd perimeter parity, red = even
enum class RegionColor { Blue, Red };

struct DualTreeNode {
    std::vector<int> points;             // region polygon, ccw
    std::vector<Chord> diagonals;        // bounding matching diagonals
    std::vector<Chord> perimeter_edges;  // matching perimeter edges of the region
    RegionColor color = RegionColor::Blue;
    bool leaf = false;
    std::vector<int> neighbors;
};

struct DualTree {
    std::vector<DualTreeNode> nodes;
    int blue_leaves = 0;
    int red_leaves = 0;
};

// Regions of conv(S) delimited by the matching's diagonals, as a properly
// 2-colored tree. Node count = diagonal count + 1; leaves are the semiears.
DualTree dual_tree(const PlaneMatching& m);

// The matching edges of one dual-tree region, as a semicycle. For the single
// region of a perimeter matching this is the whole matching.
Semicycle region_semicycle(const PlaneMatching& m, const DualTreeNode& node);

// One semiear per leaf of the dual tree, ordered by smallest region point.
std::vector<Semicycle> semiears(const PlaneMatching& m);

Parity semiear_parity(const ConvexConfig& cfg, const Semicycle& ear);

// --- special matching classes -------------------------------------------

enum class MatchingClass {
    PerimeterEven,
    PerimeterOdd,
    TwoSemiearEven,
    TwoSemiearOdd,
    NearTwoSemiearEven,
    NearTwoSemiearOdd,
    Other,
};

MatchingClass classify_matching(const PlaneMatching& m);
std::string to_string(MatchingClass c);

// Canonical representatives used by the distance lower-bound checks.
PlaneMatching two_semiear_matching(const ConvexConfig& cfg, Parity parity);      // 2n = 4k
PlaneMatching near_two_semiear_matching(const ConvexConfig& cfg, Parity parity); // 2n = 4k+2

// --- symmetric difference --------------------------------------------------

enum class CycleTag { InsideCycle, Ear, Crossing };

struct AltCycle {
    std::vector<Chord> m1_edges;
    std::vector<Chord> m2_edges;
    CycleTag tag = CycleTag::Crossing;
};

struct SymDiffStructure {
    std::vector<Chord> common;
    std::vector<AltCycle> cycles;

    bool all_inside_cycles() const;
};

// Decompose M1 (symmetric difference) M2 into alternating cycles. A cycle is
// tagged Ear/InsideCycle when its edges are mutually non-crossing (then the
// M1 half is a semicycle of M1 and the tag follows the boundary's diagonal
// count), Crossing otherwise.
SymDiffStructure sym_diff_structure(const PlaneMatching& m1, const PlaneMatching& m2);

// --- boundary areas ---------------------------------------------------------

// A face of the arrangement of the two matchings that touches the hull on a
// run of consecutive points, is bounded by matching edges only, and has at
// least one proper crossing on its boundary.
struct BoundaryArea {
    std::vector<int> points;           // the consecutive run, ccw
    std::vector<Chord> bounding_edges; // matching edges on the face boundary
};

std::vector<BoundaryArea> boundary_areas(const PlaneMatching& m1, const PlaneMatching& m2);

}  // namespace dcg

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dcg/compat.hpp"
#include "dcg/matching.hpp"

namespace dcg {

// One move in the compatibility graph: a witness drawing valid for both the
// matching before and after. Steps produced by the constructive routines
// rotate an explicit set of disjoint inside cycles; BFS fallback steps at
// small sizes carry only the witness.
struct RotationStep {
    PlaneMatching before;
    PlaneMatching after;
    Witness witness;
    std::vector<Semicycle> rotated;  // semicycles of `before`; empty for decider steps
    bool by_rotation = false;
};

struct RotationSequence {
    PlaneMatching start;
    PlaneMatching end;
    std::vector<RotationStep> steps;

    size_t length() const { return steps.size(); }
};

// Throws unless the sequence chains correctly and every step validates.
void require_valid_sequence(const RotationSequence& seq);

RotationSequence reverse_sequence(const RotationSequence& seq);

// A spanning tree disjoint compatible to both m and the matching obtained by
// rotating all given (pairwise disjoint, inside) cycles at once: per-cycle
// fans from two diagonal endpoints, plus triangulation completions on the
// parts outside the cycle hulls, merged and cycle-broken.
Witness tree_for_inside_cycles(const PlaneMatching& m, const std::vector<Semicycle>& cycles);

// Rotating a k-semiear with k >= 6 in three inside-cycle steps.
RotationSequence ear_rotation_sequence(const PlaneMatching& m, const Semicycle& ear);

enum class RouteClass { A1, A2, A3, IsPerimeter };

struct PerimeterRoutes {
    RouteClass cls = RouteClass::IsPerimeter;
    RotationSequence to_blue;  // to the odd perimeter matching
    RotationSequence to_red;   // to the even perimeter matching
};

// Case analysis on the dual tree's leaf colors; needs 2n >= 12.
PerimeterRoutes route_to_perimeter(const PlaneMatching& m);

// A validated sequence of at most five steps; 2n = 10 falls back to BFS over
// the computed tree-compatibility graph.
RotationSequence tree_path_between(const PlaneMatching& m1, const PlaneMatching& m2);

// --- caterpillar machinery ---------------------------------------------------

// Greedy one-legged caterpillar piece along one side of a matching edge:
// spans both endpoints and every point strictly between them on that side,
// shares no edge with and crosses nothing of the host matching. The walk
// starts at `start` (degree 1) and ends at the other endpoint.
struct CaterpillarPiece {
    std::vector<Chord> edges;
    std::vector<Chord> spine_edges;
    int start = 0, finish = 0;
    std::vector<int> covered;  // walk order, start..finish
};

enum class ArcSide { Inner, Outer };  // Inner: points a+1..b-1; Outer: the wrap side

std::optional<CaterpillarPiece> greedy_caterpillar(const PlaneMatching& m, Chord e, ArcSide side);

// piece validity against its host matching (plane, disjoint, covers the arc,
// one leg per spine vertex, degree one at the start)
bool validate_piece(const PlaneMatching& m, const CaterpillarPiece& piece, std::string* why = nullptr);

// Spanning caterpillar disjoint compatible to both m and rotate(m, K).
Witness caterpillar_for_inside_cycle(const PlaneMatching& m, const Semicycle& k);

// Spanning one-legged caterpillar for an inside 2-cycle, by the four-case
// dispatch on the quadrilateral's diagonal pattern.
Witness one_legged_for_2cycle(const PlaneMatching& m, const Semicycle& k);

// Interior-disjoint 2-cycles whose rotations compose, in order, to the
// rotation of the whole inside cycle. Quads are given ccw.
std::vector<std::array<int, 4>> split_into_2cycles(const PlaneMatching& m, const Semicycle& k);

// The matching half of a quad's boundary, checked as an inside 2-cycle.
Semicycle quad_semicycle(const PlaneMatching& m, const std::array<int, 4>& quad);

// Sequence between two matchings where every step rotates one inside cycle
// (caterpillar witnesses) or, in one-legged mode, one inside 2-cycle.
RotationSequence caterpillar_path_between(const PlaneMatching& m1, const PlaneMatching& m2,
                                          bool one_legged);

}  // namespace dcg

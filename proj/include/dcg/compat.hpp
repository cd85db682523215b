#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dcg/matching.hpp"

namespace dcg {

enum class WitnessKind { Tree, Caterpillar, OneLeggedCaterpillar, Path };

std::string to_string(WitnessKind k);

// A plane spanning drawing that is disjoint compatible to one or two
// matchings: spanning tree shape, no shared edge, no crossing.
struct Witness {
    WitnessKind kind = WitnessKind::Tree;
    std::vector<Chord> edges;
};

// Shape tests on spanning-tree edge sets.
bool is_tree_shape(const ConvexConfig& cfg, const std::vector<Chord>& edges);
bool is_caterpillar_shape(const ConvexConfig& cfg, const std::vector<Chord>& edges);
bool is_one_legged_shape(const ConvexConfig& cfg, const std::vector<Chord>& edges);
bool is_path_shape(const ConvexConfig& cfg, const std::vector<Chord>& edges);
bool has_kind_shape(const ConvexConfig& cfg, WitnessKind kind, const std::vector<Chord>& edges);

// Full witness validation: plane, spanning, requested shape, edge-disjoint
// from and non-crossing with both matchings. Every construction and decider
// in this project runs its output through this check.
bool validate_witness(const Witness& w, const PlaneMatching& m1, const PlaneMatching& m2,
                      std::string* why = nullptr);
void require_valid_witness(const Witness& w, const PlaneMatching& m1, const PlaneMatching& m2);

// Chords usable by any common witness: in neither matching, crossing nothing
// in their union.
std::vector<Chord> allowed_edges(const PlaneMatching& m1, const PlaneMatching& m2);

// Necessary condition: the allowed-edge graph is connected. Whether it is
// also sufficient for tree compatibility is measured, never assumed.
bool tree_prefilter(const PlaneMatching& m1, const PlaneMatching& m2);

// Exact decision by backtracking over allowed edges. M1 = M2 decides plain
// disjoint compatibility to a single matching.
std::optional<Witness> exists_witness(const PlaneMatching& m1, const PlaneMatching& m2,
                                      WitnessKind kind);

enum class ObstructionKind {
    SharedPerimeterDeficit,
    EarObstruction,
    BoundaryAreaObstruction,
    TwoSemiearParity,
    NearTwoSemiearParity,
    ThreeSemiears,
};

std::string to_string(ObstructionKind k);

struct Obstruction {
    ObstructionKind kind;
    std::vector<Chord> evidence_edges;
    std::vector<int> evidence_points;
    std::string detail;
};

// Sufficient conditions for non-tree-compatibility, checked in a fixed
// order. A nullopt result is NOT a compatibility guarantee.
std::optional<Obstruction> find_obstruction(const PlaneMatching& m1, const PlaneMatching& m2);

// Same, for a specific family: Path additionally reports ThreeSemiears
// first (a matching with three or more semiears is path-isolated).
std::optional<Obstruction> find_obstruction(const PlaneMatching& m1, const PlaneMatching& m2,
                                            WitnessKind kind);

// --- independent oracle -----------------------------------------------------

// Decides existence by enumerating every plane spanning tree of the
// configuration (generation independent of the pair under test) and checking
// disjoint compatibility directly.
bool brute_force_oracle(const PlaneMatching& m1, const PlaneMatching& m2, WitnessKind kind,
                        int oracle_bound = 12);

// One enumeration pass answering all pairs and all four families at once:
// matrices[kind][i][j] over the canonical matching order, diagonal included.
struct OracleMatrices {
    std::vector<PlaneMatching> vertices;
    std::array<std::vector<std::vector<char>>, 4> adj;
};

OracleMatrices oracle_all_pairs(const ConvexConfig& cfg, int oracle_bound = 12);

}  // namespace dcg

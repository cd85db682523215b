#include "dcg/matching.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dcg {

PlaneMatching PlaneMatching::from_chords(const ConvexConfig& cfg, std::vector<Chord> chords) {
    if (static_cast<int>(chords.size()) * 2 != cfg.size)
        throw std::invalid_argument("matching needs exactly n chords");
    std::sort(chords.begin(), chords.end());
    std::vector<int> covered(cfg.size, 0);
    for (Chord e : chords) {
        if (!cfg.valid_point(e.a) || !cfg.valid_point(e.b) || e.a == e.b)
            throw std::invalid_argument("invalid chord in matching");
        covered[e.a]++;
        covered[e.b]++;
    }
    for (int p = 0; p < cfg.size; ++p)
        if (covered[p] != 1) throw std::invalid_argument("matching is not perfect");
    if (!is_noncrossing(cfg, chords)) throw std::invalid_argument("matching is not plane");
    return PlaneMatching(cfg.size, std::move(chords));
}

bool PlaneMatching::contains(Chord e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Chord PlaneMatching::edge_at(int p) const {
    for (Chord e : edges_)
        if (e.touches(p)) return e;
    throw std::out_of_range("point not covered");
}

std::vector<Chord> PlaneMatching::diagonals() const {
    ConvexConfig cfg(points_);
    std::vector<Chord> out;
    for (Chord e : edges_)
        if (!is_perimeter(cfg, e)) out.push_back(e);
    return out;
}

std::vector<Chord> PlaneMatching::perimeter_edges() const {
    ConvexConfig cfg(points_);
    std::vector<Chord> out;
    for (Chord e : edges_)
        if (is_perimeter(cfg, e)) out.push_back(e);
    return out;
}

namespace {

// Match the first point of the block with every partner that splits it into
// two even-sized sub-blocks, matched independently. Emitting the chord, then
// the inside block, then the outside block keeps every chord list sorted and
// the whole enumeration lexicographic.
std::vector<std::vector<Chord>> enumerate_block(const std::vector<int>& pts) {
    if (pts.empty()) return {{}};
    std::vector<std::vector<Chord>> out;
    int v = pts[0];
    for (size_t k = 1; k < pts.size(); k += 2) {
        Chord e(v, pts[k]);
        std::vector<int> inside(pts.begin() + 1, pts.begin() + k);
        std::vector<int> outside(pts.begin() + k + 1, pts.end());
        for (const auto& left : enumerate_block(inside))
            for (const auto& right : enumerate_block(outside)) {
                std::vector<Chord> m;
                m.reserve(pts.size() / 2);
                m.push_back(e);
                m.insert(m.end(), left.begin(), left.end());
                m.insert(m.end(), right.begin(), right.end());
                out.push_back(std::move(m));
            }
    }
    return out;
}

}  // namespace

std::vector<PlaneMatching> enumerate_matchings(const ConvexConfig& cfg) {
    std::vector<int> pts(cfg.size);
    std::iota(pts.begin(), pts.end(), 0);
    std::vector<PlaneMatching> out;
    for (auto& chords : enumerate_block(pts))
        out.push_back(PlaneMatching(cfg.size, std::move(chords)));
    return out;
}

PlaneMatching perimeter_matching(const ConvexConfig& cfg, Parity parity) {
    std::vector<Chord> chords;
    int start = parity == Parity::Even ? 0 : 1;
    for (int i = start; i < cfg.size + start - 1; i += 2)
        chords.push_back(Chord(i % cfg.size, (i + 1) % cfg.size));
    return PlaneMatching::from_chords(cfg, std::move(chords));
}

std::vector<int> Semicycle::vertex_list() const {
    std::vector<int> v;
    for (Chord e : members) {
        v.push_back(e.a);
        v.push_back(e.b);
    }
    std::sort(v.begin(), v.end());
    return v;
}

namespace {

// Build boundary + kind for a vertex set already known to satisfy the
// semicycle conditions.
Semicycle make_semicycle(const ConvexConfig& cfg, std::vector<Chord> members) {
    Semicycle sc;
    std::sort(members.begin(), members.end());
    sc.members = std::move(members);
    std::vector<int> v = sc.vertex_list();
    int diag = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        Chord side(v[i], v[(i + 1) % v.size()]);
        sc.boundary.push_back(side);
        if (!is_perimeter(cfg, side)) diag++;
    }
    std::sort(sc.boundary.begin(), sc.boundary.end());
    sc.kind = diag >= 2 ? SemicycleKind::InsideCycle : SemicycleKind::Semiear;
    return sc;
}

}  // namespace

std::optional<Semicycle> is_semicycle(const PlaneMatching& m, const std::vector<Chord>& x) {
    ConvexConfig cfg = m.config();
    if (x.size() < 2) return std::nullopt;
    for (Chord e : x)
        if (!m.contains(e)) throw std::invalid_argument("semicycle candidate not a subset of the matching");
    std::vector<Chord> members(x.begin(), x.end());
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("duplicate chord in semicycle candidate");

    std::vector<int> v;
    for (Chord e : members) {
        v.push_back(e.a);
        v.push_back(e.b);
    }
    std::sort(v.begin(), v.end());
    std::vector<char> in_v(cfg.size, 0);
    for (int p : v) in_v[p] = 1;

    // every member joins cyclically consecutive endpoints of v
    auto consecutive = [&](Chord e) {
        size_t i = std::lower_bound(v.begin(), v.end(), e.a) - v.begin();
        size_t j = std::lower_bound(v.begin(), v.end(), e.b) - v.begin();
        return j == i + 1 || (i == 0 && j == v.size() - 1);
    };
    for (Chord e : members)
        if (!consecutive(e)) return std::nullopt;

    // no other matching edge separates the endpoint set
    for (Chord e : m.edges()) {
        if (std::binary_search(members.begin(), members.end(), e)) continue;
        int inside = 0;
        for (int p : v)
            if (cfg.in_open_arc(p, e.a, e.b)) inside++;
        if (inside > 0 && inside < static_cast<int>(v.size())) return std::nullopt;
    }
    return make_semicycle(cfg, std::move(members));
}

PlaneMatching rotate(const PlaneMatching& m, const Semicycle& x) {
    return rotate_all(m, {x});
}

PlaneMatching rotate_all(const PlaneMatching& m, const std::vector<Semicycle>& xs) {
    ConvexConfig cfg = m.config();
    std::vector<char> touched(cfg.size, 0);
    std::vector<Chord> result(m.edges());
    for (const Semicycle& x : xs) {
        for (int p : x.vertex_list()) {
            if (touched[p]) throw std::invalid_argument("semicycles are not disjoint");
            touched[p] = 1;
        }
        for (Chord e : x.members) {
            auto it = std::find(result.begin(), result.end(), e);
            if (it == result.end()) throw std::invalid_argument("semicycle not in matching");
            result.erase(it);
        }
        for (Chord e : x.boundary)
            if (!std::binary_search(x.members.begin(), x.members.end(), e)) result.push_back(e);
    }
    return PlaneMatching::from_chords(cfg, std::move(result));
}

std::vector<Semicycle> all_semicycles(const PlaneMatching& m) {
    const auto& edges = m.edges();
    const int n = static_cast<int>(edges.size());
    std::vector<Semicycle> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<Chord> x;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) x.push_back(edges[i]);
        if (auto sc = is_semicycle(m, x)) out.push_back(*sc);
    }
    return out;
}

// --- dual tree ------------------------------------------------------------

namespace {

void split_regions(const ConvexConfig& cfg, const std::vector<Chord>& diags,
                   std::vector<int> pts, std::vector<std::vector<int>>& out) {
    auto pos_of = [&](int p) -> int {
        for (size_t i = 0; i < pts.size(); ++i)
            if (pts[i] == p) return static_cast<int>(i);
        return -1;
    };
    for (Chord d : diags) {
        int i = pos_of(d.a), j = pos_of(d.b);
        if (i < 0 || j < 0) continue;
        if (i > j) std::swap(i, j);
        bool side = (j == i + 1) || (i == 0 && j == static_cast<int>(pts.size()) - 1);
        if (side) continue;  // already a boundary of this region
        std::vector<int> first(pts.begin() + i, pts.begin() + j + 1);
        std::vector<int> second(pts.begin() + j, pts.end());
        second.insert(second.end(), pts.begin(), pts.begin() + i + 1);
        split_regions(cfg, diags, std::move(first), out);
        split_regions(cfg, diags, std::move(second), out);
        return;
    }
    out.push_back(std::move(pts));
}

}  // namespace

DualTree dual_tree(const PlaneMatching& m) {
    ConvexConfig cfg = m.config();
    std::vector<Chord> diags = m.diagonals();
    std::vector<int> all(cfg.size);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> regions;
    split_regions(cfg, diags, std::move(all), regions);
    std::sort(regions.begin(), regions.end(),
              [](const auto& x, const auto& y) { return *std::min_element(x.begin(), x.end()) <
                                                        *std::min_element(y.begin(), y.end()); });

    DualTree t;
    std::map<Chord, std::vector<int>> by_diag;
    for (const auto& pts : regions) {
        DualTreeNode node;
        node.points = pts;
        for (size_t i = 0; i < pts.size(); ++i) {
            Chord side(pts[i], pts[(i + 1) % pts.size()]);
            if (pts.size() == 2 && i == 1) break;
            bool in_m = m.contains(side);
            if (is_perimeter(cfg, side)) {
                if (in_m) node.perimeter_edges.push_back(side);
            } else if (in_m) {
                node.diagonals.push_back(side);
            }
        }
        std::sort(node.diagonals.begin(), node.diagonals.end());
        std::sort(node.perimeter_edges.begin(), node.perimeter_edges.end());
        node.leaf = node.diagonals.size() <= 1;

        // color: parity of the region's matching perimeter edges; regions
        // without any (all-diagonal boundaries) take the parity implied by a
        // free hull side {i, i+1}, which sits next to an edge slot of parity
        // (i+1).
        if (!node.perimeter_edges.empty()) {
            node.color = perimeter_parity(cfg, node.perimeter_edges.front()) == Parity::Odd
                             ? RegionColor::Blue
                             : RegionColor::Red;
        } else {
            bool found = false;
            for (size_t i = 0; i < pts.size() && !found; ++i) {
                int p = pts[i], q = pts[(i + 1) % pts.size()];
                if (q == cfg.next(p) && !m.contains(Chord(p, q))) {
                    node.color = (q % 2 == 1) ? RegionColor::Blue : RegionColor::Red;
                    found = true;
                }
            }
            if (!found) throw std::logic_error("region without free hull side");
        }
        int id = static_cast<int>(t.nodes.size());
        for (Chord d : node.diagonals) by_diag[d].push_back(id);
        t.nodes.push_back(std::move(node));
    }
    for (auto& [d, ids] : by_diag) {
        if (ids.size() != 2) throw std::logic_error("diagonal does not bound two regions");
        t.nodes[ids[0]].neighbors.push_back(ids[1]);
        t.nodes[ids[1]].neighbors.push_back(ids[0]);
    }
    for (const auto& node : t.nodes)
        if (node.leaf) (node.color == RegionColor::Blue ? t.blue_leaves : t.red_leaves)++;
    return t;
}

Semicycle region_semicycle(const PlaneMatching& m, const DualTreeNode& node) {
    std::vector<Chord> members = node.diagonals;
    members.insert(members.end(), node.perimeter_edges.begin(), node.perimeter_edges.end());
    if (members.size() >= 2) {
        auto sc = is_semicycle(m, members);
        if (!sc) throw std::logic_error("region edges do not form a semicycle");
        return *sc;
    }
    // 2n = 2 only: the single-edge whole matching
    ConvexConfig cfg = m.config();
    Semicycle sc;
    sc.members = members;
    sc.boundary = members;
    sc.kind = SemicycleKind::Semiear;
    (void)cfg;
    return sc;
}

std::vector<Semicycle> semiears(const PlaneMatching& m) {
    DualTree t = dual_tree(m);
    std::vector<Semicycle> out;
    for (const auto& node : t.nodes)
        if (node.leaf) out.push_back(region_semicycle(m, node));
    return out;
}

Parity semiear_parity(const ConvexConfig& cfg, const Semicycle& ear) {
    for (Chord e : ear.members)
        if (is_perimeter(cfg, e)) return perimeter_parity(cfg, e);
    throw std::invalid_argument("semiear without perimeter edge");
}

// --- classification ---------------------------------------------------------

MatchingClass classify_matching(const PlaneMatching& m) {
    ConvexConfig cfg = m.config();
    if (m.diagonals().empty()) {
        return perimeter_parity(cfg, m.edges().front()) == Parity::Even ? MatchingClass::PerimeterEven
                                                                        : MatchingClass::PerimeterOdd;
    }
    DualTree t = dual_tree(m);
    std::vector<const DualTreeNode*> leaves;
    const DualTreeNode* inner = nullptr;
    for (const auto& node : t.nodes) {
        if (node.leaf) leaves.push_back(&node);
        else if (inner) return MatchingClass::Other;
        else inner = &node;
    }
    if (!inner || leaves.empty()) return MatchingClass::Other;
    for (const auto* leaf : leaves)
        if (leaf->diagonals.size() != 1 || leaf->perimeter_edges.size() != 1)
            return MatchingClass::Other;
    Parity p = perimeter_parity(cfg, leaves.front()->perimeter_edges.front());
    for (const auto* leaf : leaves)
        if (perimeter_parity(cfg, leaf->perimeter_edges.front()) != p) return MatchingClass::Other;
    size_t k = leaves.size();
    if (k < 2 || inner->diagonals.size() != k) return MatchingClass::Other;
    if (cfg.size == static_cast<int>(4 * k) && inner->perimeter_edges.empty())
        return p == Parity::Even ? MatchingClass::TwoSemiearEven : MatchingClass::TwoSemiearOdd;
    if (cfg.size == static_cast<int>(4 * k + 2) && inner->perimeter_edges.size() == 1)
        return p == Parity::Even ? MatchingClass::NearTwoSemiearEven : MatchingClass::NearTwoSemiearOdd;
    return MatchingClass::Other;
}

std::string to_string(MatchingClass c) {
    switch (c) {
        case MatchingClass::PerimeterEven: return "PerimeterEven";
        case MatchingClass::PerimeterOdd: return "PerimeterOdd";
        case MatchingClass::TwoSemiearEven: return "TwoSemiearEven";
        case MatchingClass::TwoSemiearOdd: return "TwoSemiearOdd";
        case MatchingClass::NearTwoSemiearEven: return "NearTwoSemiearEven";
        case MatchingClass::NearTwoSemiearOdd: return "NearTwoSemiearOdd";
        case MatchingClass::Other: return "Other";
    }
    return "?";
}

PlaneMatching two_semiear_matching(const ConvexConfig& cfg, Parity parity) {
    if (cfg.size % 4 != 0 || cfg.size < 8)
        throw std::invalid_argument("2-semiear matchings need 4k points, k >= 2");
    std::vector<Chord> chords;
    int base = parity == Parity::Odd ? 0 : 1;  // odd: ears at {4i+1,4i+2}
    for (int i = base; i < cfg.size + base; i += 4) {
        chords.push_back(Chord(i % cfg.size, (i + 3) % cfg.size));
        chords.push_back(Chord((i + 1) % cfg.size, (i + 2) % cfg.size));
    }
    return PlaneMatching::from_chords(cfg, std::move(chords));
}

PlaneMatching near_two_semiear_matching(const ConvexConfig& cfg, Parity parity) {
    if (cfg.size % 4 != 2 || cfg.size < 10)
        throw std::invalid_argument("near-2-semiear matchings need 4k+2 points, k >= 2");
    std::vector<Chord> chords;
    int base = parity == Parity::Odd ? 0 : 1;
    for (int i = base; i + 3 < cfg.size + base - 1; i += 4) {
        chords.push_back(Chord(i % cfg.size, (i + 3) % cfg.size));
        chords.push_back(Chord((i + 1) % cfg.size, (i + 2) % cfg.size));
    }
    // the leftover pair closes the inside semicycle with one perimeter edge
    chords.push_back(Chord((cfg.size - 2 + base) % cfg.size, (cfg.size - 1 + base) % cfg.size));
    return PlaneMatching::from_chords(cfg, std::move(chords));
}

// --- symmetric difference ---------------------------------------------------

bool SymDiffStructure::all_inside_cycles() const {
    if (cycles.empty()) return false;
    for (const auto& c : cycles)
        if (c.tag != CycleTag::InsideCycle) return false;
    return true;
}

SymDiffStructure sym_diff_structure(const PlaneMatching& m1, const PlaneMatching& m2) {
    if (m1.points() != m2.points())
        throw std::invalid_argument("matchings live on different configurations");
    ConvexConfig cfg = m1.config();
    SymDiffStructure out;
    std::vector<char> in_diff(cfg.size, 0);
    for (Chord e : m1.edges()) {
        if (m2.contains(e)) out.common.push_back(e);
        else in_diff[e.a] = in_diff[e.b] = 1;
    }
    std::vector<char> seen(cfg.size, 0);
    for (int start = 0; start < cfg.size; ++start) {
        if (!in_diff[start] || seen[start]) continue;
        AltCycle cyc;
        int p = start;
        bool use_m1 = true;
        do {
            seen[p] = 1;
            Chord e = use_m1 ? m1.edge_at(p) : m2.edge_at(p);
            (use_m1 ? cyc.m1_edges : cyc.m2_edges).push_back(e);
            p = e.other(p);
            seen[p] = 1;
            use_m1 = !use_m1;
        } while (p != start);
        std::sort(cyc.m1_edges.begin(), cyc.m1_edges.end());
        std::sort(cyc.m2_edges.begin(), cyc.m2_edges.end());

        bool crossing = false;
        for (Chord a : cyc.m1_edges)
            for (Chord b : cyc.m2_edges)
                if (chords_cross(cfg, a, b)) crossing = true;
        if (crossing) {
            cyc.tag = CycleTag::Crossing;
        } else {
            auto sc = is_semicycle(m1, cyc.m1_edges);
            if (!sc) throw std::logic_error("plane difference cycle is not a semicycle");
            cyc.tag = sc->kind == SemicycleKind::InsideCycle ? CycleTag::InsideCycle : CycleTag::Ear;
        }
        out.cycles.push_back(std::move(cyc));
    }
    std::sort(out.common.begin(), out.common.end());
    return out;
}

}  // namespace dcg

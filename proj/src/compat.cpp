#include "dcg/compat.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace dcg {

std::string to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::Tree: return "tree";
        case WitnessKind::Caterpillar: return "caterpillar";
        case WitnessKind::OneLeggedCaterpillar: return "onelegged";
        case WitnessKind::Path: return "path";
    }
    return "?";
}

std::string to_string(ObstructionKind k) {
    switch (k) {
        case ObstructionKind::SharedPerimeterDeficit: return "SharedPerimeterDeficit";
        case ObstructionKind::EarObstruction: return "EarObstruction";
        case ObstructionKind::BoundaryAreaObstruction: return "BoundaryAreaObstruction";
        case ObstructionKind::TwoSemiearParity: return "TwoSemiearParity";
        case ObstructionKind::NearTwoSemiearParity: return "NearTwoSemiearParity";
        case ObstructionKind::ThreeSemiears: return "ThreeSemiears";
    }
    return "?";
}

// shared chord table per configuration size
const ChordTable& chord_table(int points) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<ChordTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[points];
    if (!slot) slot = std::make_unique<ChordTable>(ConvexConfig(points));
    return *slot;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    int components;
    explicit UnionFind(int n) : parent(n), components(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[y] = x;
        components--;
        return true;
    }
};

std::vector<std::vector<int>> adjacency(const ConvexConfig& cfg, const std::vector<Chord>& edges) {
    std::vector<std::vector<int>> adj(cfg.size);
    for (Chord e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    return adj;
}

}  // namespace

bool is_tree_shape(const ConvexConfig& cfg, const std::vector<Chord>& edges) {
    if (static_cast<int>(edges.size()) != cfg.size - 1) return false;
    UnionFind uf(cfg.size);
    for (Chord e : edges)
        if (!uf.unite(e.a, e.b)) return false;
    return uf.components == 1;
}

bool is_caterpillar_shape(const ConvexConfig& cfg, const std::vector<Chord>& edges) {
    if (!is_tree_shape(cfg, edges)) return false;
    auto adj = adjacency(cfg, edges);
    // caterpillar: every vertex has at most two neighbors of degree >= 2
    for (int v = 0; v < cfg.size; ++v) {
        int heavy = 0;
        for (int w : adj[v])
            if (adj[w].size() >= 2) heavy++;
        if (heavy > 2) return false;
    }
    return true;
}

bool is_one_legged_shape(const ConvexConfig& cfg, const std::vector<Chord>& edges) {
    if (!is_caterpillar_shape(cfg, edges)) return false;
    auto adj = adjacency(cfg, edges);
    for (int v = 0; v < cfg.size; ++v)
        if (adj[v].size() > 3) return false;
    return true;
}

bool is_path_shape(const ConvexConfig& cfg, const std::vector<Chord>& edges) {
    if (!is_tree_shape(cfg, edges)) return false;
    auto adj = adjacency(cfg, edges);
    for (int v = 0; v < cfg.size; ++v)
        if (adj[v].size() > 2) return false;
    return true;
}

bool has_kind_shape(const ConvexConfig& cfg, WitnessKind kind, const std::vector<Chord>& edges) {
    switch (kind) {
        case WitnessKind::Tree: return is_tree_shape(cfg, edges);
        case WitnessKind::Caterpillar: return is_caterpillar_shape(cfg, edges);
        case WitnessKind::OneLeggedCaterpillar: return is_one_legged_shape(cfg, edges);
        case WitnessKind::Path: return is_path_shape(cfg, edges);
    }
    return false;
}

bool validate_witness(const Witness& w, const PlaneMatching& m1, const PlaneMatching& m2,
                      std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (m1.points() != m2.points()) return fail("matchings on different configurations");
    ConvexConfig cfg = m1.config();
    for (Chord e : w.edges)
        if (!cfg.valid_point(e.a) || !cfg.valid_point(e.b) || e.a == e.b)
            return fail("invalid chord");
    std::vector<Chord> sorted = w.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return fail("duplicate edge");
    if (!is_noncrossing(cfg, w.edges)) return fail("witness crosses itself");
    if (!has_kind_shape(cfg, w.kind, w.edges)) return fail("wrong shape for kind");
    for (Chord e : w.edges) {
        if (m1.contains(e) || m2.contains(e)) return fail("shares an edge with a matching");
        for (Chord f : m1.edges())
            if (chords_cross(cfg, e, f)) return fail("crosses first matching");
        for (Chord f : m2.edges())
            if (chords_cross(cfg, e, f)) return fail("crosses second matching");
    }
    return true;
}

void require_valid_witness(const Witness& w, const PlaneMatching& m1, const PlaneMatching& m2) {
    std::string why;
    if (!validate_witness(w, m1, m2, &why)) throw std::logic_error("invalid witness: " + why);
}

std::vector<Chord> allowed_edges(const PlaneMatching& m1, const PlaneMatching& m2) {
    if (m1.points() != m2.points())
        throw std::invalid_argument("matchings live on different configurations");
    ConvexConfig cfg = m1.config();
    std::vector<Chord> out;
    for (int a = 0; a < cfg.size; ++a)
        for (int b = a + 1; b < cfg.size; ++b) {
            Chord c(a, b);
            if (m1.contains(c) || m2.contains(c)) continue;
            bool ok = true;
            for (Chord f : m1.edges())
                if (chords_cross(cfg, c, f)) { ok = false; break; }
            if (ok)
                for (Chord f : m2.edges())
                    if (chords_cross(cfg, c, f)) { ok = false; break; }
            if (ok) out.push_back(c);
        }
    return out;
}

bool tree_prefilter(const PlaneMatching& m1, const PlaneMatching& m2) {
    ConvexConfig cfg = m1.config();
    UnionFind uf(cfg.size);
    for (Chord e : allowed_edges(m1, m2)) uf.unite(e.a, e.b);
    return uf.components == 1;
}

// --- exact searches ---------------------------------------------------------

namespace {

struct SearchCtx {
    ConvexConfig cfg;
    const ChordTable* table;
    std::vector<Chord> allowed;         // lexicographic
    std::vector<int> allowed_tidx;      // chord-table index per allowed edge
    std::vector<std::vector<int>> at;   // allowed-edge ids incident to each point

    explicit SearchCtx(const PlaneMatching& m1, const PlaneMatching& m2)
        : cfg(m1.config()), table(&chord_table(cfg.size)) {
        allowed = allowed_edges(m1, m2);
        at.assign(cfg.size, {});
        for (size_t i = 0; i < allowed.size(); ++i) {
            allowed_tidx.push_back(table->idx(allowed[i]));
            at[allowed[i].a].push_back(static_cast<int>(i));
            at[allowed[i].b].push_back(static_cast<int>(i));
        }
    }
};

bool tree_rec(const SearchCtx& ctx, UnionFind& uf, ChordSet blocked,
              std::vector<char>& used, std::vector<Chord>& chosen) {
    if (uf.components == 1) return true;
    // feasibility: all still-usable edges together must connect everything
    UnionFind probe = uf;
    for (size_t i = 0; i < ctx.allowed.size(); ++i)
        if (!used[i] && !blocked.test(ctx.allowed_tidx[i]))
            probe.unite(ctx.allowed[i].a, ctx.allowed[i].b);
    if (probe.components != 1) return false;

    int root = uf.find(0);
    for (size_t i = 0; i < ctx.allowed.size(); ++i) {
        if (used[i] || blocked.test(ctx.allowed_tidx[i])) continue;
        Chord e = ctx.allowed[i];
        bool a_in = uf.find(e.a) == root;
        bool b_in = uf.find(e.b) == root;
        if (a_in == b_in) continue;  // branch on the cut around point 0's component
        UnionFind next_uf = uf;
        next_uf.unite(e.a, e.b);
        used[i] = 1;
        chosen.push_back(e);
        if (tree_rec(ctx, next_uf, blocked | ctx.table->cross[ctx.allowed_tidx[i]], used, chosen))
            return true;
        chosen.pop_back();
        used[i] = 0;
    }
    return false;
}

std::optional<std::vector<Chord>> search_tree(const SearchCtx& ctx) {
    UnionFind uf(ctx.cfg.size);
    std::vector<char> used(ctx.allowed.size(), 0);
    std::vector<Chord> chosen;
    ChordSet blocked;
    if (tree_rec(ctx, uf, blocked, used, chosen)) return chosen;
    return std::nullopt;
}

struct EndState {
    uint32_t mask;
    int ea, eb;
    ChordSet blocked;
    bool operator==(const EndState& o) const {
        return mask == o.mask && ea == o.ea && eb == o.eb && blocked == o.blocked;
    }
};

struct EndStateHash {
    size_t operator()(const EndState& s) const {
        size_t h = std::hash<uint32_t>()(s.mask);
        h = h * 1000003u + static_cast<size_t>(s.ea * 64 + s.eb);
        h = h * 1000003u + std::hash<ChordSet>()(s.blocked);
        return h;
    }
};

// every unused vertex still needs enough free edges toward unused vertices
// or the current ends; at most two vertices may be down to one option
bool degree_prune(const SearchCtx& ctx, uint32_t mask, int ea, int eb, const ChordSet& blocked) {
    int scarce = 0;
    for (int v = 0; v < ctx.cfg.size; ++v) {
        if (mask & (1u << v)) continue;
        int avail = 0;
        for (int id : ctx.at[v]) {
            if (blocked.test(ctx.allowed_tidx[id])) continue;
            int w = ctx.allowed[id].other(v);
            if (!(mask & (1u << w)) || w == ea || w == eb) avail++;
            if (avail >= 2) break;
        }
        if (avail == 0) return false;
        if (avail == 1 && ++scarce > 2) return false;
    }
    return true;
}

bool path_rec(const SearchCtx& ctx, uint32_t mask, int ea, int eb, ChordSet blocked,
              std::vector<Chord>& chosen, std::unordered_set<EndState, EndStateHash>& dead) {
    uint32_t full = (1u << ctx.cfg.size) - 1;
    if (mask == full) return true;
    EndState key{mask, std::min(ea, eb), std::max(ea, eb), blocked};
    if (dead.count(key)) return false;
    if (!degree_prune(ctx, mask, ea, eb, blocked)) {
        dead.insert(key);
        return false;
    }
    for (int end : {ea, eb}) {
        for (int id : ctx.at[end]) {
            if (blocked.test(ctx.allowed_tidx[id])) continue;
            Chord e = ctx.allowed[id];
            int w = e.other(end);
            if (mask & (1u << w)) continue;
            chosen.push_back(e);
            int na = end == ea ? w : ea;
            int nb = end == ea ? eb : w;
            if (path_rec(ctx, mask | (1u << w), na, nb,
                         blocked | ctx.table->cross[ctx.allowed_tidx[id]], chosen, dead))
                return true;
            chosen.pop_back();
        }
    }
    dead.insert(key);
    return false;
}

std::optional<std::vector<Chord>> search_path(const SearchCtx& ctx) {
    if (ctx.cfg.size == 2) {
        if (!ctx.allowed.empty()) return std::vector<Chord>{ctx.allowed[0]};
        return std::nullopt;
    }
    std::unordered_set<EndState, EndStateHash> dead;
    for (size_t i = 0; i < ctx.allowed.size(); ++i) {
        Chord e = ctx.allowed[i];
        std::vector<Chord> chosen{e};
        if (path_rec(ctx, (1u << e.a) | (1u << e.b), e.a, e.b,
                     ctx.table->cross[ctx.allowed_tidx[i]], chosen, dead))
            return chosen;
    }
    return std::nullopt;
}

// legs for every vertex outside the spine, fewest-candidates first
bool close_caterpillar(const SearchCtx& ctx, uint32_t spine_mask, ChordSet blocked,
                       std::vector<int>& leg_count, bool one_legged,
                       std::vector<Chord>& legs) {
    int best = -1, best_cnt = -1;
    for (int v = 0; v < ctx.cfg.size; ++v) {
        if (spine_mask & (1u << v)) continue;
        int cnt = 0;
        for (int id : ctx.at[v]) {
            if (blocked.test(ctx.allowed_tidx[id])) continue;
            int s = ctx.allowed[id].other(v);
            if (!(spine_mask & (1u << s))) continue;
            if (one_legged && leg_count[s] >= 1) continue;
            cnt++;
        }
        if (cnt == 0) return false;
        if (best < 0 || cnt < best_cnt) {
            best = v;
            best_cnt = cnt;
        }
    }
    if (best < 0) return true;  // spine spans everything
    for (int id : ctx.at[best]) {
        if (blocked.test(ctx.allowed_tidx[id])) continue;
        Chord e = ctx.allowed[id];
        int s = e.other(best);
        if (!(spine_mask & (1u << s))) continue;
        if (one_legged && leg_count[s] >= 1) continue;
        legs.push_back(e);
        leg_count[s]++;
        if (close_caterpillar(ctx, spine_mask | (1u << best),
                              blocked | ctx.table->cross[ctx.allowed_tidx[id]], leg_count,
                              one_legged, legs))
            return true;
        leg_count[s]--;
        legs.pop_back();
    }
    return false;
}

bool cat_rec(const SearchCtx& ctx, uint32_t mask, int ea, int eb, ChordSet blocked,
             std::vector<Chord>& spine, bool one_legged, std::vector<Chord>& out,
             std::unordered_set<EndState, EndStateHash>& dead) {
    {
        std::vector<int> leg_count(ctx.cfg.size, 0);
        std::vector<Chord> legs;
        if (close_caterpillar(ctx, mask, blocked, leg_count, one_legged, legs)) {
            out = spine;
            out.insert(out.end(), legs.begin(), legs.end());
            return true;
        }
    }
    EndState key{mask, std::min(ea, eb), std::max(ea, eb), blocked};
    if (dead.count(key)) return false;
    // every unused vertex still needs some free edge
    for (int v = 0; v < ctx.cfg.size; ++v) {
        if (mask & (1u << v)) continue;
        bool any = false;
        for (int id : ctx.at[v])
            if (!blocked.test(ctx.allowed_tidx[id])) { any = true; break; }
        if (!any) {
            dead.insert(key);
            return false;
        }
    }
    for (int end : {ea, eb}) {
        for (int id : ctx.at[end]) {
            if (blocked.test(ctx.allowed_tidx[id])) continue;
            Chord e = ctx.allowed[id];
            int w = e.other(end);
            if (mask & (1u << w)) continue;
            spine.push_back(e);
            int na = end == ea ? w : ea;
            int nb = end == ea ? eb : w;
            if (cat_rec(ctx, mask | (1u << w), na, nb,
                        blocked | ctx.table->cross[ctx.allowed_tidx[id]], spine, one_legged, out,
                        dead))
                return true;
            spine.pop_back();
        }
    }
    dead.insert(key);
    return false;
}

std::optional<std::vector<Chord>> search_caterpillar(const SearchCtx& ctx, bool one_legged) {
    if (ctx.cfg.size == 2) {
        if (!ctx.allowed.empty()) return std::vector<Chord>{ctx.allowed[0]};
        return std::nullopt;
    }
    std::unordered_set<EndState, EndStateHash> dead;
    for (size_t i = 0; i < ctx.allowed.size(); ++i) {
        Chord e = ctx.allowed[i];
        std::vector<Chord> spine{e};
        std::vector<Chord> out;
        if (cat_rec(ctx, (1u << e.a) | (1u << e.b), e.a, e.b,
                    ctx.table->cross[ctx.allowed_tidx[i]], spine, one_legged, out, dead))
            return out;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Witness> exists_witness(const PlaneMatching& m1, const PlaneMatching& m2,
                                      WitnessKind kind) {
    if (m1.points() != m2.points())
        throw std::invalid_argument("matchings live on different configurations");
    SearchCtx ctx(m1, m2);
    {
        // connectivity of the allowed graph is necessary for every family
        UnionFind uf(ctx.cfg.size);
        for (Chord e : ctx.allowed) uf.unite(e.a, e.b);
        if (uf.components != 1) return std::nullopt;
    }
    std::optional<std::vector<Chord>> edges;
    switch (kind) {
        case WitnessKind::Tree: edges = search_tree(ctx); break;
        case WitnessKind::Path: edges = search_path(ctx); break;
        case WitnessKind::Caterpillar: edges = search_caterpillar(ctx, false); break;
        case WitnessKind::OneLeggedCaterpillar: edges = search_caterpillar(ctx, true); break;
    }
    if (!edges) return std::nullopt;
    Witness w{kind, std::move(*edges)};
    std::sort(w.edges.begin(), w.edges.end());
    require_valid_witness(w, m1, m2);
    return w;
}

// --- obstructions -------------------------------------------------------------

namespace {

std::optional<Obstruction> parity_obstruction(const PlaneMatching& a, const PlaneMatching& b) {
    ConvexConfig cfg = a.config();
    MatchingClass cls = classify_matching(a);
    auto odd_edges_of = [&](const PlaneMatching& m) {
        std::vector<Chord> out;
        for (Chord e : m.perimeter_edges())
            if (perimeter_parity(cfg, e) == Parity::Odd) out.push_back(e);
        return out;
    };
    auto even_edges_of = [&](const PlaneMatching& m) {
        std::vector<Chord> out;
        for (Chord e : m.perimeter_edges())
            if (perimeter_parity(cfg, e) == Parity::Even) out.push_back(e);
        return out;
    };
    if (cls == MatchingClass::TwoSemiearEven || cls == MatchingClass::TwoSemiearOdd) {
        auto bad = cls == MatchingClass::TwoSemiearEven ? odd_edges_of(b) : even_edges_of(b);
        if (!bad.empty())
            return Obstruction{ObstructionKind::TwoSemiearParity, bad, {},
                               "partner uses a perimeter edge of the wrong parity"};
    }
    if (cls == MatchingClass::NearTwoSemiearEven || cls == MatchingClass::NearTwoSemiearOdd) {
        // the lone off-parity perimeter edge sits in the inner region
        DualTree t = dual_tree(a);
        Chord lone{0, 0};
        for (const auto& node : t.nodes)
            if (!node.leaf) lone = node.perimeter_edges.front();
        auto bad = cls == MatchingClass::NearTwoSemiearEven ? odd_edges_of(b) : even_edges_of(b);
        std::erase(bad, lone);
        if (!bad.empty())
            return Obstruction{ObstructionKind::NearTwoSemiearParity, bad, {},
                               "partner uses an off-parity perimeter edge other than the allowed one"};
    }
    return std::nullopt;
}

}  // namespace

std::optional<Obstruction> find_obstruction(const PlaneMatching& m1, const PlaneMatching& m2,
                                            WitnessKind kind) {
    if (m1.points() != m2.points())
        throw std::invalid_argument("matchings live on different configurations");
    ConvexConfig cfg = m1.config();

    if (kind == WitnessKind::Path) {
        for (const PlaneMatching* m : {&m1, &m2}) {
            auto ears = semiears(*m);
            if (ears.size() >= 3) {
                Obstruction o{ObstructionKind::ThreeSemiears, {}, {}, "matching has three or more semiears"};
                for (const auto& ear : ears)
                    o.evidence_edges.insert(o.evidence_edges.end(), ear.members.begin(),
                                            ear.members.end());
                return o;
            }
        }
    }

    std::vector<Chord> shared_perimeter;
    for (Chord e : m1.perimeter_edges())
        if (m2.contains(e)) shared_perimeter.push_back(e);
    if (shared_perimeter.size() < 2)
        return Obstruction{ObstructionKind::SharedPerimeterDeficit, shared_perimeter, {},
                           "fewer than two common perimeter edges"};

    SymDiffStructure sd = sym_diff_structure(m1, m2);
    for (const auto& cyc : sd.cycles)
        if (cyc.tag == CycleTag::Ear) {
            Obstruction o{ObstructionKind::EarObstruction, cyc.m1_edges, {},
                          "symmetric-difference component is an ear"};
            o.evidence_edges.insert(o.evidence_edges.end(), cyc.m2_edges.begin(), cyc.m2_edges.end());
            return o;
        }

    for (const auto& area : boundary_areas(m1, m2))
        if (area.points.size() >= 3)
            return Obstruction{ObstructionKind::BoundaryAreaObstruction, area.bounding_edges,
                               area.points, "boundary area with at least three points"};

    if (auto o = parity_obstruction(m1, m2)) return o;
    if (auto o = parity_obstruction(m2, m1)) return o;
    (void)cfg;
    return std::nullopt;
}

std::optional<Obstruction> find_obstruction(const PlaneMatching& m1, const PlaneMatching& m2) {
    return find_obstruction(m1, m2, WitnessKind::Tree);
}

}  // namespace dcg

#include <algorithm>
#include <functional>

#include "dcg/compat.hpp"

// Verification oracle: enumerate every plane spanning tree of the
// configuration by plain subset recursion over the chord list — generation
// is independent of any matching pair — and test disjoint compatibility
// directly on edge and crossing masks.

namespace dcg {

const ChordTable& chord_table(int points);

namespace {

struct TreeVisit {
    const std::vector<Chord>* edges;
    ChordSet edge_mask;
    ChordSet cross_mask;
    bool caterpillar, one_legged, path;
};

struct Gen {
    const ChordTable& table;
    int n;
    std::vector<Chord> chosen;
    std::vector<int> parent;
    std::vector<int> degree;
    const std::function<bool(const TreeVisit&)>* visit;  // returns false to stop
    bool stopped = false;

    explicit Gen(const ChordTable& t) : table(t), n(t.cfg.size) {
        parent.resize(n);
        degree.assign(n, 0);
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void emit(const ChordSet& edge_mask, const ChordSet& cross_mask) {
        TreeVisit v;
        v.edges = &chosen;
        v.edge_mask = edge_mask;
        v.cross_mask = cross_mask;
        int deg1 = 0, heavy_violation = 0, maxdeg = 0;
        std::vector<std::vector<int>> adj(n);
        for (Chord e : chosen) {
            adj[e.a].push_back(e.b);
            adj[e.b].push_back(e.a);
        }
        for (int p = 0; p < n; ++p) {
            maxdeg = std::max(maxdeg, static_cast<int>(adj[p].size()));
            if (adj[p].size() == 1) deg1++;
            int heavy = 0;
            for (int w : adj[p])
                if (adj[w].size() >= 2) heavy++;
            if (heavy > 2) heavy_violation++;
        }
        v.caterpillar = heavy_violation == 0;
        v.one_legged = v.caterpillar && maxdeg <= 3;
        v.path = maxdeg <= 2;
        (void)deg1;
        if (!(*visit)(v)) stopped = true;
    }

    void rec(size_t i, int count, ChordSet edge_mask, ChordSet cross_mask) {
        if (stopped) return;
        if (count == n - 1) {
            emit(edge_mask, cross_mask);
            return;
        }
        if (i >= table.chords.size()) return;
        if (count + static_cast<int>(table.chords.size() - i) < n - 1) return;
        // the smallest uncovered point must still be reachable by later chords
        for (int p = 0; p < n; ++p) {
            if (degree[p] > 0) continue;
            if (p < table.chords[i].a) return;
            break;
        }
        Chord e = table.chords[i];
        if (!cross_mask.test(i) && find(e.a) != find(e.b)) {
            std::vector<int> saved_parent = parent;
            parent[find(e.a)] = find(e.b);
            degree[e.a]++;
            degree[e.b]++;
            chosen.push_back(e);
            ChordSet em = edge_mask;
            em.set(i);
            rec(i + 1, count + 1, em, cross_mask | table.cross[i]);
            chosen.pop_back();
            degree[e.a]--;
            degree[e.b]--;
            parent = saved_parent;
            if (stopped) return;
        }
        rec(i + 1, count, edge_mask, cross_mask);
    }

    void run(const std::function<bool(const TreeVisit&)>& fn) {
        visit = &fn;
        rec(0, 0, ChordSet{}, ChordSet{});
    }
};

bool kind_flag(const TreeVisit& v, WitnessKind kind) {
    switch (kind) {
        case WitnessKind::Tree: return true;
        case WitnessKind::Caterpillar: return v.caterpillar;
        case WitnessKind::OneLeggedCaterpillar: return v.one_legged;
        case WitnessKind::Path: return v.path;
    }
    return false;
}

}  // namespace

bool brute_force_oracle(const PlaneMatching& m1, const PlaneMatching& m2, WitnessKind kind,
                        int oracle_bound) {
    if (m1.points() != m2.points())
        throw std::invalid_argument("matchings live on different configurations");
    if (m1.points() > oracle_bound)
        throw std::invalid_argument("configuration above the oracle bound");
    const ChordTable& table = chord_table(m1.points());
    ChordSet pair_mask = table.mask_of(m1.edges()) | table.mask_of(m2.edges());
    bool found = false;
    Gen gen(table);
    gen.run([&](const TreeVisit& v) {
        if (!kind_flag(v, kind)) return true;
        if ((v.edge_mask & pair_mask).any()) return true;
        if ((v.cross_mask & pair_mask).any()) return true;
        found = true;
        return false;  // stop
    });
    return found;
}

OracleMatrices oracle_all_pairs(const ConvexConfig& cfg, int oracle_bound) {
    if (cfg.size > oracle_bound)
        throw std::invalid_argument("configuration above the oracle bound");
    const ChordTable& table = chord_table(cfg.size);
    OracleMatrices out;
    out.vertices = enumerate_matchings(cfg);
    const size_t v = out.vertices.size();
    std::vector<ChordSet> vmask;
    vmask.reserve(v);
    for (const auto& m : out.vertices) vmask.push_back(table.mask_of(m.edges()));
    for (auto& a : out.adj) a.assign(v, std::vector<char>(v, 0));

    std::vector<int> compatible;
    Gen gen(table);
    gen.run([&](const TreeVisit& tv) {
        compatible.clear();
        for (size_t i = 0; i < v; ++i)
            if ((vmask[i] & tv.edge_mask).none() && (vmask[i] & tv.cross_mask).none())
                compatible.push_back(static_cast<int>(i));
        if (compatible.empty()) return true;
        for (int kind = 0; kind < 4; ++kind) {
            if (!kind_flag(tv, static_cast<WitnessKind>(kind))) continue;
            auto& adj = out.adj[kind];
            for (size_t x = 0; x < compatible.size(); ++x)
                for (size_t y = x; y < compatible.size(); ++y)
                    adj[compatible[x]][compatible[y]] = adj[compatible[y]][compatible[x]] = 1;
        }
        return true;
    });
    return out;
}

}  // namespace dcg

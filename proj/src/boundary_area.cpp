#include <algorithm>
#include <map>

#include "dcg/matching.hpp"

// Faces of the arrangement of two plane matchings. The two edge sets only
// cross each other (never within one matching), so the crossings along any
// chord are pairwise non-crossing and their order along the chord is fixed
// by cyclic order alone: sorted by the crosser's endpoint inside the arc.

namespace dcg {

namespace {

struct Arrangement {
    int n;                                    // point count
    std::vector<Chord> chords;                // participating matching edges (dedup)
    std::vector<char> chord_is_perimeter;
    // nodes: 0..n-1 hull points, then one node per crossing
    struct Segment { int u, v; int token_uv, token_vu; int chord_u = -1, chord_v = -1; };
    // token: the hull point a traveller is heading towards; chord_*: index of
    // the underlying matching chord when the segment is part of one
    std::vector<Segment> segments;
    std::vector<std::vector<std::pair<int, int>>> out;  // per node: (token, half-edge id)
    int half_edges = 0;                                 // 2 per segment: 2*s (u->v), 2*s+1 (v->u)
};

int seg_of(int half) { return half / 2; }

Arrangement build_arrangement(const PlaneMatching& m1, const PlaneMatching& m2) {
    ConvexConfig cfg = m1.config();
    Arrangement ar;
    ar.n = cfg.size;
    for (Chord e : m1.edges()) ar.chords.push_back(e);
    for (Chord e : m2.edges())
        if (!m1.contains(e)) ar.chords.push_back(e);
    std::sort(ar.chords.begin(), ar.chords.end());
    for (Chord e : ar.chords) ar.chord_is_perimeter.push_back(is_perimeter(cfg, e));

    // crossing nodes
    std::map<std::pair<int, int>, int> cross_node;
    int next_node = ar.n;
    for (size_t i = 0; i < ar.chords.size(); ++i)
        for (size_t j = i + 1; j < ar.chords.size(); ++j)
            if (chords_cross(cfg, ar.chords[i], ar.chords[j]))
                cross_node[{static_cast<int>(i), static_cast<int>(j)}] = next_node++;

    auto add_segment = [&](int u, int v, int tok_uv, int tok_vu, int cu, int cv) {
        ar.segments.push_back({u, v, tok_uv, tok_vu, cu, cv});
    };

    // hull sides (perimeter chords of the matchings coincide with these)
    for (int i = 0; i < ar.n; ++i) {
        int j = cfg.next(i);
        Chord side(i, j);
        int ci = -1;
        auto it = std::lower_bound(ar.chords.begin(), ar.chords.end(), side);
        if (it != ar.chords.end() && *it == side) ci = static_cast<int>(it - ar.chords.begin());
        add_segment(i, j, j, i, ci, ci);
    }

    // diagonal chords, subdivided at their crossings
    for (size_t i = 0; i < ar.chords.size(); ++i) {
        Chord e = ar.chords[i];
        if (ar.chord_is_perimeter[i]) continue;
        struct Crossing { int c_in; int node; };
        std::vector<Crossing> xs;
        for (size_t j = 0; j < ar.chords.size(); ++j) {
            if (j == i) continue;
            Chord f = ar.chords[j];
            if (!chords_cross(cfg, e, f)) continue;
            int c_in = cfg.in_open_arc(f.a, e.a, e.b) ? f.a : f.b;
            auto key = i < j ? std::pair{static_cast<int>(i), static_cast<int>(j)}
                             : std::pair{static_cast<int>(j), static_cast<int>(i)};
            xs.push_back({c_in, cross_node.at(key)});
        }
        std::sort(xs.begin(), xs.end(), [](const Crossing& x, const Crossing& y) {
            return x.c_in < y.c_in;  // order along e starting at e.a
        });
        int prev = e.a;
        for (const Crossing& x : xs) {
            add_segment(prev, x.node, e.b, e.a, static_cast<int>(i), static_cast<int>(i));
            prev = x.node;
        }
        add_segment(prev, e.b, e.b, e.a, static_cast<int>(i), static_cast<int>(i));
    }

    int total_nodes = next_node;
    ar.out.assign(total_nodes, {});
    for (size_t s = 0; s < ar.segments.size(); ++s) {
        const auto& seg = ar.segments[s];
        ar.out[seg.u].push_back({seg.token_uv, static_cast<int>(2 * s)});
        ar.out[seg.v].push_back({seg.token_vu, static_cast<int>(2 * s + 1)});
    }
    // ccw rotation: at hull point p sort by (token - p) mod n; at crossing
    // nodes any fixed cyclic order of the four hull targets works
    for (int node = 0; node < total_nodes; ++node) {
        int base = node < ar.n ? node : 0;
        std::sort(ar.out[node].begin(), ar.out[node].end(), [&](auto& x, auto& y) {
            return (x.first - base + ar.n) % ar.n < (y.first - base + ar.n) % ar.n;
        });
    }
    ar.half_edges = static_cast<int>(2 * ar.segments.size());
    return ar;
}

int head_of(const Arrangement& ar, int half) {
    const auto& seg = ar.segments[seg_of(half)];
    return half % 2 == 0 ? seg.v : seg.u;
}

int reverse_token(const Arrangement& ar, int half) {
    const auto& seg = ar.segments[seg_of(half)];
    return half % 2 == 0 ? seg.token_vu : seg.token_uv;
}

// successor within the face lying left of the walk: the outgoing half-edge
// that precedes the reversed direction in ccw rotation
int face_next(const Arrangement& ar, int half) {
    int v = head_of(ar, half);
    int rtok = reverse_token(ar, half);
    int rhalf = half % 2 == 0 ? half + 1 : half - 1;
    const auto& ring = ar.out[v];
    size_t pos = 0;
    for (size_t i = 0; i < ring.size(); ++i)
        if (ring[i].first == rtok && ring[i].second == rhalf) pos = i;
    return ring[(pos + ring.size() - 1) % ring.size()].second;
}

}  // namespace

std::vector<BoundaryArea> boundary_areas(const PlaneMatching& m1, const PlaneMatching& m2) {
    if (m1.points() != m2.points())
        throw std::invalid_argument("matchings live on different configurations");
    Arrangement ar = build_arrangement(m1, m2);

    std::vector<int> face_of(ar.half_edges, -1);
    std::vector<std::vector<int>> faces;
    for (int h = 0; h < ar.half_edges; ++h) {
        if (face_of[h] >= 0) continue;
        int id = static_cast<int>(faces.size());
        std::vector<int> orbit;
        int cur = h;
        while (face_of[cur] < 0) {
            face_of[cur] = id;
            orbit.push_back(cur);
            cur = face_next(ar, cur);
        }
        faces.push_back(std::move(orbit));
    }

    // the outer face walks the hull clockwise: it contains half-edge 1,
    // the reverse of hull side (0 -> 1)
    int outer = face_of[1];

    std::vector<BoundaryArea> out;
    for (size_t f = 0; f < faces.size(); ++f) {
        if (static_cast<int>(f) == outer) continue;
        bool has_crossing = false;
        bool hull_free_side = false;
        std::vector<int> pts;
        std::vector<int> chord_ids;
        for (int h : faces[f]) {
            const auto& seg = ar.segments[seg_of(h)];
            for (int node : {seg.u, seg.v}) {
                if (node >= ar.n) has_crossing = true;
                else pts.push_back(node);
            }
            int ci = h % 2 == 0 ? seg.chord_u : seg.chord_v;
            if (ci >= 0) chord_ids.push_back(ci);
            bool is_hull_side = seg.u < ar.n && seg.v < ar.n &&
                                (seg.v == (seg.u + 1) % ar.n || seg.u == (seg.v + 1) % ar.n);
            if (is_hull_side && ci < 0) hull_free_side = true;
        }
        if (!has_crossing || hull_free_side) continue;
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.empty()) continue;

        // the points must form one run of cyclically consecutive hull points
        int gaps = 0, gap_at = -1;
        for (size_t i = 0; i < pts.size(); ++i) {
            int cur = pts[i];
            int nxt = pts[(i + 1) % pts.size()];
            int diff = (nxt - cur + ar.n) % ar.n;
            if (pts.size() == 1) diff = 0;
            if (diff != 1) {
                gaps++;
                gap_at = static_cast<int>(i);
            }
        }
        bool consecutive = static_cast<int>(pts.size()) == ar.n || (gaps == 1 && pts.size() >= 1);
        if (!consecutive) continue;

        BoundaryArea area;
        if (static_cast<int>(pts.size()) == ar.n || pts.size() == 1) {
            area.points = pts;
        } else {
            for (size_t i = 1; i <= pts.size(); ++i)
                area.points.push_back(pts[(gap_at + i) % pts.size()]);
        }
        std::sort(chord_ids.begin(), chord_ids.end());
        chord_ids.erase(std::unique(chord_ids.begin(), chord_ids.end()), chord_ids.end());
        for (int ci : chord_ids) area.bounding_edges.push_back(ar.chords[ci]);
        out.push_back(std::move(area));
    }
    std::sort(out.begin(), out.end(), [](const BoundaryArea& x, const BoundaryArea& y) {
        return x.points < y.points;
    });
    return out;
}

}  // namespace dcg

#include "dcg/convex.hpp"

namespace dcg {

static void check_chord(const ConvexConfig& cfg, Chord e) {
    if (!cfg.valid_point(e.a) || !cfg.valid_point(e.b))
        throw std::out_of_range("chord endpoint out of range");
    if (e.a == e.b) throw std::invalid_argument("degenerate chord");
}

bool chords_cross(const ConvexConfig& cfg, Chord e1, Chord e2) {
    check_chord(cfg, e1);
    check_chord(cfg, e2);
    if (e1.touches(e2.a) || e1.touches(e2.b)) return false;
    // proper crossing iff exactly one endpoint of e2 lies strictly inside
    // the open arc (e1.a, e1.b)
    return cfg.in_open_arc(e2.a, e1.a, e1.b) != cfg.in_open_arc(e2.b, e1.a, e1.b);
}

bool is_perimeter(const ConvexConfig& cfg, Chord e) {
    check_chord(cfg, e);
    return e.b == e.a + 1 || (e.a == 0 && e.b == cfg.size - 1);
}

EdgeClass classify_edge(const ConvexConfig& cfg, Chord e) {
    if (!is_perimeter(cfg, e)) return EdgeClass::Diagonal;
    return perimeter_parity(cfg, e) == Parity::Even ? EdgeClass::PerimeterEven
                                                    : EdgeClass::PerimeterOdd;
}

bool is_noncrossing(const ConvexConfig& cfg, const std::vector<Chord>& edges) {
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (chords_cross(cfg, edges[i], edges[j])) return false;
    return true;
}

ChordTable::ChordTable(const ConvexConfig& c) : cfg(c) {
    const int n = cfg.size;
    index.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            index[a][b] = static_cast<int>(chords.size());
            chords.push_back(Chord(a, b));
        }
    if (chords.size() > 256)
        throw std::invalid_argument("configuration too large for chord masks");
    cross.assign(chords.size(), ChordSet{});
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j)
            if (chords_cross(cfg, chords[i], chords[j])) {
                cross[i].set(j);
                cross[j].set(i);
            }
}

}  // namespace dcg

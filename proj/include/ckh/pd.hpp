#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ckh/errors.hpp"

namespace ckh {

/// One crossing of a planar diagram.
///
/// `e[0..3]` are the edge labels at the four ends in counterclockwise order;
/// the under-strand occupies slots 0 and 2. The 0-smoothing joins slot0-slot1
/// and slot2-slot3, the 1-smoothing joins slot1-slot2 and slot3-slot0.
struct Crossing {
    std::array<int, 4> e{};
};

/// Unoriented link/tangle diagram in PD form, with per-component coloring data.
///
/// Edges appearing in exactly one crossing slot are open (tangle boundary);
/// `circles` lists crossingless closed components by a reserved edge label.
struct LinkDiagram {
    std::vector<Crossing> crossings;
    std::vector<int> circles;

    // Filled by finalize():
    std::vector<std::vector<int>> comps; // per component, sorted edge labels
    std::vector<int> color;              // >= 1
    std::vector<int> framing;            // == self-writhe by convention
    std::vector<int> basepoint;          // an edge of the component

    int ncomps() const { return static_cast<int>(comps.size()); }

    int comp_of_edge(int edge) const {
        for (int k = 0; k < ncomps(); ++k)
            if (std::binary_search(comps[k].begin(), comps[k].end(), edge)) return k;
        throw parse_error("edge " + std::to_string(edge) + " not in any component");
    }
};

namespace detail {

// edge label -> list of (crossing, slot) occurrences
inline std::map<int, std::vector<std::pair<int, int>>> edge_slots(const LinkDiagram& d) {
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
        for (int s = 0; s < 4; ++s) occ[d.crossings[c].e[s]].push_back({c, s});
    return occ;
}

struct DSU {
    std::vector<int> p;
    explicit DSU(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace detail

/// Connectivity of the 4-valent graph and face count per connected piece.
/// A closed diagram is planar-consistent iff V - E + F = 2 on every piece.
inline void validate_planarity(const LinkDiagram& d) {
    const int n = static_cast<int>(d.crossings.size());
    if (n == 0) return;
    auto occ = detail::edge_slots(d);
    for (auto& [edge, slots] : occ)
        if (slots.size() != 2)
            throw parse_error("edge " + std::to_string(edge) + " has " +
                              std::to_string(slots.size()) + " crossing ends (want 2)");

    // half-edge id = 4*crossing + slot
    auto mate = [&](int h) {
        int c = h / 4, s = h % 4;
        auto& sl = occ[d.crossings[c].e[s]];
        auto other = (sl[0] == std::make_pair(c, s)) ? sl[1] : sl[0];
        return 4 * other.first + other.second;
    };

    detail::DSU comp(static_cast<size_t>(n));
    for (int h = 0; h < 4 * n; ++h) comp.unite(h / 4, mate(h) / 4);

    // faces: orbits of h -> ccw-next(mate(h))
    std::vector<char> seen(static_cast<size_t>(4 * n), 0);
    std::map<int, int> faces; // component root -> face count
    for (int h0 = 0; h0 < 4 * n; ++h0) {
        if (seen[static_cast<size_t>(h0)]) continue;
        int h = h0;
        do {
            seen[static_cast<size_t>(h)] = 1;
            int m = mate(h);
            h = (m / 4) * 4 + (m % 4 + 1) % 4;
        } while (h != h0);
        faces[comp.find(h0 / 4)]++;
    }
    std::map<int, int> verts;
    for (int c = 0; c < n; ++c) verts[comp.find(c)]++;
    for (auto& [root, v] : verts) {
        int f = faces[root];
        // per piece: V - E + F with E = 2V for a 4-valent graph
        if (v - 2 * v + f != 2)
            throw parse_error("diagram is not planar-consistent (V=" + std::to_string(v) +
                              ", F=" + std::to_string(f) + ")");
    }
}

/// Trace strands to partition edges into components. Open (dangling) edges are
/// allowed when `allow_open`; each open strand still joins one component.
inline void trace_components(LinkDiagram& d, bool allow_open) {
    auto occ = detail::edge_slots(d);
    std::map<int, int> idx; // edge -> dense index
    for (auto& [e, sl] : occ) {
        if (sl.size() > 2) throw parse_error("edge " + std::to_string(e) + " used more than twice");
        if (sl.size() == 1 && !allow_open)
            throw parse_error("edge " + std::to_string(e) + " is open (appears once)");
        int i = static_cast<int>(idx.size());
        idx.emplace(e, i);
    }
    for (int c : d.circles) {
        if (occ.count(c)) throw parse_error("circle label " + std::to_string(c) + " reused by a crossing");
        int i = static_cast<int>(idx.size());
        if (!idx.emplace(c, i).second)
            throw parse_error("duplicate circle label " + std::to_string(c));
    }

    detail::DSU dsu(idx.size());
    for (auto& x : d.crossings) {
        dsu.unite(idx[x.e[0]], idx[x.e[2]]);
        dsu.unite(idx[x.e[1]], idx[x.e[3]]);
    }
    std::map<int, std::vector<int>> groups; // root -> edges
    for (auto& [e, i] : idx) groups[dsu.find(i)].push_back(e);

    d.comps.clear();
    for (auto& [root, edges] : groups) {
        std::sort(edges.begin(), edges.end());
        d.comps.push_back(edges);
    }
    std::sort(d.comps.begin(), d.comps.end(),
              [](auto& a, auto& b) { return a.front() < b.front(); });
}

/// Orientation of every edge: which of its occurrences is the head (the
/// crossing end it points into), propagated along strands. Open strands are
/// oriented inward from a dangling end; closed strands start anywhere.
inline std::map<int, std::pair<int, int>> orient_edges(const LinkDiagram& d) {
    auto occ = detail::edge_slots(d);
    std::map<int, std::pair<int, int>> head;
    auto walk = [&](int e, std::pair<int, int> h) {
        while (!head.count(e)) {
            head[e] = h;
            if (h.first < 0) return; // strand leaves the tangle
            int c = h.first, out = (h.second + 2) % 4;
            int en = d.crossings[static_cast<size_t>(c)].e[static_cast<size_t>(out)];
            auto& sl = occ[en];
            if (sl.size() == 1) { e = en; h = {-1, -1}; continue; }
            h = (sl[0] == std::make_pair(c, out)) ? sl[1] : sl[0];
            e = en;
        }
    };
    for (auto& [e, sl] : occ)
        if (sl.size() == 1 && !head.count(e)) walk(e, sl[0]);
    for (auto& [e, sl] : occ)
        if (!head.count(e)) walk(e, sl[1]);
    return head;
}

/// Sign of a crossing whose two strands are oriented. Slots sit at fixed
/// counterclockwise positions; sign = sgn(over x under).
inline int crossing_sign(const LinkDiagram& d, int c,
                         const std::map<int, std::pair<int, int>>& head) {
    static const int px[4] = {-1, 1, 1, -1};
    static const int py[4] = {-1, -1, 1, 1};
    auto dir = [&](int slot_in) {
        int out = (slot_in + 2) % 4;
        return std::make_pair(px[out] - px[slot_in], py[out] - py[slot_in]);
    };
    const Crossing& x = d.crossings[c];
    // the under strand enters at slot 0 or 2, wherever its edge's head is
    int us = (head.count(x.e[0]) && head.at(x.e[0]) == std::make_pair(c, 0)) ? 0 : 2;
    int os = (head.count(x.e[1]) && head.at(x.e[1]) == std::make_pair(c, 1)) ? 1 : 3;
    auto u = dir(us), o = dir(os);
    int z = o.first * u.second - o.second * u.first;
    return z > 0 ? 1 : -1;
}

/// Sum of signs over the crossings where a component crosses itself.
/// Independent of the traversal direction, hence well-defined unoriented.
inline int self_writhe(const LinkDiagram& d, int k) {
    auto head = orient_edges(d);
    int w = 0;
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
        const Crossing& x = d.crossings[c];
        if (d.comp_of_edge(x.e[0]) == k && d.comp_of_edge(x.e[1]) == k)
            w += crossing_sign(d, c, head);
    }
    return w;
}

/// Compute components and fill per-component defaults; validate everything.
inline void finalize(LinkDiagram& d, bool allow_open = false) {
    trace_components(d, allow_open);
    if (!allow_open) validate_planarity(d);

    int n = d.ncomps();
    if (d.color.empty()) d.color.assign(static_cast<size_t>(n), 1);
    if (d.basepoint.empty()) {
        d.basepoint.resize(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) d.basepoint[static_cast<size_t>(k)] = d.comps[static_cast<size_t>(k)].front();
    }
    std::vector<int> writhe(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) writhe[static_cast<size_t>(k)] = allow_open ? 0 : self_writhe(d, k);
    if (d.framing.empty()) d.framing = writhe;

    for (int k = 0; k < n; ++k) {
        if (d.color[static_cast<size_t>(k)] < 1) throw parse_error("color of component " + std::to_string(k + 1) + " is < 1");
        if (!std::binary_search(d.comps[static_cast<size_t>(k)].begin(), d.comps[static_cast<size_t>(k)].end(),
                                d.basepoint[static_cast<size_t>(k)]))
            throw parse_error("basepoint of component " + std::to_string(k + 1) + " is not one of its edges");
        if (!allow_open && d.framing[static_cast<size_t>(k)] != writhe[static_cast<size_t>(k)])
            throw parse_error("component " + std::to_string(k + 1) + ": declared framing " +
                              std::to_string(d.framing[static_cast<size_t>(k)]) + " != self-writhe " +
                              std::to_string(writhe[static_cast<size_t>(k)]) +
                              " (adjust the diagram with kinks)");
    }
}

/// Parse the PD text format:
///   X[a,b,c,d]        crossing, edges counterclockwise, under-strand at a,c
///   circle[n]         crossingless unknot component
///   color k = c       (k = component number in order of least edge label)
///   framing k = f
///   basepoint k = e
///   # comment
inline LinkDiagram parse_pd(const std::string& text) {
    LinkDiagram d;
    std::vector<std::tuple<int, int, int>> decls; // (what, k, v): 0=color 1=framing 2=basepoint
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& m) {
        throw parse_error("line " + std::to_string(lineno) + ": " + m);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string t;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        if (t.empty()) continue;

        auto read_ints = [&](const std::string& body) {
            std::vector<int> v;
            std::string cur;
            for (char ch : body + ",") {
                if (ch == ',') {
                    if (cur.empty()) fail("empty number");
                    size_t pos = 0;
                    int x = 0;
                    try { x = std::stoi(cur, &pos); } catch (...) { fail("bad integer '" + cur + "'"); }
                    if (pos != cur.size()) fail("bad integer '" + cur + "'");
                    v.push_back(x);
                    cur.clear();
                } else cur += ch;
            }
            return v;
        };

        if ((t[0] == 'X' || t[0] == 'x') && t.size() > 2 && t[1] == '[') {
            if (t.back() != ']') fail("expected ']'");
            auto v = read_ints(t.substr(2, t.size() - 3));
            if (v.size() != 4) fail("crossing needs 4 edge labels");
            for (int e : v) if (e <= 0) fail("edge labels must be positive");
            Crossing x;
            std::copy(v.begin(), v.end(), x.e.begin());
            d.crossings.push_back(x);
        } else if (t.rfind("circle[", 0) == 0) {
            if (t.back() != ']') fail("expected ']'");
            auto v = read_ints(t.substr(7, t.size() - 8));
            if (v.size() != 1 || v[0] <= 0) fail("circle needs one positive label");
            d.circles.push_back(v[0]);
        } else {
            int what = -1;
            std::string rest;
            if (t.rfind("color", 0) == 0) { what = 0; rest = t.substr(5); }
            else if (t.rfind("framing", 0) == 0) { what = 1; rest = t.substr(7); }
            else if (t.rfind("basepoint", 0) == 0) { what = 2; rest = t.substr(9); }
            else fail("unrecognized directive '" + t + "'");
            auto eq = rest.find('=');
            if (eq == std::string::npos) fail("expected '='");
            auto kv = read_ints(rest.substr(0, eq));
            auto vv = read_ints(rest.substr(eq + 1));
            if (kv.size() != 1 || vv.size() != 1) fail("expected 'k = v'");
            decls.emplace_back(what, kv[0], vv[0]);
        }
    }
    if (d.crossings.empty() && d.circles.empty()) throw parse_error("empty diagram");

    trace_components(d, false);
    int n = d.ncomps();
    d.color.assign(static_cast<size_t>(n), 1);
    d.basepoint.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) d.basepoint[static_cast<size_t>(k)] = d.comps[static_cast<size_t>(k)].front();
    d.framing.clear();
    for (auto& [what, k, v] : decls) {
        if (k < 1 || k > n) throw parse_error("component number " + std::to_string(k) + " out of range");
        if (what == 0) d.color[static_cast<size_t>(k - 1)] = v;
        else if (what == 2) d.basepoint[static_cast<size_t>(k - 1)] = v;
        else {
            if (d.framing.empty()) {
                d.framing.resize(static_cast<size_t>(n));
                for (int kk = 0; kk < n; ++kk) d.framing[static_cast<size_t>(kk)] = self_writhe(d, kk);
            }
            d.framing[static_cast<size_t>(k - 1)] = v;
        }
    }
    finalize(d);
    return d;
}

inline std::string to_pd_text(const LinkDiagram& d) {
    std::ostringstream out;
    for (auto& x : d.crossings)
        out << "X[" << x.e[0] << "," << x.e[1] << "," << x.e[2] << "," << x.e[3] << "]\n";
    for (int c : d.circles) out << "circle[" << c << "]\n";
    for (int k = 0; k < d.ncomps(); ++k) {
        if (d.color[static_cast<size_t>(k)] != 1) out << "color " << k + 1 << " = " << d.color[static_cast<size_t>(k)] << "\n";
        out << "basepoint " << k + 1 << " = " << d.basepoint[static_cast<size_t>(k)] << "\n";
    }
    return out.str();
}

} // namespace ckh

#pragma once

#include <string>
#include <vector>

#include "ckh/pd.hpp"

namespace ckh {

inline int max_edge_label(const LinkDiagram& d) {
    int m = 0;
    for (auto& x : d.crossings)
        for (int e : x.e) m = std::max(m, e);
    for (int c : d.circles) m = std::max(m, c);
    return m;
}

namespace detail {

inline void rename_edge(LinkDiagram& d, int from, int to) {
    for (auto& x : d.crossings)
        for (int& e : x.e)
            if (e == from) e = to;
}

// Emit one braid letter onto the running strand front. Positive generators are
// encoded so that their 0-smoothing is the identity braid.
inline void emit_letter(LinkDiagram& d, std::vector<int>& cur, int letter, int& fresh) {
    int i = std::abs(letter) - 1; // crossing between positions i, i+1 (0-based)
    int L = cur[static_cast<size_t>(i)], R = cur[static_cast<size_t>(i) + 1];
    int Lp = fresh++, Rp = fresh++;
    Crossing x;
    if (letter > 0) x.e = {R, Rp, Lp, L};  // under: R -> Lp, over: L -> Rp
    else x.e = {L, R, Rp, Lp};             // under: L -> Rp, over: R -> Lp
    d.crossings.push_back(x);
    cur[static_cast<size_t>(i)] = Lp;
    cur[static_cast<size_t>(i) + 1] = Rp;
}

} // namespace detail

/// Closure of a braid word on `n` strands. Letters are +/-(1..n-1).
inline LinkDiagram braid_closure(int n, const std::vector<int>& word) {
    LinkDiagram d;
    std::vector<int> cur(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) cur[static_cast<size_t>(p)] = p + 1;
    int fresh = n + 1;
    for (int w : word) detail::emit_letter(d, cur, w, fresh);
    for (int p = 0; p < n; ++p) {
        int top = cur[static_cast<size_t>(p)], bot = p + 1;
        if (top == bot) d.circles.push_back(bot); // untouched strand
        else detail::rename_edge(d, top, bot);
    }
    finalize(d);
    return d;
}

/// Plat closure of a braid on an even number of strands: positions (1,2),
/// (3,4), ... are capped at both top and bottom.
inline LinkDiagram plat_closure(int n, const std::vector<int>& word) {
    LinkDiagram d;
    std::vector<int> cur(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) cur[static_cast<size_t>(p)] = p + 1;
    int fresh = n + 1;
    for (int w : word) detail::emit_letter(d, cur, w, fresh);

    std::map<int, int> parent; // cap identifications, resolved by chasing
    auto find = [&](int e) {
        while (parent.count(e)) e = parent[e];
        return e;
    };
    auto unite = [&](int a, int b) {
        a = find(a); b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (int p = 0; p + 1 < n; p += 2) {
        unite(p + 1, p + 2);                                                    // bottom cap
        unite(cur[static_cast<size_t>(p)], cur[static_cast<size_t>(p) + 1]);    // top cap
    }
    for (auto& x : d.crossings)
        for (int& e : x.e) e = find(e);

    std::set<int> reps, used;
    for (int p = 0; p < n; ++p) {
        reps.insert(find(p + 1));
        reps.insert(find(cur[static_cast<size_t>(p)]));
    }
    for (auto& x : d.crossings)
        for (int e : x.e) used.insert(e);
    for (int r : reps)
        if (!used.count(r)) d.circles.push_back(r); // crossingless cap cycle
    finalize(d);
    return d;
}

/// Splice `count` kinks of the given sign into edge `e` (or into a
/// crossingless circle with that label). Each kink changes self-writhe by sign.
inline LinkDiagram add_kinks(LinkDiagram d, int e, int count, int sign) {
    if (count <= 0) { finalize(d); return d; }
    int fresh = max_edge_label(d) + 1;
    auto occ = detail::edge_slots(d);
    bool was_circle = false;
    for (size_t i = 0; i < d.circles.size(); ++i)
        if (d.circles[i] == e) {
            d.circles.erase(d.circles.begin() + static_cast<long>(i));
            was_circle = true;
            break;
        }
    if (!was_circle && occ[e].size() != 2) throw parse_error("add_kinks: bad edge");

    int tail_end = e; // label for the chain's final edge
    if (!was_circle) {
        auto [c2, s2] = occ[e][1];
        tail_end = fresh++;
        d.crossings[static_cast<size_t>(c2)].e[static_cast<size_t>(s2)] = tail_end;
    }
    int in = e;
    for (int j = 0; j < count; ++j) {
        int lam = fresh++;
        int out = (j + 1 == count) ? tail_end : fresh++;
        Crossing x;
        if (sign < 0) x.e = {in, lam, lam, out}; // loop circle on the 1-smoothing side
        else x.e = {lam, lam, in, out};          // loop circle on the 0-smoothing side
        d.crossings.push_back(x);
        in = out;
    }
    d.color.clear(); d.framing.clear(); d.basepoint.clear();
    finalize(d);
    return d;
}

/// Connected sum along edges eA of A and eB of B.
inline LinkDiagram connect_sum(const LinkDiagram& A, int eA, const LinkDiagram& B, int eB) {
    for (int flip = 0; flip < 2; ++flip) {
        LinkDiagram d;
        d.crossings = A.crossings;
        int off = max_edge_label(A) + 1;
        for (auto x : B.crossings) {
            for (int& e : x.e) e += off;
            d.crossings.push_back(x);
        }
        d.circles = A.circles;
        for (int c : B.circles) d.circles.push_back(c + off);

        auto occ = detail::edge_slots(d);
        auto sa = occ[eA];
        auto sb = occ[eB + off];
        if (sa.size() != 2 || sb.size() != 2) throw parse_error("connect_sum: bad edges");
        int x1 = max_edge_label(d) + 1, x2 = x1 + 1;
        auto set = [&](std::pair<int, int> at, int v) {
            d.crossings[static_cast<size_t>(at.first)].e[static_cast<size_t>(at.second)] = v;
        };
        set(sa[0], eA); set(sa[1], x2);
        set(sb[flip], eA); set(sb[1 - flip], x2);
        (void)x1;
        try {
            finalize(d);
            return d;
        } catch (const parse_error&) {
            if (flip == 1) throw;
        }
    }
    throw parse_error("connect_sum: no planar gluing found");
}

inline LinkDiagram unknot() {
    LinkDiagram d;
    d.circles = {1};
    finalize(d);
    return d;
}

inline LinkDiagram unlink(int k) {
    LinkDiagram d;
    for (int i = 1; i <= k; ++i) d.circles.push_back(i);
    finalize(d);
    return d;
}

/// Unknot diagrams with successive kinks of the given signs.
inline LinkDiagram kinked_unknot(const std::vector<int>& signs) {
    LinkDiagram d = unknot();
    for (int s : signs) d = add_kinks(d, d.comps[0].front(), 1, s);
    return d;
}

inline LinkDiagram torus2(int k) { return braid_closure(2, std::vector<int>(static_cast<size_t>(k), 1)); }
inline LinkDiagram hopf() { return torus2(2); }
inline LinkDiagram trefoil() { return torus2(3); }

inline LinkDiagram figure_eight() { return braid_closure(3, {1, -2, 1, -2}); }

/// Twist knot with m twists: the 4-plat of sigma_2^m sigma_1^-1 sigma_2
/// (2-bridge continued fraction m + 1/2). m=1 is a trefoil shape, m=2 the
/// figure-eight. `mirror` flips every crossing.
inline LinkDiagram twist_knot(int m, bool mirror = false) {
    std::vector<int> w(static_cast<size_t>(m), 2);
    w.push_back(-1);
    w.push_back(2);
    if (mirror)
        for (int& x : w) x = -x;
    return plat_closure(4, w);
}

} // namespace ckh

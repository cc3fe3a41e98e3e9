#pragma once

#include <vector>

#include "ckh/errors.hpp"

namespace ckh {

/// Crossingless tangle in a disc: a noncrossing perfect matching of the
/// boundary points plus a number of closed circles, carried with a grading
/// shift in doubled units (h2, q2) = (2h, 2q).
struct FlatTangle {
    std::vector<int> match; // match[p] = partner of boundary point p
    int circles = 0;
    int h2 = 0;
    int q2 = 0;

    int points() const { return static_cast<int>(match.size()); }
    int arcs() const { return points() / 2; }

    bool same_shape(const FlatTangle& o) const {
        return match == o.match && circles == o.circles;
    }
    bool operator==(const FlatTangle& o) const {
        return same_shape(o) && h2 == o.h2 && q2 == o.q2;
    }
};

inline void check_matching(const FlatTangle& t) {
    int n = t.points();
    require(n % 2 == 0, "odd boundary size");
    for (int p = 0; p < n; ++p) {
        int q = t.match[static_cast<size_t>(p)];
        require(q >= 0 && q < n && q != p && t.match[static_cast<size_t>(q)] == p,
                "matching is not an involution");
    }
    // noncrossing: chords close in stack order
    std::vector<int> stack;
    for (int p = 0; p < n; ++p) {
        int q = t.match[static_cast<size_t>(p)];
        if (q > p) stack.push_back(p);
        else {
            require(!stack.empty() && stack.back() == q, "matching has crossing chords");
            stack.pop_back();
        }
    }
}

} // namespace ckh

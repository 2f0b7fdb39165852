#pragma once

#include <string>
#include <vector>

#include "quotsing/group.hpp"

namespace quotsing {

/// Multiplication by x_label, as a map M_source -> M_target.
struct Arrow {
    Character source;
    Character target;
    int label = 0;  // 0-based variable index

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// McKay quiver of (G, V), or its contraction when `contracted` is set.
struct Quiver {
    std::vector<Character> vertices;
    std::vector<Arrow> arrows;
    bool contracted = false;
};

/// One arrow chi -> chi * wt(x_i)^{-1} per character and variable.
Quiver build_mckay(const AbelianGroup& group);

/// Removes the trivial character and every arrow touching it.
Quiver contraction(const Quiver& mckay);

struct Connectivity {
    bool connected = true;
    bool empty = false;
};

/// Connectivity of the underlying undirected graph. The empty quiver is
/// vacuously connected and flagged empty.
Connectivity is_connected(const Quiver& q);

/// Deterministic Graphviz text. Vertices are named by their invariant-factor
/// coordinates, arrows are labelled x1..xn.
std::string export_dot(const AbelianGroup& group, const Quiver& q);

}  // namespace quotsing

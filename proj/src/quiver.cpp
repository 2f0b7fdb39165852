#include "quotsing/quiver.hpp"

#include <numeric>
#include <sstream>

namespace quotsing {

Quiver build_mckay(const AbelianGroup& group) {
    Quiver q;
    const auto count = static_cast<std::uint32_t>(group.character_count());
    for (std::uint32_t c = 0; c < count; ++c) q.vertices.push_back(Character{c});
    for (std::uint32_t c = 0; c < count; ++c)
        for (int i = 0; i < group.dim(); ++i) {
            Character source{c};
            q.arrows.push_back(Arrow{source, group.multiply(source, group.inverse(group.coordinate_character(i))), i});
        }
    return q;
}

Quiver contraction(const Quiver& mckay) {
    Quiver q;
    q.contracted = true;
    for (Character v : mckay.vertices)
        if (!v.is_trivial()) q.vertices.push_back(v);
    for (const Arrow& a : mckay.arrows)
        if (!a.source.is_trivial() && !a.target.is_trivial()) q.arrows.push_back(a);
    return q;
}

Connectivity is_connected(const Quiver& q) {
    if (q.vertices.empty()) return Connectivity{true, true};
    std::uint32_t max_id = 0;
    for (Character v : q.vertices) max_id = std::max(max_id, v.id);
    std::vector<std::uint32_t> parent(max_id + 1);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Arrow& a : q.arrows) parent[find(a.source.id)] = find(a.target.id);
    std::uint32_t root = find(q.vertices.front().id);
    for (Character v : q.vertices)
        if (find(v.id) != root) return Connectivity{false, false};
    return Connectivity{true, false};
}

namespace {
std::string vertex_name(const AbelianGroup& group, Character c) {
    std::ostringstream os;
    os << '"' << '(';
    auto co = group.coords(c);
    for (std::size_t j = 0; j < co.size(); ++j) os << (j ? "," : "") << co[j];
    os << ')' << '"';
    return os.str();
}
}  // namespace

std::string export_dot(const AbelianGroup& group, const Quiver& q) {
    std::ostringstream os;
    os << "digraph " << (q.contracted ? "contraction" : "mckay") << " {\n";
    for (Character v : q.vertices) os << "  " << vertex_name(group, v) << ";\n";
    for (const Arrow& a : q.arrows)
        os << "  " << vertex_name(group, a.source) << " -> " << vertex_name(group, a.target) << " [label=\"x"
           << a.label + 1 << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace quotsing

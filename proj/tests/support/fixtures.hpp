#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "netctrl/digraph.hpp"
#include "netctrl/graph_io.hpp"

namespace fixtures {

inline std::string read_file(const std::string& name) {
    std::ifstream in(std::string(FIXTURES_DIR) + "/" + name, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline netctrl::Digraph g1() { return netctrl::parse_edge_list(read_file("g1.txt")); }
inline netctrl::Digraph ex2() { return netctrl::parse_edge_list(read_file("ex2.txt")); }

inline netctrl::Digraph chain3() { return netctrl::Digraph(3, {{1, 2}, {2, 3}}); }
inline netctrl::Digraph cycle(int n) {
    std::vector<netctrl::Edge> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
    return netctrl::Digraph(n, std::move(edges));
}
inline netctrl::Digraph star4() { return netctrl::Digraph(4, {{1, 2}, {1, 3}, {1, 4}}); }
inline netctrl::Digraph isolated(int n) { return netctrl::Digraph(n, {}); }

}  // namespace fixtures

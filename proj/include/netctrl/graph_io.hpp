#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "netctrl/digraph.hpp"

namespace netctrl {

enum class GraphFormat { EdgeList, Json, Dot };

/// Thrown on malformed input; the message names the offending line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Map a CLI format name ("edge-list", "json", "dot") to the enum.
GraphFormat parse_format_name(std::string_view name);

Digraph parse_graph(std::string_view text, GraphFormat format);

/// Edge-list format: optional "n=<count>" header, one "<src> <dst>" pair per
/// line, '#' starts a comment. Without a header, n is the largest index seen.
Digraph parse_edge_list(std::string_view text);

/// {"n": int, "edges": [[i, j], ...], "labels": {"<node>": "name", ...}?}
Digraph parse_json_graph(std::string_view text);

/// digraph subset: integer ids, "i -> j;" edge statements, bare "i;" node
/// statements. Chained arrows (i -> j -> k) are accepted.
Digraph parse_dot(std::string_view text);

std::string write_edge_list(const Digraph& g);
std::string write_json_graph(const Digraph& g);
std::string write_dot(const Digraph& g);
std::string write_graph(const Digraph& g, GraphFormat format);

}  // namespace netctrl

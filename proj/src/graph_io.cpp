#include "netctrl/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace netctrl {
namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool parse_int(std::string_view tok, int& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) toks.push_back(s.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace

GraphFormat parse_format_name(std::string_view name) {
    if (name == "edge-list") return GraphFormat::EdgeList;
    if (name == "json") return GraphFormat::Json;
    if (name == "dot") return GraphFormat::Dot;
    throw ParseError("unknown graph format: " + std::string(name));
}

Digraph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return parse_edge_list(text);
        case GraphFormat::Json: return parse_json_graph(text);
        case GraphFormat::Dot: return parse_dot(text);
    }
    throw ParseError("unknown graph format");
}

Digraph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    int declared_n = 0;
    int max_index = 0;
    int line_no = 0;
    bool first_content_line = true;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;

        if (first_content_line && toks.size() == 1 && toks[0].starts_with("n=")) {
            if (!parse_int(toks[0].substr(2), declared_n) || declared_n < 1)
                fail(line_no, "bad node-count header");
            first_content_line = false;
            continue;
        }
        first_content_line = false;

        if (toks.size() != 2) fail(line_no, "expected two node indices");
        int u = 0, v = 0;
        if (!parse_int(toks[0], u) || !parse_int(toks[1], v)) fail(line_no, "node index is not an integer");
        if (u < 1 || v < 1) fail(line_no, "node indices are 1-based");
        if (declared_n > 0 && (u > declared_n || v > declared_n))
            fail(line_no, "edge endpoint exceeds declared node count");
        max_index = std::max({max_index, u, v});
        edges.emplace_back(u, v);
    }

    int n = declared_n > 0 ? declared_n : max_index;
    if (n < 1) throw ParseError("edge list declares no nodes");
    return Digraph(n, std::move(edges));
}

Digraph parse_json_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("json: expected object with integer field \"n\"");
    int n = doc["n"].get<int>();
    if (n < 1) throw ParseError("json: node count must be positive");

    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw ParseError("json: \"edges\" must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw ParseError("json: each edge must be a two-integer array");
            int u = e[0].get<int>(), v = e[1].get<int>();
            if (u < 1 || u > n || v < 1 || v > n) throw ParseError("json: edge endpoint out of range");
            edges.emplace_back(u, v);
        }
    }

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_object()) throw ParseError("json: \"labels\" must be an object");
        labels.assign(n + 1, "");
        for (const auto& [key, val] : doc["labels"].items()) {
            int node = 0;
            if (!parse_int(key, node) || node < 1 || node > n)
                throw ParseError("json: label key is not a valid node");
            if (!val.is_string()) throw ParseError("json: label value must be a string");
            labels[node] = val.get<std::string>();
        }
    }
    return Digraph(n, std::move(edges), std::move(labels));
}

Digraph parse_dot(std::string_view text) {
    // Tokenize: integers, "->", braces, semicolons, and the digraph keyword.
    struct Tok {
        enum Kind { Int, Arrow, LBrace, RBrace, Semi, Word } kind;
        int value = 0;
        std::string word;
        int line = 1;
    };
    std::vector<Tok> toks;
    int line = 1;
    for (std::size_t i = 0; i < text.size();) {
        char c = text[i];
        if (c == '\n') { ++line; ++i; continue; }
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (c == '{') { toks.push_back({Tok::LBrace, 0, "", line}); ++i; continue; }
        if (c == '}') { toks.push_back({Tok::RBrace, 0, "", line}); ++i; continue; }
        if (c == ';') { toks.push_back({Tok::Semi, 0, "", line}); ++i; continue; }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            toks.push_back({Tok::Arrow, 0, "", line});
            i += 2;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            int v = 0;
            parse_int(text.substr(i, j - i), v);
            toks.push_back({Tok::Int, v, "", line});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            toks.push_back({Tok::Word, 0, std::string(text.substr(i, j - i)), line});
            i = j;
            continue;
        }
        fail(line, std::string("dot: unexpected character '") + c + "'");
    }

    std::size_t k = 0;
    auto expect = [&](Tok::Kind kind, const char* what) {
        if (k >= toks.size() || toks[k].kind != kind)
            fail(k < toks.size() ? toks[k].line : line, std::string("dot: expected ") + what);
        return toks[k++];
    };

    if (k >= toks.size() || toks[k].kind != Tok::Word || toks[k].word != "digraph")
        fail(toks.empty() ? 1 : toks[0].line, "dot: expected 'digraph'");
    ++k;
    if (k < toks.size() && toks[k].kind == Tok::Word) ++k;  // optional graph name
    expect(Tok::LBrace, "'{'");

    std::vector<Edge> edges;
    int max_index = 0;
    bool closed = false;
    while (k < toks.size()) {
        if (toks[k].kind == Tok::RBrace) {
            ++k;
            closed = true;
            break;
        }
        if (toks[k].kind == Tok::Semi) { ++k; continue; }
        Tok first = expect(Tok::Int, "node id");
        if (first.value < 1) fail(first.line, "dot: node ids are 1-based");
        max_index = std::max(max_index, first.value);
        int prev = first.value;
        while (k < toks.size() && toks[k].kind == Tok::Arrow) {
            ++k;
            Tok to = expect(Tok::Int, "node id after '->'");
            if (to.value < 1) fail(to.line, "dot: node ids are 1-based");
            max_index = std::max(max_index, to.value);
            edges.emplace_back(prev, to.value);
            prev = to.value;
        }
    }
    if (!closed) fail(line, "dot: missing closing '}'");
    if (max_index < 1) throw ParseError("dot: graph declares no nodes");
    return Digraph(max_index, std::move(edges));
}

std::string write_edge_list(const Digraph& g) {
    std::ostringstream out;
    out << "n=" << g.node_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string write_json_graph(const Digraph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.node_count();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        auto labels = nlohmann::ordered_json::object();
        for (int v = 1; v <= g.node_count(); ++v)
            if (!g.labels()[v].empty()) labels[std::to_string(v)] = g.labels()[v];
        doc["labels"] = std::move(labels);
    }
    return doc.dump();
}

std::string write_dot(const Digraph& g) {
    std::ostringstream out;
    out << "digraph {\n";
    std::vector<char> referenced(g.node_count() + 1, 0);
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -> " << v << ";\n";
        referenced[u] = referenced[v] = 1;
    }
    for (int v = 1; v <= g.node_count(); ++v)
        if (!referenced[v]) out << "  " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string write_graph(const Digraph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return write_edge_list(g);
        case GraphFormat::Json: return write_json_graph(g);
        case GraphFormat::Dot: return write_dot(g);
    }
    throw ParseError("unknown graph format");
}

}  // namespace netctrl

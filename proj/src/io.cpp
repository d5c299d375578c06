#include "limw/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace limw {

namespace {

// Strip comment lines, keep everything else as one token stream.
std::stringstream tokenize(std::istream& in) {
    std::stringstream tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos != std::string::npos && line[pos] == '#') continue;
        tokens << line << '\n';
    }
    return tokens;
}

long long next_int(std::stringstream& tokens, const char* what) {
    long long x;
    if (!(tokens >> x)) throw IoError(std::string("edge list: missing or bad ") + what);
    return x;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    auto tokens = tokenize(in);
    long long n = next_int(tokens, "vertex count");
    long long m = next_int(tokens, "edge count");
    if (n < 0 || n > 100000) throw IoError("edge list: vertex count out of range");
    if (m < 0) throw IoError("edge list: negative edge count");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = next_int(tokens, "edge endpoint");
        long long v = next_int(tokens, "edge endpoint");
        if (u < 0 || v >= n || u >= v)
            throw IoError("edge list: edge " + std::to_string(u) + " " +
                          std::to_string(v) + " violates 0 <= u < v < n");
        g.add_edge(int(u), int(v));
    }
    std::string extra;
    if (tokens >> extra) throw IoError("edge list: trailing token '" + extra + "'");
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_edge_list(in);
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_edge_list(out, g);
}

LinearLayout read_layout(std::istream& in, int n) {
    auto tokens = tokenize(in);
    LinearLayout sigma;
    sigma.order.reserve(n);
    for (int i = 0; i < n; ++i) {
        long long v = next_int(tokens, "layout entry");
        if (v < 0 || v >= n) throw IoError("layout: vertex " + std::to_string(v) + " out of range");
        sigma.order.push_back(int(v));
    }
    std::string extra;
    if (tokens >> extra) throw IoError("layout: trailing token '" + extra + "'");
    std::vector<bool> seen(n, false);
    for (int v : sigma.order) {
        if (seen[v]) throw IoError("layout: vertex " + std::to_string(v) + " repeated");
        seen[v] = true;
    }
    return sigma;
}

LinearLayout load_layout(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_layout(in, n);
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    if (g.has_labels()) {
        for (int v = 0; v < g.n(); ++v) {
            out << "  " << v;
            if (!g.label(v).empty()) out << " [label=\"" << g.label(v) << "\"]";
            out << ";\n";
        }
    } else {
        for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace limw

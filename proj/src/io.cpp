#include <hypermatch/io.hpp>

#include <fstream>
#include <sstream>

namespace hypermatch {

namespace {

// Strips comments and yields the next non-empty line.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) return true;
    }
    return false;
}

} // namespace

Hypergraph parse_hypergraph(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw ParseError("empty input");
    std::istringstream head(line);
    int k, n, m;
    if (!(head >> k >> n >> m)) throw ParseError("bad header, expected 'k n m'");
    std::string extra;
    if (head >> extra) throw ParseError("trailing tokens after header");
    if (m < 0) throw ParseError("negative edge count");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw ParseError("expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        std::istringstream es(line);
        Edge e;
        long v;
        while (es >> v) e.push_back(static_cast<VertexId>(v));
        edges.push_back(std::move(e));
    }
    return Hypergraph::make(k, n, std::move(edges));
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph(in);
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_hypergraph(in);
}

std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << h.k << ' ' << h.n << ' ' << h.m() << '\n';
    for (const auto& e : h.edges) {
        for (size_t i = 0; i < e.size(); ++i)
            out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

void write_hypergraph_file(const std::string& path, const Hypergraph& h) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << format_hypergraph(h);
}

} // namespace hypermatch

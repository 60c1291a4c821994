#ifndef HYPERMATCH_IO_HPP
#define HYPERMATCH_IO_HPP

#include <iosfwd>
#include <string>

#include <hypermatch/hypergraph.hpp>

namespace hypermatch {

// Plain-text hypergraph format:
//   line 1: "k n m"
//   then m lines, each with k space-separated 0-based vertex ids.
// Lines starting with '#' are comments. Writing always emits the canonical
// storage order, so write(parse(x)) round-trips bit-exactly.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph read_hypergraph_file(const std::string& path);

std::string format_hypergraph(const Hypergraph& h);
void write_hypergraph_file(const std::string& path, const Hypergraph& h);

} // namespace hypermatch

#endif

#ifndef METPOLY_IO_HPP
#define METPOLY_IO_HPP

#include <iosfwd>
#include <string>

#include "metpoly/enumerate.hpp"
#include "metpoly/polytope.hpp"

namespace metpoly {

/// Vertex file: line 1 = n; line 2 = C(n,2) whitespace-separated rationals
/// ("p/q", "/q" omitted for integers) in lexicographic pair order.
MetricVector read_vertex(std::istream& in);              // throws ParseError
MetricVector read_vertex_file(const std::string& path);  // throws ParseError
void write_vertex(std::ostream& out, const MetricVector& x);

/// Vertex set file: line 1 = "n <n> count <k>", then k vertex lines.
VertexSet read_vertex_set(std::istream& in);
VertexSet read_vertex_set_file(const std::string& path);
void write_vertex_set(std::ostream& out, const VertexSet& vs);

/// One line of C(n,2) rationals.
std::string format_coords(const MetricVector& x);

/// Plain list of coordinate lines (no header), e.g. golden neighbor data.
std::vector<MetricVector> read_vector_lines(const std::string& path, int n);

}  // namespace metpoly

#endif

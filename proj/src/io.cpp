#include "metpoly/io.hpp"

#include <fstream>
#include <sstream>

#include "metpoly/errors.hpp"

namespace metpoly {

namespace {

std::vector<Rational> read_coords(std::istream& in, int n, const std::string& what) {
    const PairIndexer idx(n);
    std::vector<Rational> coords;
    coords.reserve(static_cast<std::size_t>(idx.dimension()));
    for (int k = 0; k < idx.dimension(); ++k) {
        std::string token;
        if (!(in >> token)) throw ParseError(what + ": expected " + std::to_string(idx.dimension()) +
                                             " coordinates, got " + std::to_string(k));
        try {
            coords.push_back(parse_rational(token));
        } catch (const std::exception& e) {
            throw ParseError(what + ": " + e.what());
        }
    }
    return coords;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

}  // namespace

MetricVector read_vertex(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw ParseError("vertex file: missing node count");
    if (n < 3) throw ParseError("vertex file: node count must be at least 3");
    MetricVector x(n, read_coords(in, n, "vertex file"));
    std::string extra;
    if (in >> extra) throw ParseError("vertex file: trailing token '" + extra + "'");
    return x;
}

MetricVector read_vertex_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_vertex(in);
}

std::string format_coords(const MetricVector& x) {
    std::ostringstream os;
    for (std::size_t k = 0; k < x.coords.size(); ++k) {
        if (k) os << ' ';
        os << x.coords[k];
    }
    return os.str();
}

void write_vertex(std::ostream& out, const MetricVector& x) {
    out << x.n << '\n' << format_coords(x) << '\n';
}

VertexSet read_vertex_set(std::istream& in) {
    std::string tag_n, tag_count;
    int n = 0;
    std::size_t count = 0;
    if (!(in >> tag_n >> n >> tag_count >> count) || tag_n != "n" || tag_count != "count")
        throw ParseError("vertex set file: header must be 'n <n> count <k>'");
    if (n < 3) throw ParseError("vertex set file: node count must be at least 3");
    VertexSet vs;
    vs.n = n;
    vs.vertices.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        vs.vertices.emplace_back(n, read_coords(in, n, "vertex set line " + std::to_string(k + 1)));
    return vs;
}

VertexSet read_vertex_set_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_vertex_set(in);
}

void write_vertex_set(std::ostream& out, const VertexSet& vs) {
    out << "n " << vs.n << " count " << vs.vertices.size() << '\n';
    for (const auto& v : vs.vertices) out << format_coords(v) << '\n';
}

std::vector<MetricVector> read_vector_lines(const std::string& path, int n) {
    auto in = open_or_throw(path);
    std::vector<MetricVector> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream is(line);
        out.emplace_back(n, read_coords(is, n, path + ":" + std::to_string(lineno)));
    }
    return out;
}

}  // namespace metpoly

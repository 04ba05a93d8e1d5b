#include "metpoly/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace metpoly {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::runtime_error("empty rational token");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::runtime_error("malformed rational '" + s + "'");
    }
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw std::runtime_error("malformed rational '" + s + "'");
    if (r.get_den() == 0) throw std::runtime_error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::vector<Rational> primitive_integer_vector(const std::vector<Rational>& v) {
    mpz_class den_lcm = 1;
    for (const auto& c : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_class g = 0;
    std::vector<Rational> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        out[k] = v[k] * den_lcm;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[k].get_num_mpz_t());
    }
    if (g > 1) {
        for (auto& c : out) c /= g;
    }
    return out;
}

int compare_lex(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::size_t m = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < m; ++k) {
        int c = cmp(a[k], b[k]);
        if (c != 0) return c;
    }
    if (a.size() == b.size()) return 0;
    return a.size() < b.size() ? -1 : 1;
}

}  // namespace metpoly

#ifndef METPOLY_ERRORS_HPP
#define METPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace metpoly {

/// A point handed to an operation that requires membership in m_n violates a
/// facet; the message names the violated inequality.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(int facet_id, const std::string& facet_name)
        : std::runtime_error("point violates facet " + facet_name),
          facet_id_(facet_id),
          facet_name_(facet_name) {}

    int facet_id() const { return facet_id_; }
    const std::string& facet_name() const { return facet_name_; }

private:
    int facet_id_;
    std::string facet_name_;
};

/// Requested computation is out of the supported range (e.g. exhaustive orbit
/// for large n).
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (facet names, vertex files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace metpoly

#endif

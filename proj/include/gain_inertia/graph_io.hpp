#pragma once

#include "gain_inertia/gain_graph.hpp"

#include <istream>
#include <stdexcept>
#include <string>

namespace gain_inertia {

/// Error in "gaingraph v1" text; line() is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Text format:
///
///     gaingraph v1
///     n <N>
///     e <u> <v> <gain>
///
/// with <gain> one of +1 -1 +i -i, angle:<degrees>, c:<re>,<im>.
/// '#' starts a comment; blank lines are ignored.
GainGraph parse_graph(std::istream& in);
GainGraph parse_graph_text(const std::string& text);

/// Edges are written in stored order (u < v). Exact gains are written as
/// tokens, others as c:<re>,<im> with 17 significant digits.
std::string serialize_graph(const GainGraph& g);

} // namespace gain_inertia

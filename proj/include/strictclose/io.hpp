#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "strictclose/semigroup.hpp"
#include "strictclose/stanley_reisner.hpp"

namespace strictclose {

/// Malformed input text; the message carries the 1-based line number.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Algebra file:
///   ambient <d>
///   generators
///   <d space-separated nonnegative integers per row>
///   end
/// '#' starts a comment anywhere; blank lines are ignored.
MonomialAlgebra parse_algebra(const std::string& text);

/// Same file format, but the rows are kept verbatim (deduplicated, not
/// minimized): used for V-lists and ideal generators, where dropping a
/// semigroup-redundant row would change the meaning.
struct VectorList {
    size_t ambient_dim;
    std::vector<ExponentVec> rows;
};
VectorList parse_vector_list(const std::string& text);

/// Complex file:
///   vertices <n>
///   facets
///   <one row of distinct 1-based vertex labels per facet>
///   end
SimplicialComplex parse_complex(const std::string& text);

/// Algebra file emitter; generators minimized and lex-sorted, so
/// parse(print(A)) == A.
std::string print_algebra(const MonomialAlgebra& a);

}  // namespace strictclose

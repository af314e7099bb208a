#ifndef NK_PARSE_HPP
#define NK_PARSE_HPP

#include <string>

#include "nk/kummer.hpp"
#include "nk/numeric.hpp"

namespace nk {

// Matrix grammar, whitespace ignored everywhere, offsets reported against
// the original string:
//   matrix := entry ',' entry ';' entry ',' entry
//   entry  := int | [int] 'i' | int ('+'|'-') [int] 'i'
//   int    := ['+'|'-'] digits
// A bare "i" means 1i; a sign always needs digits, so "-i" is rejected.
GaussianMatrix2 parse_matrix(const std::string& text);

// A single entry, which must consume the whole string.
GaussianInt parse_entry(const std::string& text);

// "p" or "p/q" with an optional sign on p and q > 0.
Rat parse_rational(const std::string& text);

// Canonical "a,b;c,d" form; parse_matrix(render_matrix(m)) == m.
std::string render_matrix(const GaussianMatrix2& m);

} // namespace nk

#endif

#pragma once

#include "mdx/courant.hpp"
#include "mdx/multipoisson.hpp"

#include <string>

namespace mdx {

// Renderers emit expressions in the script grammar, so printed values parse
// back: rationals as p/q, powers as repeated "*" factors, blades joined
// with "^", multivector factors prefixed with "@".
std::string poly_str(const Chart& chart, const Poly& p);
std::string mv_str(const Multivector& v);
std::string form_str(const Form& f);
std::string pair_str(const GradedPair& p);
std::string section_str(const Section& s);
std::string admissible_str(const AdmissibleForm& a);

}  // namespace mdx

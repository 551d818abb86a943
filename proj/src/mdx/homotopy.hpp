#pragma once

#include "mdx/exterior.hpp"

namespace mdx {

// Radial homotopy for the exterior derivative on polynomial forms:
// d(h(a)) + h(d(a)) = a in degree >= 1, so h produces a primitive of any
// closed form of positive degree. Monomial rule for a term x^e dx_J with
// |J| = k >= 1 and p = |e|:
//   h(x^e dx_J) = sum_m (-1)^{m-1} x_{j_m} x^e / (p + k) dx_{J \ j_m}.
Form homotopy_primitive(const Form& alpha);

}  // namespace mdx

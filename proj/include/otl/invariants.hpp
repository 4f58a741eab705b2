#pragma once

#include <string>
#include <vector>

#include "otl/diagram.hpp"
#include "otl/laurent.hpp"

namespace otl {

struct BracketOptions {
  int width_cap = 24;  // largest number of cut strands allowed in the sweep
};

// -A^2 - A^-2
LaurentPoly loop_value();

// Kauffman bracket with <O> = 1, by a Temperley-Lieb sweep over the crossings.
LaurentPoly bracket(const LinkDiagram& d, const BracketOptions& opt = {});
// Plain 2^c state sum; c must be at most 24.
LaurentPoly bracket_naive(const LinkDiagram& d);
// Crossing order used by the sweep and the largest frontier it produces.
std::vector<int> sweep_order(const LinkDiagram& d, int* width = nullptr);

// (-A)^(-3w) <D>; requires an oriented diagram.
LaurentPoly jones(const LinkDiagram& d, const BracketOptions& opt = {});
// Same normalization using whatever orientation the diagram carries.
LaurentPoly jones_any(const LinkDiagram& d, const BracketOptions& opt = {});
// Rewrites a polynomial in A as one in t = A^-4 (fractional exponents printed as t^(p/q)).
std::string to_t_string(const LaurentPoly& poly_in_a);
nlohmann::json to_t_json(const LaurentPoly& poly_in_a);

// Strips split crossingless components, then compares component counts and Jones polynomials;
// a remaining difference of k components is matched against k extra unknot factors.
bool equal_up_to_unknots(const LinkDiagram& d1, const LinkDiagram& d2);

}  // namespace otl

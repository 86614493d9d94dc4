#pragma once

#include "nct/exact/quad_int.hpp"
#include "nct/exact/real.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nct {

/// `quad:a,b,c,D` = (a + b sqrt(D))/c, `sqrt:D` = quad:0,1,1,D,
/// `int:n` = quad:n,0,1,2. A bare integer is accepted as `int:n`.
QuadInt parse_quad(std::string_view text);

/// One real coordinate for the Jacobi-Perron engine. Accepts the quad grammar,
/// `rat:p/q`, and `root:m:k` (the real k-th root of m >= 0). Returns a
/// certified enclosure at the requested precision.
Interval parse_real(std::string_view text, mpfr_prec_t precision);

/// `;`-separated list of parse_real items.
std::vector<Interval> parse_real_list(std::string_view text, mpfr_prec_t precision);

/// Splits on a delimiter, trimming ASCII whitespace around each piece.
std::vector<std::string> split(std::string_view text, char delimiter);

}  // namespace nct

#pragma once

#include <vector>

#include "dortho/rational.hpp"

namespace dortho {

// Terminating generalized hypergeometric sum
//   pFq(num; den; z) = sum_{m=0}^{n} prod_i (num_i)_m / prod_j (den_j)_m * z^m / m!
// where num[0] must be a nonpositive integer -n fixing the truncation order.
// Throws ZeroDenominatorParameter if any lower parameter is an integer in
// [-(n-1), 0], since its Pochhammer factor would vanish before truncation.
Rational hyp_terminating(const std::vector<Rational>& num,
                         const std::vector<Rational>& den,
                         const Rational& z);

} // namespace dortho

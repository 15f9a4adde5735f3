#pragma once

#include <vector>

#include "dortho/rational.hpp"
#include "dortho/upoly.hpp"

namespace dortho {

// Discrete linear functional: weights over the integer grid x = 0..size-1.
// apply_moment computes sum_x w(x) x^gamma f(x).
struct LinearFunctional {
    std::vector<Rational> weights;

    Rational apply_moment(const UPoly& f, long gamma) const {
        Rational sum(0);
        for (size_t x = 0; x < weights.size(); ++x) {
            if (weights[x].is_zero()) continue;
            Rational xr(static_cast<long>(x));
            sum += weights[x] * pow(xr, gamma) * f.evaluate(xr);
        }
        return sum;
    }
};

} // namespace dortho

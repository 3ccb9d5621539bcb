#pragma once

#include <cmath>

namespace nonelem {

// Neumaier-compensated accumulator. The compensation term is folded in at
// read time, so intermediate value() calls are cheap and exact.
struct CompensatedSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double term) {
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            compensation += (sum - t) + term;
        } else {
            compensation += (term - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + compensation; }
};

}  // namespace nonelem

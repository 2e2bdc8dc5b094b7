#pragma once

#include <cstddef>
#include <vector>

namespace mirrorfield {

struct GaussLegendreRule {
    std::vector<double> nodes;    // ascending on [-1, 1]
    std::vector<double> weights;
};

// Newton-refined Gauss-Legendre rule; exact for polynomials up to degree
// 2n - 1. Throws OutOfRange for n == 0.
GaussLegendreRule gauss_legendre(std::size_t n);

} // namespace mirrorfield

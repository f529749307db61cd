#pragma once

// Brute-force search for zeros of eps (eps - (v0/v)^2 Sigma) - v_ab^2, with
// Sigma taken from either explicit branch of the chain self-energy
// (z/2)(1 -+ sqrt(1 - 4 v^2 / z^2)). Newton from a grid of complex seeds.

#include <complex>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

struct ScanRoot {
  cplx eps;
  int branch;  // 0 or 1
  double residual;
};

std::vector<ScanRoot> scan_pole_roots(double v_ab, double v0, double v, double half_width = 12.0,
                                      int seeds_per_axis = 25);

/// min over both roots of S^2 - eps S + v^2 = 0 of |eps (eps - a S) - W|.
double quadratic_residual(cplx eps, double v_ab, double v0, double v);

}  // namespace oracle

#pragma once

#include "knotcv/mat2.hpp"
#include "knotcv/unipoly.hpp"

#include <complex>
#include <vector>

namespace knotcv {

// Roots of a univariate integer polynomial with per-root backward-error
// residuals. Residual scale is max |coefficient|.
struct RootSet {
    UniPoly polynomial;   // squarefree part actually solved
    std::vector<std::complex<double>> roots;
    std::vector<double> residuals;  // |p(root)| / max|coeff|
    double tolerance;
};

// Aberth-Ehrlich simultaneous iteration (deterministically seeded), with an
// extended-precision Newton polish of every root. The squarefree part is
// taken first; multiplicities are not reported.
RootSet find_roots(const UniPoly& p, double tolerance = 1e-12, int max_iterations = 400);

// Residuals of the parabolic-representation identities of J(3,2n) at m = 1:
// |w22^n(q)| and |q * (w12^n(q))^2 - 1|.
struct ParabolicResiduals {
    double w22_abs;
    double det_relation;
};
ParabolicResiduals verify_parabolic_conditions(int n, std::complex<double> q);

// Cusp relation alpha + alpha*q + 2q + 6 = 0 with alpha = 2 w11^n w12^n,
// evaluated at every root of the parabolic slice of J(3,2n). Roots at
// q = 0 or q = -1 are rejected (the derivation divides by them).
struct CuspResidual {
    std::complex<double> root;
    std::complex<double> alpha;
    double residual;
};
std::vector<CuspResidual> verify_cusp_relation(int n);  // n < 0

// Numeric longitude holonomy of J(3,2n) at a slice root; callers compare
// against [[-1, alpha + 2n], [0, -1]].
Mat2<std::complex<double>> longitude_holonomy(int n, std::complex<double> q);

// w^n for J(3,2n) at m = 1 with numeric q.
Mat2<std::complex<double>> j3_power_numeric(int n, std::complex<double> q);

}  // namespace knotcv

#pragma once

#include <Eigen/Dense>
#include <vector>

namespace resample::spline {

enum class Boundary { NotAKnot, Natural };

// Piecewise cubic C_i(x) = a_i + b_i*t + c_i*t^2 + d_i*t^3 with t = x - x_i.
// Coefficients are stored in the shifted basis: the global monomial basis
// loses ~9 digits at x ~ 1000 and cannot hold the 1e-12 knot-exactness
// contract.
struct SplineSegments {
    Eigen::VectorXd knots;                 // sorted distinct positions, size n+1
    Eigen::VectorXd a, b, c, d;            // per-segment coefficients, size n

    // Evaluates the segment polynomial covering x; queries outside the knot
    // hull use the terminal segment.
    double eval(double x) const;

    // Evaluates a specific segment's polynomial at x (for continuity checks
    // across a shared knot).
    double eval_segment(Eigen::Index seg, double x) const;
    double eval_segment_d1(Eigen::Index seg, double x) const;
    double eval_segment_d2(Eigen::Index seg, double x) const;
};

// Interpolating cubic spline through (positions[i], values[i]). Requires
// >= 4 strictly increasing positions for the not-a-knot condition (also
// enforced for natural, keeping the contract uniform).
// Throws TooFewPoints, UnsortedPositions.
SplineSegments build_spline(const Eigen::Ref<const Eigen::VectorXd>& positions,
                            const Eigen::Ref<const Eigen::VectorXd>& values,
                            Boundary boundary = Boundary::NotAKnot);

// Spline through integer sample positions, evaluated on the grid
// 0..query_len-1; queries outside the hull extrapolate with the terminal
// segments.
Eigen::VectorXd spline_interpolate(const std::vector<int>& positions,
                                   const Eigen::Ref<const Eigen::VectorXd>& values,
                                   int query_len,
                                   Boundary boundary = Boundary::NotAKnot);

}  // namespace resample::spline

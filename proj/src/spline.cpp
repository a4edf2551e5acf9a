#include "resample/spline.hpp"

#include <algorithm>
#include <string>

#include "resample/errors.hpp"

namespace resample::spline {
namespace {

// Thomas solve for a tridiagonal system; diag/rhs are consumed.
Eigen::VectorXd solve_tridiagonal(Eigen::VectorXd sub, Eigen::VectorXd diag,
                                  Eigen::VectorXd super, Eigen::VectorXd rhs) {
    const Eigen::Index m = diag.size();
    for (Eigen::Index i = 1; i < m; ++i) {
        const double w = sub[i] / diag[i - 1];
        diag[i] -= w * super[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    Eigen::VectorXd x(m);
    x[m - 1] = rhs[m - 1] / diag[m - 1];
    for (Eigen::Index i = m - 2; i >= 0; --i) {
        x[i] = (rhs[i] - super[i] * x[i + 1]) / diag[i];
    }
    return x;
}

}  // namespace

double SplineSegments::eval(double x) const {
    const Eigen::Index n = a.size();
    // Binary search for the covering segment; out-of-hull queries fall
    // through to the terminal segments.
    const double* begin = knots.data();
    const double* end = begin + knots.size();
    Eigen::Index seg = std::upper_bound(begin, end, x) - begin - 1;
    seg = std::clamp<Eigen::Index>(seg, 0, n - 1);
    return eval_segment(seg, x);
}

double SplineSegments::eval_segment(Eigen::Index seg, double x) const {
    const double t = x - knots[seg];
    return a[seg] + t * (b[seg] + t * (c[seg] + t * d[seg]));
}

double SplineSegments::eval_segment_d1(Eigen::Index seg, double x) const {
    const double t = x - knots[seg];
    return b[seg] + t * (2.0 * c[seg] + t * 3.0 * d[seg]);
}

double SplineSegments::eval_segment_d2(Eigen::Index seg, double x) const {
    const double t = x - knots[seg];
    return 2.0 * c[seg] + t * 6.0 * d[seg];
}

SplineSegments build_spline(const Eigen::Ref<const Eigen::VectorXd>& positions,
                            const Eigen::Ref<const Eigen::VectorXd>& values,
                            Boundary boundary) {
    const Eigen::Index pts = positions.size();
    if (pts < 4) {
        throw TooFewPoints("spline needs >= 4 points, got " + std::to_string(pts));
    }
    if (values.size() != pts) {
        throw LengthMismatch("positions and values differ in length");
    }
    for (Eigen::Index i = 1; i < pts; ++i) {
        if (!(positions[i] > positions[i - 1])) {
            throw UnsortedPositions("positions must be strictly increasing at index " +
                                    std::to_string(i));
        }
    }

    const Eigen::Index n = pts - 1;  // segment count
    Eigen::VectorXd h(n);
    for (Eigen::Index i = 0; i < n; ++i) h[i] = positions[i + 1] - positions[i];

    // Second-derivative (moment) formulation: interior continuity gives a
    // tridiagonal system in M_1..M_{n-1}; the boundary condition eliminates
    // M_0 and M_n from the first and last rows.
    const Eigen::Index m = n - 1;
    Eigen::VectorXd sub(m), diag(m), super(m), rhs(m);
    for (Eigen::Index i = 1; i <= m; ++i) {
        sub[i - 1] = h[i - 1];
        diag[i - 1] = 2.0 * (h[i - 1] + h[i]);
        super[i - 1] = h[i];
        rhs[i - 1] = 6.0 * ((values[i + 1] - values[i]) / h[i] -
                            (values[i] - values[i - 1]) / h[i - 1]);
    }

    if (boundary == Boundary::NotAKnot) {
        // Third-derivative continuity at the second and second-to-last
        // knots: M_0 = M_1(1 + h0/h1) - M_2 h0/h1 and symmetrically at the
        // far end, folded into the boundary rows.
        diag[0] += h[0] * (1.0 + h[0] / h[1]);
        super[0] -= h[0] * h[0] / h[1];
        diag[m - 1] += h[n - 1] * (1.0 + h[n - 1] / h[n - 2]);
        sub[m - 1] -= h[n - 1] * h[n - 1] / h[n - 2];
    }
    // Natural boundary: M_0 = M_n = 0; rows stand as written.

    const Eigen::VectorXd interior = solve_tridiagonal(sub, diag, super, rhs);

    Eigen::VectorXd moments(pts);
    moments.segment(1, m) = interior;
    if (boundary == Boundary::NotAKnot) {
        moments[0] = moments[1] * (1.0 + h[0] / h[1]) - moments[2] * (h[0] / h[1]);
        moments[n] = moments[n - 1] * (1.0 + h[n - 1] / h[n - 2]) -
                     moments[n - 2] * (h[n - 1] / h[n - 2]);
    } else {
        moments[0] = 0.0;
        moments[n] = 0.0;
    }

    SplineSegments out;
    out.knots = positions;
    out.a.resize(n);
    out.b.resize(n);
    out.c.resize(n);
    out.d.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.a[i] = values[i];
        out.b[i] = (values[i + 1] - values[i]) / h[i] -
                   h[i] * (2.0 * moments[i] + moments[i + 1]) / 6.0;
        out.c[i] = moments[i] / 2.0;
        out.d[i] = (moments[i + 1] - moments[i]) / (6.0 * h[i]);
    }
    return out;
}

Eigen::VectorXd spline_interpolate(const std::vector<int>& positions,
                                   const Eigen::Ref<const Eigen::VectorXd>& values,
                                   int query_len, Boundary boundary) {
    Eigen::VectorXd pos(static_cast<Eigen::Index>(positions.size()));
    for (std::size_t i = 0; i < positions.size(); ++i) {
        pos[static_cast<Eigen::Index>(i)] = positions[i];
    }
    const SplineSegments s = build_spline(pos, values, boundary);

    Eigen::VectorXd out(query_len);
    // Grid evaluation walks segments left to right instead of binary
    // searching each point.
    Eigen::Index seg = 0;
    const Eigen::Index last_seg = s.a.size() - 1;
    for (int x = 0; x < query_len; ++x) {
        while (seg < last_seg && x >= s.knots[seg + 1]) ++seg;
        out[x] = s.eval_segment(seg, x);
    }
    return out;
}

}  // namespace resample::spline

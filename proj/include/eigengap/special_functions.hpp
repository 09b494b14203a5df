#pragma once

#include <numbers>

// Evaluation of the two trigonometric-rational test functions
//
//   xi(t)  = (cos^2 t + 2t sin t cos t + t^2 - pi^2/4) / cos^2 t
//   eta(t) = ((4/pi) t + (4/pi) cos t sin t - 2 sin t) / cos^2 t
//
// on [-pi/2, pi/2], together with their first three derivatives and the
// ratio r = xi'/eta'.  Both functions are 0/0 at the endpoints; within
// kSwitchRadius of an endpoint the evaluation uses a Taylor series
// anchored at the exact endpoint jets, elsewhere the direct forms.

namespace eigengap {

// Function value and derivatives of order 1..3 at a point.
struct Jet3 {
    double t;
    double f;
    double f1;
    double f2;
    double f3;
};

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// Distance from +-pi/2 below which the series branch is used.
inline constexpr double kSwitchRadius = 0.1;

// Exact-form endpoint and origin values (float realizations).
struct EndpointConstants {
    double xi_at_zero;        // 1 - pi^2/4
    double xi1_at_end;        // xi'(pi/2)  =  2 pi / 3
    double xi2_at_end;        // xi''(+-pi/2) = 2
    double xi2_at_zero;       // 2 (3 - pi^2/4)
    double xi3_at_end;        // xi'''(pi/2) = 8 pi / 15
    double eta_at_end;        // eta(pi/2) = 1
    double eta1_at_zero;      // 2 (4/pi - 1)
    double eta1_at_end;       // 8 / (3 pi)
    double eta2_at_end;       // eta''(pi/2) = 1/2
    double eta3_at_end;       // 32 / (15 pi)
    double r_at_end;          // pi^2 / 4
    double r1_at_end;         // (4/(3 pi) - pi/12) / (4/(3 pi))^2
};

EndpointConstants endpoint_constants();

// xi and its first three derivatives at t in [-pi/2, pi/2].
// Throws std::domain_error outside the closed interval.
Jet3 xi_jet(double t);

// eta and its first three derivatives; eta is odd, eta' even.
Jet3 eta_jet(double t);

// r(t) = xi'(t)/eta'(t); returns +-pi^2/4 at the endpoints (limit values).
double ratio_r(double t);

}  // namespace eigengap

#include "eigengap/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace eigengap {
namespace {

constexpr double kPi = std::numbers::pi;

// Taylor coefficients in u = pi/2 - t of xi, xi', xi'', xi''' (derivatives
// taken in t, then expanded about the endpoint).  With u <= kSwitchRadius
// the tail after 16 terms is far below 1e-15 in absolute value.
constexpr int kSeriesLen = 16;

constexpr double kXi0[kSeriesLen] = {
    0.0, -2.0943951023931954923, 1.0, -0.27925268031909273231,
    0.11111111111111111111, -0.039893240045584676044,
    0.014814814814814814815, -0.0053190986727446234725,
    0.0019047619047619047619, -0.00067160336777078579199,
    0.00023515579071134626690, -8.1596119055756128749e-5,
    2.8137255650483163711e-5, -9.6435355372215395772e-6,
    3.2888921777810666700e-6, -1.1166280284315424938e-6};

constexpr double kXi1[kSeriesLen] = {
    2.0943951023931954923, -2.0, 0.83775804095727819692,
    -0.44444444444444444444, 0.19946620022792338022,
    -0.088888888888888888889, 0.037233690709212364308,
    -0.015238095238095238095, 0.0060444303099370721279,
    -0.0023515579071134626690, 0.00089755730961331741624,
    -0.00033764706780579796453, 0.00012536596198388001450,
    -4.6044490488934933379e-5, 1.6749420426473137407e-5,
    -6.0423735908744727087e-6};

constexpr double kXi2[kSeriesLen] = {
    2.0, -1.6755160819145563938, 1.3333333333333333333,
    -0.79786480091169352088, 0.44444444444444444444,
    -0.22340214425527418585, 0.10666666666666666667,
    -0.048355442479496577023, 0.021164021164021164021,
    -0.0089755730961331741624, 0.0037141177458637776098,
    -0.0015043915438065601740, 0.00059857837635615413393,
    -0.00023449188597062392370, 9.0635603863117090630e-5,
    -3.4619853585907403336e-5};

constexpr double kXi3[kSeriesLen] = {
    1.6755160819145563938, -2.6666666666666666667, 2.3935944027350805626,
    -1.7777777777777777778, 1.1170107212763709292, -0.64,
    0.33848809735647603916, -0.16931216931216931217,
    0.080780157865198567462, -0.037141177458637776098,
    0.016548306981872161915, -0.0071829405162738496072,
    0.0030483945176181110081, -0.0012688984540836392688,
    0.00051929780378861105003, -0.00020937699143796397513};

constexpr double kEta0[kSeriesLen] = {
    1.0, -0.84882636315677512410, 0.25, -0.11317684842090334988,
    0.041666666666666666667, -0.016168121202986192840,
    0.0059027777777777777778, -0.0021557494937314923787,
    0.00076884920634920634921, -0.00027219059264286519933,
    9.5210537918871252205e-5, -3.3069661453401292789e-5,
    1.1400796991074768853e-5, -3.9083777405129361955e-6,
    1.3328561893170028091e-6, -4.5255229411557551721e-7};

constexpr double kEta1[kSeriesLen] = {
    0.84882636315677512410, -0.5, 0.33953054526271004964,
    -0.16666666666666666667, 0.080840606014930964200,
    -0.035416666666666666667, 0.015090246456120446651,
    -0.0061507936507936507936, 0.0024497153337857867939,
    -0.00095210537918871252205, 0.00036376627598741422067,
    -0.00013680956389289722623, 5.0808910626668170541e-5,
    -1.8659986650438039327e-5, 6.7882844117336327582e-6,
    -2.4488443593933011922e-6};

constexpr double kEta2[kSeriesLen] = {
    0.5, -0.67906109052542009928, 0.5, -0.32336242405972385680,
    0.17708333333333333333, -0.090541478736722679904,
    0.043055555555555555556, -0.019597722670286294352,
    0.0085689484126984126984, -0.0036376627598741422067,
    0.0015049052028218694885, -0.00060970692752001804649,
    0.00024257982645569451125, -9.5035981764270858615e-5,
    3.6732665390899517884e-5, -1.4030898171394279338e-5};

constexpr double kEta3[kSeriesLen] = {
    0.67906109052542009928, -1.0, 0.97008727217917157040,
    -0.70833333333333333333, 0.45270739368361339952,
    -0.25833333333333333333, 0.13718405869200406046,
    -0.068551587301587301587, 0.032738964838867279861,
    -0.015049052028218694885, 0.0067067762027201985114,
    -0.0029109579174683341350, 0.0012354677629355211620,
    -0.00051425731547259325037, 0.00021046347257091419007,
    -8.4856974500245002891e-5};

double horner(const double (&c)[kSeriesLen], double u) {
    double acc = c[kSeriesLen - 1];
    for (int i = kSeriesLen - 2; i >= 0; --i) acc = acc * u + c[i];
    return acc;
}

void require_domain(double t) {
    if (!(t >= -kHalfPi && t <= kHalfPi))
        throw std::domain_error("argument outside [-pi/2, pi/2]");
}

// Direct rational-trigonometric forms, valid away from the endpoints.
// Second derivatives come from the governing second-order equations,
// third derivatives from the equations satisfied by xi' and eta'.
Jet3 xi_direct(double t) {
    const double s = std::sin(t), co = std::cos(t);
    const double c2 = co * co, c3 = c2 * co;
    Jet3 j{};
    j.t = t;
    j.f = (c2 + 2.0 * t * s * co + t * t - kPi * kPi / 4.0) / c2;
    j.f1 = 2.0 * (2.0 * t * co + t * t * s + c2 * s - kPi * kPi / 4.0 * s) / c3;
    j.f2 = (4.0 * c2 + 2.0 * j.f1 * co * s + 2.0 * j.f) / c2;
    j.f3 = (-8.0 * s + 4.0 * j.f2 * s + 4.0 * j.f1 * co) / co;
    return j;
}

Jet3 eta_direct(double t) {
    const double s = std::sin(t), co = std::cos(t);
    const double c2 = co * co, c3 = c2 * co;
    Jet3 j{};
    j.t = t;
    j.f = (4.0 / kPi * t + 4.0 / kPi * co * s - 2.0 * s) / c2;
    j.f1 = 2.0 * (4.0 / kPi * co + 4.0 / kPi * t * s - s * s - 1.0) / c3;
    j.f2 = 2.0 * (-s + j.f1 * co * s + j.f) / c2;
    j.f3 = (-2.0 + 4.0 * j.f2 * s + 4.0 * j.f1 * co) / co;
    return j;
}

}  // namespace

EndpointConstants endpoint_constants() {
    EndpointConstants e{};
    e.xi_at_zero = 1.0 - kPi * kPi / 4.0;
    e.xi1_at_end = 2.0 * kPi / 3.0;
    e.xi2_at_end = 2.0;
    e.xi2_at_zero = 2.0 * (3.0 - kPi * kPi / 4.0);
    e.xi3_at_end = 8.0 * kPi / 15.0;
    e.eta_at_end = 1.0;
    e.eta1_at_zero = 2.0 * (4.0 / kPi - 1.0);
    e.eta1_at_end = 8.0 / (3.0 * kPi);
    e.eta2_at_end = 0.5;
    e.eta3_at_end = 32.0 / (15.0 * kPi);
    e.r_at_end = kPi * kPi / 4.0;
    const double q = 4.0 / (3.0 * kPi);
    e.r1_at_end = (q - kPi / 12.0) / (q * q);
    return e;
}

Jet3 xi_jet(double t) {
    require_domain(t);
    const double a = std::fabs(t);
    const double sign = (t < 0.0) ? -1.0 : 1.0;
    Jet3 j{};
    const double u = kHalfPi - a;
    if (u < kSwitchRadius) {
        j.t = a;
        j.f = horner(kXi0, u);
        j.f1 = horner(kXi1, u);
        j.f2 = horner(kXi2, u);
        j.f3 = horner(kXi3, u);
    } else {
        j = xi_direct(a);
    }
    // xi even: odd-order derivatives flip sign with t.
    j.t = t;
    j.f1 *= sign;
    j.f3 *= sign;
    return j;
}

Jet3 eta_jet(double t) {
    require_domain(t);
    const double a = std::fabs(t);
    const double sign = (t < 0.0) ? -1.0 : 1.0;
    Jet3 j{};
    const double u = kHalfPi - a;
    if (u < kSwitchRadius) {
        j.t = a;
        j.f = horner(kEta0, u);
        j.f1 = horner(kEta1, u);
        j.f2 = horner(kEta2, u);
        j.f3 = horner(kEta3, u);
    } else {
        j = eta_direct(a);
    }
    // eta odd: even-order derivatives flip sign with t.
    j.t = t;
    j.f *= sign;
    j.f2 *= sign;
    return j;
}

double ratio_r(double t) {
    require_domain(t);
    if (std::fabs(t) == kHalfPi) {
        const double v = kPi * kPi / 4.0;
        return t < 0.0 ? -v : v;
    }
    // eta' >= 2(4/pi - 1) > 0, so the quotient is well defined.
    return xi_jet(t).f1 / eta_jet(t).f1;
}

}  // namespace eigengap

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "eigengap/special_functions.hpp"

using namespace eigengap;

namespace {

constexpr double kPi = std::numbers::pi;

// Reference jets computed symbolically from the defining expressions
// (independent of the evaluation path under test).
struct RefRow {
    double t, f, f1, f2, f3;
};

constexpr RefRow kXiRef[] = {
    {0.0, -1.4674011002723397, 0.0, 1.0651977994553207, 0.0},
    {0.1, -1.4620729368103812, 0.10660678264023749, 1.0678093272799368,
     0.052302948687017593},
    {0.7853981633974483, -1.1303053236136129, 0.88098200636256751,
     1.2407427182706836, 0.48689889853300435},
    {1.4, -0.32984584348618133, 1.7751843108635026, 1.7490961301321074,
     1.2818913984192398},
    {1.5207963267948967, -0.10225397949949368, 1.9964351613961100,
     1.9194605057317978, 1.5479512988425324},
    {-0.75, -1.1607166698188539, -0.83736091879736569, 1.2240246834715001,
     -0.45786024366173642},
    {1.5550883635269477, -0.032653016823579864, 2.0631841738567614,
     1.9740069762377315, 1.6342119527266572},
};

constexpr RefRow kEtaRef[] = {
    {0.0, 0.0, 0.54647908947032537, 0.0, 0.18591635788130149},
    {0.1, 0.054678914267671580, 0.54740963453548510, 0.018630182653484048,
     0.18707371441074702},
    {0.7853981633974483, 0.44481241998897259, 0.60767680470208045,
     0.16617616461386116, 0.26698475251757635},
    {1.4, 0.86178577805043648, 0.77256637740239081, 0.39713196745596711,
     0.53338520799740390},
    {1.5207963267948967, 0.95816979019081366, 0.82465485060375149,
     0.46725760430510286, 0.63140051782244032},
    {-0.75, -0.42340393041602446, 0.60196004552982264, -0.15686849808995520,
     0.25899048276422131},
    {1.5550883635269477, 0.98672791556641047, 0.84105551625078595,
     0.48945546080025880, 0.66358976866646261},
};

void check_row(const Jet3& j, const RefRow& ref, double tol) {
    CHECK(std::fabs(j.f - ref.f) < tol);
    CHECK(std::fabs(j.f1 - ref.f1) < tol);
    CHECK(std::fabs(j.f2 - ref.f2) < tol * 10);
    CHECK(std::fabs(j.f3 - ref.f3) < tol * 100);
}

}  // namespace

TEST_CASE("xi jets match the symbolic reference") {
    for (const auto& ref : kXiRef) check_row(xi_jet(ref.t), ref, 1e-12);
}

TEST_CASE("eta jets match the symbolic reference") {
    for (const auto& ref : kEtaRef) check_row(eta_jet(ref.t), ref, 1e-12);
}

TEST_CASE("endpoint jets take the exact closed-form values") {
    const auto e = endpoint_constants();
    const Jet3 x = xi_jet(kPi / 2.0);
    CHECK(x.f == 0.0);
    CHECK(x.f1 == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-15));
    CHECK(x.f2 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(x.f3 == doctest::Approx(8.0 * kPi / 15.0).epsilon(1e-15));
    const Jet3 h = eta_jet(kPi / 2.0);
    CHECK(h.f == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h.f1 == doctest::Approx(8.0 / (3.0 * kPi)).epsilon(1e-15));
    CHECK(h.f2 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(h.f3 == doctest::Approx(32.0 / (15.0 * kPi)).epsilon(1e-15));
    CHECK(xi_jet(0.0).f == doctest::Approx(1.0 - kPi * kPi / 4.0));
    CHECK(eta_jet(0.0).f1 == doctest::Approx(e.eta1_at_zero));
    // float realizations agree with the exact forms at ulp scale
    CHECK(std::fabs(e.r1_at_end - 0.90277527080329086) < 1e-15);
}

TEST_CASE("parity: xi even, eta odd") {
    for (int i = 0; i <= 500; ++i) {
        const double t = -kPi / 2.0 + kPi * i / 500.0;
        CHECK(std::fabs(xi_jet(-t).f - xi_jet(t).f) < 1e-12);
        CHECK(std::fabs(eta_jet(-t).f + eta_jet(t).f) < 1e-12);
        CHECK(std::fabs(eta_jet(-t).f1 - eta_jet(t).f1) < 1e-12);
    }
}

TEST_CASE("series and direct branches agree on the overlap band") {
    // The series branch engages within kSwitchRadius of the endpoint;
    // compare against direct evaluation over [radius/2, radius].
    for (int i = 0; i <= 200; ++i) {
        const double u = kSwitchRadius / 2.0 + kSwitchRadius / 2.0 * i / 200.0;
        const double t_series = kPi / 2.0 - u * 0.999;  // series side
        const Jet3 s = xi_jet(t_series);
        // direct evaluation of the same point through the raw formulas
        const double co = std::cos(t_series), si = std::sin(t_series);
        const double f_direct = (co * co + 2.0 * t_series * si * co +
                                 t_series * t_series - kPi * kPi / 4.0) /
                                (co * co);
        CHECK(std::fabs(s.f - f_direct) < 1e-11);
        const double f1_direct =
            2.0 *
            (2.0 * t_series * co + t_series * t_series * si + co * co * si -
             kPi * kPi / 4.0 * si) /
            (co * co * co);
        // the raw quotient loses digits to cancellation in cos^3
        CHECK(std::fabs(s.f1 - f1_direct) < 5e-11);
        const Jet3 e = eta_jet(t_series);
        const double ef_direct = (4.0 / kPi * t_series + 4.0 / kPi * co * si -
                                  2.0 * si) /
                                 (co * co);
        CHECK(std::fabs(e.f - ef_direct) < 1e-11);
    }
}

TEST_CASE("range bounds hold on a dense grid") {
    for (int i = 0; i <= 10000; ++i) {
        const double t = -kPi / 2.0 + kPi * i / 10000.0;
        const double x = xi_jet(t).f;
        CHECK(x >= 1.0 - kPi * kPi / 4.0 - 1e-12);
        CHECK(x <= 1e-12);
        const double h = eta_jet(t).f;
        CHECK(h >= -1.0 - 1e-12);
        CHECK(h <= 1.0 + 1e-12);
    }
}

TEST_CASE("ratio r: endpoints, monotonicity, bound") {
    CHECK(ratio_r(kPi / 2.0) == kPi * kPi / 4.0);
    CHECK(ratio_r(-kPi / 2.0) == -kPi * kPi / 4.0);
    CHECK(ratio_r(0.0) == 0.0);
    const double quarter = ratio_r(-kPi / 4.0);
    CHECK(quarter < 0.0);
    CHECK(quarter > -kPi * kPi / 4.0);
    double prev = ratio_r(-kPi / 2.0);
    for (int i = 1; i <= 10000; ++i) {
        const double t = -kPi / 2.0 + kPi * i / 10000.0;
        const double cur = ratio_r(t);
        CHECK(cur > prev);
        CHECK(std::fabs(cur) <= kPi * kPi / 4.0 + 1e-12);
        prev = cur;
    }
}

TEST_CASE("domain errors outside the closed interval") {
    CHECK_THROWS_AS(xi_jet(kPi / 2.0 + 1e-9), std::domain_error);
    CHECK_THROWS_AS(eta_jet(-kPi / 2.0 - 1e-9), std::domain_error);
    CHECK_THROWS_AS(ratio_r(2.0), std::domain_error);
    CHECK_THROWS_AS(xi_jet(std::nan("")), std::domain_error);
}

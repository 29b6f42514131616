#include <cmath>

#include "doctest.h"
#include "udw/kernels.hpp"

using namespace udw;

namespace {

const cplx kI{0.0, 1.0};

bool near(const KernelCoefficients& a, const KernelCoefficients& b)
{
    return std::abs(a.pv - b.pv) < 1e-15 && std::abs(a.minus - b.minus) < 1e-15 &&
           std::abs(a.plus - b.plus) < 1e-15;
}

}  // namespace

TEST_CASE("coefficients satisfy the distribution identities")
{
    const auto W = coefficients(KernelKind::wightman);
    const auto F = coefficients(KernelKind::feynman);
    const auto R = coefficients(KernelKind::retarded);
    const auto A = coefficients(KernelKind::advanced);
    const auto D = coefficients(KernelKind::symmetric_delta);
    const auto E = coefficients(KernelKind::causal_e);
    const auto H = coefficients(KernelKind::hadamard_h);

    CHECK(near(R * kI, W - F.conj()));
    CHECK(near(A * kI, F - W));
    CHECK(near(D, R + A));
    CHECK(near(E, R - A));
    CHECK(near(H, W + W.conj()));
    CHECK(near(W, H * 0.5 + E * (0.5 * kI)));
    CHECK(near(F, H * 0.5 + D * (0.5 * kI)));
}

TEST_CASE("Delta and E are pure lightcone, H is pure PV")
{
    const auto D = coefficients(KernelKind::symmetric_delta);
    CHECK_FALSE(D.has_pv());
    CHECK(std::abs(D.minus - 1.0) < 1e-15);
    CHECK(std::abs(D.plus - 1.0) < 1e-15);

    const auto E = coefficients(KernelKind::causal_e);
    CHECK_FALSE(E.has_pv());
    CHECK(std::abs(E.minus + E.plus) < 1e-15);

    const auto H = coefficients(KernelKind::hadamard_h);
    CHECK_FALSE(H.has_deltas());
    CHECK(std::abs(H.pv - 2.0) < 1e-15);
}

TEST_CASE("reduced kernel pieces")
{
    const auto k = wightman_reduced(2.0);
    CHECK(k.r() == 2.0);
    CHECK(std::abs(k.regular(0.0) - 1.0 / (16.0 * kPi * kPi)) < 1e-16);
    const auto d = k.delta_terms();
    REQUIRE(d.size() == 2);
    CHECK(d[0].location == -2.0);
    CHECK(std::abs(d[0].weight - kI / (16.0 * kPi)) < 1e-16);
    CHECK(d[1].location == 2.0);
    CHECK(k.pv_poles().size() == 2);

    const auto g = retarded_reduced(3.0);
    CHECK(g.regular(1.0) == cplx(0.0, 0.0));
    REQUIRE(g.delta_terms().size() == 1);
    CHECK(g.delta_terms()[0].location == -3.0);
    CHECK(g.pv_poles().empty());

    CHECK(feynman_reduced(1.0).delta_terms().size() == 2);
}

TEST_CASE("reduced kernels need r > 0")
{
    CHECK_THROWS_AS(wightman_reduced(0.0), SingularGeometryError);
    CHECK_THROWS_AS(kernel_reduced(KernelKind::hadamard_h, -1.0), SingularGeometryError);
}

TEST_CASE("kind names round trip")
{
    for (auto k : kAllKernelKinds) {
        CHECK(kernel_kind_from_string(to_string(k)) == k);
    }
    CHECK_THROWS_AS(kernel_kind_from_string("bogus"), DomainError);
}

TEST_CASE("regulated forms approach the reduced PV away from the lightcone")
{
    const double r = 1.5;
    for (auto k : kAllKernelKinds) {
        const auto red = kernel_reduced(k, r);
        for (double v : {-3.0, -0.7, 0.0, 0.4, 2.9}) {
            const cplx reg = kernel_regulated(k, v, r, 1e-7);
            CHECK(std::abs(reg - red.regular(v)) < 1e-6);
        }
    }
}

TEST_CASE("regulated retarded kernel integrates to the lightcone weight")
{
    // int G_R dv over a window around v = -r -> 1/(4 pi r), and ~0 around v = +r.
    const double r = 1.0, eps = 1e-3;
    auto integrate = [&](double c) {
        const int n = 200000;
        const double a = c - 0.5, h = 1.0 / n;
        cplx s = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double w = (i == 0 || i == n) ? 0.5 : 1.0;
            s += w * kernel_regulated(KernelKind::retarded, a + i * h, r, eps);
        }
        return s * h;
    };
    CHECK(std::abs(integrate(-r) - 1.0 / (4 * kPi * r)) < 2e-3 / (4 * kPi));
    CHECK(std::abs(integrate(r)) < 2e-3 / (4 * kPi));
}

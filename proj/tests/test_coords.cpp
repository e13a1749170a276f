#include <doctest.h>

#include <cmath>
#include <random>

#include "ptpara/coords.hpp"

using namespace ptpara;
using namespace ptpara::coords;

namespace {

SphericalPoint random_point(std::mt19937& rng) {
    std::uniform_real_distribution<double> rd(0.1, 10.0), td(0.05, M_PI - 0.05),
        pd(0.0, 2.0 * M_PI);
    return {rd(rng), td(rng), pd(rng)};
}

} // namespace

TEST_CASE("spherical <-> cylindrical") {
    CylindricalPoint c = spherical_to_cylindrical({1.0, M_PI / 2.0, 0.0});
    CHECK(c.rho == doctest::Approx(1.0));
    CHECK(std::abs(c.z) < 1e-15);

    CylindricalPoint c2 = spherical_to_cylindrical({2.0, M_PI / 4.0, 1.0});
    CHECK(c2.rho == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(c2.z == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(c2.phi == doctest::Approx(1.0));

    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        SphericalPoint p = random_point(rng);
        SphericalPoint back = cylindrical_to_spherical(spherical_to_cylindrical(p));
        CHECK(back.r == doctest::Approx(p.r).epsilon(1e-14));
        CHECK(back.theta == doctest::Approx(p.theta).epsilon(1e-14));
    }
}

TEST_CASE("cylindrical -> parabolic") {
    ParabolicPoint p = cylindrical_to_parabolic({2.0, 0.0, 0.0});
    CHECK(p.xi == doctest::Approx(1.0));
    CHECK(p.eta == doctest::Approx(1.0));

    // sqrt(9 + 16) = 5
    ParabolicPoint q = cylindrical_to_parabolic({3.0, 4.0, 0.0});
    CHECK(q.xi == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(q.eta == doctest::Approx(4.5).epsilon(1e-15));

    CHECK_THROWS_AS(CylindricalPoint(0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("parabolic -> oscillator") {
    OscillatorPoint a = parabolic_to_uv({1.0, 1.0, 0.0}, 0.0, 0.0);
    CHECK(a.u[0] == doctest::Approx(2.0));
    CHECK(a.u[1] == 0.0);
    CHECK(a.v[0] == doctest::Approx(2.0));

    OscillatorPoint b = parabolic_to_uv({0.25, 1.0, 0.0}, M_PI / 2.0, 0.0);
    CHECK(std::abs(b.u[0]) < 1e-15);
    CHECK(b.u[1] == doctest::Approx(1.0));
    CHECK(b.v[0] == doctest::Approx(2.0));
}

TEST_CASE("chain consistency and |u|^2 + |v|^2 = 4r") {
    std::mt19937 rng(7);
    for (int i = 0; i < 1000; ++i) {
        SphericalPoint p = random_point(rng);
        PointBundle bundle = make_bundle(p);
        const auto& par = bundle.parabolic;
        const auto& cyl = bundle.cylindrical;
        CHECK(par.xi + par.eta == doctest::Approx(p.r).epsilon(1e-13));
        CHECK(4.0 * par.xi * par.eta == doctest::Approx(cyl.rho * cyl.rho).epsilon(1e-13));
        double uv2 = bundle.oscillator.u[0] * bundle.oscillator.u[0] +
                     bundle.oscillator.u[1] * bundle.oscillator.u[1] +
                     bundle.oscillator.v[0] * bundle.oscillator.v[0] +
                     bundle.oscillator.v[1] * bundle.oscillator.v[1];
        CHECK(uv2 == doctest::Approx(4.0 * p.r).epsilon(1e-13));
    }
}

TEST_CASE("full round trip through all representations") {
    std::mt19937 rng(11);
    for (int i = 0; i < 500; ++i) {
        SphericalPoint p = random_point(rng);
        PointBundle bundle = make_bundle(p);
        ParabolicPoint par = uv_to_parabolic(bundle.oscillator);
        SphericalPoint back = cylindrical_to_spherical(parabolic_to_cylindrical(par));
        CHECK(back.r == doctest::Approx(p.r).epsilon(1e-12));
        CHECK(back.theta == doctest::Approx(p.theta).epsilon(1e-12));
        CHECK(uv_phi1(bundle.oscillator) == doctest::Approx(p.phi).epsilon(1e-12));
        CHECK(uv_phi2(bundle.oscillator) == doctest::Approx(p.phi).epsilon(1e-12));
    }
}

TEST_CASE("potential in spherical coordinates") {
    auto p1 = PhysicalParams::natural(1.0, 1.0, 5.0);
    Complex v1 = potential_spherical(p1, {1.0, M_PI / 2.0, 0.0});
    CHECK(v1.real() == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(std::abs(v1.imag()) < 1e-15);

    auto p0 = PhysicalParams::natural(0.0, 0.0, 0.0);
    Complex v0 = potential_spherical(p0, {2.3, 1.0, 0.4});
    CHECK(v0 == Complex(0.0, 0.0));

    auto p2 = PhysicalParams::natural(1.0, 0.0, 2.0);
    Complex v2 = potential_spherical(p2, {1.0, M_PI / 3.0, 0.0});
    CHECK(v2.real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(v2.imag() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

    CHECK_THROWS_AS(SphericalPoint(1.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(SphericalPoint(1.0, M_PI, 0.0), DomainError);
}

TEST_CASE("potential agrees across representations") {
    auto params = PhysicalParams::natural(1.3, 0.7, 1.9);
    std::mt19937 rng(13);
    for (int i = 0; i < 1000; ++i) {
        SphericalPoint p = random_point(rng);
        PointBundle bundle = make_bundle(p);
        Complex vs = potential_spherical(params, p);
        Complex vc = potential_cylindrical(params, bundle.cylindrical);
        Complex vp = potential_parabolic(params, bundle.parabolic);
        CHECK(std::abs(vc - vs) <= 1e-12 * (1.0 + std::abs(vs)));
        CHECK(std::abs(vp - vs) <= 1e-12 * (1.0 + std::abs(vs)));
    }
}

TEST_CASE("parabolic potential worked value and symmetric point") {
    // beta = gamma = 1 needs B = C = 2 in natural units
    auto params = PhysicalParams::natural(1.0, 2.0, 2.0);
    Complex v = potential_parabolic(params, {1.0, 2.0, 0.0});
    CHECK(v.real() == doctest::Approx(-1.0 / 3.0 + 1.0 / 8.0).epsilon(1e-14));
    CHECK(v.imag() == doctest::Approx(1.0 / 24.0).epsilon(1e-14));

    Complex sym = potential_parabolic(params, {1.7, 1.7, 0.0});
    CHECK(sym.imag() == 0.0);
}

TEST_CASE("parity map") {
    SphericalPoint fixed = pt_conjugate({1.0, M_PI / 2.0, 0.3});
    CHECK(fixed.theta == doctest::Approx(M_PI / 2.0));
    SphericalPoint flipped = pt_conjugate({1.0, M_PI / 3.0, 0.3});
    CHECK(flipped.theta == doctest::Approx(2.0 * M_PI / 3.0).epsilon(1e-15));
    SphericalPoint twice = pt_conjugate(pt_conjugate({2.0, 0.9, 1.1}));
    CHECK(twice.theta == doctest::Approx(0.9).epsilon(1e-15));
}

TEST_CASE("PT symmetry of the potential") {
    auto params = PhysicalParams::natural(0.8, -1.2, 2.4);
    std::mt19937 rng(19);
    for (int i = 0; i < 1000; ++i) {
        SphericalPoint p = random_point(rng);
        Complex v = potential_spherical(params, p);
        Complex vpt = potential_spherical(params, pt_conjugate(p));
        CHECK(std::abs(vpt - std::conj(v)) <= 1e-13 * (1.0 + std::abs(v)));
    }
}

TEST_CASE("Hartmann limit C = 0 is Hermitian") {
    auto params = PhysicalParams::natural(1.0, 2.5, 0.0);
    std::mt19937 rng(29);
    for (int i = 0; i < 200; ++i) {
        SphericalPoint p = random_point(rng);
        CHECK(potential_spherical(params, p).imag() == 0.0);
    }
}

#include <doctest.h>

#include <stdexcept>

#include "core/model.hpp"

using namespace cavspin;

TEST_CASE("classify_point: the three regions") {
    const CavityGeometry g{8.0, 4.0, 0.010};
    CHECK(classify_point(g, 0.0, 0.0) == Region::I);
    CHECK(classify_point(g, 10.0, 0.0) == Region::II);
    CHECK(classify_point(g, 1.0, 5.0) == Region::III);
    CHECK(classify_point(g, 1.0, -5.0) == Region::III);
    // boundary conventions: rho == R -> II, |z| == d -> III
    CHECK(classify_point(g, 8.0, 0.0) == Region::II);
    CHECK(classify_point(g, 1.0, 4.0) == Region::III);
    CHECK(classify_point(g, 1.0, -4.0) == Region::III);
    CHECK_THROWS_AS(classify_point(g, -0.1, 0.0), std::domain_error);
}

TEST_CASE("classify_point: partitions the half-plane") {
    const CavityGeometry g{5.0, 2.5, 0.050};
    for (double rho = 0.0; rho <= 12.0; rho += 0.37) {
        for (double z = -6.0; z <= 6.0; z += 0.41) {
            const Region r = classify_point(g, rho, z);
            const bool in_i = rho < g.radius_R && std::abs(z) < g.half_height_d;
            const bool in_ii = rho >= g.radius_R && std::abs(z) < g.half_height_d;
            if (in_i) CHECK(r == Region::I);
            else if (in_ii) CHECK(r == Region::II);
            else CHECK(r == Region::III);
        }
    }
}

TEST_CASE("geometry and quantum number validation") {
    CHECK_NOTHROW(CavityGeometry{8.0, 4.0, 0.010}.validate());
    CHECK_THROWS_AS((CavityGeometry{0.0, 4.0, 0.010}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CavityGeometry{8.0, -1.0, 0.010}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CavityGeometry{8.0, 4.0, 0.0}.validate()), std::invalid_argument);

    QuantumNumbers q;
    CHECK_NOTHROW(q.validate());
    q.m_axial = 2;
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
    q = QuantumNumbers{};
    q.m_axial = -3;
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
    q = QuantumNumbers{};
    q.n_radial = 0;
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
    q = QuantumNumbers{};
    q.l_azimuthal = -1;
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
    q = QuantumNumbers{};
    q.spin_up = false;
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
    q = QuantumNumbers{};
    q.m_axial = 5;
    q.l_azimuthal = 3;
    CHECK_NOTHROW(q.validate());
}

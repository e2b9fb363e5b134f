#include <doctest.h>

#include <random>

#include "kitaev/pauli.hpp"
#include "test_util.hpp"

using namespace kitaev;

namespace {

PauliString random_pure_string(int num_links, std::mt19937_64& rng) {
    LinkSet links;
    for (int k = 0; k < num_links; ++k)
        if (rng() & 1) links.push_back(k);
    return (rng() & 1) ? PauliString::x_on(num_links, links)
                       : PauliString::z_on(num_links, links);
}

} // namespace

TEST_CASE("multiplication basics") {
    Lattice lat = build_two_leg_ladder(3);
    PauliString z1 = PauliString::z_on(lat.num_links, {1});

    PauliString sq = multiply(z1, z1);
    CHECK(sq.is_identity());

    PauliString b1 = plaquette_operator(lat, 1);
    CHECK(multiply(b1, b1).is_identity());

    // supports of the two cycles are disjoint, so the product carries both
    PauliString wx = wilson_x_operator(lat);
    PauliString wz = wilson_z_operator(lat);
    PauliString prod = multiply(wx, wz);
    CHECK(prod.sign == +1);
    CHECK(prod.xmask == test::link_mask(lat.wx_support));
    CHECK(prod.zmask == test::link_mask(lat.wz_support));
    CHECK((prod.xmask & prod.zmask) == 0);
}

TEST_CASE("multiplication ordering sign") {
    PauliString x0 = PauliString::x_on(2, {0});
    PauliString z0 = PauliString::z_on(2, {0});
    // canonical order keeps X left of Z
    CHECK(multiply(x0, z0).sign == +1);
    CHECK(multiply(z0, x0).sign == -1);
    CHECK_FALSE(commutes(x0, z0));
    CHECK(commutes(PauliString::x_on(2, {0}), PauliString::z_on(2, {1})));
}

TEST_CASE("size mismatch is rejected") {
    CHECK_THROWS_AS(multiply(PauliString::identity(3), PauliString::identity(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply(PauliString::identity(3), StateVector::basis_state(4, 0)),
                    std::invalid_argument);
}

TEST_CASE("stars and plaquettes all commute") {
    for (const Lattice& lat : {build_two_leg_ladder(3), build_three_leg_ladder(2)}) {
        for (int v = 0; v < lat.num_vertices(); ++v)
            for (int p = 0; p < lat.num_plaquettes(); ++p)
                CHECK(commutes(vertex_operator(lat, v), plaquette_operator(lat, p)));
        PauliString wx = wilson_x_operator(lat);
        PauliString wz = wilson_z_operator(lat);
        CHECK(commutes(wx, wz));
        for (int v = 0; v < lat.num_vertices(); ++v) {
            CHECK(commutes(wx, vertex_operator(lat, v)));
            CHECK(commutes(wz, vertex_operator(lat, v)));
        }
        for (int p = 0; p < lat.num_plaquettes(); ++p) {
            CHECK(commutes(wx, plaquette_operator(lat, p)));
            CHECK(commutes(wz, plaquette_operator(lat, p)));
        }
    }
}

TEST_CASE("apply on basis states") {
    Lattice lat = build_two_leg_ladder(2);
    StateVector omega = StateVector::basis_state(lat.num_links, 0);

    // all links in |+>, so the X string acts trivially
    StateVector wxo = apply(wilson_x_operator(lat), omega);
    CHECK(wxo.amp[0] == 1.0);
    CHECK(wxo.norm() == doctest::Approx(1.0));

    // a Z flips the bit of its link
    StateVector flipped = apply(PauliString::z_on(lat.num_links, {3}), omega);
    CHECK(flipped.amp[1 << 3] == 1.0);

    // X picks up the sign of an already flipped link
    StateVector signed_state = apply(PauliString::x_on(lat.num_links, {3}), flipped);
    CHECK(signed_state.amp[1 << 3] == -1.0);
}

TEST_CASE("projector factor algebra") {
    Lattice lat = build_two_leg_ladder(2);
    StateVector omega = StateVector::basis_state(lat.num_links, 0);
    PauliString b1 = plaquette_operator(lat, 0);

    StateVector once = apply_projector_factor(0, b1, omega);
    int nonzero = 0;
    for (double a : once.amp)
        if (a != 0.0) {
            ++nonzero;
            CHECK(a == 1.0);
        }
    CHECK(nonzero == 2);

    // (1 + B)^2 = 2 (1 + B)
    StateVector twice = apply_projector_factor(0, b1, once);
    for (std::size_t i = 0; i < twice.amp.size(); ++i)
        CHECK(twice.amp[i] == 2.0 * once.amp[i]);

    // (1 - B)(1 + B) = 0
    StateVector annihilated = apply_projector_factor(1, b1, once);
    CHECK(annihilated.norm() == 0.0);
}

TEST_CASE("associativity and order-sign consistency on random strings") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        PauliString a = random_pure_string(9, rng);
        PauliString b = random_pure_string(9, rng);
        PauliString c = random_pure_string(9, rng);

        PauliString left = multiply(multiply(a, b), c);
        PauliString right = multiply(a, multiply(b, c));
        CHECK(left.xmask == right.xmask);
        CHECK(left.zmask == right.zmask);
        CHECK(left.sign == right.sign);

        PauliString ab = multiply(a, b);
        PauliString ba = multiply(b, a);
        CHECK((ab.sign == ba.sign) == commutes(a, b));
        CHECK(commutation_phase(a, b) == ab.sign * ba.sign);
    }
}

TEST_CASE("apply is a homomorphism") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    const int n = 8;
    for (int trial = 0; trial < 50; ++trial) {
        StateVector v = StateVector::zero(n);
        for (double& a : v.amp) a = amp(rng);
        PauliString a = random_pure_string(n, rng);
        PauliString b = random_pure_string(n, rng);
        StateVector combined = apply(multiply(a, b), v);
        StateVector stepwise = apply(a, apply(b, v));
        for (std::size_t i = 0; i < combined.amp.size(); ++i)
            CHECK(combined.amp[i] == doctest::Approx(stepwise.amp[i]).epsilon(1e-12));
    }
}

TEST_CASE("B_l strings are orthogonal projectors up to 2^N") {
    // B_l B_l' = 2^N delta_{l,l'} B_l as operators on |Omega+>, N=2.
    Lattice lat = build_two_leg_ladder(2);
    StateVector omega = StateVector::basis_state(lat.num_links, 0);
    auto b_string = [&](std::uint64_t l, const StateVector& v) {
        StateVector out = v;
        for (int p = 0; p < lat.num_plaquettes(); ++p)
            out = apply_projector_factor((l >> p) & 1, plaquette_operator(lat, p), out);
        return out;
    };
    for (std::uint64_t l = 0; l < 4; ++l) {
        StateVector bl = b_string(l, omega);
        for (std::uint64_t lp = 0; lp < 4; ++lp) {
            StateVector blp_then_bl = b_string(l, b_string(lp, omega));
            double scale = (l == lp) ? 4.0 : 0.0;  // 2^N
            for (std::size_t i = 0; i < bl.amp.size(); ++i)
                CHECK(blp_then_bl.amp[i] == scale * bl.amp[i]);
        }
    }
}

TEST_CASE("dimension cap") {
    CHECK_THROWS_AS(StateVector::zero(25), std::length_error);
    CHECK_THROWS_AS(PauliString::identity(65), std::invalid_argument);
}

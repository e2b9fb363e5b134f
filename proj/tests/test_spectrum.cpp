#include <doctest.h>

#include <cmath>
#include <sstream>

#include "kitaev/spectrum.hpp"

using namespace kitaev;

TEST_CASE("two-leg closed-form energies") {
    Lattice lat = build_two_leg_ladder(2);
    Couplings c{1.0, 1.0};

    // all-zero labels: the ground state
    CHECK(energy(lat, QuantumNumbers{}, c) == -2 * (2 * c.j + c.k));

    // complemented l and r with uniform s: the top states
    for (std::uint64_t s : {0ull, 3ull})
        CHECK(energy(lat, QuantumNumbers{3, 3, s, 0}, c) == 2 * (2 * c.j + c.k));

    // one plaquette excitation on top of the otherwise lowest vertex sector
    CHECK(energy(lat, QuantumNumbers{1, 0, 0, 0}, c) == -4.0);

    // coefficients are exact integers
    EnergyCoeffs ground = energy_coeffs(lat, QuantumNumbers{});
    CHECK(ground.coeff_j == -4);
    CHECK(ground.coeff_k == -2);
}

TEST_CASE("two-leg energies at N=3 depend on the geometric pairing") {
    Lattice lat = build_two_leg_ladder(3);
    Couplings c{1.0, 0.0};
    // r = (1,0,0), s = (1,0,0): R = (-1,1,1), S = (-1,1,1).
    // E/J = -sum_j R_j (S_{j-1} S_j + 1) with cyclic j: contributions
    //   j=0: R0 (S2 S0 + 1) = -1 * (-1 + 1) = 0
    //   j=1: R1 (S0 S1 + 1) = +1 * (-1 + 1) = 0
    //   j=2: R2 (S1 S2 + 1) = +1 * (1 + 1)  = 2
    CHECK(energy(lat, QuantumNumbers{0, 1, 1, 0}, c) == -2.0);
}

TEST_CASE("three-leg closed-form energies") {
    Lattice lat = build_three_leg_ladder(2);
    Couplings c{1.0, 1.0};
    int n = lat.size;

    CHECK(energy(lat, QuantumNumbers{}, c) == -(3.0 * n * c.j + 2.0 * n * c.k));

    // one plaquette flip costs 2K
    CHECK(energy(lat, QuantumNumbers{1, 0, 0, 0}, c) ==
          -(3.0 * n * c.j + 2.0 * n * c.k) + 2.0 * c.k);

    // R=(+,-), S=T=+, L=+: vertex sum (RTS'S + R + T) is 3 at i=0, -1 at i=1
    CHECK(energy(lat, QuantumNumbers{0, 2, 0, 0}, c) == -2.0 - 4.0);
}

TEST_CASE("torus closed-form energies") {
    Lattice lat = build_square_torus(3);
    Couplings c{1.5, 0.5};
    double ground = -9.0 * (c.j + c.k);
    CHECK(energy(lat, QuantumNumbers{}, c) == ground);
    // one flipped curve spin breaks two Ising bonds
    CHECK(energy(lat, QuantumNumbers{0, 0, 1, 0}, c) == ground + 4.0 * c.j);
}

TEST_CASE("quantum number validation") {
    Lattice lat = build_two_leg_ladder(2);
    CHECK_THROWS_AS(energy(lat, QuantumNumbers{4, 0, 0, 0}, Couplings{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(energy(lat, QuantumNumbers{0, 0, 0, 1}, Couplings{}),
                    std::invalid_argument);
}

TEST_CASE("spectrum enumeration at N=2") {
    Lattice lat = build_two_leg_ladder(2);
    SpectrumHistogram hist = enumerate_spectrum(lat, {1.0, 1.0});
    CHECK(hist.total_states() == 64);

    auto buckets = hist.buckets();
    CHECK(buckets.front().energy == doctest::Approx(-6.0));
    CHECK(buckets.front().degeneracy == 2);
    CHECK(buckets.back().energy == doctest::Approx(6.0));
    CHECK(buckets.back().degeneracy == 2);
}

TEST_CASE("histogram totals") {
    for (int n : {2, 3, 4, 5})
        CHECK(enumerate_spectrum(build_two_leg_ladder(n), {1.0, std::sqrt(2.0)}).total_states() ==
              std::uint64_t{1} << (3 * n));
    CHECK(enumerate_spectrum(build_three_leg_ladder(2), {1.0, 1.0}).total_states() == 1024);
}

TEST_CASE("bucketing merges rational coincidences") {
    // at J=K the pairs (a,b) and (a+2,b-2) evaluate identically
    Lattice lat = build_two_leg_ladder(3);
    SpectrumHistogram equal = enumerate_spectrum(lat, {1.0, 1.0});
    SpectrumHistogram generic = enumerate_spectrum(lat, {1.0, std::sqrt(2.0)});
    CHECK(equal.buckets().size() < generic.buckets().size());
    CHECK(generic.buckets().size() == generic.coeff_counts.size());
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(enumerate_spectrum(build_square_torus(3), {1.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_spectrum(build_two_leg_ladder(9), {1.0, 1.0}),
                    std::length_error);
}

TEST_CASE("spectrum symmetries hold exactly") {
    for (int n : {2, 3}) {
        SymmetryReport report = check_symmetries(build_two_leg_ladder(n));
        CHECK(report.checked == std::uint64_t{1} << (3 * n));
        CHECK(report.clean());
    }
    // sampled path
    SymmetryReport sampled = check_symmetries(build_two_leg_ladder(7), 500, 99);
    CHECK(sampled.checked == 500);
    CHECK(sampled.clean());
}

TEST_CASE("histogram CSV format") {
    Lattice lat = build_two_leg_ladder(2);
    SpectrumHistogram hist = enumerate_spectrum(lat, {1.0, 1.0});
    std::ostringstream os;
    write_histogram_csv(os, hist);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "coeff_J,coeff_K,energy,degeneracy");
    std::getline(in, line);
    CHECK(line == "-4,-2,-6,2");

    std::ostringstream again;
    write_histogram_csv(again, hist);
    CHECK(os.str() == again.str());
}

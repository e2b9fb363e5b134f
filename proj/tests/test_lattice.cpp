#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "kitaev/lattice.hpp"
#include "test_util.hpp"

using namespace kitaev;
using test::gf2_rank;
using test::link_mask;

namespace {

// Each pair of consecutive curve links (cyclically) must share a vertex.
bool consecutive_links_share_vertices(const Lattice& lat) {
    const auto& curve = lat.excitation_curve;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        auto a = link_endpoints(lat, curve[i]);
        auto b = link_endpoints(lat, curve[(i + 1) % curve.size()]);
        bool shared = false;
        for (int v : a)
            if (std::find(b.begin(), b.end(), v) != b.end()) shared = true;
        if (!shared) return false;
    }
    return true;
}

} // namespace

TEST_CASE("two-leg ladder counts and structure") {
    Lattice lat = build_two_leg_ladder(2);
    CHECK(lat.num_links == 6);
    CHECK(lat.num_vertices() == 4);
    CHECK(lat.num_plaquettes() == 2);

    for (const auto& star : lat.vertex_stars) CHECK(star.size() == 3);
    for (const auto& boundary : lat.plaquette_boundaries) CHECK(boundary.size() == 4);

    // product of all vertex operators is the identity
    std::uint64_t xor_stars = 0;
    for (const auto& star : lat.vertex_stars) xor_stars ^= link_mask(star);
    CHECK(xor_stars == 0);

    // but the product of all plaquettes is not
    std::uint64_t xor_plaq = 0;
    for (const auto& boundary : lat.plaquette_boundaries) xor_plaq ^= link_mask(boundary);
    CHECK(xor_plaq != 0);
}

TEST_CASE("two-leg ladder link labels") {
    Lattice lat = build_two_leg_ladder(3);
    // first plaquette: rungs 0,1 plus the facing leg links
    CHECK(lat.plaquette_boundaries[0] ==
          LinkSet{lat.rung_link(0), lat.rung_link(1), lat.lower_leg_link(0), lat.upper_leg_link(0)});
    // lower vertex i holds lower links i-1, i and rung i
    CHECK(lat.vertex_stars[0] ==
          LinkSet{lat.rung_link(0), lat.lower_leg_link(0), lat.lower_leg_link(2)});
    // upper vertex block follows the lower one
    CHECK(lat.vertex_stars[3] ==
          LinkSet{lat.rung_link(0), lat.upper_leg_link(0), lat.upper_leg_link(2)});

    CHECK(lat.wz_support == LinkSet{3, 4, 5});
    CHECK(lat.wx_support == LinkSet{0, 1, 2});
    for (int link : lat.wx_support)
        CHECK(!std::binary_search(lat.wz_support.begin(), lat.wz_support.end(), link));
}

TEST_CASE("three-leg ladder counts") {
    Lattice lat = build_three_leg_ladder(2);
    CHECK(lat.num_links == 10);
    CHECK(lat.num_vertices() == 6);
    CHECK(lat.num_plaquettes() == 4);
    CHECK(build_three_leg_ladder(3).num_links == 15);

    std::uint64_t xor_stars = 0;
    for (const auto& star : lat.vertex_stars) xor_stars ^= link_mask(star);
    CHECK(xor_stars == 0);

    // outer-leg vertices have 3 links, middle-leg vertices 4
    int n = lat.size;
    for (int i = 0; i < n; ++i) {
        CHECK(lat.vertex_stars[i].size() == 3);
        CHECK(lat.vertex_stars[n + i].size() == 4);
        CHECK(lat.vertex_stars[2 * n + i].size() == 3);
    }
    for (const auto& boundary : lat.plaquette_boundaries) CHECK(boundary.size() == 4);
}

TEST_CASE("square torus counts") {
    Lattice lat = build_square_torus(3);
    CHECK(lat.num_links == 18);
    CHECK(lat.num_vertices() == 9);
    CHECK(lat.num_plaquettes() == 9);
    CHECK(build_square_torus(4).num_links == 32);

    for (const auto& star : lat.vertex_stars) CHECK(star.size() == 4);
    for (const auto& boundary : lat.plaquette_boundaries) CHECK(boundary.size() == 4);

    std::uint64_t xor_stars = 0, xor_plaq = 0;
    for (const auto& star : lat.vertex_stars) xor_stars ^= link_mask(star);
    for (const auto& boundary : lat.plaquette_boundaries) xor_plaq ^= link_mask(boundary);
    CHECK(xor_stars == 0);
    CHECK(xor_plaq == 0);
}

TEST_CASE("degenerate sizes are rejected") {
    CHECK_THROWS_AS(build_two_leg_ladder(1), std::invalid_argument);
    CHECK_THROWS_AS(build_three_leg_ladder(1), std::invalid_argument);
    CHECK_THROWS_AS(build_square_torus(2), std::invalid_argument);
    CHECK_THROWS_AS(build_square_torus(0), std::invalid_argument);
}

TEST_CASE("every plaquette commutes with every star (intersection parity)") {
    for (const Lattice& lat :
         {build_two_leg_ladder(3), build_three_leg_ladder(2), build_square_torus(3)}) {
        for (const auto& star : lat.vertex_stars)
            for (const auto& boundary : lat.plaquette_boundaries)
                CHECK(std::popcount(link_mask(star) & link_mask(boundary)) % 2 == 0);
    }
}

TEST_CASE("GF(2) ranks of the incidence structures") {
    for (int n : {2, 3, 4}) {
        Lattice lat = build_two_leg_ladder(n);
        CHECK(gf2_rank(test::vertex_rows(lat)) == lat.num_vertices() - 1);
        CHECK(gf2_rank(test::plaquette_rows(lat)) == lat.num_plaquettes());
    }
    {
        Lattice lat = build_three_leg_ladder(3);
        CHECK(gf2_rank(test::vertex_rows(lat)) == lat.num_vertices() - 1);
        CHECK(gf2_rank(test::plaquette_rows(lat)) == lat.num_plaquettes());
    }
    for (int n : {3, 4, 5}) {
        Lattice lat = build_square_torus(n);
        CHECK(gf2_rank(test::vertex_rows(lat)) == n * n - 1);
        CHECK(gf2_rank(test::plaquette_rows(lat)) == n * n - 1);
    }
}

TEST_CASE("excitation curve of the ladders") {
    Lattice two = build_two_leg_ladder(4);
    // rungs and lower-leg links, interleaved
    CHECK(two.excitation_curve.size() == 8);
    CHECK(two.excitation_curve[0] == two.rung_link(0));
    CHECK(two.excitation_curve[1] == two.lower_leg_link(0));
    CHECK(consecutive_links_share_vertices(two));

    Lattice three = build_three_leg_ladder(3);
    CHECK(three.excitation_curve.size() == 9);
    CHECK(consecutive_links_share_vertices(three));
}

TEST_CASE("torus excitation curve is a nontrivial Hamiltonian cycle") {
    for (int n : {3, 4, 5}) {
        Lattice lat = build_square_torus(n);
        const auto& curve = excitation_curve(lat);
        CHECK(static_cast<int>(curve.size()) == n * n);

        // distinct links
        std::set<int> distinct(curve.begin(), curve.end());
        CHECK(distinct.size() == curve.size());

        CHECK(consecutive_links_share_vertices(lat));

        // every vertex carries exactly two curve links
        std::vector<int> degree(lat.num_vertices(), 0);
        for (int link : curve)
            for (int v : link_endpoints(lat, link)) ++degree[v];
        for (int d : degree) CHECK(d == 2);
    }
}

TEST_CASE("curve links are independent of the plaquette span over GF(2)") {
    for (const Lattice& lat :
         {build_two_leg_ladder(3), build_three_leg_ladder(2), build_square_torus(3),
          build_square_torus(4), build_square_torus(5)}) {
        auto rows = test::plaquette_rows(lat);
        int plaquette_rank = gf2_rank(rows);
        for (int link : lat.excitation_curve) rows.push_back(std::uint64_t{1} << link);
        CHECK(gf2_rank(rows) ==
              plaquette_rank + static_cast<int>(lat.excitation_curve.size()));
    }
}

#include "kitaev/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace kitaev {

namespace {

void require_kind(const Lattice& lat, LatticeKind kind, const char* what) {
    if (lat.kind != kind)
        throw std::logic_error(std::string(what) + " is not defined for " + to_string(lat.kind));
}

LinkSet sorted(LinkSet s) {
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

std::string to_string(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::TwoLegLadder: return "two-leg";
        case LatticeKind::ThreeLegLadder: return "three-leg";
        case LatticeKind::SquareTorus: return "torus";
    }
    return "?";
}

int Lattice::rung_link(int i) const {
    require_kind(*this, LatticeKind::TwoLegLadder, "rung_link");
    return ((i % size) + size) % size;
}
int Lattice::lower_leg_link(int i) const {
    require_kind(*this, LatticeKind::TwoLegLadder, "lower_leg_link");
    return size + ((i % size) + size) % size;
}
int Lattice::upper_leg_link(int i) const {
    if (kind == LatticeKind::TwoLegLadder) return 2 * size + ((i % size) + size) % size;
    require_kind(*this, LatticeKind::ThreeLegLadder, "upper_leg_link");
    return 4 * size + ((i % size) + size) % size;
}
int Lattice::lower_rung_link(int i) const {
    require_kind(*this, LatticeKind::ThreeLegLadder, "lower_rung_link");
    return ((i % size) + size) % size;
}
int Lattice::upper_rung_link(int i) const {
    require_kind(*this, LatticeKind::ThreeLegLadder, "upper_rung_link");
    return size + ((i % size) + size) % size;
}
int Lattice::lower_leg3_link(int i) const {
    require_kind(*this, LatticeKind::ThreeLegLadder, "lower_leg3_link");
    return 2 * size + ((i % size) + size) % size;
}
int Lattice::middle_leg_link(int i) const {
    require_kind(*this, LatticeKind::ThreeLegLadder, "middle_leg_link");
    return 3 * size + ((i % size) + size) % size;
}
int Lattice::horizontal_link(int x, int y) const {
    require_kind(*this, LatticeKind::SquareTorus, "horizontal_link");
    x = ((x % size) + size) % size;
    y = ((y % size) + size) % size;
    return y * size + x;
}
int Lattice::vertical_link(int x, int y) const {
    require_kind(*this, LatticeKind::SquareTorus, "vertical_link");
    x = ((x % size) + size) % size;
    y = ((y % size) + size) % size;
    return size * size + y * size + x;
}

Lattice build_two_leg_ladder(int n) {
    if (n < 2)
        throw std::invalid_argument("two-leg ladder needs N >= 2; N=" + std::to_string(n) +
                                    " makes plaquette links coincide");
    Lattice lat;
    lat.kind = LatticeKind::TwoLegLadder;
    lat.size = n;
    lat.num_links = 3 * n;

    auto rung = [n](int i) { return ((i % n) + n) % n; };
    auto lower = [n, &rung](int i) { return n + rung(i); };
    auto upper = [n, &rung](int i) { return 2 * n + rung(i); };

    // Vertices: lower leg first, then upper leg.
    lat.vertex_stars.reserve(2 * n);
    for (int i = 0; i < n; ++i)
        lat.vertex_stars.push_back(sorted({lower(i - 1), rung(i), lower(i)}));
    for (int i = 0; i < n; ++i)
        lat.vertex_stars.push_back(sorted({upper(i - 1), rung(i), upper(i)}));

    lat.plaquette_boundaries.reserve(n);
    for (int i = 0; i < n; ++i)
        lat.plaquette_boundaries.push_back(sorted({rung(i), rung(i + 1), lower(i), upper(i)}));

    for (int i = 0; i < n; ++i) lat.wz_support.push_back(lower(i));
    for (int i = 0; i < n; ++i) lat.wx_support.push_back(rung(i));

    // Zigzag along the lower leg: rung i and lower-leg link i share vertex i.
    for (int i = 0; i < n; ++i) {
        lat.excitation_curve.push_back(rung(i));
        lat.excitation_curve.push_back(lower(i));
    }
    return lat;
}

Lattice build_three_leg_ladder(int n) {
    if (n < 2)
        throw std::invalid_argument("three-leg ladder needs N >= 2; N=" + std::to_string(n) +
                                    " makes plaquette links coincide");
    Lattice lat;
    lat.kind = LatticeKind::ThreeLegLadder;
    lat.size = n;
    lat.num_links = 5 * n;

    auto wrap = [n](int i) { return ((i % n) + n) % n; };
    auto lrung = [&wrap](int i) { return wrap(i); };
    auto urung = [n, &wrap](int i) { return n + wrap(i); };
    auto lleg = [n, &wrap](int i) { return 2 * n + wrap(i); };
    auto mleg = [n, &wrap](int i) { return 3 * n + wrap(i); };
    auto uleg = [n, &wrap](int i) { return 4 * n + wrap(i); };

    // Vertices: lower leg, middle leg, upper leg.
    lat.vertex_stars.reserve(3 * n);
    for (int i = 0; i < n; ++i)
        lat.vertex_stars.push_back(sorted({lleg(i - 1), lleg(i), lrung(i)}));
    for (int i = 0; i < n; ++i)
        lat.vertex_stars.push_back(sorted({mleg(i - 1), mleg(i), lrung(i), urung(i)}));
    for (int i = 0; i < n; ++i)
        lat.vertex_stars.push_back(sorted({uleg(i - 1), uleg(i), urung(i)}));

    // Plaquettes: lower row (between lower and middle legs), then upper row.
    lat.plaquette_boundaries.reserve(2 * n);
    for (int i = 0; i < n; ++i)
        lat.plaquette_boundaries.push_back(sorted({lrung(i), lrung(i + 1), lleg(i), mleg(i)}));
    for (int i = 0; i < n; ++i)
        lat.plaquette_boundaries.push_back(sorted({urung(i), urung(i + 1), mleg(i), uleg(i)}));

    for (int i = 0; i < n; ++i) lat.wz_support.push_back(mleg(i));
    for (int i = 0; i < n; ++i) lat.wx_support.push_back(lrung(i));

    // Flip links: both rung rows and the middle leg. The walk
    // lower-rung, upper-rung, middle-leg revisits the middle vertex of each
    // site, so consecutive entries always share a vertex.
    for (int i = 0; i < n; ++i) {
        lat.excitation_curve.push_back(lrung(i));
        lat.excitation_curve.push_back(urung(i));
        lat.excitation_curve.push_back(mleg(i));
    }
    return lat;
}

Lattice build_square_torus(int n) {
    if (n < 3)
        throw std::invalid_argument("square torus needs N >= 3; N=" + std::to_string(n) +
                                    " creates shared-edge plaquette degeneracies");
    Lattice lat;
    lat.kind = LatticeKind::SquareTorus;
    lat.size = n;
    lat.num_links = 2 * n * n;

    auto wrap = [n](int c) { return ((c % n) + n) % n; };
    auto hl = [n, &wrap](int x, int y) { return wrap(y) * n + wrap(x); };
    auto vl = [n, &wrap](int x, int y) { return n * n + wrap(y) * n + wrap(x); };

    lat.vertex_stars.reserve(n * n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            lat.vertex_stars.push_back(sorted({hl(x, y), hl(x - 1, y), vl(x, y), vl(x, y - 1)}));

    lat.plaquette_boundaries.reserve(n * n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            lat.plaquette_boundaries.push_back(sorted({hl(x, y), hl(x, y + 1), vl(x, y), vl(x + 1, y)}));

    for (int x = 0; x < n; ++x) lat.wz_support.push_back(hl(x, 0));   // horizontal cycle
    for (int x = 0; x < n; ++x) lat.wx_support.push_back(vl(x, 0));   // dual horizontal cycle

    // Excitation curve: a homologically nontrivial Hamiltonian cycle of N^2
    // links. Every vertex then carries exactly two consecutive curve links,
    // which is what turns the vertex-term energy into a closed Ising chain.
    auto& curve = lat.excitation_curve;
    curve.reserve(n * n);
    if (n % 2 == 0) {
        // Column comb, wrapping once in x. The connector after the last
        // column (x = N-1, traversed downward) is the closing wrap link.
        for (int x = 0; x < n; ++x) {
            if (x % 2 == 0) {
                for (int y = 0; y <= n - 2; ++y) curve.push_back(vl(x, y));
                curve.push_back(hl(x, n - 1));
            } else {
                for (int y = n - 2; y >= 0; --y) curve.push_back(vl(x, y));
                curve.push_back(hl(x, 0));
            }
        }
    } else {
        // Staircase comb, wrapping once in y: zigzag through rows [0, N-2]
        // over columns [0, N-2], climb the last column, return along the top
        // row and close through the vertical wrap link.
        for (int x = 0; x <= n - 2; ++x) {
            if (x % 2 == 0) {
                for (int y = 0; y <= n - 3; ++y) curve.push_back(vl(x, y));
                curve.push_back(hl(x, n - 2));
            } else {
                for (int y = n - 3; y >= 0; --y) curve.push_back(vl(x, y));
                curve.push_back(hl(x, 0));
            }
        }
        for (int y = 0; y <= n - 2; ++y) curve.push_back(vl(n - 1, y));
        for (int x = n - 2; x >= 0; --x) curve.push_back(hl(x, n - 1));
        curve.push_back(vl(0, n - 1));
    }
    return lat;
}

const std::vector<int>& excitation_curve(const Lattice& lattice) {
    return lattice.excitation_curve;
}

std::vector<int> link_endpoints(const Lattice& lattice, int link) {
    std::vector<int> out;
    for (int v = 0; v < lattice.num_vertices(); ++v) {
        const auto& star = lattice.vertex_stars[v];
        if (std::binary_search(star.begin(), star.end(), link)) out.push_back(v);
    }
    return out;
}

} // namespace kitaev

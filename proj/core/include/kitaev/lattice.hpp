#ifndef KITAEV_LATTICE_HPP
#define KITAEV_LATTICE_HPP

#include <string>
#include <vector>

namespace kitaev {

enum class LatticeKind { TwoLegLadder, ThreeLegLadder, SquareTorus };

std::string to_string(LatticeKind kind);

/// Sorted set of global link indices.
using LinkSet = std::vector<int>;

/// An immutable lattice: link incidence structure of one of the three
/// supported geometries, with periodic boundary conditions.
///
/// Global link indices are assigned block-wise:
///   two-leg ladder (size N, 3N links):
///     rungs [0,N), lower-leg links [N,2N), upper-leg links [2N,3N)
///   three-leg ladder (size N, 5N links):
///     lower rungs [0,N), upper rungs [N,2N),
///     lower leg [2N,3N), middle leg [3N,4N), upper leg [4N,5N)
///   square torus (size N, 2N^2 links):
///     horizontal links y*N+x, vertical links N^2 + y*N+x
struct Lattice {
    LatticeKind kind;
    int size = 0;       // N: sites per leg, or linear torus extent
    int num_links = 0;

    std::vector<LinkSet> vertex_stars;          // one sorted link set per vertex
    std::vector<LinkSet> plaquette_boundaries;  // one sorted link set per plaquette

    LinkSet wz_support;  // cycle of Z's (one leg / one torus row)
    LinkSet wx_support;  // dual cut of X's (all rungs / one dual torus row)

    // Ordered flip-link list: consecutive entries share a vertex and the list
    // closes cyclically. On the torus this is a homologically nontrivial
    // Hamiltonian cycle of N^2 links; on the ladders it is the support set of
    // the Lambda flipping operators.
    std::vector<int> excitation_curve;

    int num_vertices() const { return static_cast<int>(vertex_stars.size()); }
    int num_plaquettes() const { return static_cast<int>(plaquette_boundaries.size()); }

    // Link-index helpers. Each is valid only for the matching lattice kind.
    int rung_link(int i) const;        // two-leg
    int lower_leg_link(int i) const;   // two-leg
    int upper_leg_link(int i) const;   // two-leg / three-leg

    int lower_rung_link(int i) const;  // three-leg
    int upper_rung_link(int i) const;  // three-leg
    int middle_leg_link(int i) const;  // three-leg
    int lower_leg3_link(int i) const;  // three-leg

    int horizontal_link(int x, int y) const;  // torus
    int vertical_link(int x, int y) const;    // torus
};

/// Two-leg ladder with N plaquettes. Vertex stars realize
/// A+_i = X_{i'-1} X_i X_{i'} and A-_i = X_{i''-1} X_i X_{i''};
/// plaquette boundaries realize B_i = Z_i Z_{i+1} Z_{i'} Z_{i''}.
/// Throws std::invalid_argument for N < 2.
Lattice build_two_leg_ladder(int n);

/// Three-leg ladder: 5N links, 3N vertices, 2N plaquettes.
/// Throws std::invalid_argument for N < 2.
Lattice build_three_leg_ladder(int n);

/// Square torus with N^2 sites and 2N^2 links.
/// Throws std::invalid_argument for N < 3.
Lattice build_square_torus(int n);

/// The ordered flip-link list of the lattice (see Lattice::excitation_curve).
const std::vector<int>& excitation_curve(const Lattice& lattice);

/// Vertices incident to a link, as vertex indices into vertex_stars.
std::vector<int> link_endpoints(const Lattice& lattice, int link);

} // namespace kitaev

#endif

#ifndef KITAEV_STATES_HPP
#define KITAEV_STATES_HPP

#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kitaev/pauli.hpp"
#include "kitaev/spectrum.hpp"

namespace kitaev {

struct EigenstateHandle {
    QuantumNumbers qn;
    StateVector vector;
    double energy = 0.0;
};

/// |Omega_+> : every link in |+> (basis index 0).
StateVector omega_plus(const Lattice& lattice);

/// |Omega_-> : every link in |-> (all basis bits set).
StateVector omega_minus(const Lattice& lattice);

/// Normalized product-of-projectors state
///   prod_p (1 + (-1)^{l_p} B_p) |Omega_+> / norm.
/// Built in exact integer arithmetic and normalized once at the end.
/// On the torus the l-sector is empty when popcount(l) is odd (the plaquette
/// product constraint annihilates the state); that is rejected.
StateVector build_psi_l(const Lattice& lattice, std::uint64_t l_bits);

/// The pure-Z flipping string of the label set:
///   two-leg:   prod_i Z_i^{r_i} Z_{i'}^{s_i}
///   three-leg: prod_i Z_i^{r_i} Z_{i'}^{s_i} Z_{i''}^{t_i}
///   torus:     prod_i Z_{curve[i]}^{s_i}
PauliString build_lambda(const Lattice& lattice, const QuantumNumbers& qn);

/// Lambda applied to |Psi_l>, with the closed-form energy attached.
EigenstateHandle build_eigenstate(const Lattice& lattice, const QuantumNumbers& qn,
                                  const Couplings& c);

/// Highest-energy state of the two-leg ladder:
///   prod_i (1 - B_i) |Omega_-> / norm,  energy +N(2J+K),
/// eigenvalue -1 for every vertex and plaquette operator.
EigenstateHandle build_top_state(const Lattice& lattice, const Couplings& c);

/// Random labels that name a nonempty eigenstate (on the torus, l is drawn
/// with even parity).
QuantumNumbers random_eigenstate_labels(const Lattice& lattice, std::mt19937_64& rng);

/// Matrix of pairwise inner products.
Eigen::MatrixXd gram_matrix(const std::vector<EigenstateHandle>& states);

/// Binary dump: 16-byte header (8-byte magic "KTLSTATE", little-endian
/// uint64 num_links) followed by the amplitudes as little-endian doubles.
void write_state_dump(const std::string& path, const StateVector& v);
StateVector read_state_dump(const std::string& path);

} // namespace kitaev

#endif

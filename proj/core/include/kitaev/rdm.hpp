#ifndef KITAEV_RDM_HPP
#define KITAEV_RDM_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kitaev/pauli.hpp"
#include "kitaev/spectrum.hpp"
#include "kitaev/thermo.hpp"

namespace kitaev {

/// A named set of links of the two-leg ladder:
///   A: one full leg (the upper leg), B: all rungs,
///   C: a proper nonempty rung subset, D: the opposite pair {1', 1''}.
struct Subsystem {
    char name = '?';
    LinkSet links;  // sorted ascending; bit q of the subsystem basis index
                    // corresponds to links[q]

    int num_links() const { return static_cast<int>(links.size()); }
    Eigen::Index dim() const { return Eigen::Index{1} << links.size(); }
};

Subsystem subsystem_A(const Lattice& lattice);
Subsystem subsystem_B(const Lattice& lattice);
/// Rungs at the given positions; must be a proper nonempty subset of all rungs.
Subsystem subsystem_C(const Lattice& lattice, const std::vector<int>& rung_positions);
Subsystem subsystem_D(const Lattice& lattice);

using DensityMatrix = Eigen::MatrixXd;

/// Partial trace of |v><v| onto the subsystem, in the x-basis.
/// The kept dimension is capped at 2^12.
DensityMatrix partial_trace(const StateVector& v, const Subsystem& sub);

/// Boltzmann-weighted partial trace over every closed-form eigenstate
/// (enumerable ladders only; 3N <= 12 on the two-leg ladder).
DensityMatrix thermal_partial_trace(const Lattice& lattice, const Couplings& c, double beta,
                                    const Subsystem& sub);

/// Weighted mixture of the even- and odd-parity uniform mixtures of the rung
/// register: weight_even * sigma_even + weight_odd * sigma_odd, where each
/// sigma is 1/2^{N-1} on its parity sector (diagonal in the x-basis).
struct ParityMixture {
    double weight_even = 0.5;
    double weight_odd = 0.5;
    int n = 0;  // rung register size

    /// Dense form; register capped at 12 links.
    DensityMatrix dense() const;
    /// Von Neumann entropy in bits: N - 1 + H(weight_even).
    double entropy_bits() const;
};

/// rho_B(T) = (1+<W_x>)/2 * sigma_even + (1-<W_x>)/2 * sigma_odd.
ParityMixture rho_B_closed(const ThermalPoint& tp);

/// Maximally mixed closed forms.
DensityMatrix rho_A_closed(int n);                  // I / 2^N
DensityMatrix rho_C_closed(const Subsystem& sub);   // I / 2^{|C|}
DensityMatrix rho_D_closed();                       // I / 4

/// S(rho_B) = N - 1 + H((1+<W_x>)/2), in bits.
double entropy_B_bits(const ThermalPoint& tp);

double von_neumann_entropy_bits(const DensityMatrix& rho);
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
double trace_distance_to_maximally_mixed(const DensityMatrix& rho);

/// JSON report with fields subsystem, beta, J, K, N, eigenvalues (sorted),
/// entropy_bits, trace_distance_to_maximally_mixed.
std::string rdm_report_json(const Subsystem& sub, const ThermalPoint& tp,
                            const DensityMatrix& rho);

} // namespace kitaev

#endif

#ifndef KITAEV_THERMO_HPP
#define KITAEV_THERMO_HPP

#include <iosfwd>
#include <vector>

#include "kitaev/lattice.hpp"
#include "kitaev/spectrum.hpp"

namespace kitaev {

struct ThermalPoint {
    double beta = 1.0;  // inverse temperature, >= 0
    Couplings c;
    int n = 2;          // ladder length / torus linear size
    LatticeKind kind = LatticeKind::TwoLegLadder;
};

/// ln Z in closed form:
///   two-leg:   Z = 2^{3N} (cosh^{2N} bJ + sinh^{2N} bJ) cosh^N bK
///   three-leg: Z = 2^{5N} cosh^{2N} bK [cosh^{3N} bJ + sinh^{3N} bJ]
///   torus:     Z = 2^{2N^2} cosh^{N^2} bK [cosh^{N^2} bJ + sinh^{N^2} bJ]
/// evaluated as cosh^m (1 + tanh^m) in the log domain.
double log_partition_closed(const ThermalPoint& tp);

/// exp(log_partition_closed); throws std::overflow_error when |ln Z| > 700.
double partition_closed(const ThermalPoint& tp);

/// Two-leg Z via the 2x2 transfer matrix T(S,S') = 2 cosh(bJ(SS'+1)),
/// Tr T^N computed by scaled matrix powers, times Z_1 = 2^N cosh^N bK.
/// An independent numerical route that must agree with the closed form.
double log_partition_transfer(const ThermalPoint& tp);
double partition_transfer(const ThermalPoint& tp);

/// Thermodynamic-limit two-leg energy per site: -(2J tanh bJ + K tanh bK).
double avg_energy_density_limit(double beta, double j, double k);

/// Exact finite-size -d(ln Z)/d(beta) via the analytic derivative.
double avg_energy_finite(const ThermalPoint& tp);

/// Thermodynamic-limit two-leg entropy per site (nats), from
/// S = (1 - beta d/dbeta) ln Z applied to the closed-form Z:
///   S/N = 3 ln2 + 2 ln cosh bJ + ln cosh bK - 2bJ tanh bJ - bK tanh bK.
double entropy_density_limit(double beta, double j, double k);

/// Vertex and plaquette contributions: S/N = S_s(bJ) + S_p(bK) with
///   S_s(x) = 2 ln2 + 2 ln cosh x - 2x tanh x
///   S_p(x) = ln2 + ln cosh x - x tanh x
double entropy_vertex_term(double x);
double entropy_plaquette_term(double x);

/// <W_x> = sinh^N 2bJ / (2^{N-1} (cosh^{2N} bJ + sinh^{2N} bJ)) on the
/// two-leg ladder; equals 2 t^N / (1 + t^{2N}) with t = tanh bJ.
double wilson_x_average(const ThermalPoint& tp);

/// <W_z> vanishes identically at every temperature.
double wilson_z_average(const ThermalPoint& tp);

/// CSV with header beta,J,K,N,lnZ,avg_energy,entropy_density,wilson_x
/// (two-leg points; energy and entropy columns are the thermodynamic-limit
/// densities, lnZ and wilson_x are the finite-N values).
void write_sweep_csv(std::ostream& os, const std::vector<ThermalPoint>& grid);

} // namespace kitaev

#endif

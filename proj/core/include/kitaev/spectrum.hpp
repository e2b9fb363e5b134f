#ifndef KITAEV_SPECTRUM_HPP
#define KITAEV_SPECTRUM_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "kitaev/lattice.hpp"

namespace kitaev {

struct Couplings {
    double j = 1.0;  // vertex coupling
    double k = 1.0;  // plaquette coupling
};

/// Bit-vector labels of one simultaneous eigenstate.
///   two-leg:   l over the N plaquettes, r over the rungs, s over the lower leg
///   three-leg: l over the 2N plaquettes (lower row first), r over the lower
///              rungs, s over the middle leg, t over the upper rungs
///   torus:     l over the N^2 plaquettes, s over excitation-curve positions
struct QuantumNumbers {
    std::uint64_t l = 0;
    std::uint64_t r = 0;
    std::uint64_t s = 0;
    std::uint64_t t = 0;
};

/// Throws std::invalid_argument when bits are set beyond the lattice's label
/// lengths (or when the lattice is too large for 64-bit labels).
void validate_quantum_numbers(const Lattice& lattice, const QuantumNumbers& qn);

/// Uniformly random labels of the right lengths.
QuantumNumbers random_quantum_numbers(const Lattice& lattice, std::mt19937_64& rng);

/// Exact integer coefficients of the closed-form energy E = coeff_j*J + coeff_k*K.
struct EnergyCoeffs {
    long long coeff_j = 0;
    long long coeff_k = 0;

    double value(const Couplings& c) const { return coeff_j * c.j + coeff_k * c.k; }
    friend auto operator<=>(const EnergyCoeffs&, const EnergyCoeffs&) = default;
};

/// Closed-form energy coefficients of the eigenstate labelled qn:
///   two-leg:   E = -sum_j [ J*R_j*(S_{j-1}S_j + 1) + K*L_j ]
///   three-leg: E = -J sum_i (R_i T_i S_{i-1} S_i + R_i + T_i) - K sum_p L_p
///   torus:     E = -J sum_i S_i S_{i+1} - K sum_p L_p   (S along the curve)
/// with Ising variables R=(-1)^r etc. and cyclic indices.
EnergyCoeffs energy_coeffs(const Lattice& lattice, const QuantumNumbers& qn);

/// energy_coeffs evaluated at the given couplings.
double energy(const Lattice& lattice, const QuantumNumbers& qn, const Couplings& c);

/// Degeneracy histogram of the complete closed-form spectrum. Counts are
/// accumulated exactly, keyed by the integer coefficient pair; energies are
/// only converted to floating point on output.
struct SpectrumHistogram {
    Couplings couplings;
    std::map<std::pair<long long, long long>, std::uint64_t> coeff_counts;

    struct Bucket {
        double energy;
        std::uint64_t degeneracy;
    };

    std::uint64_t total_states() const;

    /// Buckets sorted by energy; entries closer than tol are merged.
    std::vector<Bucket> buckets(double tol = 1e-9) const;

    /// Every energy in the spectrum, repeated per degeneracy, sorted
    /// ascending. Refuses totals above 2^22.
    std::vector<double> expanded_sorted() const;
};

/// Enumerates all quantum-number assignments of a ladder. Budget: at most
/// 2^26 assignments. The square torus is rejected: its closed-form label set
/// does not exhaust the Hilbert space (see states module notes), so a
/// histogram could not satisfy the total-count invariant.
SpectrumHistogram enumerate_spectrum(const Lattice& lattice, const Couplings& c);

/// CSV with header coeff_J,coeff_K,energy,degeneracy; rows sorted by
/// (energy, coeff_J, coeff_K); 17 significant digits.
void write_histogram_csv(std::ostream& os, const SpectrumHistogram& hist);

struct SymmetryReport {
    std::uint64_t checked = 0;
    std::uint64_t s_complement_violations = 0;  // E(l,r,s-bar) == E(l,r,s)
    std::uint64_t inversion_violations = 0;     // E(l-bar,r-bar,s)(J,K) == E(l,r,s)(-J,-K)

    bool clean() const { return s_complement_violations == 0 && inversion_violations == 0; }
};

/// Verifies the two spectrum symmetries on the two-leg ladder, exactly in
/// integer arithmetic: exhaustively when 2^{3N} <= max_samples, otherwise on
/// max_samples random labels.
SymmetryReport check_symmetries(const Lattice& lattice, std::uint64_t max_samples = 1u << 16,
                                std::uint64_t seed = 12345);

} // namespace kitaev

#endif

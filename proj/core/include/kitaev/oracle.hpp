#ifndef KITAEV_ORACLE_HPP
#define KITAEV_ORACLE_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "kitaev/pauli.hpp"
#include "kitaev/rdm.hpp"
#include "kitaev/spectrum.hpp"

namespace kitaev {

/// H = -J sum_s A_s - K sum_p B_p as a term list with matvec capability.
/// Brute-force verification machinery: nothing here knows any closed form.
struct SparseHamiltonian {
    int num_links = 0;
    std::vector<std::pair<PauliString, double>> terms;

    std::uint64_t dim() const { return std::uint64_t{1} << num_links; }
};

/// Budget: 2^18 for matvec use, 2^12 for dense assembly (checked at the
/// point of use).
SparseHamiltonian build_hamiltonian(const Lattice& lattice, const Couplings& c);

StateVector matvec(const SparseHamiltonian& h, const StateVector& v);

/// Dense symmetric matrix in the x-basis (dimension <= 4096).
Eigen::MatrixXd dense_matrix(const SparseHamiltonian& h);

struct DiagonalizedHamiltonian {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // columns
};

DiagonalizedHamiltonian diagonalize(const SparseHamiltonian& h);

/// All eigenvalues of the dense matrix, sorted ascending.
std::vector<double> full_diagonalization(const SparseHamiltonian& h);

/// Tr(f exp(-beta H)) via the eigendecomposition; f defaults to the identity,
/// giving the partition function.
double thermal_trace(const DiagonalizedHamiltonian& diag, double beta,
                     const std::optional<PauliString>& observable = std::nullopt);
double thermal_trace(const SparseHamiltonian& h, double beta,
                     const std::optional<PauliString>& observable = std::nullopt);

/// tr_env(exp(-beta H))/Z restricted to the subsystem: the fully independent
/// thermal reduced density matrix.
DensityMatrix thermal_rdm(const DiagonalizedHamiltonian& diag, double beta, const Subsystem& sub,
                          int num_links);
DensityMatrix thermal_rdm(const SparseHamiltonian& h, double beta, const Subsystem& sub);

/// || H v - e v ||_2
double residual(const SparseHamiltonian& h, const StateVector& v, double e);

} // namespace kitaev

#endif

#include "kitaev/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace kitaev {

namespace {

void check_matvec_budget(const SparseHamiltonian& h) {
    if (h.num_links > 18)
        throw std::length_error("matvec budget is dimension 2^18; lattice has " +
                                std::to_string(h.num_links) + " links");
}

void check_dense_budget(const SparseHamiltonian& h) {
    if (h.num_links > 12)
        throw std::length_error("dense budget is dimension 4096; lattice has " +
                                std::to_string(h.num_links) + " links");
}

} // namespace

SparseHamiltonian build_hamiltonian(const Lattice& lattice, const Couplings& c) {
    SparseHamiltonian h;
    h.num_links = lattice.num_links;
    h.terms.reserve(lattice.num_vertices() + lattice.num_plaquettes());
    for (int v = 0; v < lattice.num_vertices(); ++v)
        h.terms.emplace_back(vertex_operator(lattice, v), -c.j);
    for (int p = 0; p < lattice.num_plaquettes(); ++p)
        h.terms.emplace_back(plaquette_operator(lattice, p), -c.k);
    return h;
}

StateVector matvec(const SparseHamiltonian& h, const StateVector& v) {
    check_matvec_budget(h);
    if (v.num_links != h.num_links)
        throw std::invalid_argument("matvec dimension mismatch");
    StateVector out = StateVector::zero(h.num_links);
    for (const auto& [op, coeff] : h.terms) apply_accumulate(op, v, coeff, out);
    return out;
}

Eigen::MatrixXd dense_matrix(const SparseHamiltonian& h) {
    check_dense_budget(h);
    const auto dim = static_cast<Eigen::Index>(h.dim());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    // Each term maps |b> to sign*(-1)^{popcount(x & (b^z))} |b^z>.
    for (const auto& [op, coeff] : h.terms) {
        for (std::uint64_t b = 0; b < h.dim(); ++b) {
            std::uint64_t target = b ^ op.zmask;
            int phase = std::popcount(op.xmask & target) % 2 == 0 ? op.sign : -op.sign;
            m(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(b)) += coeff * phase;
        }
    }
    return m;
}

DiagonalizedHamiltonian diagonalize(const SparseHamiltonian& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_matrix(h));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed");
    return DiagonalizedHamiltonian{solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<double> full_diagonalization(const SparseHamiltonian& h) {
    DiagonalizedHamiltonian diag = diagonalize(h);
    return std::vector<double>(diag.eigenvalues.data(),
                               diag.eigenvalues.data() + diag.eigenvalues.size());
}

double thermal_trace(const DiagonalizedHamiltonian& diag, double beta,
                     const std::optional<PauliString>& observable) {
    const Eigen::Index dim = diag.eigenvalues.size();
    if (!observable) {
        double z = 0.0;
        for (Eigen::Index k = 0; k < dim; ++k) z += std::exp(-beta * diag.eigenvalues[k]);
        return z;
    }
    int num_links = std::countr_zero(static_cast<std::uint64_t>(dim));
    double trace = 0.0;
    StateVector vk = StateVector::zero(num_links);
    for (Eigen::Index k = 0; k < dim; ++k) {
        for (Eigen::Index i = 0; i < dim; ++i) vk.amp[i] = diag.eigenvectors(i, k);
        trace += std::exp(-beta * diag.eigenvalues[k]) * vk.dot(apply(*observable, vk));
    }
    return trace;
}

double thermal_trace(const SparseHamiltonian& h, double beta,
                     const std::optional<PauliString>& observable) {
    return thermal_trace(diagonalize(h), beta, observable);
}

DensityMatrix thermal_rdm(const DiagonalizedHamiltonian& diag, double beta, const Subsystem& sub,
                          int num_links) {
    const Eigen::Index dim = diag.eigenvalues.size();
    DensityMatrix rho = DensityMatrix::Zero(sub.dim(), sub.dim());
    double z = 0.0;
    StateVector vk = StateVector::zero(num_links);
    for (Eigen::Index k = 0; k < dim; ++k) {
        for (Eigen::Index i = 0; i < dim; ++i) vk.amp[i] = diag.eigenvectors(i, k);
        double w = std::exp(-beta * diag.eigenvalues[k]);
        rho += w * partial_trace(vk, sub);
        z += w;
    }
    return rho / z;
}

DensityMatrix thermal_rdm(const SparseHamiltonian& h, double beta, const Subsystem& sub) {
    return thermal_rdm(diagonalize(h), beta, sub, h.num_links);
}

double residual(const SparseHamiltonian& h, const StateVector& v, double e) {
    StateVector hv = matvec(h, v);
    double sum = 0.0;
    for (std::size_t i = 0; i < hv.amp.size(); ++i) {
        double d = hv.amp[i] - e * v.amp[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

} // namespace kitaev

#include "kitaev/rdm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "kitaev/states.hpp"

namespace kitaev {

namespace {

void require_two_leg(const Lattice& lattice, const char* what) {
    if (lattice.kind != LatticeKind::TwoLegLadder)
        throw std::invalid_argument(std::string(what) + " is defined on the two-leg ladder");
}

// Spreads the low bits of `packed` onto the given link positions.
std::uint64_t scatter(std::uint64_t packed, const LinkSet& positions) {
    std::uint64_t out = 0;
    for (std::size_t q = 0; q < positions.size(); ++q)
        if ((packed >> q) & 1) out |= std::uint64_t{1} << positions[q];
    return out;
}

} // namespace

Subsystem subsystem_A(const Lattice& lattice) {
    require_two_leg(lattice, "subsystem A");
    Subsystem sub{'A', {}};
    for (int i = 0; i < lattice.size; ++i) sub.links.push_back(lattice.upper_leg_link(i));
    return sub;
}

Subsystem subsystem_B(const Lattice& lattice) {
    require_two_leg(lattice, "subsystem B");
    Subsystem sub{'B', {}};
    for (int i = 0; i < lattice.size; ++i) sub.links.push_back(lattice.rung_link(i));
    return sub;
}

Subsystem subsystem_C(const Lattice& lattice, const std::vector<int>& rung_positions) {
    require_two_leg(lattice, "subsystem C");
    if (rung_positions.empty())
        throw std::invalid_argument("subsystem C must be nonempty");
    if (static_cast<int>(rung_positions.size()) >= lattice.size)
        throw std::invalid_argument("subsystem C must be a proper subset of the rungs; "
                                    "the full rung set is subsystem B");
    Subsystem sub{'C', {}};
    for (int i : rung_positions) {
        if (i < 0 || i >= lattice.size)
            throw std::invalid_argument("rung position out of range");
        sub.links.push_back(lattice.rung_link(i));
    }
    std::sort(sub.links.begin(), sub.links.end());
    if (std::adjacent_find(sub.links.begin(), sub.links.end()) != sub.links.end())
        throw std::invalid_argument("duplicate rung position");
    return sub;
}

Subsystem subsystem_D(const Lattice& lattice) {
    require_two_leg(lattice, "subsystem D");
    Subsystem sub{'D', {}};
    sub.links = {lattice.lower_leg_link(0), lattice.upper_leg_link(0)};
    std::sort(sub.links.begin(), sub.links.end());
    return sub;
}

DensityMatrix partial_trace(const StateVector& v, const Subsystem& sub) {
    const int k = sub.num_links();
    if (k > 12) throw std::length_error("kept subsystem capped at 2^12");
    for (int link : sub.links)
        if (link < 0 || link >= v.num_links)
            throw std::invalid_argument("subsystem link outside the state's lattice");

    LinkSet env_links;
    for (int link = 0; link < v.num_links; ++link)
        if (!std::binary_search(sub.links.begin(), sub.links.end(), link))
            env_links.push_back(link);

    const Eigen::Index sub_dim = Eigen::Index{1} << k;
    const std::uint64_t env_dim = std::uint64_t{1} << env_links.size();

    std::vector<std::uint64_t> sub_scatter(sub_dim);
    for (Eigen::Index a = 0; a < sub_dim; ++a)
        sub_scatter[a] = scatter(static_cast<std::uint64_t>(a), sub.links);

    DensityMatrix rho = DensityMatrix::Zero(sub_dim, sub_dim);
    for (std::uint64_t e = 0; e < env_dim; ++e) {
        std::uint64_t env_bits = scatter(e, env_links);
        for (Eigen::Index a = 0; a < sub_dim; ++a) {
            double va = v.amp[env_bits | sub_scatter[a]];
            if (va == 0.0) continue;
            for (Eigen::Index b = 0; b < sub_dim; ++b)
                rho(a, b) += va * v.amp[env_bits | sub_scatter[b]];
        }
    }
    return rho;
}

DensityMatrix thermal_partial_trace(const Lattice& lattice, const Couplings& c, double beta,
                                    const Subsystem& sub) {
    if (lattice.kind == LatticeKind::SquareTorus)
        throw std::invalid_argument("thermal ensembles need the complete eigenbasis, "
                                    "which the closed forms provide only on ladders");
    int label_bits = lattice.kind == LatticeKind::TwoLegLadder ? 3 * lattice.size
                                                               : 5 * lattice.size;
    if (label_bits > 12)
        throw std::length_error("thermal ensemble capped at 2^12 eigenstates");

    const int n = lattice.size;
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    DensityMatrix rho = DensityMatrix::Zero(sub.dim(), sub.dim());
    double z = 0.0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << label_bits); ++code) {
        QuantumNumbers qn;
        if (lattice.kind == LatticeKind::TwoLegLadder) {
            qn = {code & mask, (code >> n) & mask, (code >> (2 * n)) & mask, 0};
        } else {
            std::uint64_t lmask = (std::uint64_t{1} << (2 * n)) - 1;
            qn = {code & lmask, (code >> (2 * n)) & mask, (code >> (3 * n)) & mask,
                  (code >> (4 * n)) & mask};
        }
        EigenstateHandle state = build_eigenstate(lattice, qn, c);
        double w = std::exp(-beta * state.energy);
        rho += w * partial_trace(state.vector, sub);
        z += w;
    }
    return rho / z;
}

DensityMatrix ParityMixture::dense() const {
    if (n > 12) throw std::length_error("dense parity mixture capped at 12 links");
    const Eigen::Index dim = Eigen::Index{1} << n;
    DensityMatrix rho = DensityMatrix::Zero(dim, dim);
    const double sector = static_cast<double>(dim) / 2.0;
    for (Eigen::Index b = 0; b < dim; ++b) {
        bool odd = std::popcount(static_cast<std::uint64_t>(b)) % 2;
        rho(b, b) = (odd ? weight_odd : weight_even) / sector;
    }
    return rho;
}

double ParityMixture::entropy_bits() const {
    auto h = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
    return n - 1 + h(weight_even) + h(weight_odd);
}

ParityMixture rho_B_closed(const ThermalPoint& tp) {
    double wx = wilson_x_average(tp);
    return ParityMixture{0.5 * (1.0 + wx), 0.5 * (1.0 - wx), tp.n};
}

DensityMatrix rho_A_closed(int n) {
    if (n > 12) throw std::length_error("dense subsystem capped at 12 links");
    const Eigen::Index dim = Eigen::Index{1} << n;
    return DensityMatrix::Identity(dim, dim) / static_cast<double>(dim);
}

DensityMatrix rho_C_closed(const Subsystem& sub) {
    if (sub.name != 'C')
        throw std::invalid_argument("rho_C_closed expects a subsystem built by subsystem_C");
    return DensityMatrix::Identity(sub.dim(), sub.dim()) / static_cast<double>(sub.dim());
}

DensityMatrix rho_D_closed() {
    return DensityMatrix::Identity(4, 4) / 4.0;
}

double entropy_B_bits(const ThermalPoint& tp) {
    return rho_B_closed(tp).entropy_bits();
}

double von_neumann_entropy_bits(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(rho, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (double lambda : solver.eigenvalues())
        if (lambda > 0.0) s -= lambda * std::log2(lambda);
    return s;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(a - b, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double trace_distance_to_maximally_mixed(const DensityMatrix& rho) {
    DensityMatrix mixed =
        DensityMatrix::Identity(rho.rows(), rho.cols()) / static_cast<double>(rho.rows());
    return trace_distance(rho, mixed);
}

std::string rdm_report_json(const Subsystem& sub, const ThermalPoint& tp,
                            const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(rho, Eigen::EigenvaluesOnly);
    std::vector<double> eigenvalues(solver.eigenvalues().data(),
                                    solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(eigenvalues.begin(), eigenvalues.end());

    nlohmann::ordered_json report;
    report["subsystem"] = std::string(1, sub.name);
    report["beta"] = tp.beta;
    report["J"] = tp.c.j;
    report["K"] = tp.c.k;
    report["N"] = tp.n;
    report["eigenvalues"] = eigenvalues;
    report["entropy_bits"] = von_neumann_entropy_bits(rho);
    report["trace_distance_to_maximally_mixed"] = trace_distance_to_maximally_mixed(rho);
    return report.dump(2);
}

} // namespace kitaev

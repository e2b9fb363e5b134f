#include "kitaev/states.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace kitaev {

namespace {

constexpr char kStateMagic[8] = {'K', 'T', 'L', 'S', 'T', 'A', 'T', 'E'};

} // namespace

StateVector omega_plus(const Lattice& lattice) {
    return StateVector::basis_state(lattice.num_links, 0);
}

StateVector omega_minus(const Lattice& lattice) {
    StateVector v = StateVector::zero(lattice.num_links);
    v.amp[v.dim() - 1] = 1.0;
    return v;
}

StateVector build_psi_l(const Lattice& lattice, std::uint64_t l_bits) {
    const int np = lattice.num_plaquettes();
    if (np > 63 || (l_bits >> np) != 0)
        throw std::invalid_argument("plaquette label out of range");
    if (lattice.kind == LatticeKind::SquareTorus && std::popcount(l_bits) % 2 != 0)
        throw std::invalid_argument(
            "empty l-sector: on the torus the plaquette product is the identity, "
            "so odd-parity plaquette labels annihilate |Omega+>");

    StateVector v = omega_plus(lattice);
    for (int p = 0; p < np; ++p)
        v = apply_projector_factor((l_bits >> p) & 1, plaquette_operator(lattice, p), v);
    v.normalize();
    return v;
}

PauliString build_lambda(const Lattice& lattice, const QuantumNumbers& qn) {
    validate_quantum_numbers(lattice, qn);
    LinkSet links;
    const int n = lattice.size;
    switch (lattice.kind) {
        case LatticeKind::TwoLegLadder:
            for (int i = 0; i < n; ++i) {
                if ((qn.r >> i) & 1) links.push_back(lattice.rung_link(i));
                if ((qn.s >> i) & 1) links.push_back(lattice.lower_leg_link(i));
            }
            break;
        case LatticeKind::ThreeLegLadder:
            for (int i = 0; i < n; ++i) {
                if ((qn.r >> i) & 1) links.push_back(lattice.lower_rung_link(i));
                if ((qn.s >> i) & 1) links.push_back(lattice.middle_leg_link(i));
                if ((qn.t >> i) & 1) links.push_back(lattice.upper_rung_link(i));
            }
            break;
        case LatticeKind::SquareTorus: {
            const auto& curve = lattice.excitation_curve;
            for (std::size_t i = 0; i < curve.size(); ++i)
                if ((qn.s >> i) & 1) links.push_back(curve[i]);
            break;
        }
    }
    return PauliString::z_on(lattice.num_links, links);
}

EigenstateHandle build_eigenstate(const Lattice& lattice, const QuantumNumbers& qn,
                                  const Couplings& c) {
    EigenstateHandle handle;
    handle.qn = qn;
    handle.vector = apply(build_lambda(lattice, qn), build_psi_l(lattice, qn.l));
    handle.energy = energy(lattice, qn, c);
    return handle;
}

EigenstateHandle build_top_state(const Lattice& lattice, const Couplings& c) {
    if (lattice.kind != LatticeKind::TwoLegLadder)
        throw std::invalid_argument(
            "the top-state construction needs every vertex star to have odd size, "
            "which holds on the two-leg ladder only");
    StateVector v = omega_minus(lattice);
    for (int p = 0; p < lattice.num_plaquettes(); ++p)
        v = apply_projector_factor(1, plaquette_operator(lattice, p), v);
    v.normalize();

    const int n = lattice.size;
    const std::uint64_t ones = (std::uint64_t{1} << n) - 1;
    EigenstateHandle handle;
    handle.qn = QuantumNumbers{ones, ones, 0, 0};
    handle.vector = std::move(v);
    handle.energy = n * (2.0 * c.j + c.k);
    return handle;
}

QuantumNumbers random_eigenstate_labels(const Lattice& lattice, std::mt19937_64& rng) {
    QuantumNumbers qn = random_quantum_numbers(lattice, rng);
    if (lattice.kind == LatticeKind::SquareTorus && std::popcount(qn.l) % 2 != 0)
        qn.l ^= 1;  // flip one plaquette bit to land in the nonempty sector
    return qn;
}

Eigen::MatrixXd gram_matrix(const std::vector<EigenstateHandle>& states) {
    const auto m = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXd g(m, m);
    for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = a; b < m; ++b) {
            double overlap = states[a].vector.dot(states[b].vector);
            g(a, b) = overlap;
            g(b, a) = overlap;
        }
    return g;
}

void write_state_dump(const std::string& path, const StateVector& v) {
    static_assert(std::endian::native == std::endian::little,
                  "state dumps are little-endian");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os.write(kStateMagic, sizeof kStateMagic);
    std::uint64_t num_links = static_cast<std::uint64_t>(v.num_links);
    os.write(reinterpret_cast<const char*>(&num_links), sizeof num_links);
    os.write(reinterpret_cast<const char*>(v.amp.data()),
             static_cast<std::streamsize>(v.amp.size() * sizeof(double)));
    if (!os) throw std::runtime_error("short write to " + path);
}

StateVector read_state_dump(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    char magic[8];
    std::uint64_t num_links = 0;
    is.read(magic, sizeof magic);
    is.read(reinterpret_cast<char*>(&num_links), sizeof num_links);
    if (!is || std::memcmp(magic, kStateMagic, sizeof magic) != 0)
        throw std::runtime_error(path + " is not a state dump");
    StateVector v = StateVector::zero(static_cast<int>(num_links));
    is.read(reinterpret_cast<char*>(v.amp.data()),
            static_cast<std::streamsize>(v.amp.size() * sizeof(double)));
    if (!is) throw std::runtime_error("truncated state dump " + path);
    return v;
}

} // namespace kitaev

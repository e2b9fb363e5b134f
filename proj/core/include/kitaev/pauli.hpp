#ifndef KITAEV_PAULI_HPP
#define KITAEV_PAULI_HPP

#include <cstdint>
#include <vector>

#include "kitaev/lattice.hpp"

namespace kitaev {

/// A signed product of X and Z operators over links, in the canonical order
/// sign * (product of X's) * (product of Z's). Every operator in this model
/// is pure-X or pure-Z, so no imaginary phases ever arise.
struct PauliString {
    int num_links = 0;   // <= 64
    std::uint64_t xmask = 0;
    std::uint64_t zmask = 0;
    int sign = +1;

    bool is_identity() const { return xmask == 0 && zmask == 0 && sign == +1; }

    static PauliString identity(int num_links);
    static PauliString x_on(int num_links, const LinkSet& links);
    static PauliString z_on(int num_links, const LinkSet& links);
};

/// Product a*b with the operator-ordering sign from moving b's X block past
/// a's Z block. Throws on size mismatch.
PauliString multiply(const PauliString& a, const PauliString& b);

/// Symplectic form: true iff |a.x & b.z| + |a.z & b.x| is even.
bool commutes(const PauliString& a, const PauliString& b);

/// +1 or -1: the phase picked up when commuting a past b (a*b = phase * b*a).
/// Defined for any pair; equals +1 exactly when commutes(a,b).
int commutation_phase(const PauliString& a, const PauliString& b);

/// Amplitudes over the x-basis of the link Hilbert space. Basis bit b_k = 0
/// means link k in |+>, bit 1 means |->, so Z_k flips bit k and X_k
/// contributes a sign (-1)^{b_k}.
struct StateVector {
    int num_links = 0;
    std::vector<double> amp;  // size 2^{num_links}

    static constexpr int kMaxLinks = 24;  // dense dimension cap 2^24

    static StateVector zero(int num_links);
    static StateVector basis_state(int num_links, std::uint64_t index);

    std::uint64_t dim() const { return std::uint64_t{1} << num_links; }
    double norm() const;
    void normalize();           // throws on zero vector
    double dot(const StateVector& other) const;
};

/// p applied to v: out[c] = sign * (-1)^{popcount(xmask & c)} * v[c ^ zmask].
StateVector apply(const PauliString& p, const StateVector& v);

/// out += coeff * (p applied to v); the matvec building block.
void apply_accumulate(const PauliString& p, const StateVector& v, double coeff, StateVector& out);

/// One projector factor of a B_l string: v + (-1)^{sign_bit} * p * v,
/// unnormalized. Requires p*p = identity.
StateVector apply_projector_factor(int sign_bit, const PauliString& p, const StateVector& v);

// Operators of the model on a given lattice.
PauliString vertex_operator(const Lattice& lattice, int vertex);
PauliString plaquette_operator(const Lattice& lattice, int plaquette);
PauliString wilson_x_operator(const Lattice& lattice);  // X's on wx_support
PauliString wilson_z_operator(const Lattice& lattice);  // Z's on wz_support

} // namespace kitaev

#endif

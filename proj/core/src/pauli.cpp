#include "kitaev/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kitaev {

namespace {

void check_width(int num_links) {
    if (num_links < 0 || num_links > 64)
        throw std::invalid_argument("PauliString supports at most 64 links, got " +
                                    std::to_string(num_links));
}

std::uint64_t mask_of(int num_links, const LinkSet& links) {
    std::uint64_t m = 0;
    for (int k : links) {
        if (k < 0 || k >= num_links)
            throw std::invalid_argument("link index " + std::to_string(k) + " out of range");
        m ^= std::uint64_t{1} << k;
    }
    return m;
}

void check_same_size(const PauliString& a, const PauliString& b) {
    if (a.num_links != b.num_links)
        throw std::invalid_argument("PauliString size mismatch: " + std::to_string(a.num_links) +
                                    " vs " + std::to_string(b.num_links));
}

} // namespace

PauliString PauliString::identity(int num_links) {
    check_width(num_links);
    return PauliString{num_links, 0, 0, +1};
}

PauliString PauliString::x_on(int num_links, const LinkSet& links) {
    check_width(num_links);
    return PauliString{num_links, mask_of(num_links, links), 0, +1};
}

PauliString PauliString::z_on(int num_links, const LinkSet& links) {
    check_width(num_links);
    return PauliString{num_links, 0, mask_of(num_links, links), +1};
}

PauliString multiply(const PauliString& a, const PauliString& b) {
    check_same_size(a, b);
    PauliString out;
    out.num_links = a.num_links;
    out.xmask = a.xmask ^ b.xmask;
    out.zmask = a.zmask ^ b.zmask;
    int swaps = std::popcount(a.zmask & b.xmask);
    out.sign = a.sign * b.sign * ((swaps % 2 == 0) ? +1 : -1);
    return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
    return commutation_phase(a, b) == +1;
}

int commutation_phase(const PauliString& a, const PauliString& b) {
    check_same_size(a, b);
    int overlap = std::popcount(a.xmask & b.zmask) + std::popcount(a.zmask & b.xmask);
    return (overlap % 2 == 0) ? +1 : -1;
}

StateVector StateVector::zero(int num_links) {
    if (num_links < 0 || num_links > kMaxLinks)
        throw std::length_error("state vector dimension cap is 2^" + std::to_string(kMaxLinks) +
                                "; requested 2^" + std::to_string(num_links));
    StateVector v;
    v.num_links = num_links;
    v.amp.assign(std::size_t{1} << num_links, 0.0);
    return v;
}

StateVector StateVector::basis_state(int num_links, std::uint64_t index) {
    StateVector v = zero(num_links);
    if (index >= v.dim()) throw std::invalid_argument("basis index out of range");
    v.amp[index] = 1.0;
    return v;
}

double StateVector::norm() const {
    double s = 0.0;
    for (double a : amp) s += a * a;
    return std::sqrt(s);
}

void StateVector::normalize() {
    double n = norm();
    if (n == 0.0) throw std::runtime_error("cannot normalize a zero state vector");
    for (double& a : amp) a /= n;
}

double StateVector::dot(const StateVector& other) const {
    if (num_links != other.num_links)
        throw std::invalid_argument("state vector size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < amp.size(); ++i) s += amp[i] * other.amp[i];
    return s;
}

namespace {

void check_applicable(const PauliString& p, const StateVector& v) {
    if (p.num_links != v.num_links)
        throw std::invalid_argument("operator/state size mismatch: " +
                                    std::to_string(p.num_links) + " vs " +
                                    std::to_string(v.num_links));
}

} // namespace

StateVector apply(const PauliString& p, const StateVector& v) {
    check_applicable(p, v);
    StateVector out = StateVector::zero(v.num_links);
    apply_accumulate(p, v, 1.0, out);
    return out;
}

void apply_accumulate(const PauliString& p, const StateVector& v, double coeff, StateVector& out) {
    check_applicable(p, v);
    check_applicable(p, out);
    const std::uint64_t dim = v.dim();
    const double base = coeff * p.sign;
    for (std::uint64_t c = 0; c < dim; ++c) {
        double phase = (std::popcount(p.xmask & c) % 2 == 0) ? base : -base;
        out.amp[c] += phase * v.amp[c ^ p.zmask];
    }
}

StateVector apply_projector_factor(int sign_bit, const PauliString& p, const StateVector& v) {
    StateVector out = v;
    apply_accumulate(p, v, (sign_bit % 2 == 0) ? 1.0 : -1.0, out);
    return out;
}

PauliString vertex_operator(const Lattice& lattice, int vertex) {
    return PauliString::x_on(lattice.num_links, lattice.vertex_stars.at(vertex));
}

PauliString plaquette_operator(const Lattice& lattice, int plaquette) {
    return PauliString::z_on(lattice.num_links, lattice.plaquette_boundaries.at(plaquette));
}

PauliString wilson_x_operator(const Lattice& lattice) {
    return PauliString::x_on(lattice.num_links, lattice.wx_support);
}

PauliString wilson_z_operator(const Lattice& lattice) {
    return PauliString::z_on(lattice.num_links, lattice.wz_support);
}

} // namespace kitaev

#include "kitaev/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace kitaev {

namespace {

struct LabelWidths {
    int l = 0, r = 0, s = 0, t = 0;
};

LabelWidths label_widths(const Lattice& lat) {
    switch (lat.kind) {
        case LatticeKind::TwoLegLadder:
            return {lat.size, lat.size, lat.size, 0};
        case LatticeKind::ThreeLegLadder:
            return {2 * lat.size, lat.size, lat.size, lat.size};
        case LatticeKind::SquareTorus:
            return {lat.size * lat.size, 0, lat.size * lat.size, 0};
    }
    return {};
}

std::uint64_t width_mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

inline int ising(std::uint64_t bits, int i) {
    return (bits >> i) & 1 ? -1 : +1;
}

long long vertex_coeff_two_leg(int n, std::uint64_t r, std::uint64_t s) {
    long long cj = 0;
    for (int j = 0; j < n; ++j) {
        int rj = ising(r, j);
        int ss = ising(s, (j + n - 1) % n) * ising(s, j);
        cj -= rj * (ss + 1);
    }
    return cj;
}

long long vertex_coeff_three_leg(int n, std::uint64_t r, std::uint64_t s, std::uint64_t t) {
    long long cj = 0;
    for (int i = 0; i < n; ++i) {
        int ri = ising(r, i);
        int ti = ising(t, i);
        int ss = ising(s, (i + n - 1) % n) * ising(s, i);
        cj -= ri * ti * ss + ri + ti;
    }
    return cj;
}

long long vertex_coeff_torus(int curve_len, std::uint64_t s) {
    long long cj = 0;
    for (int i = 0; i < curve_len; ++i)
        cj -= ising(s, i) * ising(s, (i + 1) % curve_len);
    return cj;
}

long long plaquette_coeff(int num_plaquettes, std::uint64_t l) {
    // -sum_p L_p = -(num_plaquettes - 2*popcount)
    return 2 * static_cast<long long>(std::popcount(l)) - num_plaquettes;
}

void format17(char* buf, std::size_t len, double v) {
    std::snprintf(buf, len, "%.17g", v);
}

} // namespace

void validate_quantum_numbers(const Lattice& lattice, const QuantumNumbers& qn) {
    LabelWidths w = label_widths(lattice);
    if (w.l > 64 || w.s > 64)
        throw std::invalid_argument("lattice too large for 64-bit quantum-number labels");
    if ((qn.l & ~width_mask(w.l)) || (qn.r & ~width_mask(w.r)) ||
        (qn.s & ~width_mask(w.s)) || (qn.t & ~width_mask(w.t)))
        throw std::invalid_argument("quantum-number bits exceed the lattice label lengths");
}

QuantumNumbers random_quantum_numbers(const Lattice& lattice, std::mt19937_64& rng) {
    LabelWidths w = label_widths(lattice);
    QuantumNumbers qn;
    qn.l = rng() & width_mask(w.l);
    qn.r = rng() & width_mask(w.r);
    qn.s = rng() & width_mask(w.s);
    qn.t = rng() & width_mask(w.t);
    return qn;
}

EnergyCoeffs energy_coeffs(const Lattice& lattice, const QuantumNumbers& qn) {
    validate_quantum_numbers(lattice, qn);
    const int n = lattice.size;
    EnergyCoeffs e;
    switch (lattice.kind) {
        case LatticeKind::TwoLegLadder:
            e.coeff_j = vertex_coeff_two_leg(n, qn.r, qn.s);
            e.coeff_k = plaquette_coeff(n, qn.l);
            break;
        case LatticeKind::ThreeLegLadder:
            e.coeff_j = vertex_coeff_three_leg(n, qn.r, qn.s, qn.t);
            e.coeff_k = plaquette_coeff(2 * n, qn.l);
            break;
        case LatticeKind::SquareTorus:
            e.coeff_j = vertex_coeff_torus(n * n, qn.s);
            e.coeff_k = plaquette_coeff(n * n, qn.l);
            break;
    }
    return e;
}

double energy(const Lattice& lattice, const QuantumNumbers& qn, const Couplings& c) {
    return energy_coeffs(lattice, qn).value(c);
}

std::uint64_t SpectrumHistogram::total_states() const {
    std::uint64_t total = 0;
    for (const auto& [coeffs, count] : coeff_counts) total += count;
    return total;
}

std::vector<SpectrumHistogram::Bucket> SpectrumHistogram::buckets(double tol) const {
    std::vector<std::pair<double, std::uint64_t>> entries;
    entries.reserve(coeff_counts.size());
    for (const auto& [coeffs, count] : coeff_counts)
        entries.emplace_back(coeffs.first * couplings.j + coeffs.second * couplings.k, count);
    std::sort(entries.begin(), entries.end());

    std::vector<Bucket> out;
    for (const auto& [e, count] : entries) {
        if (!out.empty() && std::abs(e - out.back().energy) <= tol)
            out.back().degeneracy += count;
        else
            out.push_back({e, count});
    }
    return out;
}

std::vector<double> SpectrumHistogram::expanded_sorted() const {
    std::uint64_t total = total_states();
    if (total > (std::uint64_t{1} << 22))
        throw std::length_error("refusing to expand a spectrum of more than 2^22 states");
    std::vector<double> out;
    out.reserve(total);
    for (const auto& [coeffs, count] : coeff_counts) {
        double e = coeffs.first * couplings.j + coeffs.second * couplings.k;
        out.insert(out.end(), count, e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SpectrumHistogram enumerate_spectrum(const Lattice& lattice, const Couplings& c) {
    LabelWidths w = label_widths(lattice);
    int total_bits = w.l + w.r + w.s + w.t;
    if (lattice.kind == LatticeKind::SquareTorus)
        throw std::invalid_argument(
            "spectrum enumeration is not defined on the torus: the closed-form "
            "labels do not exhaust the Hilbert space");
    if (total_bits > 26)
        throw std::length_error("enumeration budget exceeded: 2^" + std::to_string(total_bits) +
                                " quantum numbers (cap 2^26)");

    // The vertex part depends only on (r,s[,t]) and the plaquette part only
    // on l, so the histogram is the cross product of the two marginal counts.
    std::map<long long, std::uint64_t> vertex_counts;
    const int n = lattice.size;
    if (lattice.kind == LatticeKind::TwoLegLadder) {
        for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r)
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
                ++vertex_counts[vertex_coeff_two_leg(n, r, s)];
    } else {
        for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r)
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
                for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t)
                    ++vertex_counts[vertex_coeff_three_leg(n, r, s, t)];
    }

    std::map<long long, std::uint64_t> plaquette_counts;
    const int np = lattice.num_plaquettes();
    {
        // C(np, w) states have w plaquette excitations.
        std::uint64_t binom = 1;
        for (int wgt = 0; wgt <= np; ++wgt) {
            plaquette_counts[2LL * wgt - np] += binom;
            binom = binom * (np - wgt) / (wgt + 1);
        }
    }

    SpectrumHistogram hist;
    hist.couplings = c;
    for (const auto& [cj, nj] : vertex_counts)
        for (const auto& [ck, nk] : plaquette_counts)
            hist.coeff_counts[{cj, ck}] += nj * nk;
    return hist;
}

void write_histogram_csv(std::ostream& os, const SpectrumHistogram& hist) {
    struct Row {
        double energy;
        long long cj, ck;
        std::uint64_t count;
    };
    std::vector<Row> rows;
    rows.reserve(hist.coeff_counts.size());
    for (const auto& [coeffs, count] : hist.coeff_counts)
        rows.push_back({coeffs.first * hist.couplings.j + coeffs.second * hist.couplings.k,
                        coeffs.first, coeffs.second, count});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        if (a.cj != b.cj) return a.cj < b.cj;
        return a.ck < b.ck;
    });

    os << "coeff_J,coeff_K,energy,degeneracy\n";
    char buf[40];
    for (const Row& row : rows) {
        format17(buf, sizeof buf, row.energy);
        os << row.cj << ',' << row.ck << ',' << buf << ',' << row.count << '\n';
    }
}

SymmetryReport check_symmetries(const Lattice& lattice, std::uint64_t max_samples,
                                std::uint64_t seed) {
    if (lattice.kind != LatticeKind::TwoLegLadder)
        throw std::invalid_argument("spectrum symmetries are defined on the two-leg ladder");
    const int n = lattice.size;
    const std::uint64_t full = std::uint64_t{1} << (3 * n);
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;

    SymmetryReport report;
    auto check_one = [&](const QuantumNumbers& qn) {
        EnergyCoeffs e = energy_coeffs(lattice, qn);
        QuantumNumbers flipped{qn.l, qn.r, qn.s ^ mask, 0};
        if (energy_coeffs(lattice, flipped) != e) ++report.s_complement_violations;
        QuantumNumbers inverted{qn.l ^ mask, qn.r ^ mask, qn.s, 0};
        EnergyCoeffs ei = energy_coeffs(lattice, inverted);
        // aJ + bK at (-J,-K) equals (-a)J + (-b)K.
        if (ei.coeff_j != -e.coeff_j || ei.coeff_k != -e.coeff_k) ++report.inversion_violations;
        ++report.checked;
    };

    if (full <= max_samples) {
        for (std::uint64_t code = 0; code < full; ++code)
            check_one({code & mask, (code >> n) & mask, (code >> (2 * n)) & mask, 0});
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t i = 0; i < max_samples; ++i)
            check_one(random_quantum_numbers(lattice, rng));
    }
    return report;
}

} // namespace kitaev

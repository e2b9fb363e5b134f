#ifndef KITAEV_TEST_UTIL_HPP
#define KITAEV_TEST_UTIL_HPP

#include <cstdint>
#include <vector>

#include "kitaev/lattice.hpp"
#include "kitaev/pauli.hpp"

namespace kitaev::test {

inline std::uint64_t link_mask(const LinkSet& links) {
    std::uint64_t m = 0;
    for (int k : links) m ^= std::uint64_t{1} << k;
    return m;
}

// Rank over GF(2) of the given bit rows (lattices up to 64 links).
inline int gf2_rank(std::vector<std::uint64_t> rows) {
    int rank = 0;
    for (int bit = 0; bit < 64; ++bit) {
        std::uint64_t pivot_mask = std::uint64_t{1} << bit;
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot] & pivot_mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && (rows[r] & pivot_mask))
                rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

inline std::vector<std::uint64_t> plaquette_rows(const Lattice& lat) {
    std::vector<std::uint64_t> rows;
    for (const auto& boundary : lat.plaquette_boundaries) rows.push_back(link_mask(boundary));
    return rows;
}

inline std::vector<std::uint64_t> vertex_rows(const Lattice& lat) {
    std::vector<std::uint64_t> rows;
    for (const auto& star : lat.vertex_stars) rows.push_back(link_mask(star));
    return rows;
}

// Dense matrix of a Pauli string, column by column (test-side reference).
inline std::vector<std::vector<double>> dense_of(const PauliString& p) {
    std::uint64_t d = std::uint64_t{1} << p.num_links;
    std::vector<std::vector<double>> m(d, std::vector<double>(d, 0.0));
    for (std::uint64_t b = 0; b < d; ++b) {
        StateVector col = apply(p, StateVector::basis_state(p.num_links, b));
        for (std::uint64_t a = 0; a < d; ++a) m[a][b] = col.amp[a];
    }
    return m;
}

} // namespace kitaev::test

#endif

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graphcode/bitmat.hpp"
#include "graphcode/bitvec.hpp"
#include "graphcode/errors.hpp"
#include "graphcode/graph.hpp"
#include "graphcode/rational.hpp"

namespace graphcode {

/// The binary code whose parity-check matrix is the augmented adjacency
/// matrix of a graph: codewords are exactly the assignments where every
/// vertex equals the GF(2) sum of its neighbours. Immutable once built.
struct StorageCode {
    Graph graph;
    BitMatrix parity;             // augmented adjacency of graph
    std::size_t rank;             // GF(2) rank of parity
    std::size_t dimension;        // n - rank
    Rational rate;                // dimension / n, exact
    std::vector<BitVector> basis; // canonical nullspace basis of parity

    int n() const { return graph.n(); }
};

inline StorageCode build_code(const Graph& g) {
    if (g.has_isolated_vertex())
        throw model_error("build_code: graph has an isolated vertex; every server must be able "
                          "to query at least one other server");
    BitMatrix parity = g.augmented_adjacency();
    const std::size_t rank = parity.rank();
    const std::size_t n = static_cast<std::size_t>(g.n());
    StorageCode code{g,
                     std::move(parity),
                     rank,
                     n - rank,
                     Rational(static_cast<std::int64_t>(n - rank), static_cast<std::int64_t>(n)),
                     {}};
    code.basis = code.parity.nullspace_basis();
    return code;
}

inline bool is_codeword(const StorageCode& code, const BitVector& c) {
    if (c.size() != static_cast<std::size_t>(code.n()))
        throw parameter_error("is_codeword: vector length does not match code length");
    return code.parity.mat_vec_mul(c).is_zero();
}

/// GF(2) combination of basis vectors selected by the message bits.
inline BitVector encode(const StorageCode& code, const BitVector& message) {
    if (message.size() != code.dimension)
        throw parameter_error("encode: message length " + std::to_string(message.size()) +
                              " does not match dimension " + std::to_string(code.dimension));
    BitVector word(static_cast<std::size_t>(code.n()));
    for (std::size_t j = 0; j < code.dimension; ++j)
        if (message.get(j)) word ^= code.basis[j];
    return word;
}

/// All 2^dimension codewords, ordered by message index (message bit 0 is the
/// most significant, so the order is lexicographic in the message strings).
/// The caller-supplied limit guards against exponential blowup.
inline std::vector<BitVector> enumerate_codewords(const StorageCode& code, std::uint64_t limit) {
    if (code.dimension >= 64 || (std::uint64_t{1} << code.dimension) > limit)
        throw parameter_error("enumerate_codewords: 2^" + std::to_string(code.dimension) +
                              " codewords exceed limit " + std::to_string(limit));
    const std::uint64_t count = std::uint64_t{1} << code.dimension;
    std::vector<BitVector> words;
    words.reserve(count);
    for (std::uint64_t m = 0; m < count; ++m) {
        BitVector message(code.dimension);
        for (std::size_t j = 0; j < code.dimension; ++j)
            if ((m >> (code.dimension - 1 - j)) & 1u) message.set(j, true);
        words.push_back(encode(code, message));
    }
    return words;
}

/// Core of the parity repair: XOR the neighbours of the failed vertex, read
/// through `read` so callers can count or redirect the queries. Never touches
/// the failed position itself.
template <typename Reader>
bool repair_via(const StorageCode& code, int failed, Reader&& read) {
    bool bit = false;
    for (int u : code.graph.neighbors(failed)) bit ^= static_cast<bool>(read(u));
    return bit;
}

/// Parity repair of one symbol. Trusts `stored` to be a codeword; use
/// repair_checked when the precondition should be enforced.
inline bool repair(const StorageCode& code, const BitVector& stored, int failed) {
    if (stored.size() != static_cast<std::size_t>(code.n()))
        throw parameter_error("repair: stored length does not match code length");
    return repair_via(code, failed,
                      [&stored](int u) { return stored.get(static_cast<std::size_t>(u - 1)); });
}

inline bool repair_checked(const StorageCode& code, const BitVector& stored, int failed) {
    if (!is_codeword(code, stored))
        throw model_error("repair_checked: stored state is not a codeword");
    return repair(code, stored, failed);
}

} // namespace graphcode

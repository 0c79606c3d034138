#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "graphcode/bitmat.hpp"
#include "graphcode/errors.hpp"
#include "graphcode/rational.hpp"
#include "graphcode/storage_code.hpp"

namespace graphcode {

/// Capacity window for length n and locality r. The two bounds differ by at
/// most 1/n and coincide exactly when r+1 divides n, so they are kept as
/// exact rationals.
struct CapacityBounds {
    int n;
    int r;
    Rational lower; // 1 - ceil(n/(r+1))/n, achieved by clique_partition
    Rational upper; // 1 - floor(n/(r+1))/n
};

inline CapacityBounds capacity_bounds(int n, int r) {
    if (n < 2)
        throw parameter_error("capacity_bounds: need n >= 2, got n = " + std::to_string(n));
    if (r < 2 || r > n - 1)
        throw parameter_error("capacity_bounds: need 2 <= r <= n-1, got r = " + std::to_string(r) +
                              " for n = " + std::to_string(n));
    const int ceil_p = (n + r) / (r + 1);
    const int floor_p = n / (r + 1);
    return CapacityBounds{n, r, Rational(n - ceil_p, n), Rational(n - floor_p, n)};
}

/// Witness for a rank lower bound: an ordered list of (pivot row, column)
/// vertex pairs, triangular in the sense that each pivot row is untouched by
/// all earlier columns. Vertices are 1-indexed.
struct RankCertificate {
    std::vector<std::pair<int, int>> picks;

    std::size_t size() const { return picks.size(); }
};

/// Greedy independent-column certificate for a symmetric unit-diagonal
/// matrix. Scans rows in order; an uncovered row picks the smallest column
/// with a 1 there (the diagonal guarantees one exists), and that column
/// covers every row it touches. The result certifies rank(a) >= size, and
/// when every row has weight at most r+1 the size is at least floor(n/(r+1)).
inline RankCertificate rank_certificate(const BitMatrix& a) {
    if (a.rows() != a.cols())
        throw parameter_error("rank_certificate: matrix must be square");
    if (!a.is_symmetric())
        throw parameter_error("rank_certificate: matrix must be symmetric");
    if (!a.has_unit_diagonal())
        throw parameter_error("rank_certificate: matrix must have all-ones diagonal");

    const std::size_t n = a.rows();
    std::vector<bool> covered(n, false);
    RankCertificate cert;
    for (std::size_t i = 0; i < n; ++i) {
        if (covered[i]) continue;
        std::size_t pick = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (a.get(i, j)) {
                pick = j;
                break;
            }
        }
        // pick < n always: a(i,i) = 1.
        cert.picks.emplace_back(static_cast<int>(i) + 1, static_cast<int>(pick) + 1);
        for (std::size_t k = 0; k < n; ++k)
            if (a.get(k, pick)) covered[k] = true;
    }
    return cert;
}

/// Checks the triangular witness pick by pick, then confirms independence by
/// ranking the selected column submatrix. Returns false on any violation,
/// including out-of-range indices.
inline bool verify_certificate(const BitMatrix& a, const RankCertificate& cert) {
    if (a.rows() != a.cols()) return false;
    const std::size_t n = a.rows();
    if (cert.picks.empty() || cert.picks.size() > n) return false;

    for (std::size_t k = 0; k < cert.picks.size(); ++k) {
        const auto [row, col] = cert.picks[k];
        if (row < 1 || col < 1 || row > static_cast<int>(n) || col > static_cast<int>(n))
            return false;
        const std::size_t i = static_cast<std::size_t>(row - 1);
        if (!a.get(i, static_cast<std::size_t>(col - 1))) return false;
        for (std::size_t m = 0; m < k; ++m)
            if (a.get(i, static_cast<std::size_t>(cert.picks[m].second - 1))) return false;
    }

    // Independent confirmation: the picked columns must have full rank.
    BitMatrix selected(n, cert.picks.size());
    for (std::size_t k = 0; k < cert.picks.size(); ++k) {
        const std::size_t col = static_cast<std::size_t>(cert.picks[k].second - 1);
        for (std::size_t i = 0; i < n; ++i)
            if (a.get(i, col)) selected.set(i, k, true);
    }
    return selected.rank() == cert.picks.size();
}

/// Rows newly covered by each pick, in pick order; realizes the counting
/// argument behind the floor(n/(r+1)) size bound. Diagnostic companion to
/// verify_certificate.
inline std::vector<std::vector<int>> coverage_by_pick(const BitMatrix& a,
                                                      const RankCertificate& cert) {
    const std::size_t n = a.rows();
    std::vector<bool> covered(n, false);
    std::vector<std::vector<int>> coverage;
    coverage.reserve(cert.picks.size());
    for (const auto& [row, col] : cert.picks) {
        std::vector<int> rows_now;
        const std::size_t j = static_cast<std::size_t>(col - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.get(i, j) && !covered[i]) {
                covered[i] = true;
                rows_now.push_back(static_cast<int>(i) + 1);
            }
        }
        coverage.push_back(std::move(rows_now));
    }
    return coverage;
}

/// Capacity-style upper bound on the rate of a specific code, from the
/// certificate of its parity matrix: rate <= 1 - size/n.
inline Rational rate_upper_bound_from_certificate(const StorageCode& code) {
    const RankCertificate cert = rank_certificate(code.parity);
    const std::int64_t n = code.n();
    return Rational(n - static_cast<std::int64_t>(cert.size()), n);
}

} // namespace graphcode

#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "leaguestats/corpus.hpp"

namespace leaguestats {

// Sample Pearson correlation. Needs n >= 3 and two non-constant vectors.
double pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationRow {
    std::string season;
    // pearson(points, d) for d in kRankedDescriptors order.
    std::array<double, 5> r{};
};

// One row per corpus season, chronological.
std::vector<CorrelationRow> correlation_matrix(const Corpus& corpus);

struct CorrelationSeries {
    Descriptor descriptor = Descriptor::Ratio;
    std::vector<std::pair<std::string, double>> entries;  // (season, r)
};

CorrelationSeries correlation_series(const Corpus& corpus, Descriptor d);

using Matrix = std::vector<std::vector<double>>;

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // descending
    Matrix eigenvectors;              // eigenvectors[i][k] = component i of pair k
};

// Cyclic Jacobi rotations for a symmetric matrix. Terminates when the
// off-diagonal Frobenius norm drops below 1e-12 relative to the matrix
// scale; throws NoConvergence after 100 sweeps and NotSymmetric if the
// input is not symmetric.
EigenDecomposition jacobi_eigh(const Matrix& symmetric);

struct PcaResult {
    static constexpr int kVariableCount = 6;
    // Pts, Ratio, Player Spend, Foreign Spend, Profits, Exp.
    std::array<std::string, 6> variables;
    // loadings[i][k]: weight of variable i in principal component k.
    std::array<std::array<double, 6>, 6> loadings{};
    std::array<double, 6> eigenvalues{};  // non-increasing
    std::array<double, 6> explained{};    // eigenvalue / trace
};

// Covariance PCA of the 20x6 season matrix: columns mean-centered (no
// variance scaling), sample covariance (divisor n-1), Jacobi
// eigendecomposition, eigenpairs sorted descending, each eigenvector's
// largest-magnitude entry made positive.
PcaResult pca(const SeasonTable& table);

// Variable rows x "PCA 1".."PCA 6" columns.
std::string pca_csv(const PcaResult& result);
std::string pca_json(const PcaResult& result);

}  // namespace leaguestats

#include "leaguestats/multivariate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "leaguestats/format.hpp"

namespace leaguestats {
namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiTolerance = 1e-12;

double off_diagonal_norm(const Matrix& m) {
    double sum = 0.0;
    for (std::size_t p = 0; p < m.size(); ++p) {
        for (std::size_t q = p + 1; q < m.size(); ++q) {
            sum += 2.0 * m[p][q] * m[p][q];
        }
    }
    return std::sqrt(sum);
}

double frobenius_norm(const Matrix& m) {
    double sum = 0.0;
    for (const auto& row : m) {
        for (double v : row) sum += v * v;
    }
    return std::sqrt(sum);
}

}  // namespace

EigenDecomposition jacobi_eigh(const Matrix& symmetric) {
    const std::size_t n = symmetric.size();
    if (n == 0) {
        throw UsageError("jacobi_eigh needs a non-empty matrix");
    }
    double max_abs = 0.0;
    for (const auto& row : symmetric) {
        if (row.size() != n) throw NotSymmetric("matrix is not square");
        for (double v : row) max_abs = std::max(max_abs, std::abs(v));
    }
    const double sym_tol = kJacobiTolerance * std::max(1.0, max_abs);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(symmetric[i][j] - symmetric[j][i]) > sym_tol) {
                throw NotSymmetric("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") differs from its transpose");
            }
        }
    }

    Matrix a = symmetric;
    Matrix v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

    // The absolute 1e-12 target is unreachable in double precision once the
    // matrix scale is large (covariances here reach 1e4), so the stopping
    // norm is relative to the input's Frobenius norm.
    const double stop = kJacobiTolerance * std::max(1.0, frobenius_norm(symmetric));

    int sweep = 0;
    while (off_diagonal_norm(a) > stop) {
        if (++sweep > kMaxJacobiSweeps) {
            throw NoConvergence("jacobi sweep cap (100) exceeded");
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                double app = a[p][p];
                double aqq = a[q][q];
                double apq = a[p][q];
                a[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                a[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = a[k][p];
                    double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[p][k] = a[k][p];
                    a[k][q] = s * akp + c * akq;
                    a[q][k] = a[k][q];
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v[k][p];
                    double vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a[i][i] > a[j][j]; });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a[order[k]][order[k]];
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors[i][k] = v[i][order[k]];
        }
    }
    return out;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw UsageError("pearson needs vectors of equal length");
    }
    const double n = static_cast<double>(x.size());
    if (x.size() < 3) {
        throw DegenerateRange("pearson needs at least 3 observations");
    }
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx;
        double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw DegenerateRange("pearson undefined for a constant vector");
    }
    double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

std::vector<CorrelationRow> correlation_matrix(const Corpus& corpus) {
    std::vector<CorrelationRow> rows;
    rows.reserve(corpus.size());
    for (const auto& table : corpus.seasons()) {
        CorrelationRow row;
        row.season = table.season();
        std::vector<double> points = descriptor_column(table, Descriptor::Points);
        for (std::size_t c = 0; c < kRankedDescriptors.size(); ++c) {
            row.r[c] = pearson(points, descriptor_column(table, kRankedDescriptors[c]));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CorrelationSeries correlation_series(const Corpus& corpus, Descriptor d) {
    CorrelationSeries series;
    series.descriptor = d;
    for (const auto& table : corpus.seasons()) {
        std::vector<double> points = descriptor_column(table, Descriptor::Points);
        series.entries.emplace_back(table.season(),
                                    pearson(points, descriptor_column(table, d)));
    }
    return series;
}

PcaResult pca(const SeasonTable& table) {
    constexpr std::array<Descriptor, 6> kPcaColumns = {
        Descriptor::Points,       Descriptor::Ratio,  Descriptor::PlayerSpend,
        Descriptor::ForeignSpend, Descriptor::Profit, Descriptor::Expenditure,
    };
    const std::size_t n = SeasonTable::kTeamCount;
    const std::size_t m = kPcaColumns.size();

    std::vector<std::vector<double>> columns;
    columns.reserve(m);
    for (Descriptor d : kPcaColumns) {
        std::vector<double> col = descriptor_column(table, d);
        double mean = std::accumulate(col.begin(), col.end(), 0.0) / static_cast<double>(n);
        for (double& v : col) v -= mean;
        columns.push_back(std::move(col));
    }

    Matrix cov(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) sum += columns[i][k] * columns[j][k];
            cov[i][j] = sum / static_cast<double>(n - 1);
            cov[j][i] = cov[i][j];
        }
    }
    // Constant columns contribute a zero row/column and are harmless; only a
    // table with no variation at all leaves the variance shares undefined.
    double variance_total = 0.0;
    for (std::size_t i = 0; i < m; ++i) variance_total += cov[i][i];
    if (variance_total == 0.0) {
        throw DegenerateColumn(table.season() + ": every column is constant");
    }

    EigenDecomposition eig = jacobi_eigh(cov);

    PcaResult result;
    result.variables = {"Pts", "Ratio", "Player Spend", "Foreign Spend", "Profits", "Exp"};
    double trace = std::accumulate(eig.eigenvalues.begin(), eig.eigenvalues.end(), 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        // Deterministic sign: the largest-magnitude entry of each component
        // is positive (first such entry wins on exact magnitude ties).
        std::size_t arg = 0;
        for (std::size_t i = 1; i < m; ++i) {
            if (std::abs(eig.eigenvectors[i][k]) > std::abs(eig.eigenvectors[arg][k])) arg = i;
        }
        double sign = eig.eigenvectors[arg][k] < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            result.loadings[i][k] = sign * eig.eigenvectors[i][k];
        }
        result.eigenvalues[k] = eig.eigenvalues[k];
        result.explained[k] = eig.eigenvalues[k] / trace;
    }
    return result;
}

std::string pca_csv(const PcaResult& result) {
    std::string out = "variable,pca_1,pca_2,pca_3,pca_4,pca_5,pca_6\n";
    for (std::size_t i = 0; i < result.variables.size(); ++i) {
        out += result.variables[i];
        for (std::size_t k = 0; k < 6; ++k) {
            out += ',';
            out += format_double(result.loadings[i][k]);
        }
        out += '\n';
    }
    return out;
}

std::string pca_json(const PcaResult& result) {
    nlohmann::ordered_json j;
    j["variables"] = result.variables;
    j["loadings"] = result.loadings;
    j["eigenvalues"] = result.eigenvalues;
    j["explained"] = result.explained;
    return j.dump(2) + "\n";
}

}  // namespace leaguestats

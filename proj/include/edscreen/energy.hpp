#ifndef EDSCREEN_ENERGY_HPP
#define EDSCREEN_ENERGY_HPP

#include <span>
#include <utility>
#include <vector>

#include "edscreen/dataset.hpp"
#include "edscreen/gamma.hpp"

namespace edscreen {

// Raw pair sums behind both energy estimators:
//   cross   = sum over all (i, j)   of gamma(d(x_i, y_j))
//   within1 = sum over i < j        of gamma(d(x_i, x_j))
//   within2 = sum over i < j        of gamma(d(y_i, y_j))
// Sums are accumulated with Kahan compensation; the n^2 term counts reach 1e9
// in the intended regimes.
struct EnergyTerms {
    double cross = 0.0;
    double within1 = 0.0;
    double within2 = 0.0;
    std::size_t n1 = 0;
    std::size_t n2 = 0;

    // Unbiased two-sample energy: distinct-pair averages within classes.
    double ustat() const {
        double c1 = static_cast<double>(n1) * (static_cast<double>(n1) - 1.0) / 2.0;
        double c2 = static_cast<double>(n2) * (static_cast<double>(n2) - 1.0) / 2.0;
        return 2.0 * cross / (static_cast<double>(n1) * static_cast<double>(n2)) -
               within1 / c1 - within2 / c2;
    }

    // All-pairs (plug-in) form: non-negative for the admissible kernels, and
    // strictly positive unless every observation of both classes coincides.
    // This is the statistic the screening ratios are formed on.
    double vstat() const {
        return 2.0 * cross / (static_cast<double>(n1) * static_cast<double>(n2)) -
               2.0 * within1 / (static_cast<double>(n1) * static_cast<double>(n1)) -
               2.0 * within2 / (static_cast<double>(n2) * static_cast<double>(n2));
    }
};

// Marginal energies, gamma applied to squared differences.
EnergyTerms marginal_energy_terms(std::span<const double> x, std::span<const double> y,
                                  const GammaKernel& kernel);
double marginal_energy(std::span<const double> x, std::span<const double> y,
                       const GammaKernel& kernel);
double marginal_energy_vstat(std::span<const double> x, std::span<const double> y,
                             const GammaKernel& kernel);

// Bivariate energies, gamma applied to half the squared Euclidean norm.
EnergyTerms pair_energy_terms(std::span<const double> xi, std::span<const double> xj,
                              std::span<const double> yi, std::span<const double> yj,
                              const GammaKernel& kernel);
double pair_energy(const Matrix& x2, const Matrix& y2, const GammaKernel& kernel);
double pair_energy_vstat(const Matrix& x2, const Matrix& y2, const GammaKernel& kernel);

// Per-feature energy vector.
struct EnergyProfile {
    std::vector<double> energies;
    GammaKernel gamma;
};

enum class EnergyForm { Unbiased, Nonnegative };

EnergyProfile marginal_energy_profile(const TwoClassSample& sample, const GammaKernel& kernel,
                                      EnergyForm form = EnergyForm::Unbiased, int threads = 0);

// Symmetric matrix of bivariate energies over all feature pairs; the diagonal
// is not a defined quantity and is left at zero.
struct PairEnergyMatrix {
    std::size_t dim = 0;
    std::vector<double> values;  // dim x dim, row-major
    GammaKernel gamma;

    double at(std::size_t i, std::size_t j) const { return values[i * dim + j]; }
    double& at(std::size_t i, std::size_t j) { return values[i * dim + j]; }
};

PairEnergyMatrix pair_energy_matrix(const TwoClassSample& sample, const GammaKernel& kernel,
                                    EnergyForm form = EnergyForm::Unbiased, int threads = 0);

}  // namespace edscreen

#endif

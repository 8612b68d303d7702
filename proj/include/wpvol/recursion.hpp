/**
 * @file recursion.hpp
 * @brief Laplace-domain topological recursion over an odd spectral curve.
 *
 * For a stable target W^g_{n+1}(z, K), |K| = n, the engine assembles the
 * bracket
 *   B(u) = W^{g-1}_{n+2}(u, -u, K)
 *        + sum_{h, J subset K}  W^h_{1+|J|}(u, J) W^{g-h}_{1+n-|J|}(-u, K\J)
 * as an even Laurent expansion  B(u) = sum_{j <= 0} beta_j u^(2j)  with
 * polynomial coefficients in K, then extracts the residue against the kernel
 *   dE_u(z) / (2u (y(-u) - y(u))),
 * which closes to
 *   W(z, K) = 1/2 sum_{m,k >= 0}  s_k  beta_{-(k+m)}  z^-(2m+2).
 *
 * Unstable factors follow fixed rules: W^0_1 kills its term, W^0_2(u, z_j)
 * joins its mirror term to the even combination 2 sum_k (2k+1) u^(2k)
 * z_j^-(2k+2), and W^0_2(u, -u) contributes 1/4 to beta_{-1}.
 */
#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "wpvol/poly.hpp"
#include "wpvol/spectral_curve.hpp"

namespace wpvol {

struct BracketExpansion {
    int g = 0;  // target genus
    int n = 0;  // passive slot count; the target is W^g_{n+1}
    std::map<int, NVarPoly> beta;  // j in [-(3g-2+n), 0] -> n-variable coefficient
};

/// Closed-form residue of kernel times bracket.  Every way of splitting a
/// result key into (new-slot power, passive key) is computed and compared;
/// disagreement means the recursion lost permutation symmetry and raises
/// identity_violation.
CorrelatorPoly residue_extract(const KernelSeries& ks, const BracketExpansion& br);

struct EngineOptions {
    std::optional<std::filesystem::path> cache_dir;
    int threads = 1;
};

class Engine {
public:
    explicit Engine(SpectralCurve curve, EngineOptions opt = {});

    const SpectralCurve& curve() const { return curve_; }
    bool pi_graded() const { return pi_graded_; }

    /// Memoized W^g_n; requires a stable (g,n) with n >= 1.
    const CorrelatorPoly& correlator(int g, int n);

    /// Bracket for the target W^g_{n+1}; sub-correlators are computed (and
    /// memoized) as needed.
    BracketExpansion bracket_assemble(int g, int n);

    KernelSeries kernel(int order) const { return kernel_series(curve_, order); }

    /// Everything W^g_{n+1} consumes, grouped by 2g-2+n ascending.
    std::vector<std::vector<std::pair<int, int>>> dependency_levels(int g, int n) const;

private:
    CorrelatorPoly compute(int g, int n) const;
    BracketExpansion assemble(int g, int n) const;  // memo must cover dependencies
    const CorrelatorPoly& memo_at(int g, int n) const;
    void ensure(int g, int n);
    std::optional<CorrelatorPoly> load_cached(int g, int n) const;
    void store_cached(int g, int n, const CorrelatorPoly& w) const;

    SpectralCurve curve_;
    EngineOptions opt_;
    bool pi_graded_ = false;
    mutable std::shared_mutex mu_;
    std::map<std::pair<int, int>, CorrelatorPoly> memo_;
};

}  // namespace wpvol

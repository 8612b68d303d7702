#include "wpvol/recursion.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "wpvol/serialize.hpp"

namespace wpvol {

CorrelatorPoly residue_extract(const KernelSeries& ks, const BracketExpansion& br) {
    int g = br.g, n_out = br.n + 1;
    if (!is_stable(g, n_out)) throw std::domain_error("residue_extract: unstable target");

    int need = 0;
    for (const auto& [j, poly] : br.beta) {
        if (j > 0 || static_cast<int>(poly.n) != br.n)
            throw std::domain_error("residue_extract: malformed bracket");
        if (!poly.is_zero()) need = std::max(need, -j);
    }
    if (ks.order() < need)
        throw std::domain_error("residue_extract: kernel too short (need order " +
                                std::to_string(need) + ")");

    // Ordered coefficients c(m, rest) = 1/2 sum_k s_k beta_{-(k+m)}[rest],
    // where m is the power carried by the new slot.
    const Rational half(1, 2);
    std::map<std::pair<int, ExponentKey>, PiScalar> ordered;
    for (const auto& [j, poly] : br.beta) {
        for (int k = 0; k <= -j && k <= ks.order(); ++k) {
            if (ks.s[k].is_zero()) continue;
            int m = -j - k;
            PiScalar weight = half * ks.s[k];
            for (const auto& [rest, c] : poly.coeffs) ordered[{m, rest}] += weight * c;
        }
    }

    // Every split of a full key into (m, rest) must produce the same value;
    // that is exactly the statement that the new slot is interchangeable
    // with every passive slot.
    std::map<ExponentKey, std::map<int, PiScalar>, KeyOrder> grouped;
    for (auto& [mk, val] : ordered) {
        ExponentKey full = mk.second;
        full.push_back(mk.first);
        grouped[canonical_key(std::move(full))].emplace(mk.first, std::move(val));
    }

    CorrelatorPoly out;
    out.g = g;
    out.p.n = n_out;
    for (const auto& [full, decomps] : grouped) {
        const PiScalar* ref = nullptr;
        int prev = -1;
        for (int m : full) {
            if (m == prev) continue;
            prev = m;
            static const PiScalar kZero;
            auto it = decomps.find(m);
            const PiScalar& v = it == decomps.end() ? kZero : it->second;
            if (!ref) {
                ref = &v;
            } else if (*ref != v) {
                std::ostringstream os;
                os << "residue_extract: slot decompositions disagree for W^" << g << "_" << n_out;
                throw identity_violation(os.str());
            }
        }
        if (ref) out.p.add(full, *ref);
    }
    return out;
}

// ---- engine ----

Engine::Engine(SpectralCurve curve, EngineOptions opt)
    : curve_(std::move(curve)), opt_(std::move(opt)) {
    if (opt_.threads < 1) throw std::domain_error("engine: thread count must be >= 1");
    pi_graded_ = curve_.pi_graded();
}

namespace {

constexpr std::pair<int, int> kW01{0, 1};
constexpr std::pair<int, int> kW02{0, 2};

/// Stable correlators consumed by the bracket of W^g_{n+1} (n passive slots).
std::vector<std::pair<int, int>> bracket_children(int g, int n) {
    std::vector<std::pair<int, int>> out;
    if (g >= 1 && !(g == 1 && n == 0)) out.emplace_back(g - 1, n + 2);
    for (int h = 0; h <= g; ++h) {
        for (int j = 0; j <= n; ++j) {
            std::pair<int, int> f1{h, 1 + j}, f2{g - h, 1 + n - j};
            if (f1 == kW01 || f2 == kW01) continue;
            if (f1 == kW02 && f2 == kW02) continue;
            if (f2 == kW02) continue;
            if (f1 == kW02) {
                out.push_back(f2);
                continue;
            }
            out.push_back(f1);
            out.push_back(f2);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> Engine::dependency_levels(int g, int n) const {
    if (!is_stable(g, n + 1)) throw std::domain_error("dependency_levels: unstable target");
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack{{g, n + 1}};
    seen.insert({g, n + 1});
    while (!stack.empty()) {
        auto [G, N] = stack.back();
        stack.pop_back();
        for (auto child : bracket_children(G, N - 1))
            if (seen.insert(child).second) stack.push_back(child);
    }
    std::map<int, std::vector<std::pair<int, int>>> by_chi;
    for (auto gn : seen) by_chi[2 * gn.first - 2 + gn.second].push_back(gn);
    std::vector<std::vector<std::pair<int, int>>> levels;
    for (auto& [chi, v] : by_chi) levels.push_back(std::move(v));  // already sorted within
    return levels;
}

const CorrelatorPoly& Engine::memo_at(int g, int n) const {
    std::shared_lock lk(mu_);
    auto it = memo_.find({g, n});
    if (it == memo_.end())
        throw std::logic_error("engine: dependency W^" + std::to_string(g) + "_" +
                               std::to_string(n) + " was not scheduled");
    return it->second;
}

BracketExpansion Engine::assemble(int g, int n) const {
    BracketExpansion br;
    br.g = g;
    br.n = n;
    const int jmin = -dimension(g, n + 1);
    auto add_contrib = [&](int j, NVarPoly&& p) {
        if (p.is_zero()) return;
        if (j < jmin || j > 0)
            throw identity_violation("bracket_assemble: u-power outside the pole window");
        auto [it, fresh] = br.beta.try_emplace(j);
        if (fresh) it->second.n = n;
        for (auto& [k, c] : p.coeffs) it->second.add(k, c);
    };

    if (g >= 1) {
        if (g == 1 && n == 0) {
            // W^0_2(u, -u) = 1/(2u)^2
            NVarPoly scalar;
            scalar.n = 0;
            scalar.add({}, PiScalar(Rational(1, 4)));
            add_contrib(-1, std::move(scalar));
        } else {
            auto e1 = expand_slot(memo_at(g - 1, n + 2).p);
            for (auto& [d1, p1] : e1) {
                auto e2 = expand_slot(p1);
                for (auto& [d2, p2] : e2) add_contrib(-(d1 + d2 + 2), std::move(p2));
            }
        }
    }

    for (int h = 0; h <= g; ++h) {
        for (int j = 0; j <= n; ++j) {
            std::pair<int, int> f1{h, 1 + j}, f2{g - h, 1 + n - j};
            if (f1 == kW01 || f2 == kW01) continue;
            if (f1 == kW02 && f2 == kW02) {
                // Mirror pair of W^0_2 factors; only the u^0 term can reach
                // the residue window.
                NVarPoly p;
                p.n = 2;
                p.add({0, 0}, PiScalar(2));
                add_contrib(0, std::move(p));
                continue;
            }
            if (f2 == kW02) continue;  // counted at its mirror class
            if (f1 == kW02) {
                // W^0_2(u, z_m) plus mirror against the even stable cofactor:
                //   W^{g}_{n}(u, K\z_m) * 2 sum_k (2k+1) u^(2k) z_m^-(2k+2)
                auto ex = expand_slot(memo_at(f2.first, f2.second).p);
                for (auto& [d, pd] : ex) {
                    for (int m2 = 0; m2 <= d + 1; ++m2) {
                        NVarPoly single;
                        single.n = 1;
                        single.add({m2}, PiScalar(Rational(2 * (2 * m2 + 1))));
                        add_contrib(m2 - d - 1, convolve_disjoint(single, pd));
                    }
                }
                continue;
            }
            auto e1 = expand_slot(memo_at(f1.first, f1.second).p);
            auto e2 = expand_slot(memo_at(f2.first, f2.second).p);
            for (auto& [d1, p1] : e1)
                for (auto& [d2, p2] : e2)
                    add_contrib(-(d1 + d2 + 2), convolve_disjoint(p1, p2));
        }
    }
    return br;
}

CorrelatorPoly Engine::compute(int g, int n) const {
    BracketExpansion br = assemble(g, n - 1);
    KernelSeries ks = kernel_series(curve_, dimension(g, n));
    CorrelatorPoly w = residue_extract(ks, br);
    validate_correlator(w);
    if (pi_graded_) validate_pi_grading(g, w.p);
    return w;
}

std::optional<CorrelatorPoly> Engine::load_cached(int g, int n) const {
    if (!opt_.cache_dir) return std::nullopt;
    std::string id = curve_.id_for_order(dimension(g, n));
    auto path = *opt_.cache_dir / (id + "_g" + std::to_string(g) + "_n" + std::to_string(n) +
                                   ".json");
    auto body = read_text_file(path);
    if (!body) return std::nullopt;
    try {
        auto w = cache_from_json(json::parse(*body), id, 2 * dimension(g, n) + 1, g, n);
        if (!w) return std::nullopt;
        validate_correlator(*w);
        if (pi_graded_) validate_pi_grading(g, w->p);
        return w;
    } catch (...) {
        return std::nullopt;
    }
}

void Engine::store_cached(int g, int n, const CorrelatorPoly& w) const {
    if (!opt_.cache_dir) return;
    std::filesystem::create_directories(*opt_.cache_dir);
    std::string id = curve_.id_for_order(dimension(g, n));
    auto path = *opt_.cache_dir / (id + "_g" + std::to_string(g) + "_n" + std::to_string(n) +
                                   ".json");
    write_text_file_atomic(path, cache_to_json(id, 2 * dimension(g, n) + 1, w).dump(2) + "\n");
}

void Engine::ensure(int g, int n) {
    {
        std::shared_lock lk(mu_);
        if (memo_.count({g, n})) return;
    }
    for (const auto& level : dependency_levels(g, n - 1)) {
        std::vector<std::pair<int, int>> todo;
        {
            std::shared_lock lk(mu_);
            for (auto gn : level)
                if (!memo_.count(gn)) todo.push_back(gn);
        }
        if (todo.empty()) continue;

        std::vector<std::pair<std::pair<int, int>, CorrelatorPoly>> ready;
        std::vector<std::pair<int, int>> missing;
        for (auto gn : todo) {
            if (auto w = load_cached(gn.first, gn.second))
                ready.emplace_back(gn, std::move(*w));
            else
                missing.push_back(gn);
        }

        std::vector<CorrelatorPoly> results(missing.size());
        int workers = std::min<int>(opt_.threads, static_cast<int>(missing.size()));
        if (workers > 1) {
            std::atomic<std::size_t> cursor{0};
            std::exception_ptr err;
            std::mutex err_mu;
            std::vector<std::thread> pool;
            for (int t = 0; t < workers; ++t) {
                pool.emplace_back([&] {
                    while (true) {
                        std::size_t i = cursor.fetch_add(1);
                        if (i >= missing.size()) break;
                        try {
                            results[i] = compute(missing[i].first, missing[i].second);
                        } catch (...) {
                            std::scoped_lock l(err_mu);
                            if (!err) err = std::current_exception();
                            break;
                        }
                    }
                });
            }
            for (auto& th : pool) th.join();
            if (err) std::rethrow_exception(err);
        } else {
            for (std::size_t i = 0; i < missing.size(); ++i)
                results[i] = compute(missing[i].first, missing[i].second);
        }

        {
            std::unique_lock lk(mu_);
            for (auto& [gn, w] : ready) memo_.emplace(gn, std::move(w));
            for (std::size_t i = 0; i < missing.size(); ++i)
                memo_.emplace(missing[i], std::move(results[i]));
        }
        for (auto gn : missing) store_cached(gn.first, gn.second, memo_at(gn.first, gn.second));
    }
}

const CorrelatorPoly& Engine::correlator(int g, int n) {
    if (n < 1 || !is_stable(g, n))
        throw std::domain_error("correlator: stable (g,n) with n >= 1 required");
    ensure(g, n);
    return memo_at(g, n);
}

BracketExpansion Engine::bracket_assemble(int g, int n) {
    if (!is_stable(g, n + 1)) throw std::domain_error("bracket_assemble: unstable target");
    for (const auto& level : dependency_levels(g, n))
        for (auto gn : level)
            if (gn != std::pair<int, int>{g, n + 1}) ensure(gn.first, gn.second);
    return assemble(g, n);
}

}  // namespace wpvol

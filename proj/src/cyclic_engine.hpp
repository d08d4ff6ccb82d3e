#ifndef ALTAU_SRC_CYCLIC_ENGINE_HPP
#define ALTAU_SRC_CYCLIC_ENGINE_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <altau/index.hpp>
#include <altau/matrix.hpp>
#include <altau/series.hpp>

namespace altau::detail
{

// Coefficient extraction from
//   sum over S_k/C_k of tr(R(lambda_s1) ... R(lambda_sk)) / prod_j (lambda_sj - lambda_s(j+1))
// with every kernel expanded in the fixed Regime. R(lambda_v) is R_{signs[v]}; its order-i
// coefficient comes from the provider, which must return the full matrix (constant included).
template <typename T>
class CyclicEngine
{
public:
    using Provider = std::function<Matrix2<T>(Sign, int)>;

    explicit CyclicEngine(Provider provider) : provider_(std::move(provider)) {}

    // Coefficient of prod_v lambda_v^{exponents[v]}.
    T cyclic_sum(const std::vector<Sign> &signs, const std::vector<int> &exponents)
    {
        const std::size_t k = signs.size();
        if (k < 2 || exponents.size() != k) {
            throw std::invalid_argument("cyclic sum needs k >= 2 variables with one exponent each");
        }
        const Regime regime{signs};
        // No kernel index beyond this bound can meet i_v >= 0 for every v.
        int bound = static_cast<int>(k);
        for (int e : exponents) {
            bound += std::abs(e);
        }

        T total{};
        std::vector<std::size_t> sigma(k);
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            // Kernel j is 1/(lambda_a - lambda_b) with a = sigma[j], b = sigma[j+1].
            std::vector<std::size_t> dominant(k), dominated(k);
            int flips = 0;
            for (std::size_t j = 0; j < k; ++j) {
                const std::size_t a = sigma[j];
                const std::size_t b = sigma[(j + 1) % k];
                if (regime.dominates(a, b)) {
                    dominant[j] = a;
                    dominated[j] = b;
                } else {
                    dominant[j] = b;
                    dominated[j] = a;
                    ++flips;
                }
            }
            const long sign = flips % 2 == 0 ? 1 : -1;

            std::map<std::vector<int>, long> counts;
            std::vector<int> m(k, 0);
            std::vector<int> kexp(k, 0);
            std::vector<int> idx(k, 0);
            const auto visit = [&] {
                std::fill(kexp.begin(), kexp.end(), 0);
                for (std::size_t j = 0; j < k; ++j) {
                    kexp[dominated[j]] += m[j];
                    kexp[dominant[j]] -= m[j] + 1;
                }
                for (std::size_t v = 0; v < k; ++v) {
                    const int diff = exponents[v] - kexp[v];
                    idx[v] = signs[v] == Sign::Minus ? diff : -diff;
                    if (idx[v] < 0) {
                        return;
                    }
                }
                counts[idx] += sign;
            };
            // Odometer over m in [0, bound]^k.
            for (;;) {
                visit();
                std::size_t j = 0;
                while (j < k && m[j] == bound) {
                    m[j] = 0;
                    ++j;
                }
                if (j == k) {
                    break;
                }
                ++m[j];
            }

            for (const auto &[indices, count] : counts) {
                if (count == 0) {
                    continue;
                }
                std::vector<std::pair<Sign, int>> seq(k);
                for (std::size_t j = 0; j < k; ++j) {
                    seq[j] = {signs[sigma[j]], indices[sigma[j]]};
                }
                total += trace(seq) * Rational(count);
            }
        } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
        return total;
    }

    const Matrix2<T> &resolvent(Sign sign, int i)
    {
        const auto key = std::pair{sign, i};
        auto it = resolvents_.find(key);
        if (it == resolvents_.end()) {
            it = resolvents_.emplace(key, provider_(sign, i)).first;
        }
        return it->second;
    }

    // tr(R_{s1}[i1] ... R_{sk}[ik]), memoized up to rotation.
    T trace(std::vector<std::pair<Sign, int>> seq)
    {
        std::rotate(seq.begin(), std::min_element(seq.begin(), seq.end()), seq.end());
        auto it = traces_.find(seq);
        if (it != traces_.end()) {
            return it->second;
        }
        Matrix2<T> product = resolvent(seq[0].first, seq[0].second);
        for (std::size_t j = 1; j < seq.size(); ++j) {
            product = product * resolvent(seq[j].first, seq[j].second);
        }
        return traces_.emplace(std::move(seq), product.trace()).first->second;
    }

private:
    Provider provider_;
    std::map<std::pair<Sign, int>, Matrix2<T>> resolvents_;
    std::map<std::vector<std::pair<Sign, int>>, T> traces_;
};

// -prod(alpha_j) * (cyclic sum + delta_{k,2} r_{alpha1,alpha2}) at the lambda-exponents of
// the entry (i_1, ..., i_k), i.e. lambda_v^{-(alpha_v i_v + 1)}.
inline std::vector<int> entry_exponents(const std::vector<Sign> &signs, const std::vector<int> &indices)
{
    std::vector<int> e(signs.size());
    for (std::size_t v = 0; v < signs.size(); ++v) {
        e[v] = -(sign_value(signs[v]) * indices[v] + 1);
    }
    return e;
}

// Coefficient of the correction kernel r_{alpha,beta}(lambda, mu) at (e1, e2).
inline Rational correction_coefficient(Sign alpha, Sign beta, int e1, int e2, bool uniform = false)
{
    if (uniform && alpha != beta) {
        // 1/(lambda - mu)^2 with the '+' variable dominant
        if (alpha == Sign::Minus) {
            std::swap(e1, e2);
        }
        return (e2 >= 0 && e1 == -e2 - 2) ? e2 + 1 : 0;
    }
    if (alpha != beta) {
        // r_{+-} = 1/lambda^2, r_{-+} = 1/mu^2
        if (alpha == Sign::Plus) {
            return (e1 == -2 && e2 == 0) ? 1 : 0;
        }
        return (e1 == 0 && e2 == -2) ? 1 : 0;
    }
    // 1/(lambda - mu)^2 = sum_m (m+1) y^m x^{-m-2}, x the dominant variable (the first).
    if (e2 >= 0 && e1 == -e2 - 2) {
        return e2 + 1;
    }
    return 0;
}

template <typename T>
T closed_entry(CyclicEngine<T> &engine, const std::vector<Sign> &signs, const std::vector<int> &indices, bool uniform = false)
{
    const auto e = entry_exponents(signs, indices);
    T value = engine.cyclic_sum(signs, e);
    if (signs.size() == 2) {
        value += T(correction_coefficient(signs[0], signs[1], e[0], e[1], uniform));
    }
    long prod = 1;
    for (Sign s : signs) {
        prod *= sign_value(s);
    }
    return value * Rational(-prod);
}

} // namespace altau::detail

#endif

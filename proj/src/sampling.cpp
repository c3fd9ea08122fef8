#include "fspec/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fspec {

FreqVector random_gamma_vector(int depth, int support, std::mt19937_64& rng) {
    const auto gammas = enumerate_gamma(depth);
    std::vector<std::size_t> idx(gammas.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);

    const std::size_t count =
        std::min<std::size_t>(static_cast<std::size_t>(support), gammas.size());
    std::normal_distribution<double> gauss(0.0, 1.0);
    FreqVector v;
    for (std::size_t i = 0; i < count; ++i) {
        const double re = gauss(rng), im = gauss(rng);
        v.add_term(gammas[idx[i]], Complex{re, im});
    }
    if (v.empty()) v.add_term(0, Complex{1.0, 0.0});
    const double n = std::sqrt(v.coeff_norm_sq());
    v *= Complex{1.0 / n, 0.0};
    return v;
}

TruncOperator random_trunc_operator(int depth, std::mt19937_64& rng) {
    const Eigen::Index d = Eigen::Index(1) << depth;
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index col = 0; col < d; ++col)
        for (Eigen::Index row = 0; row < d; ++row)
            m(row, col) = Complex{gauss(rng), gauss(rng)};
    return TruncOperator(depth, std::move(m));
}

} // namespace fspec

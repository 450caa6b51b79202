#include "pacert/symplectic.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pacert {

namespace {

void check_index(int g, int i) {
    if (g < 1) throw std::invalid_argument("genus >= 1 required");
    if (i < 1 || i > 2 * g) throw std::invalid_argument("index out of range 1..2g");
}

// N_{i,j}: row i <- -e_j, row j <- e_i
IntMatrix n_swap(int g, int i, int j) {
    IntMatrix m = IntMatrix::identity(2 * g);
    m.at(i - 1, i - 1) = 0;
    m.at(j - 1, j - 1) = 0;
    m.at(i - 1, j - 1) = -1;
    m.at(j - 1, i - 1) = 1;
    return m;
}

}  // namespace

int sigma(int g, int i) {
    check_index(g, i);
    return 2 * g - i + 1;
}

IntMatrix j_form(int g) {
    if (g < 1) throw std::invalid_argument("j_form: genus >= 1 required");
    IntMatrix m(2 * g);
    for (int i = 1; i <= 2 * g; ++i) m.at(i - 1, 2 * g - i) = (i % 2 == 1) ? 1 : -1;
    return m;
}

IntMatrix elementary_se(int g, int i, int j, const Int& power) {
    check_index(g, i);
    check_index(g, j);
    if (i == j) throw std::invalid_argument("elementary_se: i != j required");
    IntMatrix m = IntMatrix::identity(2 * g);
    m.at(i - 1, j - 1) = power;
    if (i != sigma(g, j)) {
        const int sign = ((i + j + 1) % 2 == 0) ? 1 : -1;
        m.at(sigma(g, j) - 1, sigma(g, i) - 1) = sign * power;
    }
    return m;
}

IntMatrix perm_w(int g, int i, int j) {
    check_index(g, i);
    check_index(g, j);
    if (i == j) throw std::invalid_argument("perm_w: i != j required");
    // same-parity pairs would not be symplectic, and the construction
    // never needs them; i = sigma(j) always has different parity
    if ((i + j) % 2 == 0)
        throw std::invalid_argument("perm_w: i and j must have different parity");
    if (i == sigma(g, j)) return n_swap(g, i, j);
    return n_swap(g, i, j) * n_swap(g, sigma(g, j), sigma(g, i));
}

bool is_symplectic(const IntMatrix& M) {
    if (M.dim() % 2 != 0 || M.dim() == 0)
        throw std::invalid_argument("is_symplectic: even dimension required");
    const IntMatrix J = j_form(M.dim() / 2);
    return M.transpose() * J * M == J;
}

IntMatrix companion(const SymplecticPoly& r) {
    const int n = 2 * r.genus();
    IntMatrix m(n);
    for (int i = 1; i <= n; ++i) m.at(0, i - 1) = -r.c(i);
    for (int k = 1; k < n; ++k) m.at(k, k - 1) = 1;
    return m;
}

IntMatrix Factor::realize(int g) const {
    return kind == Kind::SE ? elementary_se(g, i, j, exponent) : perm_w(g, i, j);
}

std::string Factor::to_string() const {
    std::string out = (kind == Kind::SE) ? "SE(" : "W(";
    out += std::to_string(i) + "," + std::to_string(j) + ")";
    if (kind == Kind::SE) out += "^" + exponent.str();
    return out;
}

IntMatrix FactorSpec::product() const {
    IntMatrix m = IntMatrix::identity(2 * genus);
    for (const Factor& f : factors) m = m * f.realize(genus);
    return m;
}

std::string FactorSpec::to_string() const {
    std::string out;
    for (const Factor& f : factors) {
        if (!out.empty()) out += " . ";
        out += f.to_string();
    }
    return out;
}

FactorSpec bq_factors(const SymplecticPoly& r, const std::vector<int>& block_order) {
    if (r.c(2 * r.genus()) != 1)
        throw std::invalid_argument("factored_bq: constant term 1 required");
    const int g = r.genus();
    std::vector<int> order = block_order;
    if (order.empty()) {
        order.resize(g);
        std::iota(order.begin(), order.end(), 1);
    }
    std::vector<bool> seen(g + 1, false);
    for (int i : order) {
        if (i < 1 || i > g || seen[i])
            throw std::invalid_argument("block order must be a permutation of 1..g");
        seen[i] = true;
    }
    if (static_cast<int>(order.size()) != g)
        throw std::invalid_argument("block order must be a permutation of 1..g");

    FactorSpec spec;
    spec.genus = g;
    for (int i : order) {
        spec.factors.push_back({Factor::Kind::SE, i, i + 1, r.t(i)});
        spec.factors.push_back({Factor::Kind::W, i, i + 1, Int(0)});
    }
    return spec;
}

BqFactorization factored_bq(const SymplecticPoly& r) {
    FactorSpec spec = bq_factors(r);
    IntMatrix product = spec.product();
    return {std::move(spec), std::move(product)};
}

std::vector<std::complex<double>> approximate_roots(const IntPoly& p) {
    const int n = p.degree();
    if (n < 1) return {};
    std::vector<double> a(n + 1);
    for (int k = 0; k <= n; ++k) a[k] = p.coeff(k).convert_to<double>();
    for (double v : a)
        if (!std::isfinite(v)) return std::vector<std::complex<double>>(n, {std::nan(""), 0.0});
    const double lead = a[n];
    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(a[k] / lead));
    radius += 1.0;

    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0.0;
        for (int k = n; k >= 0; --k) acc = acc * z + a[k];
        return acc;
    };

    std::vector<std::complex<double>> z(n);
    for (int k = 0; k < n; ++k) {
        const double th = 2.0 * M_PI * (k + 0.25) / n + 0.4;
        z[k] = radius * std::complex<double>(std::cos(th), std::sin(th));
    }
    for (int iter = 0; iter < 600; ++iter) {
        double worst = 0.0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> denom = lead;
            for (int j = 0; j < n; ++j)
                if (j != k) denom *= z[k] - z[j];
            if (denom == std::complex<double>(0.0, 0.0)) continue;
            const std::complex<double> corr = eval(z[k]) / denom;
            z[k] -= corr;
            worst = std::max(worst, std::abs(corr));
        }
        if (worst < 1e-14 * std::max(1.0, radius)) break;
    }
    return z;
}

SpectralRadiusEstimate spectral_radius_estimate(const IntMatrix& M) {
    if (M.dim() == 0) throw std::invalid_argument("spectral radius: nonempty matrix required");
    const IntPoly cp = charpoly(M);
    const auto roots = approximate_roots(cp);
    const int n = cp.degree();
    std::vector<double> a(n + 1);
    for (int k = 0; k <= n; ++k) a[k] = cp.coeff(k).convert_to<double>();
    auto eval = [&](std::complex<double> zz) {
        std::complex<double> acc = 0.0;
        for (int k = n; k >= 0; --k) acc = acc * zz + a[k];
        return acc;
    };
    SpectralRadiusEstimate est;
    for (int k = 0; k < n; ++k) {
        est.value = std::max(est.value, std::abs(roots[k]));
        std::complex<double> denom = 1.0;
        for (int j = 0; j < n; ++j)
            if (j != k) denom *= roots[k] - roots[j];
        const double w = std::abs(denom) > 0 ? std::abs(eval(roots[k])) / std::abs(denom)
                                             : std::numeric_limits<double>::infinity();
        est.error = std::max(est.error, n * w);
    }
    return est;
}

}  // namespace pacert

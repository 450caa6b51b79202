#pragma once

#include "pacert/matrix.hpp"

#include <complex>

namespace pacert {

// The pairing permutation i <-> 2g-i+1 (1-based).
int sigma(int g, int i);

// 2g x 2g form with entry (i, 2g-i+1) = (-1)^{i+1}; J^2 = -I.
IntMatrix j_form(int g);

// Elementary symplectic matrix SE_{i,j}^power. For i = sigma(j) this is
// the single row operation e_i -> e_i + power*e_j; otherwise the paired
// operation e_{s(j)} -> e_{s(j)} + (-1)^{i+j+1} power*e_{s(i)} comes with
// it. Exact for any integer power since the off-diagonal part squares to
// zero.
IntMatrix elementary_se(int g, int i, int j, const Int& power);

// Symplectic elementary permutation matrix W_{i,j}: N_{i,j} when
// i = sigma(j), else N_{i,j} N_{s(j),s(i)}, where N_{i,j} realizes the
// signed row swap (e_i, e_j) -> (-e_j, e_i).
IntMatrix perm_w(int g, int i, int j);

// M^T J M == J, exactly.
bool is_symplectic(const IntMatrix& M);

// Companion matrix A_q with first row -c_1 .. -c_{2g} and subdiagonal 1s;
// charpoly(A_q) = r.
IntMatrix companion(const SymplecticPoly& r);

struct Factor {
    enum class Kind { SE, W };
    Kind kind;
    int i = 0;
    int j = 0;
    Int exponent;  // SE only

    IntMatrix realize(int g) const;
    std::string to_string() const;  // "SE(1,2)^-6" / "W(1,2)"
};

struct FactorSpec {
    int genus = 0;
    std::vector<Factor> factors;

    IntMatrix product() const;
    std::string to_string() const;  // "SE(1,2)^-6 . W(1,2) . ..."
};

// Factors [SE(i,i+1)^{t_i} W(i,i+1)] for i running over block_order
// (default 1..g). Any order yields the characteristic polynomial r.
FactorSpec bq_factors(const SymplecticPoly& r, const std::vector<int>& block_order = {});

struct BqFactorization {
    FactorSpec spec;
    IntMatrix product;
};

// Canonical factorization B_q = SE_{1,2}^{t_1} W_{1,2} ... SE_{g,g+1}^{t_g} W_{g,g+1}.
BqFactorization factored_bq(const SymplecticPoly& r);

// Floating-point roots of an integer polynomial (Durand-Kerner), for
// diagnostics only.
std::vector<std::complex<double>> approximate_roots(const IntPoly& p);

struct SpectralRadiusEstimate {
    double value = 0.0;
    double error = 0.0;  // residual-based bound; never certified
};

// Largest root modulus of charpoly(M), floating point. Diagnostic only:
// certificates never depend on it.
SpectralRadiusEstimate spectral_radius_estimate(const IntMatrix& M);

}  // namespace pacert

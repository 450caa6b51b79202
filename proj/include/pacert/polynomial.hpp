#pragma once

#include "pacert/numbers.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pacert {

// Dense integer polynomial. Coefficients are stored ascending by degree;
// the zero polynomial is the empty vector, otherwise the last entry is
// nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> ascending);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one();
    static IntPoly x();
    static IntPoly monomial(const Int& c, int k);
    static IntPoly from_desc(std::vector<Int> descending);
    // "1,6,5,6,1" -> x^4+6x^3+5x^2+6x+1 (descending coefficients)
    static IntPoly parse_csv_desc(const std::string& text);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // coefficient of x^k; zero outside the stored range
    const Int& coeff(int k) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int lead() const;
    bool is_monic() const;
    bool is_palindromic() const;

    Int eval(const Int& v) const;
    IntPoly shifted(int k) const;  // multiply by x^k

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& s) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    std::string csv_desc() const;
    std::string pretty() const;  // "x^4+6x^3+5x^2+6x+1"

private:
    std::vector<Int> coeffs_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

// Quotient num/den when the division is exact over Z, otherwise nullopt.
std::optional<IntPoly> div_exact(const IntPoly& num, const IntPoly& den);

// sym(q)(x) = x^{deg q} * q(x + 1/x); requires q monic
IntPoly sym(const IntPoly& q);

// Monic palindromic polynomial of even degree 2g >= 2 (constant term 1
// follows). Exposes the 1-based coefficients c_i of x^{2g-i} and the
// signs t_i = (-1)^i c_i.
class SymplecticPoly {
public:
    explicit SymplecticPoly(IntPoly p);

    const IntPoly& poly() const { return poly_; }
    int genus() const { return poly_.degree() / 2; }
    // c_i = coefficient of x^{2g-i}, 1 <= i <= 2g
    Int c(int i) const;
    // t_i = (-1)^i c_i, 1 <= i <= 2g-1
    Int t(int i) const;
    bool operator==(const SymplecticPoly& o) const { return poly_ == o.poly_; }

private:
    IntPoly poly_;
};

std::ostream& operator<<(std::ostream& os, const SymplecticPoly& r);

SymplecticPoly sym_poly(const IntPoly& q);

// Inverse of sym on monic palindromic even-degree input, via the basis
// p_k with x^k + x^{-k} = p_k(x + 1/x): p_0 = 2, p_1 = y,
// p_k = y p_{k-1} - p_{k-2}.
IntPoly desym(const SymplecticPoly& r);

// Seed q(x) = x^g + a_{g-1} x^{g-1} + ... + a_0, with every non-leading
// coefficient scaled by the Eisenstein prime when one is given.
struct SeedPoly {
    int genus = 2;
    std::vector<Int> a;  // a_0 .. a_{g-1}
    std::optional<Int> eisenstein_prime;

    // structural constraints: g >= 2, a_0 != 0, p prime and coprime to a_0
    void validate() const;
    // |a_{g-1} * p| > 2g, the hypothesis needed for certification
    bool certification_bound_ok() const;
    IntPoly q() const;
    std::string describe() const;
};

}  // namespace pacert

#include "pacert/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pacert {

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly::IntPoly(std::vector<Int> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPoly IntPoly::one() { return IntPoly({Int(1)}); }

IntPoly IntPoly::x() { return IntPoly({Int(0), Int(1)}); }

IntPoly IntPoly::monomial(const Int& c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<Int> v(k + 1, Int(0));
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::from_desc(std::vector<Int> descending) {
    std::reverse(descending.begin(), descending.end());
    return IntPoly(std::move(descending));
}

IntPoly IntPoly::parse_csv_desc(const std::string& text) {
    std::vector<Int> desc;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        std::string t;
        for (char ch : item)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        if (t.empty()) throw std::invalid_argument("empty coefficient in \"" + text + "\"");
        try {
            desc.emplace_back(t);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coefficient \"" + t + "\"");
        }
    }
    if (desc.empty()) throw std::invalid_argument("no coefficients given");
    return from_desc(std::move(desc));
}

const Int& IntPoly::coeff(int k) const {
    static const Int kZero = 0;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[k];
}

Int IntPoly::lead() const { return coeffs_.empty() ? Int(0) : coeffs_.back(); }

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

bool IntPoly::is_palindromic() const {
    if (is_zero()) return false;
    const int d = degree();
    for (int i = 0; 2 * i <= d; ++i)
        if (coeff(i) != coeff(d - i)) return false;
    return true;
}

Int IntPoly::eval(const Int& v) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero()) return IntPoly();
    std::vector<Int> v(coeffs_.size() + k, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(coeffs_);
    for (auto& c : v) c = -c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& s) const {
    std::vector<Int> v(coeffs_);
    for (auto& c : v) c *= s;
    return IntPoly(std::move(v));
}

std::string IntPoly::csv_desc() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        out += coeff(k).str();
        if (k > 0) out += ',';
    }
    return out;
}

std::string IntPoly::pretty() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = coeff(k);
        if (c == 0) continue;
        if (!out.empty()) out += (c > 0) ? "+" : "-";
        else if (c < 0) out += "-";
        const Int a = abs(c);
        if (a != 1 || k == 0) out += a.str();
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.pretty(); }

std::optional<IntPoly> div_exact(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("div_exact: division by zero polynomial");
    if (num.is_zero()) return IntPoly();
    if (num.degree() < den.degree()) return std::nullopt;
    std::vector<Int> quot(num.degree() - den.degree() + 1, Int(0));
    IntPoly rem = num;
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        if (rem.lead() % den.lead() != 0) return std::nullopt;
        const Int c = rem.lead() / den.lead();
        const int k = rem.degree() - den.degree();
        quot[k] = c;
        rem = rem - den.shifted(k) * c;
    }
    if (!rem.is_zero()) return std::nullopt;
    return IntPoly(std::move(quot));
}

IntPoly sym(const IntPoly& q) {
    if (!q.is_monic()) throw std::invalid_argument("sym: monic polynomial required");
    const int g = q.degree();
    IntPoly result;                                    // sum of a_k x^{g-k} (x^2+1)^k
    IntPoly pow = IntPoly::one();                      // (x^2+1)^k
    const IntPoly x2p1({Int(1), Int(0), Int(1)});
    for (int k = 0; k <= g; ++k) {
        if (q.coeff(k) != 0) result = result + pow.shifted(g - k) * q.coeff(k);
        if (k < g) pow = pow * x2p1;
    }
    return result;
}

SymplecticPoly::SymplecticPoly(IntPoly p) : poly_(std::move(p)) {
    if (poly_.degree() < 2) throw std::invalid_argument("symplectic polynomial: degree >= 2 required");
    if (poly_.degree() % 2 != 0) throw std::invalid_argument("symplectic polynomial: even degree required");
    if (!poly_.is_monic()) throw std::invalid_argument("symplectic polynomial: monic required");
    if (!poly_.is_palindromic()) throw std::invalid_argument("symplectic polynomial: palindromic required");
}

Int SymplecticPoly::c(int i) const {
    const int n = poly_.degree();
    if (i < 1 || i > n) throw std::out_of_range("c_i: index out of range");
    return poly_.coeff(n - i);
}

Int SymplecticPoly::t(int i) const {
    const int n = poly_.degree();
    if (i < 1 || i > n - 1) throw std::out_of_range("t_i: index out of range");
    return (i % 2 == 0) ? c(i) : -c(i);
}

std::ostream& operator<<(std::ostream& os, const SymplecticPoly& r) { return os << r.poly(); }

SymplecticPoly sym_poly(const IntPoly& q) { return SymplecticPoly(sym(q)); }

IntPoly desym(const SymplecticPoly& r) {
    const int g = r.genus();
    const IntPoly& p = r.poly();
    IntPoly q = IntPoly::monomial(p.coeff(g), 0);
    IntPoly pk_prev({Int(2)});       // p_0
    IntPoly pk = IntPoly::x();       // p_1
    for (int k = 1; k <= g; ++k) {
        if (p.coeff(g + k) != 0) q = q + pk * p.coeff(g + k);
        IntPoly next = pk.shifted(1) - pk_prev;
        pk_prev = std::move(pk);
        pk = std::move(next);
    }
    return q;
}

void SeedPoly::validate() const {
    if (genus < 2) throw std::invalid_argument("seed: genus >= 2 required");
    if (static_cast<int>(a.size()) != genus)
        throw std::invalid_argument("seed: expected " + std::to_string(genus) + " coefficients a_0..a_{g-1}");
    if (a[0] == 0) throw std::invalid_argument("seed: a_0 = 0 makes the polynomial reducible (root 0)");
    if (eisenstein_prime) {
        if (!is_prime(*eisenstein_prime)) throw std::invalid_argument("seed: p must be prime");
        if (a[0] % *eisenstein_prime == 0)
            throw std::invalid_argument("seed: a_0 must not be divisible by p");
    }
}

bool SeedPoly::certification_bound_ok() const {
    const Int scale = eisenstein_prime ? *eisenstein_prime : Int(1);
    return abs(a[genus - 1] * scale) > 2 * genus;
}

IntPoly SeedPoly::q() const {
    validate();
    const Int scale = eisenstein_prime ? *eisenstein_prime : Int(1);
    std::vector<Int> v(genus + 1, Int(0));
    for (int i = 0; i < genus; ++i) v[i] = a[i] * scale;
    v[genus] = 1;
    return IntPoly(std::move(v));
}

std::string SeedPoly::describe() const {
    std::string out = "genus " + std::to_string(genus);
    if (eisenstein_prime) out += ", p=" + eisenstein_prime->str();
    out += ", a=[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += a[i].str();
    }
    out += "]";
    return out;
}

}  // namespace pacert

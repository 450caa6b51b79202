#include "pacert/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pacert {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < n_; ++j) out.at(i, j) += v * o.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix sum: dimension mismatch");
    IntMatrix out(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntMatrix IntMatrix::pow(long long e) const {
    if (e < 0) throw std::invalid_argument("matrix pow: nonnegative exponent required");
    IntMatrix result = identity(n_);
    IntMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (int j = 0; j < n_; ++j) {
            if (j) os << ", ";
            os << at(i, j);
        }
        os << "]" << (i + 1 == n_ ? "]" : "\n");
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

IntPoly charpoly(const IntMatrix& M) {
    const int n = M.dim();
    if (n == 0) return IntPoly::one();
    // Berkowitz vectors hold the coefficients of det(xI - A_r) for the
    // leading principal submatrices A_r, highest degree first.
    std::vector<Int> v{Int(1), -M.at(0, 0)};
    for (int r = 2; r <= n; ++r) {
        std::vector<Int> t(r + 1);
        t[0] = 1;
        t[1] = -M.at(r - 1, r - 1);
        std::vector<Int> w(r - 1);
        for (int i = 0; i < r - 1; ++i) w[i] = M.at(i, r - 1);
        for (int k = 2; k <= r; ++k) {
            Int dot = 0;
            for (int i = 0; i < r - 1; ++i) dot += M.at(r - 1, i) * w[i];
            t[k] = -dot;
            if (k < r) {
                std::vector<Int> w2(r - 1, Int(0));
                for (int i = 0; i < r - 1; ++i)
                    for (int j = 0; j < r - 1; ++j) w2[i] += M.at(i, j) * w[j];
                w = std::move(w2);
            }
        }
        std::vector<Int> v2(r + 1, Int(0));
        for (int i = 0; i <= r; ++i)
            for (int k = 0; k <= i && k <= r; ++k) {
                if (i - k >= static_cast<int>(v.size())) continue;
                v2[i] += t[k] * v[i - k];
            }
        v = std::move(v2);
    }
    return IntPoly::from_desc(std::move(v));
}

Int det(const IntMatrix& M) {
    const IntPoly cp = charpoly(M);
    Int d = cp.coeff(0);  // det(xI - M) at x = 0 is (-1)^n det(M)
    return (M.dim() % 2 == 0) ? d : -d;
}

}  // namespace pacert

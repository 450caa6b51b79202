#pragma once

#include "pacert/polynomial.hpp"

#include <iosfwd>

namespace pacert {

// Dense square integer matrix acting on column vectors; composition of
// mapping classes f∘h corresponds to the product of their matrices.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Int(0)) {}
    static IntMatrix identity(int n);

    int dim() const { return n_; }
    Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    IntMatrix transpose() const;
    IntMatrix pow(long long e) const;  // e >= 0
    bool is_identity() const;

    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<Int> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Exact characteristic polynomial det(xI - M), division-free (Berkowitz).
IntPoly charpoly(const IntMatrix& M);

Int det(const IntMatrix& M);

}  // namespace pacert

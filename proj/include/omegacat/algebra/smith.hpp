#pragma once

#include <optional>

#include "omegacat/algebra/matrix.hpp"

namespace omegacat {

// U * m * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... (zeros last).
// U_inv and V_inv are maintained alongside so callers never have to invert.
struct SmithForm {
    IntMatrix U, D, V, U_inv, V_inv;
    std::size_t rank = 0;

    std::vector<Integer> diagonal() const {
        std::vector<Integer> d;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
        return d;
    }
};

namespace detail {

struct SmithWork {
    IntMatrix A, U, U_inv, V, V_inv;

    void swap_rows(std::size_t a, std::size_t b) {
        A.swap_rows(a, b);
        U.swap_rows(a, b);
        U_inv.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        A.swap_cols(a, b);
        V.swap_cols(a, b);
        V_inv.swap_rows(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const Integer& k) {
        A.add_row_multiple(dst, src, k);
        U.add_row_multiple(dst, src, k);
        U_inv.add_col_multiple(src, dst, -k);
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& k) {
        A.add_col_multiple(dst, src, k);
        V.add_col_multiple(dst, src, k);
        V_inv.add_row_multiple(src, dst, -k);
    }
    void negate_row(std::size_t r) {
        A.negate_row(r);
        U.negate_row(r);
        U_inv.negate_col(r);
    }

    // Smallest nonzero |entry| in the trailing submatrix, ties broken row-major.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < A.rows(); ++i)
            for (std::size_t j = t; j < A.cols(); ++j) {
                const Integer& x = A(i, j);
                if (x == 0) continue;
                Integer ax = abs_value(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    detail::SmithWork w{m, IntMatrix::identity(r), IntMatrix::identity(r), IntMatrix::identity(c),
                        IntMatrix::identity(c)};
    std::size_t t = 0;
    for (; t < std::min(r, c); ++t) {
        std::size_t pi = 0, pj = 0;
        if (!w.find_pivot(t, pi, pj)) break;
        for (;;) {
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            bool clean = true;
            const Integer p = w.A(t, t);
            for (std::size_t i = t + 1; i < r; ++i) {
                if (w.A(i, t) == 0) continue;
                Integer q = w.A(i, t) / p;
                w.add_row(i, t, -q);
                if (w.A(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (w.A(t, j) == 0) continue;
                Integer q = w.A(t, j) / p;
                w.add_col(j, t, -q);
                if (w.A(t, j) != 0) clean = false;
            }
            if (clean) {
                // Divisibility of the remaining block by the pivot.
                bool divides = true;
                for (std::size_t i = t + 1; i < r && divides; ++i)
                    for (std::size_t j = t + 1; j < c; ++j)
                        if (w.A(i, j) % p != 0) {
                            w.add_row(t, i, 1);
                            divides = false;
                            break;
                        }
                if (divides) break;
            }
            w.find_pivot(t, pi, pj);
        }
        if (w.A(t, t) < 0) w.negate_row(t);
    }
    SmithForm s;
    s.rank = t;
    s.D = std::move(w.A);
    s.U = std::move(w.U);
    s.U_inv = std::move(w.U_inv);
    s.V = std::move(w.V);
    s.V_inv = std::move(w.V_inv);
    return s;
}

// Basis (as columns) of the integer kernel of m.
inline IntMatrix kernel_basis(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    std::size_t n = m.cols();
    IntMatrix k(n, n - s.rank);
    for (std::size_t j = s.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) k(i, j - s.rank) = s.V(i, j);
    return k;
}

// A full-rank sublattice of Z^n, with exact coordinate solving.
class Lattice {
public:
    Lattice() = default;

    // Lattice spanned by the columns of gens (any number, possibly dependent).
    explicit Lattice(const IntMatrix& gens) : ambient_(gens.rows()) {
        SmithForm s = smith_normal_form(gens);
        rank_ = s.rank;
        basis_ = IntMatrix(ambient_, rank_);
        for (std::size_t j = 0; j < rank_; ++j)
            for (std::size_t i = 0; i < ambient_; ++i) basis_(i, j) = s.U_inv(i, j) * s.D(j, j);
        // Solving against the basis: basis = U_inv * diag(d) on the first rank columns.
        U_ = std::move(s.U);
        for (std::size_t j = 0; j < rank_; ++j) d_.push_back(s.D(j, j));
    }

    static Lattice full(std::size_t n) { return Lattice(IntMatrix::identity(n)); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return rank_; }
    const IntMatrix& basis() const { return basis_; }

    std::optional<IntVector> solve(const IntVector& x) const {
        IntVector y = U_.apply(x);
        IntVector z(rank_);
        for (std::size_t i = 0; i < ambient_; ++i) {
            if (i < rank_) {
                if (y[i] % d_[i] != 0) return std::nullopt;
                z[i] = y[i] / d_[i];
            } else if (y[i] != 0) {
                return std::nullopt;
            }
        }
        return z;
    }

    bool contains(const IntVector& x) const { return solve(x).has_value(); }

private:
    std::size_t ambient_ = 0;
    std::size_t rank_ = 0;
    IntMatrix basis_;
    IntMatrix U_;
    std::vector<Integer> d_;
};

}  // namespace omegacat

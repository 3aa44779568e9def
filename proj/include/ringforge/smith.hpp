#pragma once

#include "ringforge/exact_ring.hpp"

#include <vector>

namespace ringforge {

/// Dense matrix of exact integers; entries are interpreted in the ring of
/// the operation applied to them.
class Mat {
public:
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    static Mat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Mat mul(const Mat& o, const ExactRing& r) const;
    Mat canon(const ExactRing& r) const;

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    /// row_i -= q * row_j
    void row_axpy(size_t i, size_t j, const Int& q, const ExactRing& r);
    /// col_i -= q * col_j
    void col_axpy(size_t i, size_t j, const Int& q, const ExactRing& r);
    void scale_row(size_t i, const Int& u, const ExactRing& r);
    void scale_col(size_t j, const Int& u, const ExactRing& r);

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    /// Exact determinant (square matrices) by cofactor expansion over the
    /// integers; small sizes only.
    Int det() const;

private:
    size_t rows_, cols_;
    std::vector<Int> a_;
};

struct DiagCertificate {
    Mat p, d, q; // p * A * q = d, unit determinants, divisibility chain
    DiagCertificate(Mat pp, Mat dd, Mat qq)
        : p(std::move(pp)), d(std::move(dd)), q(std::move(qq)) {}
};

/// Smith diagonalization with transformation certificate. Over Z: classical
/// elementary reduction pivoting on the minimal absolute value. Over a
/// prime-power residue ring: pivoting on the minimal p-valuation entry.
/// Over composite or product rings: componentwise, recombined by CRT into
/// single matrices; diagonal entries are canonicalized to gcd(d, m).
DiagCertificate smith_form(const ExactRing& r, const Mat& a);

/// Canonical decomposition of (+)_k R/(entries_k R) as R/I_1 (+) ... (+) R/I_n
/// with I_1 inside I_2 inside ... inside I_n != R. Returns the canonical
/// generators of the I_j (0 for the zero ideal); trailing unit ideals are
/// dropped. Entries must generate proper ideals.
std::vector<Int> canonical_form(const ExactRing& r, const std::vector<Int>& entries);

} // namespace ringforge

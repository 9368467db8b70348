#pragma once

#include <vector>

#include "poly.hpp"

namespace cd4 {

/// Row-major matrix of polynomials sharing one ring.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Poly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const Ring& ring() const { return entries_.front().ring(); }

private:
    std::size_t rows_, cols_;
    std::vector<Poly> entries_;
};

/// All 2x2 minors, deterministically ordered: row pairs (i<j) in
/// lexicographic order, and within each row pair, column pairs (k<l) in
/// lexicographic order. Each minor is m[i][k]*m[j][l] - m[i][l]*m[j][k].
std::vector<Poly> minors2x2(const PolyMatrix& m);

} // namespace cd4

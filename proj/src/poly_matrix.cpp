#include "poly_matrix.hpp"

namespace cd4 {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw DomainError("matrix dimensions must be positive");
    if (entries_.size() != rows_ * cols_) throw DomainError("entry count != rows * cols");
    for (const auto& e : entries_)
        if (e.ring() != entries_.front().ring())
            throw RingMismatch("matrix entries live in different rings");
}

std::vector<Poly> minors2x2(const PolyMatrix& m) {
    if (m.rows() < 2 || m.cols() < 2) throw DomainError("need at least a 2x2 matrix");
    std::vector<Poly> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.rows(); ++j)
            for (std::size_t k = 0; k < m.cols(); ++k)
                for (std::size_t l = k + 1; l < m.cols(); ++l)
                    out.push_back(m.at(i, k) * m.at(j, l) - m.at(i, l) * m.at(j, k));
    return out;
}

} // namespace cd4

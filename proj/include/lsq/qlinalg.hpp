#pragma once

#include "lsq/poly.hpp"

namespace lsq {

// Dense matrix over Q. Rows are the unit of iteration everywhere (row
// echelon, row span, kernel of the linear map "row vector -> row * this"
// is not used; kernel() treats columns as unknowns of A x = 0).
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols) : cols_(cols), data_(rows, std::vector<Rat>(cols, Rat(0))) {}

    size_t rows() const { return data_.size(); }
    size_t cols() const { return cols_; }
    Rat& at(size_t r, size_t c) { return data_[r][c]; }
    const Rat& at(size_t r, size_t c) const { return data_[r][c]; }
    std::vector<Rat>& row(size_t r) { return data_[r]; }
    const std::vector<Rat>& row(size_t r) const { return data_[r]; }

    void append_row(std::vector<Rat> r);

    // Reduced row echelon form in place; returns pivot column indices.
    std::vector<size_t> rref();
    size_t rank() const;

    // Basis of { x : A x = 0 }, one vector per free column, in rref-canonical
    // form (deterministic).
    std::vector<std::vector<Rat>> kernel() const;

private:
    size_t cols_ = 0;
    std::vector<std::vector<Rat>> data_;
};

bool span_equal(const QMatrix& a, const QMatrix& b);
// True iff every row of sub lies in the row span of sup.
bool span_contains(const QMatrix& sup, const QMatrix& sub);

// Coordinate maps between polynomials and row vectors over a fixed word list.
std::vector<Rat> poly_coords(const NCPoly& p, const std::vector<Key>& words);
NCPoly coords_poly(Alphabet a, const std::vector<Rat>& v, const std::vector<Key>& words);

// Matrix whose rows are the coordinates of the given polynomials.
QMatrix coord_matrix(const std::vector<NCPoly>& ps, const std::vector<Key>& words);

// Collects the union of support words of the given polynomials, in canonical
// order.
std::vector<Key> support_words(const std::vector<NCPoly>& ps);

} // namespace lsq

#include "lsq/qlinalg.hpp"

#include <set>

namespace lsq {

void QMatrix::append_row(std::vector<Rat> r) {
    if (data_.empty() && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.push_back(std::move(r));
}

std::vector<size_t> QMatrix::rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows(); ++c) {
        size_t p = r;
        while (p < rows() && data_[p][c] == 0) ++p;
        if (p == rows()) continue;
        std::swap(data_[p], data_[r]);
        Rat inv = Rat(1) / data_[r][c];
        for (size_t j = c; j < cols_; ++j) data_[r][j] *= inv;
        for (size_t i = 0; i < rows(); ++i) {
            if (i == r || data_[i][c] == 0) continue;
            Rat f = data_[i][c];
            for (size_t j = c; j < cols_; ++j) data_[i][j] -= f * data_[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    // drop zero rows so the row list is itself a basis of the row space
    data_.resize(pivots.size());
    return pivots;
}

size_t QMatrix::rank() const {
    QMatrix m = *this;
    return m.rref().size();
}

std::vector<std::vector<Rat>> QMatrix::kernel() const {
    QMatrix m = *this;
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool span_contains(const QMatrix& sup, const QMatrix& sub) {
    if (sub.rows() == 0) return true;
    if (sup.cols() != sub.cols() && sup.rows() != 0) throw std::invalid_argument("column mismatch");
    QMatrix joint = sup;
    size_t base = sup.rank();
    for (size_t i = 0; i < sub.rows(); ++i) joint.append_row(sub.row(i));
    return joint.rank() == base;
}

bool span_equal(const QMatrix& a, const QMatrix& b) {
    return span_contains(a, b) && span_contains(b, a);
}

std::vector<Rat> poly_coords(const NCPoly& p, const std::vector<Key>& words) {
    std::map<Key, size_t, LenLex> index;
    for (size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
    std::vector<Rat> v(words.size(), Rat(0));
    for (auto& [w, c] : p.terms()) {
        auto it = index.find(w);
        if (it == index.end()) throw std::invalid_argument("support word not in coordinate list");
        v[it->second] = c;
    }
    return v;
}

NCPoly coords_poly(Alphabet a, const std::vector<Rat>& v, const std::vector<Key>& words) {
    if (v.size() != words.size()) throw std::invalid_argument("length mismatch");
    NCPoly p(a);
    for (size_t i = 0; i < v.size(); ++i) p.add_term(words[i], v[i]);
    return p;
}

QMatrix coord_matrix(const std::vector<NCPoly>& ps, const std::vector<Key>& words) {
    QMatrix m(0, words.size());
    for (auto& p : ps) m.append_row(poly_coords(p, words));
    return m;
}

std::vector<Key> support_words(const std::vector<NCPoly>& ps) {
    std::set<Key, LenLex> s;
    for (auto& p : ps)
        for (auto& [w, c] : p.terms()) s.insert(w);
    return {s.begin(), s.end()};
}

} // namespace lsq

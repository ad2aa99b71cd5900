#include "powersum/echelon.hpp"

#include <algorithm>
#include <stdexcept>

namespace powersum {

namespace {

size_t first_nonzero(const std::vector<Rat>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}

void axpy(std::vector<Rat>& x, const Rat& a, const std::vector<Rat>& y, size_t from) {
    for (size_t i = from; i < x.size(); ++i)
        if (y[i] != 0) x[i] -= a * y[i];
}

}  // namespace

std::vector<Rat> EchelonBasis::reduce(std::vector<Rat> v) const {
    if (v.size() != width_) throw std::invalid_argument("vector length mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = v[pivots_[r]];
        if (c != 0) {
            Rat f = c;  // pivot entry is 1
            axpy(v, f, rows_[r], pivots_[r]);
        }
    }
    return v;
}

bool EchelonBasis::contains(const std::vector<Rat>& v) const {
    return first_nonzero(reduce(v)) == width_;
}

bool EchelonBasis::insert(std::vector<Rat> v) {
    v = reduce(std::move(v));
    size_t p = first_nonzero(v);
    if (p == width_) return false;

    // normalize pivot to 1
    if (v[p] != 1) {
        Rat inv = Rat(1) / v[p];
        for (size_t i = p; i < width_; ++i)
            if (v[i] != 0) v[i] *= inv;
    }
    // clear the new pivot column in existing rows (full reduction)
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = rows_[r][p];
        if (c != 0) {
            Rat f = c;
            axpy(rows_[r], f, v, p);
        }
    }
    // keep pivot order strictly increasing
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

}  // namespace powersum

#pragma once

#include <vector>

#include "powersum/rational.hpp"

namespace powersum {

/// Reduced row echelon family of exact rational coefficient vectors.
/// Pivot columns strictly increase, pivot entries are 1, and pivot columns
/// are cleared in every other row. Row count equals rank.
class EchelonBasis {
public:
    explicit EchelonBasis(size_t width) : width_(width) {}

    size_t width() const { return width_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    /// Inserts v; returns true iff v was independent of the current span.
    bool insert(std::vector<Rat> v);

    /// Residual of v after reduction against the basis (v itself untouched).
    std::vector<Rat> reduce(std::vector<Rat> v) const;

    /// True iff v lies in the span.
    bool contains(const std::vector<Rat>& v) const;

private:
    size_t width_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace powersum

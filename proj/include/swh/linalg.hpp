#pragma once

#include "swh/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace swh {

using QVector = std::vector<Rational>;

// Incrementally built row-echelon basis of a subspace of Q^dim. Every stored row
// remembers how it was obtained from the labelled vectors inserted so far, so a
// reduction can report which inserted vectors it used.
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    // Adds v with the given label. Returns false (and stores nothing) if v is
    // already in the span.
    bool insert(const QVector& v, std::size_t label);

    // v minus its projection onto the span, plus the combination of labels used:
    // v = residual + sum coeff[label] * inserted(label).
    struct Reduction {
        QVector residual;
        std::vector<std::pair<std::size_t, Rational>> combination;
        bool in_span() const;
    };
    Reduction reduce(const QVector& v) const;

    bool contains(const QVector& v) const { return reduce(v).in_span(); }

private:
    struct Row {
        std::size_t pivot;
        QVector v;                                  // v[pivot] == 1
        std::vector<std::pair<std::size_t, Rational>> combo;  // sparse label coefficients
    };
    std::size_t dim_;
    std::vector<Row> rows_;
};

}  // namespace swh

#include "swh/linalg.hpp"

#include "swh/error.hpp"

#include <map>

namespace swh {

bool EchelonSpan::Reduction::in_span() const {
    for (const auto& x : residual)
        if (x != 0) return false;
    return true;
}

EchelonSpan::Reduction EchelonSpan::reduce(const QVector& v) const {
    if (v.size() != dim_) throw Error("EchelonSpan: dimension mismatch");
    Reduction out{v, {}};
    std::map<std::size_t, Rational> combo;
    for (const auto& row : rows_) {
        Rational t = out.residual[row.pivot];
        if (t == 0) continue;
        for (std::size_t i = row.pivot; i < dim_; ++i)
            if (row.v[i] != 0) out.residual[i] -= t * row.v[i];
        for (const auto& [label, c] : row.combo) combo[label] += t * c;
    }
    for (auto& [label, c] : combo)
        if (c != 0) out.combination.emplace_back(label, c);
    return out;
}

bool EchelonSpan::insert(const QVector& v, std::size_t label) {
    Reduction r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r.residual[p] == 0) ++p;
    if (p == dim_) return false;
    Rational inv = 1 / r.residual[p];
    Row row{p, std::move(r.residual), {}};
    for (auto& x : row.v) x *= inv;
    row.combo.emplace_back(label, inv);
    for (auto& [lab, c] : r.combination) row.combo.emplace_back(lab, -c * inv);
    rows_.push_back(std::move(row));
    return true;
}

}  // namespace swh

#pragma once

#include "ncinv/scalars.hpp"

#include <map>
#include <vector>

namespace ncinv {

using SparseVec = std::map<long, CycloScalar>;

void axpy(SparseVec& y, const CycloScalar& a, const SparseVec& x);  // y += a x

// Row echelon form built incrementally. Each stored row has leading entry 1
// at its pivot column and only larger columns besides.
class Echelon {
  public:
    // Reduces v in place against the stored rows; afterwards v has no pivot columns.
    void reduce(SparseVec& v) const;
    // Adds v if it is independent of the stored rows; returns whether it was.
    bool insert(SparseVec v);
    bool contains(SparseVec v) const;
    size_t rank() const { return rows_.size(); }
    bool is_pivot(long col) const { return rows_.count(col) != 0; }
    const std::map<long, SparseVec>& rows() const { return rows_; }

  private:
    std::map<long, SparseVec> rows_;
};

// Basis of {x : rows * x = 0} for vectors indexed 0 .. ncols-1, in reduced form:
// one vector per free column, with coefficient 1 there and 0 at other free columns.
std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, long ncols);

}  // namespace ncinv

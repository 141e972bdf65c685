#include "ncinv/linalg.hpp"

namespace ncinv {

void axpy(SparseVec& y, const CycloScalar& a, const SparseVec& x) {
    if (a.is_zero()) return;
    for (auto& [c, v] : x) {
        auto [it, inserted] = y.try_emplace(c, a * v);
        if (inserted) continue;
        it->second += a * v;
        if (it->second.is_zero()) y.erase(it);
    }
}

void Echelon::reduce(SparseVec& v) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto p = rows_.find(it->first);
        if (p == rows_.end()) {
            ++it;
            continue;
        }
        long col = it->first;
        CycloScalar f = -it->second;
        axpy(v, f, p->second);
        it = v.upper_bound(col);
    }
}

bool Echelon::insert(SparseVec v) {
    reduce(v);
    if (v.empty()) return false;
    long lead = v.begin()->first;
    CycloScalar inv = v.begin()->second.inverse();
    if (!inv.is_one())
        for (auto& [c, x] : v) x *= inv;
    rows_.emplace(lead, std::move(v));
    return true;
}

bool Echelon::contains(SparseVec v) const {
    reduce(v);
    return v.empty();
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, long ncols) {
    Echelon e;
    for (auto& r : rows) e.insert(r);
    // Back-substitute to reduced row echelon form, highest pivot first.
    std::map<long, SparseVec> rref;
    for (auto it = e.rows().rbegin(); it != e.rows().rend(); ++it) {
        SparseVec row = it->second;
        auto p = row.upper_bound(it->first);
        while (p != row.end()) {
            auto q = rref.find(p->first);
            if (q == rref.end()) {
                ++p;
                continue;
            }
            long col = p->first;
            axpy(row, -p->second, q->second);
            p = row.upper_bound(col);
        }
        rref.emplace(it->first, std::move(row));
    }
    std::vector<SparseVec> basis;
    for (long f = 0; f < ncols; ++f) {
        if (rref.count(f)) continue;
        SparseVec x;
        x[f] = CycloScalar(1);
        for (auto& [piv, row] : rref) {
            auto c = row.find(f);
            if (c != row.end()) x[piv] = -c->second;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace ncinv

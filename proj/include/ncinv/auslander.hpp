#pragma once

#include "ncinv/group_actions.hpp"
#include "ncinv/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncinv {

// Element of A # G: group-element index (into enumerate_group) -> coefficient in A.
using SmashElt = std::map<int, AlgebraElt>;

// Group elements with a lazily filled multiplication table.
class SmashContext {
  public:
    explicit SmashContext(GroupSpec G);
    const GroupSpec& group() const { return G_; }
    const AlgebraSpec& spec() const { return G_.ambient(); }
    const std::vector<GradedAut>& elements() const { return elems_; }
    int order() const { return static_cast<int>(elems_.size()); }
    int identity() const { return identity_; }
    int index_of(const GradedAut& g) const;  // throws if g is not in the group
    int product(int x, int y) const;  // index of elems[x] * elems[y]

  private:
    GroupSpec G_;
    std::vector<GradedAut> elems_;
    std::map<std::tuple<bool, long, long>, int> keyed_;
    mutable std::map<std::pair<int, int>, int> table_;
    int identity_ = 0;
};

SmashElt smash_add(SmashElt x, const SmashElt& y, const CycloScalar& c = CycloScalar(1));  // x + c y
// (a g)(b h) = a (g.b) gh
SmashElt smash_mul(const SmashContext& ctx, const SmashElt& x, const SmashElt& y);
SmashElt smash_from(const SmashContext& ctx, const AlgebraElt& a, int group_index = -1);  // a * g, default identity
bool smash_equal(const SmashElt& x, const SmashElt& y);
std::string smash_str(const SmashContext& ctx, const SmashElt& x);

SmashElt gbar(const SmashContext& ctx);

enum class GHKind { G, H };
// G_l = sum w^{2l(nj+ki)} g^i h^{2j}; H_l = sum w^{l(n(2j+1)-2ki)} g^i h^{2j+1}; w of order 2nk.
SmashElt GH_element(const SmashContext& ctx, long l, GHKind kind);

struct IdealDim {
    long ideal_dim = 0, ambient_dim = 0;
    bool full() const { return ideal_dim == ambient_dim; }
};

// Per-degree dimension of the two-sided ideal generated by a homogeneous seed, via
// I_d = u I_{d-1} + v I_{d-1} + I_{d-1} u + I_{d-1} v starting from span{g seed h}.
class SmashIdeal {
  public:
    SmashIdeal(const SmashContext& ctx, const SmashElt& seed);
    IdealDim dim(int d);
    bool contains(const SmashElt& x, int d);
    int seed_degree() const { return seed_deg_; }

  private:
    SparseVec to_vec(const SmashElt& x, int d) const;
    SmashElt from_vec(const SparseVec& v, int d) const;
    void extend_to(int d);
    const SmashContext& ctx_;
    int seed_deg_;
    std::vector<Echelon> ech_;  // ech_[d] for d >= seed degree; empty below
    std::optional<int> full_from_;
};

// Ranks are exact over Q(w), or taken modulo a prime p = 1 (mod M) with M the cyclotomic level of the
// group and the algebra. Reduction mod p can only lower a rank, so a degree that is full mod p is full.
enum class RankMode { exact, modular };

// Largest prime below 2^31 that is 1 mod M.
unsigned long modular_prime(long M);

// The modular mode tracks the annihilator of I_d, whose dimension is the (small) codimension.
std::vector<IdealDim> ideal_dims(const SmashContext& ctx, const SmashElt& seed, int N, RankMode mode = RankMode::modular,
                                 unsigned long* prime_used = nullptr);

struct WitnessReport {
    std::optional<int> witness;  // smallest s with full coverage on [s, N]
    int N = 0;
    int required_tail = 4;
    RankMode mode = RankMode::modular;
    unsigned long prime = 0;  // modular mode only
    std::vector<IdealDim> dims;
};

// Full coverage propagates upward (A_1 (A#G)_d = (A#G)_{d+1}), but a witness is only claimed
// when at least required_tail covered degrees follow it inside the window.
WitnessReport finite_dim_witness(const SmashContext& ctx, int N, RankMode mode = RankMode::modular);

struct IdentityCheck {
    std::string name;
    long cases = 0;
    long failures = 0;
    bool ok() const { return failures == 0 && cases > 0; }
};

struct GHReport {
    int n = 0, k = 0;
    long N = 0, m = 0;  // m = an - bk from an + bk = 1
    std::vector<IdentityCheck> checks;
    bool all_ok() const;
};

// Periodicity, the sum identity, gbar = G_0 + H_0, the u- and v-commutation rules for l <= N,
// and the explicit ideal combinations for (u^{nk} +- v^{nk}) G_0, u^k v^k G_0 and u^{(n+1)k} v^{(n+1)k}.
GHReport verify_GH_identities(int n, int k, long N);

}  // namespace ncinv

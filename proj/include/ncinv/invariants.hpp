#pragma once

#include "ncinv/group_actions.hpp"
#include "ncinv/linalg.hpp"

#include <string>
#include <vector>

namespace ncinv {

// Degree-d elements as vectors indexed by the u-exponent of u^i v^{d-i}.
SparseVec to_vec(const AlgebraElt& a, int d);
AlgebraElt from_vec(const SparseVec& v, int d);

// Basis of the common fixed space of the group generators on A_d. Each basis
// vector has coefficient 1 at a distinct "free" monomial.
std::vector<AlgebraElt> fixed_space(const AlgebraSpec& spec, const GroupSpec& G, int d);

// Group average of the trace series through degree N; throws InternalInconsistency
// if a coefficient is not rational.
TruncatedSeries molien(const AlgebraSpec& spec, const GroupSpec& G, long N);
std::vector<long> molien_dims(const AlgebraSpec& spec, const GroupSpec& G, long N);

// Sum of g.a over the group, divided by |G| when normalized.
AlgebraElt reynolds(const AlgebraSpec& spec, const GroupSpec& G, const AlgebraElt& a, bool normalized = true);

bool is_invariant(const AlgebraSpec& spec, const GroupSpec& G, const AlgebraElt& a);

enum class Provenance { typeA_formula, typeD_formula, jordan_formula, nc_formula, brute_force };
std::string provenance_name(Provenance p);

struct GeneratorSet {
    std::vector<AlgebraElt> generators;
    std::vector<int> degrees;
    Provenance provenance = Provenance::brute_force;
};

// Requires a small group. Every generator is checked to be invariant.
GeneratorSet generator_set(const AlgebraSpec& spec, const GroupSpec& G);
// Walks degrees, adding fixed-space elements outside the generated span, and stops once the
// span has matched the Molien series for 2 * (largest generator degree) + root order degrees.
GeneratorSet brute_force_generators(const AlgebraSpec& spec, const GroupSpec& G);

// Bases of the subalgebra generated by gens, degree by degree.
class SubalgebraSpan {
  public:
    SubalgebraSpan(AlgebraSpec spec, std::vector<AlgebraElt> gens);
    // Extends the computed range through degree d and returns dim of degree d.
    long dim(int d);
    const std::vector<AlgebraElt>& basis(int d);
    bool contains(const AlgebraElt& a, int d);
    void add_generator(const AlgebraElt& g);  // only before any degree >= deg g is computed
    int computed() const { return static_cast<int>(ech_.size()) - 1; }

  private:
    void extend_to(int d);
    AlgebraSpec spec_;
    std::vector<AlgebraElt> gens_;
    std::vector<int> gdeg_;
    std::vector<Echelon> ech_;
    std::vector<std::vector<AlgebraElt>> basis_;
};

struct GenerationReport {
    bool success = true;
    int first_failure = -1;
    std::vector<long> span_dims, molien_dims;
};

GenerationReport verify_generation(const AlgebraSpec& spec, const GroupSpec& G, const std::vector<AlgebraElt>& gens, long N);

// Basis of the degree-d invariants of G_{n,k} (n, k odd, coprime) from the triples 2r + ns = kt.
std::vector<AlgebraElt> gnk_basis(int n, int k, int d);

struct ThetaTarget {
    enum Kind { cyclic, dihedral } kind = cyclic;
    int first = 0, second = 0;  // (order, weight) or (m, q)
    std::string str() const;
    GroupSpec group() const;  // acting on the commutative plane
};

std::pair<int, int> theta_pair(int n, int k);  // S -> T
std::pair<int, int> eta_pair(int m, int q);  // T -> S

struct ThetaReport {
    ThetaTarget target;
    long N = 0;
    std::vector<long> source_series, target_series;
    bool series_equal = false;
    std::vector<int> source_degrees, target_degrees;  // sorted
    bool degrees_equal = false;
    // Kleinian targets 1/m(1,m-1): series of k[x,y,z]/(xy - z^m), empty otherwise
    std::vector<long> kleinian_series;
    bool kleinian_equal = false;
};

// Requires G_{n,k} with commutative invariants: gcd(n,k) = 1, n or k even, k != 2 mod 4.
ThetaReport theta_correspondence(int n, int k, long N = 40);

}  // namespace ncinv

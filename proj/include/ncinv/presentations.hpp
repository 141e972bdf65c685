#pragma once

#include "ncinv/group_actions.hpp"
#include "ncinv/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncinv {

using FreeWord = std::vector<int>;  // generator indices, left to right
using FreePoly = std::map<FreeWord, CycloScalar>;

struct Presentation {
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<FreePoly> relations;

    int word_degree(const FreeWord& w) const;
    // Throws std::invalid_argument on bad indices or inhomogeneous relations.
    void validate() const;
    std::string word_str(const FreeWord& w) const;  // "ba", "a^2", "x1 x3^2"
    std::string poly_str(const FreePoly& p) const;  // "ba + 2a^2 - ab"
    std::string str() const;
};

// Generators X_0..X_n of degree n named a, b, c, ...
Presentation jordan_presentation(int n);
// Generators x_1..x_d of 1/n(1,a) with the q-twisted relation families.
Presentation quantum_presentation(int n, int a, const CycloScalar& q);
// Exponent r_{kl} of the long relations, 1 <= k, l <= d.
long quantum_long_exponent(int n, int a, int k, int l);
// Four generators a, b, c, d of k_{-1}[u,v]^{G_{7,3}} and nine relations.
Presentation gnk73_presentation();

AlgebraElt eval_word(const AlgebraSpec& spec, const std::vector<AlgebraElt>& assignment, const FreeWord& w);
AlgebraElt eval_poly(const AlgebraSpec& spec, const std::vector<AlgebraElt>& assignment, const FreePoly& p);

struct EvalReport {
    std::vector<AlgebraElt> values;
    std::vector<bool> vanishes;
    bool all_zero = true;
};

EvalReport eval_relations(const AlgebraSpec& spec, const std::vector<AlgebraElt>& assignment, const Presentation& pres);

// Degree-by-degree model of the free algebra modulo homogeneous relations. Degree e is spanned by
// words s x with s a standard word of degree e - |x|; the relations enter through s' rho.
class QuotientBuilder {
  public:
    explicit QuotientBuilder(std::vector<int> degrees);
    // Relation of degree e; e must exceed the finalized range.
    void add_relation(const FreePoly& rho);
    // Finalizes the next degree and returns its dimension.
    long step();
    int finalized() const { return static_cast<int>(std_.size()) - 1; }
    long dim(int e) const { return static_cast<long>(std_.at(e).size()); }
    const std::vector<FreeWord>& standard_words(int e) const { return std_.at(e); }
    // Coordinates of a word of finalized degree in the standard words of that degree.
    SparseVec normal_form(const FreeWord& w) const;

  private:
    SparseVec append(const SparseVec& v, int e, int x) const;  // columns at degree e + |x|
    SparseVec reduce_at(SparseVec cols, int e) const;  // columns -> standard coordinates
    std::vector<int> deg_;
    std::vector<std::vector<FreeWord>> std_;  // standard words per degree
    std::vector<std::map<long, long>> col_to_std_;
    std::vector<std::vector<long>> offset_;  // offset_[e][x]: first column of block x
    std::vector<Echelon> ech_;
    std::map<int, std::vector<FreePoly>> pending_;
};

std::vector<long> truncated_quotient_dims(const Presentation& pres, long N);

struct PresentationReport {
    EvalReport eval;
    std::vector<long> quotient_dims, molien_dims;
    int first_failure = -1;
    bool success = false;
};

// Generators are mapped to generator_set(spec, G) in order.
PresentationReport verify_presentation(const AlgebraSpec& spec, const GroupSpec& G, const Presentation& pres, long N);
PresentationReport verify_presentation(const AlgebraSpec& spec, const GroupSpec& G, const Presentation& pres,
                                       const std::vector<AlgebraElt>& assignment, long N);

// Minimal relations among the given generators through degree N: at each degree, the kernel of
// evaluation on the standard words of the quotient by the relations found so far.
Presentation discover_relations(const AlgebraSpec& spec, const std::vector<AlgebraElt>& gens, const std::vector<std::string>& names, long N);

}  // namespace ncinv

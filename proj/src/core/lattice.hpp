#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "types.hpp"

namespace cubicfolds {

// Nondegenerate integral symmetric bilinear form of rank <= 24.  All
// arithmetic downstream of this type is exact; no floating point anywhere.
class IntLattice {
public:
    static IntLattice from_gram(std::vector<std::vector<BigInt>> gram);
    static IntLattice from_text(std::string_view text);

    // Standard positive definite root lattice of an ADE type: 2 on the
    // diagonal, -1 for each diagram edge.
    static IntLattice of_type(const SingularityType& t);
    static IntLattice of_config(const Configuration& c);  // direct sum over parts
    static IntLattice hyperbolic_u();                     // [[0,1],[1,0]]
    static IntLattice o16_milnor();                       // D4^3 + U^2, signature (14,2)

    IntLattice direct_sum(const IntLattice& o) const;

    int rank() const { return static_cast<int>(gram_.size()); }
    const BigInt& at(int i, int j) const { return gram_[i][j]; }
    const std::vector<std::vector<BigInt>>& gram() const { return gram_; }
    const BigInt& determinant() const { return det_; }
    bool is_even() const;
    bool is_positive_definite() const;

    // Exact signature (n_plus, n_minus) via rational congruent diagonalization.
    std::pair<int, int> signature() const;

    std::string to_text() const;  // header "rank <r>", then rows

private:
    explicit IntLattice(std::vector<std::vector<BigInt>> gram, BigInt det)
        : gram_(std::move(gram)), det_(std::move(det)) {}
    std::vector<std::vector<BigInt>> gram_;
    BigInt det_;
};

// Exact determinant of a square integer matrix (fraction-free elimination).
BigInt integer_determinant(const std::vector<std::vector<BigInt>>& m);

// U * A * V = D with U, V unimodular and D = diag(d_1, ..., d_r),
// d_i >= 0 and d_1 | d_2 | ... | d_r.
struct SmithResult {
    std::vector<std::vector<BigInt>> u;
    std::vector<std::vector<BigInt>> v;
    std::vector<BigInt> diagonal;
};
SmithResult smith_normal_form(const std::vector<std::vector<BigInt>>& a);

// Finite abelian group as a divisibility chain of invariant factors >= 2.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<long long> factors);
    const std::vector<long long>& invariant_factors() const { return factors_; }
    int generator_count() const { return static_cast<int>(factors_.size()); }
    BigInt order() const;
    bool trivial() const { return factors_.empty(); }
    std::string to_string() const;  // "2,2,4" style; "1" when trivial

private:
    std::vector<long long> factors_;
};

// A_S = S*/S (invariant factors of the Smith normal form of the Gram matrix,
// unit factors dropped).
FiniteAbelianGroup discriminant_group(const IntLattice& l);

// Element of a discriminant group: one coefficient per invariant factor.
using GroupElement = std::vector<long long>;

// Discriminant group of an even lattice with its induced quadratic form
// q: A_S -> Q/2Z and bilinear form b: A_S x A_S -> Q/Z, evaluated through
// exact rational lifts of the generators into S*.
class DiscriminantForm {
public:
    explicit DiscriminantForm(const IntLattice& l);  // throws DomainError if odd

    const FiniteAbelianGroup& group() const { return group_; }
    BigRat q_of(std::span<const long long> coeffs) const;  // in [0,2)
    BigRat b_of(std::span<const long long> x, std::span<const long long> y) const;  // in [0,1)
    BigRat q_generator(int i) const;
    BigRat b_generators(int i, int j) const;

    std::vector<GroupElement> all_elements() const;  // throws LimitError past 2^12
    GroupElement reduce(GroupElement x) const;       // coeffs into [0, d_i)
    GroupElement add(const GroupElement& x, const GroupElement& y) const;

    // Exact lift of the element into S* in S-basis coordinates.
    std::vector<BigRat> lift(std::span<const long long> coeffs) const;

private:
    FiniteAbelianGroup group_;
    std::vector<std::vector<BigRat>> lifts_;         // one per generator
    std::vector<std::vector<BigInt>> gram_;
};

// All subgroups H of the discriminant group with q|_H = 0, the trivial
// subgroup included.  Each subgroup is returned as its sorted element list.
std::vector<std::vector<GroupElement>> isotropic_subgroups(const DiscriminantForm& d);

// One even overlattice S c L per isotropic subgroup H of A_S, with
// det(L) = det(S) / |H|^2.
struct Overlattice {
    std::vector<GroupElement> subgroup;
    IntLattice lattice;
};
std::vector<Overlattice> even_overlattices(const IntLattice& l);

// True when no embedding of s into host exists for rank/signature reasons:
// rank(s) exceeds n_plus(host) or rank(host).  s must be positive definite.
bool rank_signature_obstruction(const IntLattice& s, const IntLattice& host);

// True when s admits no primitive embedding into host because the subgroup of
// A_host of order coprime to |A_s| needs more generators than
// rank(host) - rank(s).  Sufficient, not necessary.
bool complement_generator_obstruction(const IntLattice& s, const IntLattice& host);

// Obstruction report for the CLI: JSON with both obstructions and witnesses.
std::string obstruction_json(const IntLattice& s, const IntLattice& host);

}  // namespace cubicfolds

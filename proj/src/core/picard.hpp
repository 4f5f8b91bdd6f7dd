#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "types.hpp"

namespace cubicfolds {

// Divisor class a*s + b*f on the Hirzebruch surface F2, where s is the
// section with s^2 = -2 and f a fibre (s.f = 1, f^2 = 0).  The canonical
// class is -2s - 4f.  Negative coefficients are allowed for arithmetic.
struct DivisorClass {
    long long a = 0;
    long long b = 0;
    bool operator==(const DivisorClass&) const = default;
    auto operator<=>(const DivisorClass&) const = default;
    DivisorClass operator+(const DivisorClass& o) const { return {a + o.a, b + o.b}; }
    std::string to_string() const;  // "a*s+b*f"
};

long long intersect(const DivisorClass& d1, const DivisorClass& d2);

// Arithmetic genus (1/2) d.(d + K) + 1 as an exact rational; a non-integer
// value flags a class that is not a curve class.
BigRat genus(const DivisorClass& d);

// Integer solutions a of genus(a*s + b*f) = g for fixed b.
std::set<long long> solve_genus(long long b_fixed, long long g);

// Standard irreducibility criterion on F2: s, f, and a >= 1 with b >= 2a.
bool is_irreducible_class(const DivisorClass& d);

// All multisets of exactly `parts` irreducible classes of positive H-degree
// (H = s + 2f) summing to total.  parts <= 6.
std::vector<std::vector<DivisorClass>> enumerate_splittings(const DivisorClass& total,
                                                            int parts);

// JSON report of the splittings with per-part genus and the pairwise
// intersection matrix of each splitting.
std::string splittings_json(const DivisorClass& total, int parts);

// Lower bound for the arithmetic genus of a curve whose singularities form
// the given configuration of A types: sum of multiplicity(A_i) * ceil(i/2).
long long genus_lower_bound(const Configuration& c);

// Singularity type on the blow-up of an A_n point: A_{n-2}, or smooth
// (nullopt) when n <= 2.
std::optional<int> an_blowup(int n);

// Whether a double cover P1 -> P1 with this many branch points contradicts
// Riemann-Hurwitz (chi bound 2 <= 4 - branch_points fails).
bool riemann_hurwitz_contradiction(int branch_points);

}  // namespace cubicfolds

#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubicfolds {

enum class SingKind { A, D, E, T, Q10, S11, U12, O16 };

// One singularity class: A_n, D_n, E_n, T_pqr (parabolic or hyperbolic),
// one of the exceptional unimodal types Q10/S11/U12, or O16.  Immutable.
class SingularityType {
public:
    static SingularityType A(int n);             // n >= 1
    static SingularityType D(int n);             // n >= 4
    static SingularityType E(int n);             // n in {6,7,8}
    static SingularityType T(int p, int q, int r);  // sorted; 1/p+1/q+1/r <= 1
    static SingularityType Q10();
    static SingularityType S11();
    static SingularityType U12();
    static SingularityType O16();

    SingKind kind() const { return kind_; }
    bool is_ade() const;
    int ade_index() const;               // for A/D/E kinds
    std::array<int, 3> t_indices() const;  // for T kind, ascending

    int milnor() const;

    // Tjurina number where it is determined: equal to the Milnor number for
    // ADE types, absent otherwise.  For U12 the value can be 11 or 12
    // depending on moduli; no computation here depends on it.
    std::optional<int> tjurina() const;

    // Canonical display token: "A5", "D4", "E8", "T266", and the aliases
    // "P8", "X9", "J10" for T333/T244/T236.
    std::string name() const;

    // Parses a single type token (accepts both "P8" and "T333" spellings).
    static SingularityType parse(std::string_view token);

    bool operator==(const SingularityType&) const = default;
    // Canonical configuration order: descending Milnor number, ties broken by
    // descending display name.
    std::strong_ordering operator<=>(const SingularityType& o) const;

private:
    SingularityType(SingKind k, int a, int b, int c) : kind_(k), a_(a), b_(b), c_(c) {}
    SingKind kind_;
    int a_, b_, c_;
};

// A nonempty multiset of singularity types in canonical order.  Immutable.
class Configuration {
public:
    explicit Configuration(std::vector<SingularityType> parts);

    // Notation grammar: '+'-separated terms, each an optional decimal
    // multiplicity followed by a type token, e.g. "2A3+A2+2A1".
    static Configuration parse(std::string_view text);
    std::string format() const;

    int mu() const { return mu_; }
    int count() const { return static_cast<int>(parts_.size()); }
    const std::vector<SingularityType>& parts() const { return parts_; }
    bool all_ade() const;
    bool all_a() const;

    Configuration merged(const Configuration& o) const;  // multiset union

    bool operator==(const Configuration&) const = default;
    std::strong_ordering operator<=>(const Configuration&) const = default;

private:
    std::vector<SingularityType> parts_;
    int mu_ = 0;
};

}  // namespace cubicfolds

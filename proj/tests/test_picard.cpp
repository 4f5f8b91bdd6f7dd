#include "core/picard.hpp"

#include <random>
#include <set>

#include "core/errors.hpp"
#include "doctest.h"

using namespace cubicfolds;

namespace {
constexpr DivisorClass kSigma{1, 0};
constexpr DivisorClass kFibre{0, 1};
}

TEST_CASE("intersection numbers") {
    CHECK(intersect(kSigma, kSigma) == -2);
    CHECK(intersect(kSigma, kFibre) == 1);
    CHECK(intersect(kFibre, kFibre) == 0);

    DivisorClass h{1, 2};
    CHECK(intersect(h, h) == 2);
    CHECK(intersect(h, DivisorClass{2, 6}) == 6);
    CHECK(intersect(DivisorClass{1, 3}, DivisorClass{1, 2}) == 3);

    // The Gram matrix of (s, f) is unimodular.
    long long det = intersect(kSigma, kSigma) * intersect(kFibre, kFibre) -
                    intersect(kSigma, kFibre) * intersect(kSigma, kFibre);
    CHECK(det == -1);
}

TEST_CASE("genus formula") {
    CHECK(genus(DivisorClass{2, 6}) == BigRat(3));
    CHECK(genus(DivisorClass{3, 6}) == BigRat(4));
    CHECK(genus(DivisorClass{1, 3}) == BigRat(0));
    CHECK(genus(kSigma) == BigRat(0));
    CHECK(genus(kFibre) == BigRat(0));
    // Non-curve classes can have non-integral genus; the value stays exact.
    CHECK(genus(DivisorClass{0, 3}).to_string() == "-2");
}

TEST_CASE("solve_genus") {
    CHECK(solve_genus(6, 3) == std::set<long long>({2, 4}));
    CHECK(solve_genus(6, 4) == std::set<long long>({3}));
    CHECK(solve_genus(6, -1).empty());
    CHECK(solve_genus(1000000, 0).size() == 2);  // large inputs stay exact
    CHECK_THROWS_AS(solve_genus(1LL << 60, 0), DomainError);
}

TEST_CASE("coefficient bounds guard exactness") {
    CHECK_THROWS_AS(intersect(DivisorClass{1LL << 40, 0}, DivisorClass{1, 0}), DomainError);
    CHECK_THROWS_AS(genus(DivisorClass{0, 1LL << 40}), DomainError);
}

TEST_CASE("irreducibility criterion") {
    CHECK(is_irreducible_class(kSigma));
    CHECK(is_irreducible_class(kFibre));
    CHECK(!is_irreducible_class(DivisorClass{0, 2}));  // 2f splits
    CHECK(is_irreducible_class(DivisorClass{1, 4}));
    CHECK(is_irreducible_class(DivisorClass{2, 5}));
    CHECK(!is_irreducible_class(DivisorClass{2, 3}));
    CHECK(!is_irreducible_class(DivisorClass{-1, 2}));
}

TEST_CASE("splitting enumeration matches the case analyses") {
    auto two_parts = enumerate_splittings(DivisorClass{2, 6}, 2);
    std::set<std::vector<DivisorClass>> got(two_parts.begin(), two_parts.end());
    std::set<std::vector<DivisorClass>> want = {
        {{0, 1}, {2, 5}},   // f + (2s+5f)
        {{1, 2}, {1, 4}},   // (s+2f) + (s+4f)
        {{1, 3}, {1, 3}}};  // (s+3f) + (s+3f)
    CHECK(got == want);

    auto a2_two = enumerate_splittings(DivisorClass{3, 6}, 2);
    REQUIRE(a2_two.size() == 1);
    CHECK(a2_two[0] == std::vector<DivisorClass>({{1, 2}, {2, 4}}));

    auto a2_three = enumerate_splittings(DivisorClass{3, 6}, 3);
    REQUIRE(a2_three.size() == 1);
    CHECK(a2_three[0] == std::vector<DivisorClass>({{1, 2}, {1, 2}, {1, 2}}));

    CHECK_THROWS_AS(enumerate_splittings(DivisorClass{2, 6}, 7), LimitError);
    CHECK_THROWS_AS(enumerate_splittings(DivisorClass{-1, 6}, 2), DomainError);
}

TEST_CASE("splitting enumeration is complete against a brute-force oracle") {
    // Oracle: all ordered tuples over the full coefficient box, filtered and
    // canonicalized, independent of the candidate-pruning path.
    DivisorClass total{2, 6};
    std::set<std::vector<DivisorClass>> oracle;
    for (long long a1 = -1; a1 <= 3; ++a1)
        for (long long b1 = -1; b1 <= 7; ++b1)
            for (long long a2 = -1; a2 <= 3; ++a2)
                for (long long b2 = -1; b2 <= 7; ++b2) {
                    DivisorClass d1{a1, b1}, d2{a2, b2};
                    if (d1 + d2 != total) continue;
                    if (!is_irreducible_class(d1) || !is_irreducible_class(d2)) continue;
                    if (intersect(d1, DivisorClass{1, 2}) < 1) continue;
                    if (intersect(d2, DivisorClass{1, 2}) < 1) continue;
                    std::vector<DivisorClass> parts{d1, d2};
                    std::sort(parts.begin(), parts.end());
                    oracle.insert(parts);
                }
    auto got = enumerate_splittings(total, 2);
    CHECK(std::set<std::vector<DivisorClass>>(got.begin(), got.end()) == oracle);
}

TEST_CASE("genus lower bound for A-type configurations") {
    CHECK(genus_lower_bound(Configuration::parse("A10")) == 5);
    CHECK(genus_lower_bound(Configuration::parse("3A2+A1")) == 4);
    CHECK(genus_lower_bound(Configuration::parse("A1")) == 1);
    CHECK(genus_lower_bound(Configuration::parse("A7")) == 4);
    CHECK_THROWS_AS(genus_lower_bound(Configuration::parse("D4")), DomainError);
}

TEST_CASE("A_n blow-up bookkeeping") {
    CHECK(an_blowup(9) == 7);
    CHECK(!an_blowup(2).has_value());
    CHECK(!an_blowup(1).has_value());
    CHECK(an_blowup(3) == 1);
    CHECK_THROWS_AS(an_blowup(0), DomainError);
}

TEST_CASE("Riemann-Hurwitz contradiction for double covers of P1") {
    CHECK(riemann_hurwitz_contradiction(3));
    CHECK(!riemann_hurwitz_contradiction(2));
    CHECK(!riemann_hurwitz_contradiction(0));
    CHECK(riemann_hurwitz_contradiction(5));
    CHECK_THROWS_AS(riemann_hurwitz_contradiction(-1), DomainError);
}

TEST_CASE("genus additivity identity on random class pairs") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> coeff(-12, 12);
    for (int i = 0; i < 1000; ++i) {
        DivisorClass d1{coeff(rng), coeff(rng)}, d2{coeff(rng), coeff(rng)};
        BigRat lhs = genus(d1 + d2);
        BigRat rhs = genus(d1) + genus(d2) + BigRat(intersect(d1, d2)) - BigRat(1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("splittings JSON shape") {
    std::string doc = splittings_json(DivisorClass{2, 6}, 2);
    CHECK(doc.find("\"schema\": \"v1\"") != std::string::npos);
    CHECK(doc.find("\"0*s+1*f\"") != std::string::npos);
    CHECK(doc.find("\"2*s+5*f\"") != std::string::npos);
    CHECK(doc.find("\"intersections\"") != std::string::npos);
}

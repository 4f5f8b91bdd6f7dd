#include "picard.hpp"

#include <algorithm>

#include "errors.hpp"
#include "json.hpp"

namespace cubicfolds {

namespace {

constexpr DivisorClass kHyperplane{1, 2};  // H = s + 2f
constexpr long long kCoeffBound = 1000000000;  // keeps all products in int64

void check_coeffs(const DivisorClass& d) {
    if (d.a > kCoeffBound || d.a < -kCoeffBound || d.b > kCoeffBound || d.b < -kCoeffBound)
        throw DomainError("divisor coefficients limited to |a|,|b| <= 10^9");
}

// Largest r with r*r <= n (integer Newton iteration, no floating point).
long long isqrt(long long n) {
    if (n < 2) return n;
    long long x = n;
    long long y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

}  // namespace

std::string DivisorClass::to_string() const {
    return std::to_string(a) + "*s+" + std::to_string(b) + "*f";
}

long long intersect(const DivisorClass& d1, const DivisorClass& d2) {
    check_coeffs(d1);
    check_coeffs(d2);
    return -2 * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b;
}

BigRat genus(const DivisorClass& d) {
    DivisorClass canonical{-2, -4};
    BigRat half(BigInt(1), BigInt(2));
    return half * BigRat(BigInt(intersect(d, d + canonical))) + BigRat(1);
}

std::set<long long> solve_genus(long long b_fixed, long long g) {
    if (b_fixed > kCoeffBound || b_fixed < -kCoeffBound || g > kCoeffBound || g < -kCoeffBound)
        throw DomainError("solve_genus arguments limited to 10^9");
    // genus(a*s + b*f) = -a^2 + a*b - b + 1, a quadratic in a: solve exactly
    // via the integer square root of the discriminant.
    // a^2 - b*a + (b - 1 + g) = 0, disc = b^2 - 4(b - 1 + g).
    long long disc = b_fixed * b_fixed - 4 * (b_fixed - 1 + g);
    std::set<long long> out;
    if (disc < 0) return out;
    long long root = isqrt(disc);
    if (root * root != disc) return out;
    if ((b_fixed + root) % 2 == 0) {
        out.insert((b_fixed + root) / 2);
        out.insert((b_fixed - root) / 2);
    }
    return out;
}

bool is_irreducible_class(const DivisorClass& d) {
    if (d == DivisorClass{1, 0} || d == DivisorClass{0, 1}) return true;  // s, f
    return d.a >= 1 && d.b >= 2 * d.a;
}

std::vector<std::vector<DivisorClass>> enumerate_splittings(const DivisorClass& total,
                                                            int parts) {
    if (total.a < 0 || total.b < 0)
        throw DomainError("splitting target must have nonnegative coefficients");
    if (parts < 1 || parts > 6) throw LimitError("splittings support 1..6 parts");

    // Candidate parts: irreducible classes with positive H-degree (degree of
    // (a,b) against H = s+2f is b) and coefficients within the total.
    std::vector<DivisorClass> candidates;
    for (long long a = 0; a <= total.a; ++a)
        for (long long b = 1; b <= total.b; ++b) {
            DivisorClass d{a, b};
            if (is_irreducible_class(d) && intersect(d, kHyperplane) >= 1)
                candidates.push_back(d);
        }
    std::sort(candidates.begin(), candidates.end());

    std::vector<std::vector<DivisorClass>> out;
    std::vector<DivisorClass> cur;
    auto rec = [&](auto&& self, size_t from, DivisorClass rest, int left) -> void {
        if (left == 0) {
            if (rest == DivisorClass{0, 0}) out.push_back(cur);
            return;
        }
        for (size_t i = from; i < candidates.size(); ++i) {
            const DivisorClass& d = candidates[i];
            if (d.a > rest.a || d.b > rest.b) continue;
            cur.push_back(d);
            self(self, i, DivisorClass{rest.a - d.a, rest.b - d.b}, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, total, parts);
    return out;
}

std::string splittings_json(const DivisorClass& total, int parts) {
    nlohmann::json doc;
    doc["schema"] = "v1";
    doc["total"] = total.to_string();
    doc["parts"] = parts;
    doc["splittings"] = nlohmann::json::array();
    for (const auto& split : enumerate_splittings(total, parts)) {
        nlohmann::json item;
        item["classes"] = nlohmann::json::array();
        item["genus"] = nlohmann::json::array();
        for (const auto& d : split) {
            item["classes"].push_back(d.to_string());
            item["genus"].push_back(genus(d).to_string());
        }
        nlohmann::json mat = nlohmann::json::array();
        for (const auto& d1 : split) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& d2 : split) row.push_back(intersect(d1, d2));
            mat.push_back(row);
        }
        item["intersections"] = mat;
        doc["splittings"].push_back(item);
    }
    return doc.dump(2);
}

long long genus_lower_bound(const Configuration& c) {
    if (!c.all_a())
        throw DomainError("genus_lower_bound is defined for A-type configurations only");
    long long sum = 0;
    for (const auto& part : c.parts()) {
        long long i = part.ade_index();
        sum += (i + 1) / 2;  // ceil(i/2)
    }
    return sum;
}

std::optional<int> an_blowup(int n) {
    if (n < 1) throw DomainError("an_blowup requires n >= 1");
    if (n <= 2) return std::nullopt;
    return n - 2;
}

bool riemann_hurwitz_contradiction(int branch_points) {
    if (branch_points < 0) throw DomainError("branch point count must be nonnegative");
    // chi(source) <= 2*chi(P1) - branch_points for a branched double cover;
    // with a rational source this reads 2 <= 4 - branch_points.
    return 2 > 4 - branch_points;
}

}  // namespace cubicfolds

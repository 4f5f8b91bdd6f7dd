#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "catalog.hpp"
#include "deformation.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "json.hpp"
#include "lattice.hpp"
#include "picard.hpp"

namespace cubicfolds {

namespace {

struct CheckContext {
    std::ostringstream expected;
    std::ostringstream actual;
    bool passed = true;
    std::set<int> touched_rows;

    void require(bool ok, const std::string& what_expected, const std::string& what_actual) {
        if (!expected.str().empty()) {
            expected << "; ";
            actual << "; ";
        }
        expected << what_expected;
        actual << what_actual;
        if (!ok) passed = false;
    }
    void require_eq_count(const std::string& label, size_t want, size_t got) {
        require(want == got, label + "=" + std::to_string(want),
                label + "=" + std::to_string(got));
    }
    void touch(int row) { touched_rows.insert(row); }
    void touch_config(const Configuration& c) {
        for (const auto& row : catalog::golden_rows())
            if (row.config == c) touched_rows.insert(row.index);
    }
};

using CheckFn = std::function<void(CheckContext&)>;

std::set<Configuration> golden_ade_configs(CheckContext* ctx = nullptr) {
    std::set<Configuration> out;
    for (const auto& row : catalog::golden_rows())
        if (row.config.all_ade()) {
            out.insert(row.config);
            if (ctx) ctx->touch(row.index);
        }
    return out;
}

std::set<Configuration> table_c_configs(CheckContext* ctx = nullptr) {
    std::set<Configuration> out;
    for (const auto& row : catalog::golden_rows())
        if (row.table == 'C') {
            out.insert(row.config);
            if (ctx) ctx->touch(row.index);
        }
    return out;
}

std::string describe_diff(const std::set<Configuration>& want,
                          const std::set<Configuration>& got) {
    std::vector<std::string> missing, extra;
    for (const auto& c : want)
        if (!got.count(c)) missing.push_back(c.format());
    for (const auto& c : got)
        if (!want.count(c)) extra.push_back(c.format());
    if (missing.empty() && extra.empty()) return "equal";
    std::string out = "differs";
    for (size_t i = 0; i < missing.size() && i < 4; ++i) out += " -" + missing[i];
    for (size_t i = 0; i < extra.size() && i < 4; ++i) out += " +" + extra[i];
    return out;
}

// ---------------------------------------------------------------- checks

void check_mu_k_columns(CheckContext& ctx) {
    int good = 0;
    for (const auto& row : catalog::golden_rows()) {
        ctx.touch(row.index);
        if (row.config.mu() == row.mu && row.config.count() == row.k) ++good;
    }
    ctx.require(good == 204, "204/204 rows with consistent mu,k",
                std::to_string(good) + "/204 rows with consistent mu,k");
}

void check_theorem_ii(CheckContext& ctx) {
    auto enumerated = enumerate_induced_ade(catalog::gamma());
    std::set<Configuration> with_extras = enumerated;
    with_extras.insert(Configuration::parse("10A1"));
    with_extras.insert(Configuration::parse("5A2"));
    auto want = golden_ade_configs(&ctx);

    ctx.require_eq_count("enumerated", 181, enumerated.size());
    ctx.require(with_extras == want, "enumerated+{10A1,5A2} equals the 183 ADE rows",
                describe_diff(want, with_extras));
    ctx.require(!enumerated.count(Configuration::parse("5A2")), "5A2 not realized in Gamma",
                enumerated.count(Configuration::parse("5A2")) ? "5A2 realized" : "5A2 not realized in Gamma");
    ctx.require(!enumerated.count(Configuration::parse("10A1")), "10A1 not realized in Gamma",
                enumerated.count(Configuration::parse("10A1")) ? "10A1 realized" : "10A1 not realized in Gamma");
    ctx.require(enumerated.count(Configuration::parse("4A2+A1")) > 0, "4A2+A1 realized",
                enumerated.count(Configuration::parse("4A2+A1")) ? "4A2+A1 realized" : "4A2+A1 missing");
    ctx.require(enumerated.count(Configuration::parse("9A1")) > 0, "9A1 realized",
                enumerated.count(Configuration::parse("9A1")) ? "9A1 realized" : "9A1 missing");
}

void check_table_c_closure(CheckContext& ctx) {
    std::set<Configuration> seeds(catalog::maximal_an().begin(), catalog::maximal_an().end());
    auto closed = closure(seeds);
    auto want = table_c_configs(&ctx);
    ctx.require_eq_count("closure size", 109, closed.size());
    ctx.require(closed == want, "closure(maximal A_n) equals the 109 Table C rows",
                describe_diff(want, closed));
    auto maxima = maximal_elements(want);
    ctx.require(maxima == seeds, "maximal elements of Table C are the 8 constellations",
                describe_diff(seeds, maxima));
}

void check_maximal_ade(CheckContext& ctx) {
    auto rows = golden_ade_configs(&ctx);
    std::set<Configuration> want(catalog::maximal_ade().begin(), catalog::maximal_ade().end());
    auto maxima = maximal_elements(rows);
    ctx.require_eq_count("maximal count", 12, maxima.size());
    ctx.require(maxima == want, "maximal elements of the 183 ADE rows are the 12 listed",
                describe_diff(want, maxima));
}

void check_table5(CheckContext& ctx) {
    const auto& gamma = catalog::gamma();
    for (const auto& row : catalog::table5()) {
        ctx.touch_config(row.config);
        std::vector<int> keep;
        for (int v = 0; v < gamma.vertex_count(); ++v) {
            int label = v + 1;
            if (std::find(row.remove.begin(), row.remove.end(), label) == row.remove.end())
                keep.push_back(v);
        }
        auto got = classify_ade(gamma.induced(keep));
        std::string got_text = got ? got->format() : "not-ADE";
        ctx.require(got && *got == row.config, row.config.format(), got_text);
    }
}

void check_surfaces(CheckContext& ctx) {
    auto enumerated = enumerate_induced_ade(catalog::e6_tilde());
    std::set<Configuration> want_max = {Configuration::parse("E6"), Configuration::parse("A5+A1"),
                                        Configuration::parse("3A2")};
    auto maxima = maximal_elements(enumerated);
    ctx.require(maxima == want_max, "maximal surface combinations {E6, A5+A1, 3A2}",
                describe_diff(want_max, maxima));
    size_t with_a1 = 0;
    for (const auto& c : enumerated) {
        if (!c.all_a()) continue;
        bool has_a1 = std::any_of(c.parts().begin(), c.parts().end(), [](const SingularityType& t) {
            return t == SingularityType::A(1);
        });
        if (has_a1) ++with_a1;
    }
    ctx.require_eq_count("pure A_n constellations containing A1", 11, with_a1);
    ctx.require(enumerated.count(Configuration::parse("A5+A1")) > 0, "A5+A1 present",
                enumerated.count(Configuration::parse("A5+A1")) ? "A5+A1 present" : "A5+A1 missing");
    ctx.require(enumerated.count(Configuration::parse("E6")) > 0, "E6 present",
                enumerated.count(Configuration::parse("E6")) ? "E6 present" : "E6 missing");
    ctx.require(!enumerated.count(Configuration::parse("E6+A1")), "E6+A1 absent",
                enumerated.count(Configuration::parse("E6+A1")) ? "E6+A1 present" : "E6+A1 absent");
}

// Every ADE configuration with the given total Milnor number, over types with
// index at most max_index.
void ade_configs_with_mu(int mu, std::vector<Configuration>& out) {
    std::vector<SingularityType> types;
    for (int n = 1; n <= mu; ++n) types.push_back(SingularityType::A(n));
    for (int n = 4; n <= mu; ++n) types.push_back(SingularityType::D(n));
    for (int n = 6; n <= 8 && n <= mu; ++n) types.push_back(SingularityType::E(n));
    std::sort(types.begin(), types.end());  // descending Milnor order
    std::vector<SingularityType> cur;
    std::function<void(int, size_t)> rec = [&](int rest, size_t from) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (size_t i = from; i < types.size(); ++i) {
            if (types[i].milnor() > rest) continue;
            cur.push_back(types[i]);
            rec(rest - types[i].milnor(), i);
            cur.pop_back();
        }
    };
    rec(mu, 0);
}

void check_lattice_facts(CheckContext& ctx) {
    IntLattice t = IntLattice::o16_milnor();
    auto [plus, minus] = t.signature();
    ctx.require(plus == 14 && minus == 2, "signature(T)=(14,2)",
                "signature(T)=(" + std::to_string(plus) + "," + std::to_string(minus) + ")");
    ctx.require(discriminant_group(t).to_string() == "2,2,2,2,2,2", "A_T=2,2,2,2,2,2",
                "A_T=" + discriminant_group(t).to_string());

    // No ADE configuration with total Milnor number 15 or 16 embeds.
    std::vector<Configuration> big;
    ade_configs_with_mu(15, big);
    ade_configs_with_mu(16, big);
    size_t fired = 0;
    for (const auto& c : big)
        if (rank_signature_obstruction(IntLattice::of_config(c), t)) ++fired;
    ctx.require(fired == big.size(),
                "rank obstruction fires for all " + std::to_string(big.size()) +
                    " ADE configurations with mu in {15,16}",
                "fired for " + std::to_string(fired) + "/" + std::to_string(big.size()));

    IntLattice a11 = IntLattice::of_config(Configuration::parse("A11"));
    ctx.touch_config(Configuration::parse("A11"));
    ctx.require(!rank_signature_obstruction(a11, t), "A11 not rank-obstructed",
                rank_signature_obstruction(a11, t) ? "A11 obstructed" : "A11 not rank-obstructed");
    IntLattice a1x14 = IntLattice::of_config(Configuration::parse("14A1"));
    ctx.require(!rank_signature_obstruction(a1x14, t), "14A1 not rank-obstructed",
                rank_signature_obstruction(a1x14, t) ? "14A1 obstructed" : "14A1 not rank-obstructed");

    IntLattice a12 = IntLattice::of_type(SingularityType::A(12));
    ctx.require(discriminant_group(a12).to_string() == "13", "A_{A12}=13",
                "A_{A12}=" + discriminant_group(a12).to_string());
    bool a12_fires = complement_generator_obstruction(a12, t);
    ctx.require(a12_fires, "complement obstruction fires for (A12, T)",
                a12_fires ? "fires" : "does not fire");
    IntLattice d4a1 = IntLattice::of_config(Configuration::parse("3D4+A1"));
    ctx.touch_config(Configuration::parse("3D4"));
    bool d4a1_fires = complement_generator_obstruction(d4a1, t);
    ctx.require(!d4a1_fires, "complement obstruction silent for (3D4+A1, T)",
                d4a1_fires ? "fires" : "silent");
}

void check_picard_section4(CheckContext& ctx) {
    auto genus_is = [&](long long a, long long b, long long want) {
        BigRat g = genus(DivisorClass{a, b});
        ctx.require(g == BigRat(want),
                    "genus(" + DivisorClass{a, b}.to_string() + ")=" + std::to_string(want),
                    "genus=" + g.to_string());
    };
    genus_is(2, 6, 3);
    genus_is(3, 6, 4);
    genus_is(1, 3, 0);

    auto roots = solve_genus(6, 3);
    ctx.require(roots == std::set<long long>({2, 4}), "solve_genus(6,3)={2,4}",
                "solve_genus(6,3) has " + std::to_string(roots.size()) + " roots");

    auto splits = enumerate_splittings(DivisorClass{2, 6}, 2);
    std::set<std::vector<DivisorClass>> got(splits.begin(), splits.end());
    std::set<std::vector<DivisorClass>> want = {
        {{0, 1}, {2, 5}}, {{1, 2}, {1, 4}}, {{1, 3}, {1, 3}}};
    ctx.require(got == want, "two-part splittings of 2s+6f are the three cited multisets",
                got == want ? "equal" : "differs (" + std::to_string(got.size()) + " found)");

    ctx.require(riemann_hurwitz_contradiction(3), "RH contradiction at 3 branch points",
                riemann_hurwitz_contradiction(3) ? "contradiction" : "no contradiction");
    ctx.require(!riemann_hurwitz_contradiction(2), "no RH contradiction at 2",
                riemann_hurwitz_contradiction(2) ? "contradiction" : "no contradiction");
}

void check_dpw_consistency(CheckContext& ctx) {
    std::set<Configuration> golden;
    for (const auto& row : catalog::golden_rows()) golden.insert(row.config);
    int rows = 0, mu_ok = 0, present = 0;
    for (const auto& row : catalog::dpw_tables()) {
        ++rows;
        if (row.config.mu() == row.mu) ++mu_ok;
        if (golden.count(row.config)) {
            ++present;
            ctx.touch_config(row.config);
        }
    }
    ctx.require(mu_ok == rows, "all " + std::to_string(rows) + " rows have consistent mu",
                std::to_string(mu_ok) + "/" + std::to_string(rows) + " consistent");
    ctx.require(present == rows, "all rows appear among the 204 golden configurations",
                std::to_string(present) + "/" + std::to_string(rows) + " present");
}

// ---------------------------------------------------------------- properties

Configuration random_ade_config(std::mt19937& rng, int max_mu) {
    std::vector<SingularityType> parts;
    int budget = max_mu;
    int target = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < target && budget > 0; ++i) {
        int kind = static_cast<int>(rng() % 4);
        if (kind <= 1) {
            parts.push_back(SingularityType::A(1 + static_cast<int>(rng() % std::min(9, budget))));
        } else if (kind == 2 && budget >= 4) {
            parts.push_back(SingularityType::D(4 + static_cast<int>(rng() % std::min(5, budget - 3))));
        } else if (budget >= 6) {
            parts.push_back(SingularityType::E(6 + static_cast<int>(rng() % std::min(3, budget - 5))));
        } else {
            parts.push_back(SingularityType::A(1 + static_cast<int>(rng() % budget)));
        }
        budget -= parts.back().milnor();
    }
    if (parts.empty()) parts.push_back(SingularityType::A(1));
    return Configuration(std::move(parts));
}

void check_property_suites(CheckContext& ctx) {
    std::mt19937 rng(20240315);

    // Partial-order laws for deforms_to on random ADE configurations.
    int order_failures = 0;
    std::vector<Configuration> pool;
    for (int i = 0; i < 160; ++i) pool.push_back(random_ade_config(rng, 11));
    auto pick = [&]() -> const Configuration& { return pool[rng() % pool.size()]; };
    for (int i = 0; i < 1000; ++i) {
        const Configuration& a = pick();
        const Configuration& b = pick();
        if (!deforms_to(a, a) || !deforms_to(b, b)) ++order_failures;      // reflexive
        bool ab = deforms_to(a, b), ba = deforms_to(b, a);
        if (ab && ba && !(a == b)) ++order_failures;                        // antisymmetric
        if (ab && b.mu() > a.mu()) ++order_failures;                        // mu monotone
        if (ab && a != b && b.mu() >= a.mu()) ++order_failures;             // strict drop
        const Configuration& c = pick();
        if (ab && deforms_to(b, c) && !deforms_to(a, c)) ++order_failures;  // transitive
    }
    ctx.require(order_failures == 0, "deformation order laws hold on 1000 sampled pairs",
                std::to_string(order_failures) + " failures");

    // Genus additivity g(d1+d2) = g(d1) + g(d2) + d1.d2 - 1.
    int genus_failures = 0;
    std::uniform_int_distribution<long long> coeff(-10, 10);
    for (int i = 0; i < 1000; ++i) {
        DivisorClass d1{coeff(rng), coeff(rng)}, d2{coeff(rng), coeff(rng)};
        BigRat lhs = genus(d1 + d2);
        BigRat rhs = genus(d1) + genus(d2) + BigRat(intersect(d1, d2)) - BigRat(1);
        if (!(lhs == rhs)) ++genus_failures;
    }
    ctx.require(genus_failures == 0, "genus additivity holds on 1000 sampled pairs",
                std::to_string(genus_failures) + " failures");

    // Smith recomposition U*G*V = D with unimodular transforms.
    int snf_failures = 0, snf_cases = 0;
    std::vector<IntLattice> lattices;
    for (int n = 1; n <= 16; ++n) lattices.push_back(IntLattice::of_type(SingularityType::A(n)));
    for (int n = 4; n <= 16; ++n) lattices.push_back(IntLattice::of_type(SingularityType::D(n)));
    for (int n = 6; n <= 8; ++n) lattices.push_back(IntLattice::of_type(SingularityType::E(n)));
    {
        size_t base_count = lattices.size();
        for (size_t i = 0; i < base_count; ++i)
            for (int copies = 1; copies <= 2; ++copies) {
                if (lattices[i].rank() + 2 * copies > 16) continue;
                IntLattice l = lattices[i];
                for (int c = 0; c < copies; ++c) l = l.direct_sum(IntLattice::hyperbolic_u());
                lattices.push_back(l);
            }
    }
    lattices.push_back(IntLattice::o16_milnor());
    lattices.push_back(IntLattice::of_config(Configuration::parse("3D4+A1")));
    for (const auto& c : catalog::maximal_ade())
        lattices.push_back(IntLattice::of_config(c));
    for (const auto& l : lattices) {
        ++snf_cases;
        SmithResult snf = smith_normal_form(l.gram());
        int n = l.rank();
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                BigInt acc = 0;
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) acc += snf.u[i][p] * l.at(p, q) * snf.v[q][j];
                ok = acc == (i == j ? snf.diagonal[i] : BigInt(0));
            }
        ok = ok && integer_determinant(snf.u).abs() == BigInt(1) &&
             integer_determinant(snf.v).abs() == BigInt(1);
        for (size_t i = 0; i + 1 < snf.diagonal.size() && ok; ++i)
            ok = (snf.diagonal[i + 1] % snf.diagonal[i]).is_zero();
        if (!ok) ++snf_failures;
    }
    ctx.require(snf_failures == 0,
                "Smith recomposition exact on " + std::to_string(snf_cases) + " lattices",
                std::to_string(snf_failures) + " failures");

    // The ADE recognizer agrees with the isomorphism oracle on all diagrams
    // with at most 16 vertices.
    int rec_failures = 0;
    std::vector<SingularityType> types;
    for (int n = 1; n <= 16; ++n) types.push_back(SingularityType::A(n));
    for (int n = 4; n <= 16; ++n) types.push_back(SingularityType::D(n));
    for (int n = 6; n <= 8; ++n) types.push_back(SingularityType::E(n));
    for (const auto& t : types) {
        auto got = classify_ade(dynkin_diagram(t));
        if (!got || !(*got == Configuration({t}))) ++rec_failures;
        for (const auto& u : types) {
            if (u.milnor() != t.milnor()) continue;
            bool iso = are_isomorphic(dynkin_diagram(t), dynkin_diagram(u));
            if (iso != (t == u)) ++rec_failures;
        }
    }
    if (classify_ade(catalog::e6_tilde())) ++rec_failures;  // affine E6 is not ADE
    ctx.require(rec_failures == 0, "recognizer agrees with the isomorphism oracle",
                std::to_string(rec_failures) + " failures");
}

// ---------------------------------------------------------------- registry

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks = {
        {"mu_k_columns", check_mu_k_columns},
        {"theorem_II", check_theorem_ii},
        {"table_C_closure", check_table_c_closure},
        {"maximal_ade", check_maximal_ade},
        {"table5", check_table5},
        {"surfaces", check_surfaces},
        {"lattice_facts", check_lattice_facts},
        {"picard_section4", check_picard_section4},
        {"dpw_consistency", check_dpw_consistency},
        {"property_suites", check_property_suites},
    };
    return checks;
}

CheckResult run_one(const std::string& id, const CheckFn& fn, std::set<int>* touched) {
    CheckContext ctx;
    auto start = std::chrono::steady_clock::now();
    fn(ctx);
    auto stop = std::chrono::steady_clock::now();
    if (touched) touched->insert(ctx.touched_rows.begin(), ctx.touched_rows.end());
    return CheckResult{id, ctx.passed, ctx.expected.str(), ctx.actual.str(),
                       std::chrono::duration<double>(stop - start).count()};
}

}  // namespace

std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, fn] : registry()) ids.push_back(id);
    return ids;
}

CheckResult run_check(const std::string& id) {
    for (const auto& [name, fn] : registry())
        if (name == id) return run_one(name, fn, nullptr);
    throw DomainError("unknown check id '" + id + "'");
}

std::vector<CheckResult> run_all() {
    std::vector<CheckResult> out;
    std::set<int> touched;
    for (const auto& [name, fn] : registry()) out.push_back(run_one(name, fn, &touched));
    CheckResult coverage{"golden_coverage", touched.size() == 204,
                         "all 204 golden rows touched by at least one check",
                         std::to_string(touched.size()) + "/204 rows touched", 0.0};
    out.push_back(coverage);
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

std::string report_json(const std::vector<CheckResult>& results) {
    nlohmann::json doc;
    doc["schema"] = "v1";
    doc["checks"] = nlohmann::json::array();
    for (const auto& r : results) {
        doc["checks"].push_back({{"check_id", r.check_id},
                                 {"passed", r.passed},
                                 {"expected", r.expected},
                                 {"actual", r.actual},
                                 {"elapsed_seconds", r.elapsed_seconds}});
    }
    doc["all_passed"] = all_passed(results);
    return doc.dump(2);
}

std::string report_text(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.check_id;
        for (size_t i = r.check_id.size(); i < 18; ++i) out << ' ';
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%7.3fs", r.elapsed_seconds);
        out << buf;
        if (!r.passed) out << "  expected: " << r.expected << "  actual: " << r.actual;
        out << "\n";
    }
    out << (all_passed(results) ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
    return out.str();
}

}  // namespace cubicfolds

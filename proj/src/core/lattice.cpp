#include "lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "errors.hpp"
#include "json.hpp"

namespace cubicfolds {

namespace {

using Mat = std::vector<std::vector<BigInt>>;
using RatMat = std::vector<std::vector<BigRat>>;

Mat identity(int n) {
    Mat m(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Fraction-free determinant (Bareiss).
BigInt bareiss_det(Mat m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int t = 0; t < n - 1; ++t) {
        if (m[t][t].is_zero()) {
            int p = -1;
            for (int i = t + 1; i < n; ++i)
                if (!m[i][t].is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(m[t], m[p]);
            sign = -sign;
        }
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[t][t] - m[i][t] * m[t][j]) / prev;
        prev = m[t][t];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Inverse of a rational matrix by Gaussian elimination.
RatMat rat_inverse(RatMat m) {
    int n = static_cast<int>(m.size());
    RatMat inv(n, std::vector<BigRat>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int t = 0; t < n; ++t) {
        int p = t;
        while (p < n && m[p][t].is_zero()) ++p;
        if (p == n) throw DomainError("singular matrix");
        std::swap(m[t], m[p]);
        std::swap(inv[t], inv[p]);
        BigRat pivot = m[t][t];
        for (int j = 0; j < n; ++j) {
            m[t][j] = m[t][j] / pivot;
            inv[t][j] = inv[t][j] / pivot;
        }
        for (int i = 0; i < n; ++i) {
            if (i == t || m[i][t].is_zero()) continue;
            BigRat f = m[i][t];
            for (int j = 0; j < n; ++j) {
                m[i][j] -= f * m[t][j];
                inv[i][j] -= f * inv[t][j];
            }
        }
    }
    return inv;
}

}  // namespace

BigInt integer_determinant(const std::vector<std::vector<BigInt>>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw DomainError("determinant of a non-square matrix");
    return bareiss_det(m);
}

// ---------------------------------------------------------------- IntLattice

IntLattice IntLattice::from_gram(Mat gram) {
    int n = static_cast<int>(gram.size());
    if (n < 1 || n > 24) throw DomainError("lattice rank must be 1..24");
    for (const auto& row : gram)
        if (static_cast<int>(row.size()) != n) throw DomainError("Gram matrix must be square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw DomainError("Gram matrix must be symmetric");
    BigInt det = bareiss_det(gram);
    if (det.is_zero()) throw DomainError("degenerate lattice (zero determinant)");
    return IntLattice(std::move(gram), std::move(det));
}

IntLattice IntLattice::of_type(const SingularityType& t) {
    if (!t.is_ade()) throw DomainError("no root lattice for type " + t.name());
    int n = t.ade_index();
    Mat g(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = 2;
    auto edge = [&](int i, int j) { g[i][j] = g[j][i] = -1; };
    switch (t.kind()) {
        case SingKind::A:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case SingKind::D:
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
            edge(n - 3, n - 1);
            break;
        case SingKind::E:
            // Bourbaki numbering: node 1 hangs off node 3, node 2 off node 4.
            edge(0, 2);
            edge(1, 3);
            edge(2, 3);
            for (int i = 3; i + 1 < n; ++i) edge(i, i + 1);
            break;
        default:
            break;
    }
    return from_gram(std::move(g));
}

IntLattice IntLattice::hyperbolic_u() {
    Mat g = {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}};
    return from_gram(std::move(g));
}

IntLattice IntLattice::of_config(const Configuration& c) {
    if (!c.all_ade()) throw DomainError("of_config requires a pure ADE configuration");
    IntLattice out = of_type(c.parts()[0]);
    for (size_t i = 1; i < c.parts().size(); ++i) out = out.direct_sum(of_type(c.parts()[i]));
    return out;
}

IntLattice IntLattice::o16_milnor() {
    IntLattice t = of_type(SingularityType::D(4));
    t = t.direct_sum(of_type(SingularityType::D(4)));
    t = t.direct_sum(of_type(SingularityType::D(4)));
    t = t.direct_sum(hyperbolic_u());
    return t.direct_sum(hyperbolic_u());
}

IntLattice IntLattice::direct_sum(const IntLattice& o) const {
    int n = rank(), m = o.rank();
    if (n + m > 24) throw DomainError("direct sum exceeds rank 24");
    Mat g(n + m, std::vector<BigInt>(n + m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = gram_[i][j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g[n + i][n + j] = o.gram_[i][j];
    return from_gram(std::move(g));
}

bool IntLattice::is_even() const {
    for (int i = 0; i < rank(); ++i)
        if (!gram_[i][i].is_even()) return false;
    return true;
}

std::pair<int, int> IntLattice::signature() const {
    int n = rank();
    RatMat m(n, std::vector<BigRat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = BigRat(gram_[i][j]);
    int plus = 0, minus = 0;
    for (int t = 0; t < n; ++t) {
        if (m[t][t].is_zero()) {
            int p = -1;
            for (int j = t + 1; j < n; ++j)
                if (!m[j][j].is_zero()) {
                    p = j;
                    break;
                }
            if (p >= 0) {
                std::swap(m[t], m[p]);
                for (auto& row : m) std::swap(row[t], row[p]);
            } else {
                int q = -1;
                for (int j = t + 1; j < n; ++j)
                    if (!m[t][j].is_zero()) {
                        q = j;
                        break;
                    }
                if (q < 0) throw DomainError("degenerate form in signature computation");
                // Zero diagonal block: adding row/col q to row/col t makes
                // m[t][t] = 2*m[t][q] != 0.
                for (int j = 0; j < n; ++j) m[t][j] += m[q][j];
                for (int i = 0; i < n; ++i) m[i][t] += m[i][q];
            }
        }
        BigRat pivot = m[t][t];
        (pivot.sign() > 0 ? plus : minus) += 1;
        for (int i = t + 1; i < n; ++i) {
            if (m[i][t].is_zero()) continue;
            BigRat f = m[i][t] / pivot;
            for (int j = t; j < n; ++j) m[i][j] -= f * m[t][j];
        }
        for (int j = t + 1; j < n; ++j) m[t][j] = 0;
        // Restore symmetry on the trailing block.
        for (int i = t + 1; i < n; ++i)
            for (int j = t + 1; j < n; ++j) m[j][i] = m[i][j];
    }
    return {plus, minus};
}

bool IntLattice::is_positive_definite() const {
    auto [plus, minus] = signature();
    return minus == 0;
}

std::string IntLattice::to_text() const {
    std::ostringstream out;
    out << "rank " << rank() << "\n";
    for (int i = 0; i < rank(); ++i) {
        for (int j = 0; j < rank(); ++j) out << (j ? " " : "") << gram_[i][j].to_string();
        out << "\n";
    }
    return out.str();
}

IntLattice IntLattice::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "rank") throw ParseError("lattice text must start with 'rank <r>'");
    if (n < 1 || n > 24) throw ParseError("lattice rank must be 1..24");
    Mat g(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string cell;
            if (!(in >> cell)) throw ParseError("lattice text ended early");
            g[i][j] = BigInt::from_string(cell);
        }
    return from_gram(std::move(g));
}

// ---------------------------------------------------------------- Smith form

namespace {

void swap_rows(Mat& m, int a, int b) { std::swap(m[a], m[b]); }
void swap_cols(Mat& m, int a, int b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}
// row[a] += f * row[b]
void add_row(Mat& m, int a, int b, const BigInt& f) {
    for (size_t j = 0; j < m[a].size(); ++j) m[a][j] += f * m[b][j];
}
void add_col(Mat& m, int a, int b, const BigInt& f) {
    for (auto& row : m) row[a] += f * row[b];
}
void negate_row(Mat& m, int a) {
    for (auto& x : m[a]) x = -x;
}

}  // namespace

SmithResult smith_normal_form(const Mat& input) {
    Mat a = input;
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    SmithResult res{identity(rows), identity(cols), {}};
    int r = std::min(rows, cols);

    for (int t = 0; t < r; ++t) {
        // Locate the nonzero entry of smallest magnitude in the trailing block.
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (a[i][j].is_zero()) continue;
                if (pi < 0 || a[i][j].abs() < a[pi][pj].abs()) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // trailing block is zero
        swap_rows(a, t, pi);
        swap_rows(res.u, t, pi);
        swap_cols(a, t, pj);
        swap_cols(res.v, t, pj);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t].is_zero()) continue;
                BigInt q = a[i][t] / a[t][t];
                add_row(a, i, t, -q);
                add_row(res.u, i, t, -q);
                if (!a[i][t].is_zero()) {
                    // Remainder smaller than the pivot: promote it.
                    swap_rows(a, t, i);
                    swap_rows(res.u, t, i);
                    settled = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j].is_zero()) continue;
                BigInt q = a[t][j] / a[t][t];
                add_col(a, j, t, -q);
                add_col(res.v, j, t, -q);
                if (!a[t][j].is_zero()) {
                    swap_cols(a, t, j);
                    swap_cols(res.v, t, j);
                    settled = false;
                }
            }
            if (!settled) continue;
            // Divisibility: the pivot must divide the whole trailing block.
            for (int i = t + 1; i < rows && settled; ++i)
                for (int j = t + 1; j < cols && settled; ++j)
                    if (!(a[i][j] % a[t][t]).is_zero()) {
                        add_row(a, t, i, 1);
                        add_row(res.u, t, i, 1);
                        settled = false;
                    }
        }
        if (a[t][t].sign() < 0) {
            negate_row(a, t);
            negate_row(res.u, t);
        }
    }
    for (int t = 0; t < r; ++t) res.diagonal.push_back(a[t][t]);
    return res;
}

// ---------------------------------------------------------------- groups

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long long> factors)
    : factors_(std::move(factors)) {
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw DomainError("invariant factors must be >= 2");
        if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
            throw DomainError("invariant factors must form a divisibility chain");
    }
}

BigInt FiniteAbelianGroup::order() const {
    BigInt o = 1;
    for (long long f : factors_) o *= BigInt(f);
    return o;
}

std::string FiniteAbelianGroup::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(factors_[i]);
    }
    return out;
}

FiniteAbelianGroup discriminant_group(const IntLattice& l) {
    SmithResult snf = smith_normal_form(l.gram());
    std::vector<long long> factors;
    for (const auto& d : snf.diagonal) {
        if (d == BigInt(1)) continue;
        factors.push_back(d.to_int64());
    }
    return FiniteAbelianGroup(std::move(factors));
}

// ---------------------------------------------------------------- disc form

DiscriminantForm::DiscriminantForm(const IntLattice& l)
    : group_({}), gram_(l.gram()) {
    if (!l.is_even()) throw DomainError("discriminant form requires an even lattice");
    int n = l.rank();
    SmithResult snf = smith_normal_form(gram_);

    RatMat u(n, std::vector<BigRat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u[i][j] = BigRat(snf.u[i][j]);
    RatMat g(n, std::vector<BigRat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = BigRat(gram_[i][j]);
    // Generator of the i-th cyclic factor of Z^n / G Z^n lifts to
    // G^{-1} U^{-1} e_i in S* (coordinates in the S basis).
    RatMat w = rat_inverse(g);
    RatMat uinv = rat_inverse(u);
    std::vector<long long> factors;
    for (int i = 0; i < n; ++i) {
        if (snf.diagonal[i] == BigInt(1)) continue;
        factors.push_back(snf.diagonal[i].to_int64());
        std::vector<BigRat> lift(n, 0);
        for (int row = 0; row < n; ++row) {
            BigRat acc = 0;
            for (int k = 0; k < n; ++k) acc += w[row][k] * uinv[k][i];
            lift[row] = acc;
        }
        lifts_.push_back(std::move(lift));
    }
    group_ = FiniteAbelianGroup(std::move(factors));
}

std::vector<BigRat> DiscriminantForm::lift(std::span<const long long> coeffs) const {
    int n = static_cast<int>(gram_.size());
    if (coeffs.size() != lifts_.size()) throw DomainError("element has wrong coefficient count");
    std::vector<BigRat> v(n, 0);
    for (size_t i = 0; i < lifts_.size(); ++i)
        for (int row = 0; row < n; ++row) v[row] += BigRat(BigInt(coeffs[i])) * lifts_[i][row];
    return v;
}

namespace {

BigRat pair_with_gram(const std::vector<std::vector<BigInt>>& gram,
                      const std::vector<BigRat>& x, const std::vector<BigRat>& y) {
    BigRat acc = 0;
    int n = static_cast<int>(gram.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += x[i] * BigRat(gram[i][j]) * y[j];
    return acc;
}

}  // namespace

BigRat DiscriminantForm::q_of(std::span<const long long> coeffs) const {
    auto v = lift(coeffs);
    return pair_with_gram(gram_, v, v).mod(BigInt(2));
}

BigRat DiscriminantForm::b_of(std::span<const long long> x, std::span<const long long> y) const {
    return pair_with_gram(gram_, lift(x), lift(y)).mod(BigInt(1));
}

BigRat DiscriminantForm::q_generator(int i) const {
    GroupElement e(group_.generator_count(), 0);
    e[i] = 1;
    return q_of(e);
}

BigRat DiscriminantForm::b_generators(int i, int j) const {
    GroupElement a(group_.generator_count(), 0), b(group_.generator_count(), 0);
    a[i] = 1;
    b[j] = 1;
    return b_of(a, b);
}

GroupElement DiscriminantForm::reduce(GroupElement x) const {
    const auto& f = group_.invariant_factors();
    for (size_t i = 0; i < x.size(); ++i) {
        x[i] %= f[i];
        if (x[i] < 0) x[i] += f[i];
    }
    return x;
}

GroupElement DiscriminantForm::add(const GroupElement& x, const GroupElement& y) const {
    GroupElement z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return reduce(std::move(z));
}

std::vector<GroupElement> DiscriminantForm::all_elements() const {
    BigInt order = group_.order();
    if (order > BigInt(4096))
        throw LimitError("discriminant group too large for exhaustive enumeration (|A| > 2^12)");
    std::vector<GroupElement> out;
    GroupElement cur(group_.generator_count(), 0);
    const auto& f = group_.invariant_factors();
    while (true) {
        out.push_back(cur);
        size_t i = 0;
        while (i < cur.size()) {
            if (++cur[i] < f[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == cur.size()) break;
        if (cur.empty()) break;
    }
    return out;
}

// ---------------------------------------------------------------- isotropic

std::vector<std::vector<GroupElement>> isotropic_subgroups(const DiscriminantForm& d) {
    auto elements = d.all_elements();
    std::vector<GroupElement> isotropic;
    for (const auto& e : elements)
        if (d.q_of(e).is_zero()) isotropic.push_back(e);

    // BFS over subgroups generated by isotropic elements; a subgroup whose
    // closure picks up an anisotropic element is discarded, and every
    // isotropic subgroup is generated by its own elements, so this reaches
    // all of them.
    auto close = [&](std::set<GroupElement> gens) -> std::optional<std::set<GroupElement>> {
        std::set<GroupElement> sub{GroupElement(d.group().generator_count(), 0)};
        std::vector<GroupElement> frontier(gens.begin(), gens.end());
        for (const auto& g : gens) sub.insert(g);
        while (!frontier.empty()) {
            GroupElement x = frontier.back();
            frontier.pop_back();
            for (const auto& y : std::vector<GroupElement>(sub.begin(), sub.end())) {
                GroupElement z = d.add(x, y);
                if (sub.insert(z).second) frontier.push_back(z);
            }
        }
        for (const auto& e : sub)
            if (!d.q_of(e).is_zero()) return std::nullopt;
        return sub;
    };

    std::set<std::vector<GroupElement>> seen;
    std::vector<std::set<GroupElement>> frontier;
    auto trivial = close({});
    seen.insert({trivial->begin(), trivial->end()});
    frontier.push_back(*trivial);
    while (!frontier.empty()) {
        std::set<GroupElement> cur = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& e : isotropic) {
            if (cur.count(e)) continue;
            std::set<GroupElement> gens = cur;
            gens.insert(e);
            auto next = close(gens);
            if (!next) continue;
            std::vector<GroupElement> key(next->begin(), next->end());
            if (seen.insert(key).second) frontier.push_back(*next);
        }
    }
    std::vector<std::vector<GroupElement>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    return out;
}

// ---------------------------------------------------------------- overlattices

namespace {

// Basis of the row lattice of an integer matrix (row echelon over Z).
Mat integer_row_basis(Mat m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        while (true) {
            int p = -1;
            for (int i = r; i < rows; ++i)
                if (!m[i][c].is_zero() && (p < 0 || m[i][c].abs() < m[p][c].abs())) p = i;
            if (p < 0) break;
            std::swap(m[r], m[p]);
            bool done = true;
            for (int i = r + 1; i < rows; ++i) {
                if (m[i][c].is_zero()) continue;
                BigInt q = m[i][c] / m[r][c];
                for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (!m[i][c].is_zero()) done = false;
            }
            if (done) break;
        }
        if (!m[r][c].is_zero()) {
            if (m[r][c].sign() < 0)
                for (int j = 0; j < cols; ++j) m[r][j] = -m[r][j];
            ++r;
        }
    }
    m.resize(r);
    return m;
}

}  // namespace

std::vector<Overlattice> even_overlattices(const IntLattice& l) {
    DiscriminantForm d(l);
    int n = l.rank();
    std::vector<Overlattice> out;
    for (const auto& sub : isotropic_subgroups(d)) {
        // Generators of the preimage of H in S*: the S basis plus lifts of
        // the subgroup elements, scaled to a common denominator.
        BigInt den = 1;
        std::vector<std::vector<BigRat>> lifts;
        for (const auto& e : sub) {
            lifts.push_back(d.lift(e));
            for (const auto& x : lifts.back()) {
                BigInt g = BigInt::gcd(den, x.den());
                den = den / g * x.den();
            }
        }
        Mat gens;
        for (int i = 0; i < n; ++i) {
            std::vector<BigInt> row(n, 0);
            row[i] = den;
            gens.push_back(std::move(row));
        }
        for (const auto& lift : lifts) {
            std::vector<BigInt> row(n);
            for (int j = 0; j < n; ++j) {
                BigRat scaled = lift[j] * BigRat(den);
                row[j] = scaled.num();  // integral by construction
            }
            gens.push_back(std::move(row));
        }
        Mat basis = integer_row_basis(std::move(gens));
        if (static_cast<int>(basis.size()) != n)
            throw DomainError("overlattice basis has wrong rank");
        // Gram of the overlattice: (B/den) G (B/den)^T.
        Mat gram(n, std::vector<BigInt>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                BigInt acc = 0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) acc += basis[i][a] * l.at(a, b) * basis[j][b];
                BigRat exact(acc, den * den);
                if (!exact.is_integer())
                    throw DomainError("overlattice form is not integral");
                gram[i][j] = exact.num();
            }
        out.push_back(Overlattice{sub, IntLattice::from_gram(std::move(gram))});
    }
    return out;
}

// ---------------------------------------------------------------- obstructions

bool rank_signature_obstruction(const IntLattice& s, const IntLattice& host) {
    if (!s.is_positive_definite())
        throw DomainError("rank_signature_obstruction requires a positive definite source");
    auto [plus, minus] = host.signature();
    return s.rank() > plus || s.rank() > host.rank();
}

namespace {

// Invariant factors of the subgroup of `group` of order coprime to `order`:
// strip every prime shared with `order` from each factor.
std::vector<long long> coprime_part(const FiniteAbelianGroup& group, const BigInt& order) {
    std::vector<long long> out;
    for (long long f : group.invariant_factors()) {
        BigInt d(f);
        while (true) {
            BigInt g = BigInt::gcd(d, order);
            if (g == BigInt(1)) break;
            d = d / g;
        }
        if (d > BigInt(1)) out.push_back(d.to_int64());
    }
    return out;
}

}  // namespace

bool complement_generator_obstruction(const IntLattice& s, const IntLattice& host) {
    if (!s.is_even() || !host.is_even())
        throw DomainError("complement_generator_obstruction requires even lattices");
    BigInt a_s_order = discriminant_group(s).order();
    auto needed = coprime_part(discriminant_group(host), a_s_order);
    int slack = host.rank() - s.rank();
    return static_cast<int>(needed.size()) > slack;
}

std::string obstruction_json(const IntLattice& s, const IntLattice& host) {
    nlohmann::json doc;
    doc["schema"] = "v1";
    auto [hp, hm] = host.signature();
    nlohmann::json rank_ob;
    rank_ob["obstruction"] = "rank_signature";
    rank_ob["fires"] = rank_signature_obstruction(s, host);
    rank_ob["witness"] = {{"rank", s.rank()}, {"host_rank", host.rank()}, {"host_n_plus", hp}};
    nlohmann::json gen_ob;
    gen_ob["obstruction"] = "complement_generators";
    gen_ob["fires"] = complement_generator_obstruction(s, host);
    BigInt a_s_order = discriminant_group(s).order();
    gen_ob["witness"] = {
        {"coprime_part_generators",
         coprime_part(discriminant_group(host), a_s_order).size()},
        {"rank_slack", host.rank() - s.rank()}};
    doc["results"] = nlohmann::json::array({rank_ob, gen_ob});
    return doc.dump(2);
}

}  // namespace cubicfolds

#include "types.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"

namespace cubicfolds {

SingularityType SingularityType::A(int n) {
    if (n < 1) throw DomainError("A_n requires n >= 1, got n=" + std::to_string(n));
    return {SingKind::A, n, 0, 0};
}

SingularityType SingularityType::D(int n) {
    if (n < 4) throw DomainError("D_n requires n >= 4, got n=" + std::to_string(n));
    return {SingKind::D, n, 0, 0};
}

SingularityType SingularityType::E(int n) {
    if (n < 6 || n > 8) throw DomainError("E_n requires n in {6,7,8}, got n=" + std::to_string(n));
    return {SingKind::E, n, 0, 0};
}

SingularityType SingularityType::T(int p, int q, int r) {
    std::array<int, 3> ix = {p, q, r};
    std::sort(ix.begin(), ix.end());
    if (ix[0] < 2) throw DomainError("T_pqr requires indices >= 2");
    // 1/p + 1/q + 1/r <= 1, in integers: qr + pr + pq <= pqr.
    long long pp = ix[0], qq = ix[1], rr = ix[2];
    if (qq * rr + pp * rr + pp * qq > pp * qq * rr)
        throw DomainError("T_pqr requires 1/p+1/q+1/r <= 1");
    return {SingKind::T, ix[0], ix[1], ix[2]};
}

SingularityType SingularityType::Q10() { return {SingKind::Q10, 0, 0, 0}; }
SingularityType SingularityType::S11() { return {SingKind::S11, 0, 0, 0}; }
SingularityType SingularityType::U12() { return {SingKind::U12, 0, 0, 0}; }
SingularityType SingularityType::O16() { return {SingKind::O16, 0, 0, 0}; }

bool SingularityType::is_ade() const {
    return kind_ == SingKind::A || kind_ == SingKind::D || kind_ == SingKind::E;
}

int SingularityType::ade_index() const {
    if (!is_ade()) throw DomainError("ade_index on non-ADE type " + name());
    return a_;
}

std::array<int, 3> SingularityType::t_indices() const {
    if (kind_ != SingKind::T) throw DomainError("t_indices on non-T type " + name());
    return {a_, b_, c_};
}

int SingularityType::milnor() const {
    switch (kind_) {
        case SingKind::A:
        case SingKind::D:
        case SingKind::E:
            return a_;
        case SingKind::T:
            return a_ + b_ + c_ - 1;
        case SingKind::Q10:
            return 10;
        case SingKind::S11:
            return 11;
        case SingKind::U12:
            return 12;
        case SingKind::O16:
            return 16;
    }
    return 0;  // unreachable
}

std::optional<int> SingularityType::tjurina() const {
    if (is_ade()) return milnor();
    return std::nullopt;
}

std::string SingularityType::name() const {
    switch (kind_) {
        case SingKind::A:
            return "A" + std::to_string(a_);
        case SingKind::D:
            return "D" + std::to_string(a_);
        case SingKind::E:
            return "E" + std::to_string(a_);
        case SingKind::T:
            if (a_ == 3 && b_ == 3 && c_ == 3) return "P8";
            if (a_ == 2 && b_ == 4 && c_ == 4) return "X9";
            if (a_ == 2 && b_ == 3 && c_ == 6) return "J10";
            return "T" + std::to_string(a_) + std::to_string(b_) + std::to_string(c_);
        case SingKind::Q10:
            return "Q10";
        case SingKind::S11:
            return "S11";
        case SingKind::U12:
            return "U12";
        case SingKind::O16:
            return "O16";
    }
    return {};
}

SingularityType SingularityType::parse(std::string_view token) {
    if (token.empty()) throw ParseError("empty type token");
    if (token == "P8") return T(3, 3, 3);
    if (token == "X9") return T(2, 4, 4);
    if (token == "J10") return T(2, 3, 6);
    if (token == "Q10") return Q10();
    if (token == "S11") return S11();
    if (token == "U12") return U12();
    if (token == "O16") return O16();
    char head = token[0];
    std::string_view rest = token.substr(1);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(),
                                     [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("bad type token '" + std::string(token) + "'");
    if (head == 'A' || head == 'D' || head == 'E') {
        if (rest.size() > 3) throw ParseError("index out of range in '" + std::string(token) + "'");
        int n = std::stoi(std::string(rest));
        if (head == 'A') return A(n);
        if (head == 'D') return D(n);
        return E(n);
    }
    if (head == 'T') {
        if (rest.size() != 3)
            throw ParseError("T token needs three single-digit indices: '" +
                             std::string(token) + "'");
        return T(rest[0] - '0', rest[1] - '0', rest[2] - '0');
    }
    throw ParseError("unknown type token '" + std::string(token) + "'");
}

std::strong_ordering SingularityType::operator<=>(const SingularityType& o) const {
    if (int m = milnor(), mo = o.milnor(); m != mo)
        return mo <=> m;  // descending Milnor number
    std::string a = name(), b = o.name();
    if (a != b) return b <=> a;  // descending name
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Configuration

Configuration::Configuration(std::vector<SingularityType> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DomainError("configuration must be nonempty");
    std::sort(parts_.begin(), parts_.end());
    for (const auto& p : parts_) mu_ += p.milnor();
}

Configuration Configuration::parse(std::string_view text) {
    std::vector<SingularityType> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find('+', pos);
        std::string_view term =
            text.substr(pos, next == std::string_view::npos ? next : next - pos);
        if (term.empty()) throw ParseError("empty term in configuration '" + std::string(text) + "'");
        size_t d = 0;
        while (d < term.size() && std::isdigit(static_cast<unsigned char>(term[d]))) ++d;
        long long mult = 1;
        if (d > 0) {
            if (d > 3) throw ParseError("multiplicity out of range in '" + std::string(term) + "'");
            mult = std::stoll(std::string(term.substr(0, d)));
            if (mult < 1) throw ParseError("multiplicity must be >= 1 in '" + std::string(term) + "'");
        }
        SingularityType t = SingularityType::parse(term.substr(d));
        for (long long i = 0; i < mult; ++i) parts.push_back(t);
        if (next == std::string_view::npos) break;
        pos = next + 1;
        if (pos == text.size()) throw ParseError("trailing '+' in configuration");
    }
    return Configuration(std::move(parts));
}

std::string Configuration::format() const {
    std::string out;
    for (size_t i = 0; i < parts_.size();) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!out.empty()) out += '+';
        if (j - i > 1) out += std::to_string(j - i);
        out += parts_[i].name();
        i = j;
    }
    return out;
}

bool Configuration::all_ade() const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const SingularityType& t) { return t.is_ade(); });
}

bool Configuration::all_a() const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const SingularityType& t) { return t.kind() == SingKind::A; });
}

Configuration Configuration::merged(const Configuration& o) const {
    std::vector<SingularityType> parts = parts_;
    parts.insert(parts.end(), o.parts_.begin(), o.parts_.end());
    return Configuration(std::move(parts));
}

}  // namespace cubicfolds

#include "confrep/weights.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace confrep {

Series parse_series(std::string_view s) {
    if (s == "D" || s == "d") return Series::D;
    if (s == "B" || s == "b") return Series::B;
    throw std::invalid_argument("unknown series '" + std::string(s) + "' (expected D or B)");
}

std::string to_string(Series s) { return s == Series::D ? "D" : "B"; }

// ---------------------------------------------------------------------------
// WeightVec

WeightVec::WeightVec(Series series, std::vector<Rat> coords) : series_(series), c_(std::move(coords)) {
    for (const auto& x : c_)
        if (!(x * Rat(2)).is_integer())
            throw std::invalid_argument("WeightVec: coordinate " + x.str() + " is not a half-integer");
}

WeightVec WeightVec::zero(Series series, int n) { return WeightVec(series, std::vector<Rat>(n)); }

WeightVec WeightVec::unit(Series series, int n, int i) {
    std::vector<Rat> c(n);
    c.at(i - 1) = Rat(1);
    return WeightVec(series, std::move(c));
}

WeightVec WeightVec::parse(Series series, std::string_view text) {
    std::vector<Rat> coords;
    std::string s(text);
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        auto piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        coords.push_back(Rat::parse(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (coords.empty()) throw std::invalid_argument("WeightVec::parse: empty weight");
    return WeightVec(series, std::move(coords));
}

bool WeightVec::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x.is_zero(); });
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("WeightVec: rank mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("WeightVec: rank mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

WeightVec operator*(const Rat& c, WeightVec a) {
    for (auto& x : a.c_) x *= c;
    return a;
}

std::string WeightVec::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    return os.str();
}

Rat inner(const WeightVec& a, const WeightVec& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("inner: rank mismatch");
    Rat s;
    for (int i = 1; i <= a.rank(); ++i) s += a[i] * b[i];
    return s;
}

// ---------------------------------------------------------------------------
// Roots

std::vector<WeightVec> positive_roots(Series series, int n) {
    std::vector<WeightVec> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            out.push_back(WeightVec::unit(series, n, i) - WeightVec::unit(series, n, j));
            out.push_back(WeightVec::unit(series, n, i) + WeightVec::unit(series, n, j));
        }
    if (series == Series::B)
        for (int i = 1; i <= n; ++i) out.push_back(WeightVec::unit(series, n, i));
    return out;
}

std::vector<WeightVec> simple_roots(Series series, int n) {
    std::vector<WeightVec> out;
    for (int i = 1; i < n; ++i) out.push_back(WeightVec::unit(series, n, i) - WeightVec::unit(series, n, i + 1));
    if (series == Series::D) {
        if (n >= 2) out.push_back(WeightVec::unit(series, n, n - 1) + WeightVec::unit(series, n, n));
    } else {
        out.push_back(WeightVec::unit(series, n, n));
    }
    return out;
}

bool is_dominant(const WeightVec& mu) {
    const int n = mu.rank();
    if (n == 0) return false;
    for (int i = 1; i < n; ++i)
        if (!is_natural(mu[i] - mu[i + 1])) return false;
    if (mu.series() == Series::D) {
        if (n >= 2) return is_natural(mu[n - 1] + mu[n]);
        return (mu[1] * Rat(2)).is_integer();
    }
    return is_natural(mu[n] * Rat(2));
}

namespace {

void require_dominant(const WeightVec& mu, const char* where) {
    if (!is_dominant(mu))
        throw std::invalid_argument(std::string(where) + ": weight (" + mu.str() + ") is not dominant for series " +
                                    to_string(mu.series()));
}

}  // namespace

// ---------------------------------------------------------------------------
// Jump sequences

JumpSeq::JumpSeq(std::vector<int> points) : p_(std::move(points)) {
    if (p_.size() < 2 || p_.front() != 0) throw std::invalid_argument("JumpSeq: must start at 0 and have a block");
    for (std::size_t i = 1; i < p_.size(); ++i)
        if (p_[i] <= p_[i - 1]) throw std::invalid_argument("JumpSeq: points must increase strictly");
}

std::string JumpSeq::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < p_.size(); ++i) os << (i ? "," : "") << p_[i];
    os << "}";
    return os.str();
}

JumpSeq jump_sequence(const WeightVec& mu) {
    require_dominant(mu, "jump_sequence");
    std::vector<int> pts{0};
    const int n = mu.rank();
    for (int i = 1; i < n; ++i)
        if (mu[i] != mu[i + 1]) pts.push_back(i);
    pts.push_back(n);
    return JumpSeq(std::move(pts));
}

WeightVec rho(Series series, int n) {
    if (n < 1) throw std::invalid_argument("rho: rank must be positive");
    std::vector<Rat> c;
    for (int i = 1; i <= n; ++i) c.push_back(series == Series::D ? Rat(n - i) : Rat(2 * (n - i) + 1, 2));
    return WeightVec(series, std::move(c));
}

long weyl_dim(const WeightVec& mu) {
    require_dominant(mu, "weyl_dim");
    const WeightVec r = rho(mu.series(), mu.rank());
    const WeightVec shifted = mu + r;
    Rat d(1);
    for (const auto& alpha : positive_roots(mu.series(), mu.rank())) d *= inner(shifted, alpha) / inner(r, alpha);
    return d.to_long();
}

Rat casimir_eigenvalue(const WeightVec& mu) {
    const WeightVec r = rho(mu.series(), mu.rank());
    return inner(mu + Rat(2) * r, mu);
}

// ---------------------------------------------------------------------------
// Pieri

std::vector<PieriSummand> pieri_decompose(const WeightVec& mu) {
    require_dominant(mu, "pieri_decompose");
    const Series series = mu.series();
    const int n = mu.rank();
    const JumpSeq seq = jump_sequence(mu);
    const int s = seq.blocks();
    auto eps = [&](int i) { return WeightVec::unit(series, n, i); };

    std::vector<PieriSummand> out;
    for (int i = 1; i <= s; ++i) {
        const int j = 1 + seq[i - 1];
        out.push_back({PieriSummand::Kind::Raise, j, mu + eps(j)});
    }
    int lowered = s;
    if (series == Series::D) {
        if (n >= 2 && (mu[n - 1] + mu[n]).is_zero()) lowered = s - 2 + (mu[n].is_zero() ? 1 : 0);
    } else {
        lowered = s - (mu[n].is_zero() ? 1 : 0) - (mu[n] == Rat(1, 2) ? 1 : 0);
    }
    for (int i = 1; i <= lowered; ++i) {
        const int j = seq[i];
        out.push_back({PieriSummand::Kind::Lower, j, mu - eps(j)});
    }
    // The zero weight of the natural o(2n+1)-module contributes V(mu) only when mu_n != 0.
    if (series == Series::B && !mu[n].is_zero()) out.push_back({PieriSummand::Kind::Same, 0, mu});
    return out;
}

Rat split_casimir_eigenvalue(const WeightVec& mu, const PieriSummand& summand) {
    const int n = mu.rank();
    const int j = summand.index;
    switch (summand.kind) {
        case PieriSummand::Kind::Raise:
            return mu[j] + Rat(1 - j);
        case PieriSummand::Kind::Lower:
            return mu.series() == Series::D ? Rat(1 + j - 2 * n) - mu[j] : Rat(j - 2 * n) - mu[j];
        case PieriSummand::Kind::Same:
            return Rat(-n);
    }
    return Rat();
}

Spectrum::Spectrum(std::vector<SpectrumEntry> entries) {
    std::map<Rat, SpectrumEntry> merged;
    for (auto& e : entries) {
        auto it = merged.find(e.eigenvalue);
        if (it == merged.end()) {
            merged.emplace(e.eigenvalue, std::move(e));
        } else {
            it->second.multiplicity += e.multiplicity;
            for (auto& w : e.summands) it->second.summands.push_back(std::move(w));
        }
    }
    for (auto& [k, v] : merged) e_.push_back(std::move(v));
}

long Spectrum::total_multiplicity() const {
    long t = 0;
    for (const auto& e : e_) t += e.multiplicity;
    return t;
}

long Spectrum::multiplicity(const Rat& lambda) const {
    for (const auto& e : e_)
        if (e.eigenvalue == lambda) return e.multiplicity;
    return 0;
}

std::vector<std::pair<Rat, std::size_t>> Spectrum::as_roots() const {
    std::vector<std::pair<Rat, std::size_t>> out;
    for (const auto& e : e_) out.emplace_back(e.eigenvalue, static_cast<std::size_t>(e.multiplicity));
    return out;
}

std::string Spectrum::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < e_.size(); ++i)
        os << (i ? ", " : "") << "(" << e_[i].eigenvalue << ", " << e_[i].multiplicity << ")";
    os << "}";
    return os.str();
}

Spectrum omega_tilde_spectrum(const WeightVec& mu) {
    std::vector<SpectrumEntry> entries;
    for (const auto& summand : pieri_decompose(mu))
        entries.push_back({split_casimir_eigenvalue(mu, summand), weyl_dim(summand.weight), {summand.weight}});
    return Spectrum(std::move(entries));
}

// ---------------------------------------------------------------------------
// Critical central charges

bool Progression::contains(const Rat& b) const { return is_natural((base - b) / step); }

std::optional<Progression> CriticalSet::violated_by(const Rat& b) const {
    for (const auto& p : parts)
        if (p.contains(b)) return p;
    return std::nullopt;
}

std::string CriticalSet::str() const {
    if (parts.empty()) return "{}";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& p = parts[i];
        os << (i ? " u " : "") << "{" << p.base << "-N" << (p.step == Rat(1) ? "" : "/2") << "}";
    }
    return os.str();
}

CriticalSet critical_b_set(const WeightVec& mu) {
    require_dominant(mu, "critical_b_set");
    CriticalSet out;
    out.mu = mu;
    const int n = mu.rank();
    if (mu.is_zero()) {
        out.sharp = true;
        out.parts.push_back({Rat(0), Rat(1), "-N"});
        return out;
    }
    const JumpSeq seq = jump_sequence(mu);
    const int n1 = seq.leading_block();
    if (mu.series() == Series::D) {
        out.parts.push_back({Rat(n - 1), Rat(1, 2), "n-1-N/2"});
        const bool special = n >= 2 && mu[n - 1] == -mu[n] && mu[n - 1].sign() > 0 && seq.blocks() == 2;
        if (special)
            out.parts.push_back({mu[1] + Rat(n - 1), Rat(1), "mu_1+n-1-N"});
        else
            out.parts.push_back({mu[1] + Rat(2 * n - n1 - 1), Rat(1), "mu_1+2n-n_1-1-N"});
    } else {
        out.parts.push_back({Rat(n), Rat(1, 2), "n-N/2"});
        const bool all_half = std::all_of(mu.coords().begin(), mu.coords().end(),
                                          [](const Rat& x) { return x == Rat(1, 2); });
        if (!all_half) out.parts.push_back({mu[1] + Rat(2 * n - n1), Rat(1), "mu_1+2n-n_1-N"});
    }
    return out;
}

}  // namespace confrep

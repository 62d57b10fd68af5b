#pragma once

#include "confrep/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace confrep {

/// D: o(2n), B: o(2n+1).
enum class Series { D, B };

Series parse_series(std::string_view s);
std::string to_string(Series s);

/// Element sum mu_i eps_i of the weight lattice; coordinates are half-integers.
class WeightVec {
public:
    WeightVec() = default;
    WeightVec(Series series, std::vector<Rat> coords);

    static WeightVec zero(Series series, int n);
    /// eps_i, 1-based.
    static WeightVec unit(Series series, int n, int i);
    /// "3/2,1/2"
    static WeightVec parse(Series series, std::string_view text);

    Series series() const { return series_; }
    int rank() const { return static_cast<int>(c_.size()); }
    const std::vector<Rat>& coords() const { return c_; }
    /// 1-based coordinate mu_i.
    const Rat& operator[](int i) const { return c_.at(static_cast<std::size_t>(i - 1)); }
    bool is_zero() const;

    WeightVec& operator+=(const WeightVec& o);
    WeightVec& operator-=(const WeightVec& o);
    friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
    friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
    friend WeightVec operator*(const Rat& c, WeightVec a);
    friend bool operator==(const WeightVec& a, const WeightVec& b) { return a.series_ == b.series_ && a.c_ == b.c_; }
    friend bool operator<(const WeightVec& a, const WeightVec& b) { return a.c_ < b.c_; }

    /// "3/2,1/2"
    std::string str() const;

private:
    Series series_ = Series::D;
    std::vector<Rat> c_;
};

/// (a, b) = sum a_i b_i
Rat inner(const WeightVec& a, const WeightVec& b);

/// Positive roots of the series at rank n.
std::vector<WeightVec> positive_roots(Series series, int n);
/// Simple roots alpha_1..alpha_n in the usual order.
std::vector<WeightVec> simple_roots(Series series, int n);

bool is_dominant(const WeightVec& mu);

/// Block boundaries 0 = n_0 < n_1 < ... < n_s = n of equal consecutive coordinates.
class JumpSeq {
public:
    explicit JumpSeq(std::vector<int> points);
    const std::vector<int>& points() const { return p_; }
    /// s, the number of blocks.
    int blocks() const { return static_cast<int>(p_.size()) - 1; }
    /// n_i
    int operator[](int i) const { return p_.at(static_cast<std::size_t>(i)); }
    /// Length of the leading block, n_1.
    int leading_block() const { return p_.at(1); }
    std::string str() const;

private:
    std::vector<int> p_;
};

JumpSeq jump_sequence(const WeightVec& mu);

/// Half-sum of positive roots; for B the sum runs through i = n.
WeightVec rho(Series series, int n);

/// Dimension of V(mu) by the Weyl dimension formula.
long weyl_dim(const WeightVec& mu);

/// (mu + 2 rho, mu)
Rat casimir_eigenvalue(const WeightVec& mu);

/// One irreducible summand of V(eps_1) (x) V(mu).
struct PieriSummand {
    enum class Kind { Raise, Lower, Same };
    Kind kind;
    int index;  // i for mu +- eps_i; 0 for Same
    WeightVec weight;
};

/// Summands of V(eps_1) (x) V(mu), following the block structure of S(mu).
std::vector<PieriSummand> pieri_decompose(const WeightVec& mu);

/// Eigenvalue of the split Casimir on a summand, with its multiplicity.
struct SpectrumEntry {
    Rat eigenvalue;
    long multiplicity;
    std::vector<WeightVec> summands;
};

/// Spectrum of the split Casimir on V(eps_1) (x) V(mu); eigenvalues ascending and
/// pairwise distinct (summands sharing an eigenvalue are merged).
class Spectrum {
public:
    explicit Spectrum(std::vector<SpectrumEntry> entries);
    const std::vector<SpectrumEntry>& entries() const { return e_; }
    long total_multiplicity() const;
    /// Multiplicity of lambda, 0 if absent.
    long multiplicity(const Rat& lambda) const;
    std::vector<std::pair<Rat, std::size_t>> as_roots() const;
    std::string str() const;

private:
    std::vector<SpectrumEntry> e_;
};

/// Closed-form eigenvalue of the split Casimir on a Pieri summand.
Rat split_casimir_eigenvalue(const WeightVec& mu, const PieriSummand& summand);

Spectrum omega_tilde_spectrum(const WeightVec& mu);

/// One arithmetic progression {base - N} (step 1) or {base - N/2} (step 1/2).
struct Progression {
    Rat base;
    Rat step;
    std::string name;
    bool contains(const Rat& b) const;
};

/// Central charges excluded by the irreducibility theorems; membership is exact.
struct CriticalSet {
    WeightVec mu;
    /// For mu = 0 the set is exactly -N and the criterion is sharp.
    bool sharp = false;
    std::vector<Progression> parts;
    /// First part containing b, if any.
    std::optional<Progression> violated_by(const Rat& b) const;
    std::string str() const;
};

CriticalSet critical_b_set(const WeightVec& mu);

}  // namespace confrep

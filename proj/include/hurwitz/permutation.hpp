#pragma once

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

// Permutation of {0..d-1}; printed 1-based. Products apply left to right:
// (p * q)(x) = q(p(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int d);                     // identity
    explicit Permutation(std::vector<int> img);      // 0-based image, validated
    static Permutation transposition(int d, int a, int b);
    static Permutation from_cycles(int d, const std::vector<std::vector<int>>& cycles_1based);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& image() const { return img_; }
    Permutation operator*(const Permutation& q) const;
    Permutation inverse() const;
    bool is_identity() const;
    std::vector<std::vector<int>> cycles() const;    // 0-based, each cycle starts at its minimum
    std::string str() const;                         // cycle notation, 1-based, fixed points omitted
    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

Partition cycle_type(const Permutation& p);
bool is_transitive(const std::vector<Permutation>& perms, int d);

// τ_1 ... τ_r σ ρ = id under the left-to-right convention.
struct Factorization {
    int degree = 0;
    std::vector<Permutation> taus;
    Permutation sigma, rho;

    int r() const { return static_cast<int>(taus.size()); }
};

// Throws std::invalid_argument naming the violated property.
void validate_factorization(const Factorization& f);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// HURWITZ_BUDGET from the environment, else 10^9.
std::uint64_t default_budget();

int hurwitz_r(const Partition& mu, const Partition& nu, int g);   // throws if negative
// Size of the search: |class(μ)| · C(d,2)^r (saturating).
std::uint64_t oracle_cost(const Partition& mu, const Partition& nu, int g);
std::vector<Permutation> conjugacy_class(const Partition& mu);

Integer count_labeled_factorizations(const Partition& mu, const Partition& nu, int g,
                                     std::uint64_t budget = default_budget(), int threads = 0);

// Streams every transitive factorization; returns the number emitted.
std::uint64_t enumerate_factorizations(const Partition& mu, const Partition& nu, int g,
                                       const std::function<void(const Factorization&)>& sink,
                                       std::uint64_t budget = default_budget());

struct HurwitzValueSet {
    Partition mu, nu;
    int g = 0, d = 0, r = 0;
    Integer h_labeled;
    Rational h_bullet, h, h_bar;
};

HurwitzValueSet values_from_hbullet(const Partition& mu, const Partition& nu, int g, const Rational& hb);
HurwitzValueSet values_from_hbar(const Partition& mu, const Partition& nu, int g, const Rational& hbar);
HurwitzValueSet hurwitz_values(const Partition& mu, const Partition& nu, int g,
                               std::uint64_t budget = default_budget());

} // namespace hurwitz

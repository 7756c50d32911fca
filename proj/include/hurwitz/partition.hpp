#pragma once

#include "hurwitz/rational.hpp"

#include <string>
#include <vector>

namespace hurwitz {

// Integer partition, parts stored in non-increasing order. Parts are positive.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);   // sorts, rejects non-positive parts

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                               // |λ|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[i]; }
    int multiplicity(int k) const;

    Partition complete_to(int d) const;             // pad with parts equal to 1
    Partition without_ones() const;

    std::string str() const;                        // "3,2,1", "" for the empty partition
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Ordered vector of positive integers (the x_i / y_j of the formulas).
using Composition = std::vector<int>;

Integer aut(const Partition& p);                    // ∏ m_i(λ)!
Integer aut(const Composition& c);
Partition to_partition(const Composition& c);

// Accepts "3,2,1", "3 2 1", "2,1^3", "1^4", "-" or "" for empty.
Partition parse_partition(const std::string& s);

std::vector<Partition> partitions_of(int d);        // reverse lexicographic
std::vector<Composition> compositions_of(int n);

} // namespace hurwitz

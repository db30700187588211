#pragma once

#include "addcomb/big_count.hpp"
#include "addcomb/cyclic_group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace addcomb {

/// A subset of Z_N as a bit-vector of length N. Immutable in spirit:
/// operations return new sets; insert/erase exist for construction only.
class ResidueSet {
public:
    explicit ResidueSet(CyclicGroup group);
    ResidueSet(CyclicGroup group, const std::vector<std::int64_t>& members);

    static ResidueSet full(CyclicGroup group);

    const CyclicGroup& group() const { return group_; }
    std::int64_t modulus() const { return group_.modulus(); }

    bool contains(std::int64_t r) const { return bits_[static_cast<std::size_t>(group_.reduce(r))]; }
    void insert(std::int64_t r);
    void erase(std::int64_t r);

    std::int64_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    /// Members in ascending order.
    std::vector<std::int64_t> members() const;

    /// {-a mod N : a in A}.
    ResidueSet negated() const;

    /// Same set with residue 0 removed (B = R_alpha \ {0} and friends).
    ResidueSet without_zero() const;

    /// |A|/N as an exact rational.
    Rational density_exact() const { return Rational(size_, group_.modulus()); }
    double density() const { return static_cast<double>(size_) / static_cast<double>(group_.modulus()); }

    bool is_subset_of(const ResidueSet& other) const;

    bool operator==(const ResidueSet& o) const { return group_ == o.group_ && bits_ == o.bits_; }
    bool operator!=(const ResidueSet& o) const { return !(*this == o); }

    /// "{0,2} mod 4" — for error messages and report keys.
    std::string to_string() const;

private:
    CyclicGroup group_;
    std::vector<bool> bits_;
    std::int64_t size_ = 0;
};

} // namespace addcomb

#pragma once

#include "addcomb/cyclic_group.hpp"
#include "addcomb/residue_set.hpp"
#include "addcomb/rng.hpp"
#include "addcomb/scalars.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace addcomb {

/// Experiment input language for sets, one string per set:
///
///   N=8,list:1,2,5
///   N=16,random:delta=0.25,seed=7
///   N=20,ap:start=3,step=5,len=4
///   N=10,bohr:K=1;3,eps=0.25
///
/// Construction is deterministic for a fixed spec; the random kind draws one
/// SplitMix64 uniform per residue and keeps it iff u < delta (the comparison
/// is exact: u is a dyadic rational and delta is parsed as a rational).
struct SetSpec {
    enum class Kind { Explicit, Random, ArithmeticProgression, Bohr };

    CyclicGroup group{1};
    Kind kind = Kind::Explicit;
    std::string raw;

    std::vector<std::int64_t> elements;        // Explicit
    Rational density;                          // Random
    std::uint64_t seed = 0;                    // Random
    std::int64_t start = 0, step = 0, length = 0;  // ArithmeticProgression
    std::vector<std::int64_t> bohr_freqs;      // Bohr
    Eps bohr_eps;                              // Bohr
};

SetSpec parse_set_spec(std::string_view text);

ResidueSet make_set(const SetSpec& spec);

/// Convenience: parse + build.
ResidueSet make_set(std::string_view spec_text);

/// Uniform random subset with exact inclusion probability `density`.
ResidueSet random_set(CyclicGroup group, const Rational& density, std::uint64_t seed);
ResidueSet random_set(CyclicGroup group, const Rational& density, SplitMix64& rng);

} // namespace addcomb

#pragma once

#include <cstdint>

#include "totref/field.hpp"
#include "totref/kmatrix.hpp"

namespace totref {

/// Deterministic seeded generator (SplitMix64 core, platform independent).
///
/// Batch items draw from independent streams forked off one base seed, so
/// results are reproducible regardless of evaluation order.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : seed0_(seed), state_(seed) {}

    SplitRng fork(std::uint64_t stream) const;

    std::uint64_t next();
    /// Uniform value in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    bool coin() { return below(2) == 1; }
    /// Uniform integer in [lo, hi], inclusive.
    long int_in(long lo, long hi);

private:
    std::uint64_t seed0_;
    std::uint64_t state_;
};

/// Uniform residue over F_p; uniform integer of magnitude <= height over Q.
Scalar random_scalar(SplitRng& rng, const FieldSpec& field, long height = 5);

KMatrix random_kmatrix(SplitRng& rng, const FieldSpec& field, std::size_t rows, std::size_t cols,
                       long height = 5);

/// Retries random matrices until one is invertible over k.
KMatrix random_invertible_kmatrix(SplitRng& rng, const FieldSpec& field, std::size_t n,
                                  long height = 5);

}  // namespace totref

#include "totref/rng.hpp"

namespace totref {

namespace {

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

SplitRng SplitRng::fork(std::uint64_t stream) const {
    return SplitRng(mix(seed0_ ^ mix(stream + 0x632BE59BD9B4E019ULL)));
}

std::uint64_t SplitRng::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
}

std::uint64_t SplitRng::below(std::uint64_t bound) {
    if (bound == 0) throw Error("below(0)");
    // Rejection sampling keeps the draw unbiased and deterministic.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
}

long SplitRng::int_in(long lo, long hi) {
    if (lo > hi) throw Error("empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(below(span));
}

Scalar random_scalar(SplitRng& rng, const FieldSpec& field, long height) {
    if (field.kind() == FieldKind::Prime)
        return Scalar::from_int(field, static_cast<long>(rng.below(field.modulus())));
    return Scalar::from_int(field, rng.int_in(-height, height));
}

KMatrix random_kmatrix(SplitRng& rng, const FieldSpec& field, std::size_t rows, std::size_t cols,
                       long height) {
    KMatrix m(rows, cols, field);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_scalar(rng, field, height);
    return m;
}

KMatrix random_invertible_kmatrix(SplitRng& rng, const FieldSpec& field, std::size_t n, long height) {
    for (;;) {
        KMatrix m = random_kmatrix(rng, field, n, n, height);
        if (n == 0 || !det(m).is_zero()) return m;
    }
}

}  // namespace totref

#include "totref/conjugacy.hpp"

#include <algorithm>
#include <functional>

#include "totref/rng.hpp"

namespace totref {

namespace {

void check_comparable(const MatrixTuple& a, const MatrixTuple& b) {
    if (!(a.ring() == b.ring())) throw RingMismatch("tuples over different rings");
    if (a.n() != b.n()) throw ShapeError("tuples of different sizes");
}

bool is_conjugation_witness(const MatrixTuple& a, const MatrixTuple& b, const KMatrix& p) {
    auto inv = invert(p);
    if (!inv) return false;
    for (std::size_t j = 1; j <= a.count(); ++j)
        if (!(p * a.part(j) * *inv == b.part(j))) return false;
    return true;
}

KMatrix combine(const std::vector<KMatrix>& basis, const std::vector<Scalar>& coeffs) {
    KMatrix out(basis[0].rows(), basis[0].cols(), basis[0].field());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!coeffs[k].is_zero()) out = out + basis[k] * coeffs[k];
    return out;
}

// Enumerates all coefficient vectors over F_p in lexicographic order (last
// position fastest), invoking visit on each; stops early on a true return.
bool enumerate_fp_vectors(const FieldSpec& field, std::size_t len,
                          const std::function<bool(const std::vector<Scalar>&)>& visit) {
    const std::uint64_t p = field.modulus();
    std::vector<std::uint64_t> digits(len, 0);
    std::vector<Scalar> coeffs(len, Scalar::zero(field));
    for (;;) {
        if (visit(coeffs)) return true;
        std::size_t pos = len;
        for (;;) {
            if (pos == 0) return false;  // odometer wrapped all the way
            --pos;
            if (++digits[pos] < p) {
                coeffs[pos] = Scalar::from_int(field, static_cast<long>(digits[pos]));
                break;
            }
            digits[pos] = 0;
            coeffs[pos] = Scalar::zero(field);
        }
    }
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (std::size_t k = 0; k < exp; ++k) {
        if (out > cap / base) return cap + 1;
        out *= base;
    }
    return out;
}

}  // namespace

std::vector<KMatrix> intertwiner_space(const MatrixTuple& a, const MatrixTuple& b) {
    check_comparable(a, b);
    const FieldSpec& field = a.ring().field();
    const std::size_t n = a.n();
    const std::size_t unknowns = n * n;

    // Row (j,r,c): sum_t P[r][t]·A_j[t][c] - sum_t B_j[r][t]·P[t][c] = 0.
    KMatrix system(a.count() * unknowns, unknowns, field);
    std::size_t eq = 0;
    for (std::size_t j = 1; j <= a.count(); ++j) {
        const KMatrix& aj = a.part(j);
        const KMatrix& bj = b.part(j);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                for (std::size_t t = 0; t < n; ++t) {
                    if (!aj.at(t, c).is_zero()) system.at(eq, r * n + t) += aj.at(t, c);
                    if (!bj.at(r, t).is_zero()) system.at(eq, t * n + c) -= bj.at(r, t);
                }
                ++eq;
            }
    }

    std::vector<KMatrix> basis;
    for (const auto& v : rank_and_kernel(system).kernel) {
        KMatrix p(n, n, field);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) p.at(r, c) = v[r * n + c];
        basis.push_back(std::move(p));
    }
    return basis;
}

std::vector<std::vector<Scalar>> word_char_polys(const MatrixTuple& t) {
    std::vector<std::vector<Scalar>> polys;
    const std::size_t i = t.count();
    // Words over {1..i} of length 1..3, in lexicographic order.
    for (std::size_t a = 1; a <= i; ++a) {
        polys.push_back(char_poly(t.part(a)));
        for (std::size_t b = 1; b <= i; ++b) {
            polys.push_back(char_poly(t.part(a) * t.part(b)));
            for (std::size_t c = 1; c <= i; ++c)
                polys.push_back(char_poly(t.part(a) * t.part(b) * t.part(c)));
        }
    }
    return polys;
}

ConjugacyDecision are_conjugate(const MatrixTuple& a, const MatrixTuple& b,
                                const CertaintyPolicy& policy) {
    check_comparable(a, b);
    const FieldSpec& field = a.ring().field();
    const std::size_t n = a.n();

    // Conjugation preserves every word characteristic polynomial, so a
    // mismatch is a certain no. Never used in the positive direction.
    if (word_char_polys(a) != word_char_polys(b))
        return {ConjugacyDecision::Status::NotConjugate, Certainty::Certain, std::nullopt, 0,
                "invariant_filter"};

    std::vector<KMatrix> basis = intertwiner_space(a, b);
    const std::size_t s = basis.size();
    if (s == 0)
        return {ConjugacyDecision::Status::NotConjugate, Certainty::Certain, std::nullopt, 0,
                "intertwiner_zero"};

    auto try_witness = [&](const std::vector<Scalar>& coeffs) -> std::optional<KMatrix> {
        KMatrix p = combine(basis, coeffs);
        if (det(p).is_zero()) return std::nullopt;
        if (!is_conjugation_witness(a, b, p)) throw Error("internal: invertible intertwiner failed verification");
        return p;
    };

    if (field.is_prime_field()) {
        if (checked_pow(field.modulus(), s, policy.budget) <= policy.budget) {
            std::optional<KMatrix> witness;
            enumerate_fp_vectors(field, s, [&](const std::vector<Scalar>& coeffs) {
                witness = try_witness(coeffs);
                return witness.has_value();
            });
            if (witness)
                return {ConjugacyDecision::Status::Conjugate, Certainty::Certain, witness, s,
                        "exhaustive"};
            return {ConjugacyDecision::Status::NotConjugate, Certainty::Certain, std::nullopt, s,
                    "exhaustive"};
        }
    } else if (checked_pow(n + 1, s, policy.budget) <= policy.budget) {
        // det on the intertwiner space is a polynomial of degree <= n in each
        // coefficient, so vanishing on the full grid {0..n}^s certifies that
        // no invertible element exists at all.
        std::vector<std::size_t> digits(s, 0);
        for (;;) {
            std::vector<Scalar> coeffs;
            coeffs.reserve(s);
            for (std::size_t k = 0; k < s; ++k)
                coeffs.push_back(Scalar::from_int(field, static_cast<long>(digits[k])));
            if (auto witness = try_witness(coeffs))
                return {ConjugacyDecision::Status::Conjugate, Certainty::Certain, witness, s, "grid"};
            std::size_t pos = s;
            bool done = true;
            while (pos > 0) {
                --pos;
                if (++digits[pos] <= n) {
                    done = false;
                    break;
                }
                digits[pos] = 0;
            }
            if (done) break;
        }
        return {ConjugacyDecision::Status::NotConjugate, Certainty::Certain, std::nullopt, s, "grid"};
    }

    // Too large for certainty: seeded random probes. Any hit is still an
    // exact yes; exhausting the samples is only evidence of absence.
    SplitRng rng(policy.seed);
    for (std::size_t trial = 0; trial < policy.samples; ++trial) {
        std::vector<Scalar> coeffs;
        coeffs.reserve(s);
        for (std::size_t k = 0; k < s; ++k)
            coeffs.push_back(random_scalar(rng, field, policy.sample_height));
        if (auto witness = try_witness(coeffs))
            return {ConjugacyDecision::Status::Conjugate, Certainty::Certain, witness, s, "sampled"};
    }
    return {ConjugacyDecision::Status::Inconclusive, Certainty::HighConfidence, std::nullopt, s,
            "sampled"};
}

bool brute_force_conjugate(const MatrixTuple& a, const MatrixTuple& b, std::uint64_t budget) {
    check_comparable(a, b);
    const FieldSpec& field = a.ring().field();
    if (!field.is_prime_field()) throw Error("brute force requires a finite field");
    const std::size_t n = a.n();
    if (checked_pow(field.modulus(), n * n, budget) > budget)
        throw BudgetExceeded("GL enumeration would exceed the budget");

    bool found = false;
    enumerate_fp_vectors(field, n * n, [&](const std::vector<Scalar>& coeffs) {
        KMatrix p(n, n, field);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) p.at(r, c) = coeffs[r * n + c];
        if (det(p).is_zero()) return false;
        if (is_conjugation_witness(a, b, p)) {
            found = true;
            return true;
        }
        return false;
    });
    return found;
}

IndecomposabilityAnswer is_indecomposable_probe(const MatrixTuple& t,
                                                const CertaintyPolicy& policy) {
    const FieldSpec& field = t.ring().field();
    std::vector<KMatrix> endo = intertwiner_space(t, t);
    const std::size_t s = endo.size();
    const KMatrix id = KMatrix::identity(t.n(), field);

    // End always contains the identity; a 1-dimensional End is the field
    // itself, which is local, so the module is indecomposable.
    if (s == 1) return {IndecomposabilityAnswer::Status::Indecomposable, std::nullopt, "end_dim_1"};

    auto nontrivial_idempotent = [&](const std::vector<Scalar>& coeffs) -> std::optional<KMatrix> {
        KMatrix e = combine(endo, coeffs);
        if (e.is_zero() || e == id) return std::nullopt;
        if (e * e == e) return e;
        return std::nullopt;
    };

    if (field.is_prime_field()) {
        if (checked_pow(field.modulus(), s, policy.budget) <= policy.budget) {
            std::optional<KMatrix> idem;
            enumerate_fp_vectors(field, s, [&](const std::vector<Scalar>& coeffs) {
                idem = nontrivial_idempotent(coeffs);
                return idem.has_value();
            });
            if (idem) return {IndecomposabilityAnswer::Status::Decomposable, idem, "exhaustive"};
            return {IndecomposabilityAnswer::Status::Indecomposable, std::nullopt, "exhaustive"};
        }
        return {IndecomposabilityAnswer::Status::Unknown, std::nullopt, "budget_exceeded"};
    }

    // Over Q a grid can find an idempotent (decomposable is certified by the
    // witness) but cannot certify there is none.
    const long g = 2;
    if (checked_pow(2 * g + 1, s, policy.budget) <= policy.budget) {
        std::vector<long> digits(s, -g);
        for (;;) {
            std::vector<Scalar> coeffs;
            coeffs.reserve(s);
            for (std::size_t k = 0; k < s; ++k) coeffs.push_back(Scalar::from_int(field, digits[k]));
            if (auto idem = nontrivial_idempotent(coeffs))
                return {IndecomposabilityAnswer::Status::Decomposable, idem, "grid"};
            std::size_t pos = s;
            bool done = true;
            while (pos > 0) {
                --pos;
                if (++digits[pos] <= g) {
                    done = false;
                    break;
                }
                digits[pos] = -g;
            }
            if (done) break;
        }
    }
    return {IndecomposabilityAnswer::Status::Unknown, std::nullopt, "grid_exhausted"};
}

std::vector<MatrixTuple> wild_family(const RingDescriptor& ring, std::size_t n,
                                     const std::vector<Scalar>& lambdas) {
    for (std::size_t a = 0; a < lambdas.size(); ++a)
        for (std::size_t b = a + 1; b < lambdas.size(); ++b)
            if (lambdas[a] == lambdas[b])
                throw DuplicateLambdas("family parameters must be pairwise distinct");

    std::vector<MatrixTuple> family;
    family.reserve(lambdas.size());
    for (const Scalar& lambda : lambdas) {
        KMatrix jordan(n, n, ring.field());
        for (std::size_t k = 0; k < n; ++k) {
            jordan.at(k, k) = lambda;
            if (k + 1 < n) jordan.at(k, k + 1) = Scalar::one(ring.field());
        }
        std::vector<KMatrix> parts{std::move(jordan)};
        for (std::size_t j = 2; j <= ring.i(); ++j) parts.emplace_back(n, n, ring.field());
        family.emplace_back(ring, std::move(parts));
    }

    // Distinct eigenvalues separate the first components; the decision
    // procedure must agree.
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b) {
            ConjugacyDecision d = are_conjugate(family[a], family[b]);
            if (d.status != ConjugacyDecision::Status::NotConjugate ||
                d.certainty != Certainty::Certain)
                throw Error("internal: family members failed the non-conjugacy verification");
        }
    return family;
}

}  // namespace totref

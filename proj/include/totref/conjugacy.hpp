#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "totref/tuples.hpp"

namespace totref {

/// Basis of the intertwiner space {P : P·A_j = B_j·P for all j}, computed as
/// the kernel of the stacked linear system (n^2 unknowns, i·n^2 equations),
/// in deterministic echelon order.
std::vector<KMatrix> intertwiner_space(const MatrixTuple& a, const MatrixTuple& b);

/// Budgets for the conjugacy decision. Exhaustive scans and grids never
/// exceed `budget` candidates; when certainty is out of reach, `samples`
/// random probes with coefficients of magnitude up to `sample_height`
/// (seeded by `seed`) are used instead.
struct CertaintyPolicy {
    std::uint64_t budget = 1u << 20;
    std::size_t samples = 32;
    std::uint64_t seed = 0;
    long sample_height = 1'000'000;
};

enum class Certainty { Certain, HighConfidence };

struct ConjugacyDecision {
    enum class Status { Conjugate, NotConjugate, Inconclusive };

    Status status;
    Certainty certainty;
    std::optional<KMatrix> witness;  // verified exactly when present
    std::size_t intertwiner_dim = 0;
    std::string method;

    bool yes() const { return status == Status::Conjugate; }
};

/// Decides whether the tuples are simultaneously conjugate.
///
/// Yes-decisions always carry an exactly verified witness. No-decisions are
/// certain when the intertwiner space is zero, when an invariant (a word
/// characteristic polynomial) separates the tuples, or when an exhaustive
/// scan or full evaluation grid rules every candidate out; otherwise the
/// sampled search reports an inconclusive high-confidence no.
ConjugacyDecision are_conjugate(const MatrixTuple& a, const MatrixTuple& b,
                                const CertaintyPolicy& policy = {});

/// Independent oracle over a prime field: enumerates all of GL_n(F_p).
/// Throws BudgetExceeded when p^(n^2) is past the budget.
bool brute_force_conjugate(const MatrixTuple& a, const MatrixTuple& b,
                           std::uint64_t budget = (1u << 20));

struct IndecomposabilityAnswer {
    enum class Status { Indecomposable, Decomposable, Unknown };

    Status status;
    std::optional<KMatrix> idempotent;  // nontrivial splitting idempotent
    std::string method;
};

/// Searches End(t) for a nontrivial idempotent. Exhaustive over small prime
/// fields (certain either way); over Q a bounded grid can certify only the
/// decomposable direction, so absence reports Unknown.
IndecomposabilityAnswer is_indecomposable_probe(const MatrixTuple& t,
                                                const CertaintyPolicy& policy = {});

/// The family t_lambda = (J_n(lambda), 0, ..., 0) for the given eigenvalues;
/// pairwise non-conjugacy is re-verified before returning. Repeated lambdas
/// are a DuplicateLambdas error.
std::vector<MatrixTuple> wild_family(const RingDescriptor& ring, std::size_t n,
                                     const std::vector<Scalar>& lambdas);

/// Characteristic polynomials of all words of length 1..3 in the tuple's
/// matrices — a conjugation invariant used as a fast negative filter.
std::vector<std::vector<Scalar>> word_char_polys(const MatrixTuple& t);

}  // namespace totref

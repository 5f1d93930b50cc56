#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "totref/modrep.hpp"
#include "totref/tuples.hpp"

namespace totref {

/// Exact verdict on the period-2 complex ... -> S^n -d-> S^n -sigma-> S^n -> ...
/// and on its Hom(-, S_i)-dual (the transposed matrices). Exactness at both
/// spots is equivalent to rank(flatten d) + rank(flatten sigma) covering the
/// full coordinate space, given that the compositions vanish.
struct AcyclicityReport {
    std::size_t n = 0;
    std::size_t total = 0;  // 2(i+1)·n
    std::size_t rank_d = 0, rank_sigma = 0;
    std::size_t dual_rank_d = 0, dual_rank_sigma = 0;
    bool composition_zero = false;
    bool exact = false;
    bool dual_composition_zero = false;
    bool dual_exact = false;

    bool pass() const { return composition_zero && exact && dual_composition_zero && dual_exact; }
};

/// Checks the candidate complete resolution built from the tuple.
AcyclicityReport total_acyclicity_check(const MatrixTuple& t);

/// Raw-matrix variant: checks the alternating complex on (d, sigma); when no
/// companion is supplied the period-1 complex (sigma = d) is tested.
AcyclicityReport total_acyclicity_check(const SMatrix& d, const std::optional<SMatrix>& sigma = {});

/// dim_k Ext^j(M, S_i) for j = 1..depth, from the minimal free resolution
/// and the transpose rule for Hom of a map between free modules.
std::vector<std::size_t> ext_oracle(const FDModule& m, std::size_t depth);

/// Basis of the k-space Hom_{S_i}(A, B) of module homomorphisms.
std::vector<KMatrix> hom_space(const FDModule& from, const FDModule& to);

/// Hom as a module: (s·f)(v) = s·f(v). Carries the chosen basis so elements
/// of the abstract module can be mapped back to concrete homomorphisms.
struct HomModule {
    FDModule module;
    std::vector<KMatrix> basis;
};

HomModule hom_module(const FDModule& from, const FDModule& to);
HomModule dual_module(const FDModule& m);

/// Whether the canonical evaluation M -> Hom(Hom(M,S),S) is bijective.
bool biduality_check(const FDModule& m);

/// The structural conditions a module category admitting nontrivial totally
/// reflexive modules must satisfy, specialized to S_i and the given tuple:
/// (a) ann(m) = m^2, (b) length(m^2) = e-1 and length(S_i) = 2e,
/// (c) length(coker) = n·e, (f) constant Betti numbers with linear
/// differentials.
struct YoshinoReport {
    std::size_t e = 0;
    std::size_t ring_dim = 0;
    std::size_t socle = 0;
    std::size_t m2_dim = 0;
    std::size_t module_length = 0;
    std::size_t expected_length = 0;
    std::size_t min_gens = 0;
    std::vector<std::size_t> betti;  // ranks of F_1..F_depth
    bool a_ann_m_equals_m2 = false;
    bool b_lengths = false;
    bool c_module_length = false;
    bool f_constant_betti = false;
    bool f_linear_differentials = false;

    bool pass() const {
        return a_ann_m_equals_m2 && b_lengths && c_module_length && f_constant_betti &&
               f_linear_differentials;
    }
};

YoshinoReport yoshino_conditions(const MatrixTuple& t, std::size_t depth = 6);

/// Module-level variant for negative controls: checks (c) and (f) against an
/// expected generator count n on an arbitrary module.
YoshinoReport yoshino_conditions(const FDModule& m, std::size_t n, std::size_t depth = 6);

/// Ring-only part of the report (conditions (a) and (b)).
YoshinoReport yoshino_ring_conditions(const RingDescriptor& ring);

}  // namespace totref

/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "osr/ideals.hpp"
#include "osr/lattice.hpp"
#include "osr/radical.hpp"

namespace osr {

/// A finite topological space. Open sets are point subsets kept in
/// canonical order; they contain the empty and the full set and are closed
/// under binary union and intersection.
struct FiniteTopSpace {
    std::vector<std::string> points;
    std::vector<Subset> opens;
    /// Optional named generating family; every open is a union of these.
    std::vector<std::pair<std::string, Subset>> basis;

    std::size_t size() const { return points.size(); }
    Subset all_points() const { return Subset::full(points.size()); }
    bool is_open(Subset s) const;
    /// Smallest closed set containing s.
    Subset closure(Subset s) const;
};

/// Closes `generators` under finite intersections and unions and keeps them
/// as the basis. Throws InvalidArgument if they do not form a basis and
/// SizeLimit beyond 64 points.
FiniteTopSpace space_generated_by(std::vector<std::string> points,
                                  std::vector<std::pair<std::string, Subset>> generators);

/// Checks the open-set axioms and the basis property. Throws InvalidArgument.
void validate_space(const FiniteTopSpace& x);

/// x ⊑ y iff x lies in the closure of {y}.
Relation specialization_order(const FiniteTopSpace& x);

/// Prime ideals as Idl(A) indices, in canonical order. Cross-checked
/// against kernels of subadditive morphisms A -> 2; throws CrossCheckFailure.
std::vector<Index> enumerate_primes(const IdealQuantale& idl);
std::vector<Index> enumerate_maximal(const IdealQuantale& idl);
bool is_prime_ideal(const Semiring& a, Subset s);

struct MaximalPrimeReport {
    std::size_t maximal = 0;
    std::size_t primes = 0;
    std::vector<Index> prime_not_maximal;
};

/// Every maximal ideal is prime. Throws LemmaViolation naming x, y with
/// x, y outside a maximal ideal but xy inside.
MaximalPrimeReport check_maximal_implies_prime(const IdealQuantale& idl);

struct DegeneracyReport {
    bool everything_below_zero = false;  // (1)
    bool one_below_zero = false;         // (2)
    bool no_primes = false;              // (3)
    bool no_maximal = false;             // (4)
    bool zero_ideal_is_whole = false;
};

/// The four conditions agree, and (1) holds iff <0> = A. Throws
/// EquivalenceViolation.
DegeneracyReport check_degeneracy_equivalence(const IdealQuantale& idl);

/// Points: prime ideals. Basis: D_x = {P | x not in P}. Throws InternalMismatch
/// unless D_x ∩ D_y = D_xy, D_0 = ∅ and D_1 = everything.
FiniteTopSpace spec_space(const IdealQuantale& idl);

/// Points: frame homomorphisms F -> 2, one per meet-prime p (kernel ↓p).
/// Opens: U_a = {p | a not below p}.
FiniteTopSpace pt_of_frame(const FiniteLattice& f);

/// Open sets under inclusion, as a frame.
FiniteLattice opens_frame(const FiniteTopSpace& x);

struct SpaceIso {
    std::vector<Index> forward;   // X point -> Y point
    std::vector<Index> backward;  // Y point -> X point
    std::vector<Index> open_map;  // X open index -> Y open index
    bool verified = false;
};

/// Verifies a candidate point bijection is a homeomorphism.
SpaceIso make_space_iso(const FiniteTopSpace& x, const FiniteTopSpace& y, std::vector<Index> forward);

/// pt(Rad(A)) ≅ Spec(A) via p -> p∘sqrt<->, with D_x matched to U_sqrt<x>.
/// Throws HomeoFailure.
SpaceIso check_pt_rad_equals_spec(const RadicalFrame& rad);

struct FrameIsoReport {
    std::vector<Index> isomorphism;  // Rad(A) index -> O(Spec A) index
};

/// I -> {P in Spec | I not inside P} is a frame isomorphism sending
/// sqrt<x> to D_x. Throws IsoFailure.
FrameIsoReport check_rad_is_opens_of_spec(const RadicalFrame& rad);

/// For every ideal: prime ideal iff prime element of Idl(A). Returns the
/// number of primes. Throws CorrespondenceFailure.
std::size_t check_prime_element_correspondence(const IdealQuantale& idl);

struct SoberReport {
    bool t0 = false;
    bool sober = false;
    std::string witness;
};

SoberReport check_sober(const FiniteTopSpace& x);

/// X ≅ pt(O(X)) via x -> (U -> [x in U]). Requires X sober.
SpaceIso check_pt_of_opens(const FiniteTopSpace& x);
/// F ≅ O(pt(F)) via a -> U_a. Returns the table.
std::vector<Index> check_opens_of_pt(const FiniteLattice& f);

} // namespace osr

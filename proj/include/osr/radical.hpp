/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "osr/ideals.hpp"
#include "osr/lattice.hpp"

namespace osr {

/// Least radical ideal containing the ideal i. Roots are searched up to
/// exponent |A|; throws InternalMismatch if some power sequence has not
/// cycled by then.
Ideal radical_closure(const Semiring& a, const Ideal& i);

/// x^n in s implies x in s, for 1 <= n <= |A|.
bool is_radical(const Semiring& a, Subset s);

/// Rad(A): radical ideals under inclusion, a finite frame.
class RadicalFrame {
public:
    /// Keeps its own copy of idl. Throws InternalMismatch if the frame law fails.
    static RadicalFrame compute(const IdealQuantale& idl);

    const IdealQuantale& ideals() const { return *idl_; }
    const Semiring& owner() const { return idl_->owner(); }

    std::size_t size() const { return members_.size(); }
    const std::vector<Subset>& members() const { return members_; }
    Subset member(Index i) const { return members_[i]; }
    std::optional<Index> index_of(Subset s) const;
    std::string label(Index i) const { return owner().subset_label(members_[i]); }

    /// Position of a radical ideal inside Idl(A).
    Index ideal_index(Index i) const { return ideal_index_[i]; }
    /// Index of the radical closure of the given Idl(A) element.
    Index radical_of(Index ideal) const { return radical_of_[ideal]; }
    /// Index of sqrt<x>.
    Index radical_principal(Index x) const { return radical_of_[idl_->principal_index(x)]; }

    /// Frame with multiplication = meet, unit = top.
    const FiniteLattice& lattice() const { return lattice_; }

private:
    RadicalFrame() = default;

    std::shared_ptr<const IdealQuantale> idl_;
    std::vector<Subset> members_;
    std::vector<Index> ideal_index_;
    std::vector<Index> radical_of_;
    FiniteLattice lattice_ = chain_lattice(1);
};

/// S(Q) for a finite integral quantale together with the reflector.
struct SemiprimeReflection {
    FiniteLattice frame = chain_lattice(1);
    std::vector<Index> members;    // S(Q) index -> Q index
    std::vector<Index> reflector;  // Q index -> S(Q) index
};

bool is_semiprime(const FiniteLattice& q, Index p);

/// Throws NotIntegral, or InternalMismatch if the adjunction or the frame
/// law fails.
SemiprimeReflection semiprime_elements(const FiniteLattice& q);

/// g -> g∘sqrt<->, from frame homomorphisms Rad(A) -> F onto subadditive
/// morphisms A -> F, must be a bijection. Throws NotAQuantale if F is not
/// a frame, SizeLimit, or UniversalityFailure.
UniversalityReport check_rad_universal(const RadicalFrame& rad, const FiniteLattice& f);

/// I -> join of f(x) over x in I, for a subadditive f into the frame F.
std::vector<Index> extend_to_frame_hom(const RadicalFrame& rad, const MorphismTable& f, const FiniteLattice& frame);

/// L(A), the distributive lattice reflection, realised on Rad(A).
struct ReflectionResult {
    FiniteLattice lattice = chain_lattice(1);
    std::vector<Index> universal_map;  // x -> sqrt<x>
    std::vector<Index> radical_index;  // lattice element -> RadicalFrame index
    std::size_t test_lattices = 0;     // distributive lattices used for the universal property
};

/// Certifies the presentation relations and generation by the image, then
/// the universal property against every distributive lattice of size <= 6.
/// Throws PresentationViolation or UniversalityFailure.
ReflectionResult dlat_reflection(const RadicalFrame& rad);

struct CoherenceReport {
    std::size_t rad_size = 0;
    std::size_t idl_of_reflection_size = 0;
    std::vector<Index> isomorphism;  // Rad(A) index -> Idl(L(A)) index
};

/// Builds Rad(A) ≅ Idl(L(A)) explicitly. Throws IsoFailure.
CoherenceReport check_coherence(const RadicalFrame& rad);

/// Distributive lattices with at most max_size elements, one per
/// isomorphism class, built as downset lattices of posets.
std::vector<FiniteLattice> small_distributive_lattices(std::size_t max_size = 6);

/// Isomorphism search for small lattices (permutations of the carrier).
bool lattices_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

} // namespace osr

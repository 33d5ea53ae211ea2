/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "osr/lattice.hpp"
#include "osr/morphism.hpp"
#include "osr/semiring.hpp"

namespace osr {

/// A subset that is downward closed, contains 0, is closed under + and
/// absorbs multiplication. `owner` is an identity tag, not ownership.
struct Ideal {
    const Semiring* owner = nullptr;
    Subset members;

    friend bool operator==(const Ideal&, const Ideal&) = default;
};

bool is_ideal(const Semiring& a, Subset s);

/// Least ideal containing s, by fixed-point closure.
Ideal ideal_generated(const Semiring& a, Subset s);

/// Same set as ideal_generated, evaluated directly from the bounded
/// existential "z <= s1*y1 + ... + sm*ym". Sums of length m <= |A| are
/// explored; throws InternalMismatch if the reachable sums have not
/// stabilised by then.
Subset ideal_generated_by_formula(const Semiring& a, Subset s);

/// {z | exists y. z <= x*y}, cross-checked against ideal_generated(a, {x}).
/// Throws InternalMismatch on disagreement.
Ideal principal(const Semiring& a, Index x);

/// Throws OwnerMismatch if any ideal belongs to another semiring.
Ideal ideal_join(const Semiring& a, std::span<const Ideal> family);
Ideal ideal_product(const Semiring& a, const Ideal& i, const Ideal& j);

/// <S>·<T> == <ST>.
bool check_product_generators(const Semiring& a, Subset s, Subset t);

/// Idl(A): every ideal, in canonical order, with containment, join, meet
/// and product tables. Indices below refer to positions in ideals().
class IdealQuantale {
public:
    /// Enumerates all ideals and verifies the integral-quantale laws on the
    /// tables. Throws SizeLimit or InternalMismatch.
    static IdealQuantale compute(SemiringPtr a);

    const Semiring& owner() const { return *owner_; }
    const SemiringPtr& owner_ptr() const { return owner_; }

    std::size_t size() const { return ideals_.size(); }
    const std::vector<Subset>& ideals() const { return ideals_; }
    Subset ideal(Index i) const { return ideals_[i]; }
    std::optional<Index> index_of(Subset s) const;
    std::string label(Index i) const { return owner_->subset_label(ideals_[i]); }

    bool le(Index i, Index j) const { return lattice_.le(i, j); }
    Index join(Index i, Index j) const { return lattice_.join(i, j); }
    Index meet(Index i, Index j) const { return lattice_.meet(i, j); }
    Index product(Index i, Index j) const { return lattice_.mul(i, j); }
    Index bottom() const { return lattice_.bottom(); }
    Index top() const { return lattice_.top(); }

    /// Index of <x>.
    Index principal_index(Index x) const { return principal_[x]; }

    /// The quantale as a lattice with multiplication = product, unit = top.
    const FiniteLattice& lattice() const { return lattice_; }
    /// Idl(A) as an ordered semiring (join as +, product as *).
    const SemiringPtr& as_semiring() const { return semiring_; }

    /// Re-derives the ideal list by filtering every subset and re-checks
    /// the quantale laws. Returns a witness on failure.
    std::optional<std::string> verify() const;

private:
    IdealQuantale() = default;

    SemiringPtr owner_;
    std::vector<Subset> ideals_;
    std::vector<Index> principal_;
    FiniteLattice lattice_ = chain_lattice(1);
    SemiringPtr semiring_;
};

/// x -> <x> as a morphism into Idl(A) viewed as a semiring. Throws
/// InternalMismatch unless it is a subadditive morphism.
MorphismTable canonical_embedding(const IdealQuantale& idl);

/// I -> join of f(x) over x in I. `f` must target build_from_quantale(q)
/// (checked structurally). Throws NotSubadditive, NotIntegral, or
/// UniversalityFailure if the extension is not a quantale homomorphism
/// with g(<x>) = f(x).
std::vector<Index> extend_to_quantale_hom(const IdealQuantale& idl, const MorphismTable& f, const FiniteLattice& q);

struct UniversalityReport {
    std::size_t homomorphisms = 0;  // lattice side
    std::size_t morphisms = 0;      // semiring side
};

/// g -> g∘<->, from quantale homomorphisms Idl(A) -> Q onto subadditive
/// morphisms A -> Q, must be a bijection inverse to extension. Throws
/// SizeLimit, NotIntegral or UniversalityFailure.
UniversalityReport check_idl_universal(const IdealQuantale& idl, const FiniteLattice& q);

/// Idl(f): I -> <f(I)>. Throws NotSubadditive.
std::vector<Index> idl_map(const MorphismTable& f, const IdealQuantale& source, const IdealQuantale& target);

} // namespace osr

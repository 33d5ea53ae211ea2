/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#include "osr/subset.hpp"

namespace osr {

bool Relation::is_reflexive() const
{
    for (Index i = 0; i < n_; ++i) {
        if (!(*this)(i, i)) {
            return false;
        }
    }
    return true;
}

bool Relation::is_transitive() const
{
    for (Index i = 0; i < n_; ++i) {
        for (Index j = 0; j < n_; ++j) {
            if (!(*this)(i, j)) {
                continue;
            }
            for (Index k = 0; k < n_; ++k) {
                if ((*this)(j, k) && !(*this)(i, k)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool Relation::is_antisymmetric() const
{
    for (Index i = 0; i < n_; ++i) {
        for (Index j = i + 1; j < n_; ++j) {
            if ((*this)(i, j) && (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

Relation Relation::closure() const
{
    Relation r = *this;
    for (Index i = 0; i < n_; ++i) {
        r.set(i, i);
    }
    for (Index k = 0; k < n_; ++k) {
        for (Index i = 0; i < n_; ++i) {
            if (!r(i, k)) {
                continue;
            }
            for (Index j = 0; j < n_; ++j) {
                if (r(k, j)) {
                    r.set(i, j);
                }
            }
        }
    }
    return r;
}

Relation Relation::transpose() const
{
    Relation r(n_);
    for (Index i = 0; i < n_; ++i) {
        for (Index j = 0; j < n_; ++j) {
            r.set(j, i, (*this)(i, j));
        }
    }
    return r;
}

} // namespace osr

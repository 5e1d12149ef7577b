#pragma once

/**
 * @file base_category.hpp
 * @brief The base of enrichment: a strict skeletal pointed braided rigid
 *        monoidal category of G-graded spaces with bicharacter braiding.
 *
 * A BaseCategory fixes the grading group, the bicharacter chi and a single
 * global scalar order m; every chi value and every matrix entry downstream
 * lives in Q(zeta_m).
 */

#include "vcwb/group.hpp"

#include <memory>

namespace vcwb {

struct BaseCategory {
    GroupSpec group;
    Bicharacter chi;

    long scalar_order() const { return chi.root_order; }

    Cyclotomic zero() const { return Cyclotomic::zero(scalar_order()); }
    Cyclotomic one() const { return Cyclotomic::one(scalar_order()); }
    Cyclotomic scalar(const Rational& r) const { return Cyclotomic(scalar_order(), r); }

    Cyclotomic chi_value(const Grade& g, const Grade& h) const {
        return chi.value(group, g, h);
    }
    Cyclotomic chi_value_inv(const Grade& g, const Grade& h) const {
        return chi.value_inv(group, g, h);
    }

    Report validate() const { return validate_bicharacter(group, chi); }
};

using BasePtr = std::shared_ptr<const BaseCategory>;

inline BasePtr make_base(GroupSpec G, Bicharacter chi) {
    return std::make_shared<const BaseCategory>(BaseCategory{std::move(G), std::move(chi)});
}

/// Super vector spaces: G = Z/2 with chi(1,1) = -1.
inline BasePtr base_svec() {
    GroupSpec G{{2}};
    return make_base(G, Bicharacter::from_generators(G, 2, {{1}}));
}

/// G = Z/4 with chi(a,b) = i^{ab} in Q(i).
inline BasePtr base_z4() {
    GroupSpec G{{4}};
    return make_base(G, Bicharacter::from_generators(G, 4, {{1}}));
}

} // namespace vcwb

#pragma once

// Shared test fixtures: the two base categories, the one-object trivial
// V-category, and self-enrichment windows at desk scale.

#include "vcwb/vcategory.hpp"

#include <random>

namespace vcwb::fixtures {

inline GradedObject obj(const BasePtr& B, std::initializer_list<size_t> mults) {
    GradedObject u;
    auto elems = B->group.elements();
    size_t i = 0;
    for (size_t m : mults) {
        if (m > 0) u.mult[elems[i]] = m;
        ++i;
    }
    return u;
}

/// All nonzero objects of total dimension <= cap, in a deterministic order.
inline std::vector<GradedObject> objects_up_to(const BasePtr& B, size_t cap) {
    auto elems = B->group.elements();
    std::vector<GradedObject> out;
    std::vector<size_t> m(elems.size(), 0);
    while (true) {
        size_t i = 0;
        while (i < m.size()) {
            if (++m[i] <= cap) break;
            m[i] = 0;
            ++i;
        }
        if (i == m.size()) break;
        size_t total = 0;
        for (size_t x : m) total += x;
        if (total == 0 || total > cap) continue;
        GradedObject u;
        for (size_t j = 0; j < elems.size(); ++j)
            if (m[j]) u.mult[elems[j]] = m[j];
        out.push_back(u);
    }
    return out;
}

/// FIX-TRIV: the one-object V-category over sVec with endo hom 1_V.
inline VCatPtr fix_triv(const BasePtr& B) {
    auto C = std::make_shared<VCategory>();
    C->base = B;
    C->objects = {"*"};
    C->hom = {{Word::empty()}};
    C->comp[{0, 0, 0}] = identity_morphism(B, Word::empty());
    C->ident.push_back(identity_morphism(B, Word::empty()));
    return C;
}

/// FIX-VHAT: self-enrichment of sVec on all objects of total dim <= 3.
inline VCatPtr fix_vhat() { return self_enrichment(base_svec(), objects_up_to(base_svec(), 3)); }

/// The analogous window over Z/4, kept at total dim <= 2 for speed.
inline VCatPtr fix_vhat_z4() { return self_enrichment(base_z4(), objects_up_to(base_z4(), 2)); }

/// The one-object V-category with endo hom 1 + Pi and exterior-algebra
/// composition (odd * odd = 0). Strongly unital and oplax tensored at
/// weights {1, Pi}, but its oplaxitor at (Pi, Pi) vanishes: the standard
/// non-strong example.
inline VCatPtr fix_grassmann() {
    auto B = base_svec();
    auto C = std::make_shared<VCategory>();
    C->base = B;
    C->objects = {"*"};
    GradedObject L = obj(B, {1, 1});
    Word h = Word::single(L);
    C->hom = {{h}};
    Morphism comp(B, h.concat(h), h);
    // basis of (L ox L)(g): pairs ((a,i),(b,j)); multiplication table of the
    // exterior algebra on one odd generator: 1*1=1, 1*x=x*1=x, x*x=0
    auto db = WordBasis::get(B->group, h.concat(h));
    auto cb = WordBasis::get(B->group, h);
    for (auto& [g, codes] : db->codes) {
        Mat m(B->scalar_order(), cb->dim(g), codes.size());
        for (size_t col = 0; col < codes.size(); ++col) {
            Grade a = db->entry(codes[col], 0).first;
            Grade b = db->entry(codes[col], 1).first;
            if (a.is_zero() || b.is_zero()) {
                Grade target = B->group.add(a, b);
                m.add_entry(cb->rank(g, {{target, 0}}), col, B->one());
            } // odd*odd = 0
        }
        if (!m.is_zero()) comp.set_block(g, std::move(m));
    }
    C->comp[{0, 0, 0}] = comp;
    Morphism j(B, Word::empty(), h);
    Mat jm(B->scalar_order(), 1, 1);
    jm.add_entry(0, 0, B->one());
    j.set_block(B->group.zero(), jm);
    C->ident.push_back(j);
    return C;
}

/// The point window: one object per group element, all hom spaces one-dim.
inline VCatPtr grouplike_vhat(const BasePtr& B) {
    std::vector<GradedObject> window;
    for (auto& g : B->group.elements()) window.push_back(simple_object(B->group, g));
    return self_enrichment(B, window);
}

inline Morphism random_morphism(const BasePtr& B, const Word& dom, const Word& cod,
                                std::mt19937& rng) {
    MorSpace sp(B, dom, cod);
    std::uniform_int_distribution<int> d(-2, 2);
    std::vector<Cyclotomic> v(sp.dim(), B->zero());
    for (auto& x : v) x = B->scalar(Rational(d(rng)));
    return sp.from_coords(v);
}

/// Copy of C with a single entry of one composition block negated.
inline VCatPtr corrupt_comp(const VCatPtr& C, size_t a, size_t b, size_t c) {
    auto D = std::make_shared<VCategory>(*C);
    Morphism& m = D->comp[{a, b, c}];
    for (auto& [g, blk] : m.blocks) {
        for (size_t col = 0; col < blk.cols(); ++col) {
            if (!blk.column(col).empty()) {
                size_t row = blk.column(col)[0].first;
                auto v = blk.at(row, col);
                blk.set_entry(row, col, -v);
                return D;
            }
        }
    }
    throw std::logic_error("corrupt_comp: no nonzero entry to corrupt");
}

} // namespace vcwb::fixtures

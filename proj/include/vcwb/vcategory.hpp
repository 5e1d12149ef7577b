#pragma once

/**
 * @file vcategory.hpp
 * @brief V-categories, V-functors, V-natural transformations, their law
 *        verifiers, the self-enrichment, underlying categories and
 *        representable functors.
 *
 * Hom objects are tensor words; all structure data is stored against the
 * canonical word enumerations, so every law check is an exact matrix
 * identity. Verifier sweeps are exhaustive over object tuples; failures are
 * reported as data with the offending tuple.
 */

#include "vcwb/morphism.hpp"
#include "vcwb/parallel.hpp"
#include "vcwb/report.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vcwb {

struct VCategory {
    BasePtr base;
    std::vector<std::string> objects;
    std::vector<std::vector<Word>> hom;                       // hom[a][b]
    std::map<std::array<size_t, 3>, Morphism> comp;           // (a,b,c)
    std::vector<Morphism> ident;                              // [] -> hom[a][a]

    size_t size() const { return objects.size(); }

    size_t index_of(const std::string& label) const {
        for (size_t i = 0; i < objects.size(); ++i)
            if (objects[i] == label) return i;
        throw ShapeMismatchError("unknown object label '" + label + "'");
    }

    const Word& hom_word(size_t a, size_t b) const { return hom[a][b]; }
    GradedObject hom_obj(size_t a, size_t b) const { return hom[a][b].conv(base->group); }

    const Morphism& composition(size_t a, size_t b, size_t c) const {
        return comp.at({a, b, c});
    }
    const Morphism& identity_elem(size_t a) const { return ident[a]; }

    /// Dimension of the underlying hom set C^V(a -> b).
    size_t uhom_dim(size_t a, size_t b) const {
        return WordBasis::get(base->group, hom[a][b])->dim(base->group.zero());
    }
};

using VCatPtr = std::shared_ptr<const VCategory>;

/// Underlying-category helpers: morphisms of C^V are graded morphisms
/// [] -> hom(a,b), supported in grade zero.
inline MorSpace uhom_space(const VCategory& C, size_t a, size_t b) {
    return MorSpace(C.base, Word::empty(), C.hom_word(a, b));
}

inline Morphism ucompose(const VCategory& C, size_t a, size_t b, size_t c, const Morphism& f,
                         const Morphism& g) {
    return then(tensor(f, g), C.composition(a, b, c));
}

// ---------------------------------------------------------------------------
// Verifiers
// ---------------------------------------------------------------------------

inline Report verify_vcategory(const VCategory& C) {
    Report rep;
    const size_t n = C.size();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            const Word& h = C.hom_word(a, b);
            auto lhs = then(tensor(C.identity_elem(a), identity_morphism(C.base, h)),
                            C.composition(a, a, b));
            bool ok1 = lhs == identity_morphism(C.base, h);
            rep.add("vcat-unit-left", ok1,
                    ok1 ? "" : "(" + C.objects[a] + "," + C.objects[b] + ")");
            auto rhs = then(tensor(identity_morphism(C.base, h), C.identity_elem(b)),
                            C.composition(a, b, b));
            bool ok2 = rhs == identity_morphism(C.base, h);
            rep.add("vcat-unit-right", ok2,
                    ok2 ? "" : "(" + C.objects[a] + "," + C.objects[b] + ")");
        }

    std::vector<std::array<size_t, 4>> quads;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                for (size_t d = 0; d < n; ++d) quads.push_back({a, b, c, d});
    auto results = parallel_map<std::string>(quads.size(), [&](size_t i) -> std::string {
        auto [a, b, c, d] = quads[i];
        auto lhs = then(tensor(C.composition(a, b, c), identity_morphism(C.base, C.hom_word(c, d))),
                        C.composition(a, c, d));
        auto rhs = then(tensor(identity_morphism(C.base, C.hom_word(a, b)), C.composition(b, c, d)),
                        C.composition(a, b, d));
        if (lhs == rhs) return "";
        return "(" + C.objects[a] + "," + C.objects[b] + "," + C.objects[c] + "," + C.objects[d] +
               ")";
    });
    bool assoc_ok = true;
    std::string witness;
    for (auto& w : results)
        if (!w.empty()) {
            assoc_ok = false;
            witness = w;
            break;
        }
    rep.add("vcat-assoc", assoc_ok, witness);
    return rep;
}

struct VFunctor {
    VCatPtr source, target;
    std::vector<size_t> obj_map;
    std::map<std::array<size_t, 2>, Morphism> mor; // hom_C(a,b) -> hom_D(Fa,Fb)

    const Morphism& component(size_t a, size_t b) const { return mor.at({a, b}); }
    size_t operator()(size_t a) const { return obj_map[a]; }
};

inline Report verify_vfunctor(const VFunctor& F) {
    Report rep;
    const VCategory& C = *F.source;
    const VCategory& D = *F.target;
    const size_t n = C.size();
    for (size_t a = 0; a < n; ++a) {
        auto lhs = then(C.identity_elem(a), F.component(a, a));
        bool ok = lhs == D.identity_elem(F(a));
        rep.add("vfunctor-identity", ok, ok ? "" : C.objects[a]);
    }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c) {
                auto lhs = then(tensor(F.component(a, b), F.component(b, c)),
                                D.composition(F(a), F(b), F(c)));
                auto rhs = then(C.composition(a, b, c), F.component(a, c));
                bool ok = lhs == rhs;
                rep.add("vfunctor-comp", ok,
                        ok ? ""
                           : "(" + C.objects[a] + "," + C.objects[b] + "," + C.objects[c] + ")");
            }
    return rep;
}

inline VFunctor identity_vfunctor(const VCatPtr& C) {
    VFunctor F;
    F.source = F.target = C;
    F.obj_map.resize(C->size());
    for (size_t a = 0; a < C->size(); ++a) {
        F.obj_map[a] = a;
        for (size_t b = 0; b < C->size(); ++b)
            F.mor[{a, b}] = identity_morphism(C->base, C->hom_word(a, b));
    }
    return F;
}

/// Left-to-right composite: first F, then G.
inline VFunctor compose_vfunctors(const VFunctor& F, const VFunctor& G) {
    VFunctor H;
    H.source = F.source;
    H.target = G.target;
    for (size_t a = 0; a < F.source->size(); ++a) H.obj_map.push_back(G(F(a)));
    for (size_t a = 0; a < F.source->size(); ++a)
        for (size_t b = 0; b < F.source->size(); ++b)
            H.mor[{a, b}] = then(F.component(a, b), G.component(F(a), F(b)));
    return H;
}

struct VNatTransform {
    const VFunctor* source = nullptr; // F
    const VFunctor* target = nullptr; // G
    std::vector<Morphism> components; // sigma_a : [] -> hom_D(Fa, Ga)
};

inline Report verify_vnat(const VNatTransform& s) {
    Report rep;
    const VFunctor& F = *s.source;
    const VFunctor& G = *s.target;
    const VCategory& C = *F.source;
    const VCategory& D = *F.target;
    for (size_t a = 0; a < C.size(); ++a)
        for (size_t b = 0; b < C.size(); ++b) {
            auto lhs = then(tensor(s.components[a], G.component(a, b)),
                            D.composition(F(a), G(a), G(b)));
            auto rhs = then(tensor(F.component(a, b), s.components[b]),
                            D.composition(F(a), F(b), G(b)));
            bool ok = lhs == rhs;
            rep.add("vnat-square", ok,
                    ok ? "" : "(" + C.objects[a] + "," + C.objects[b] + ")");
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Self-enrichment
// ---------------------------------------------------------------------------

/// V-hat restricted to a window of objects: hom(u,v) = [u*, v],
/// composition 1 (x) ev (x) 1, identities coev.
inline VCatPtr self_enrichment(const BasePtr& B, const std::vector<GradedObject>& window) {
    auto C = std::make_shared<VCategory>();
    C->base = B;
    const GroupSpec& G = B->group;
    const size_t n = window.size();
    for (auto& u : window) C->objects.push_back(u.str());
    C->hom.assign(n, std::vector<Word>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            C->hom[i][j] = Word::single(window[i]).dual(G).concat(Word::single(window[j]));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Word du = Word::single(window[i]).dual(G);
                Word wk = Word::single(window[k]);
                C->comp[{i, j, k}] = tensor(identity_morphism(B, du),
                                            ev_word(B, Word::single(window[j])),
                                            identity_morphism(B, wk));
            }
    for (size_t i = 0; i < n; ++i) C->ident.push_back(coev_word(B, Word::single(window[i])));
    return C;
}

/// Window objects of a self-enrichment, recovered from labels.
inline std::vector<GradedObject> window_of(const VCategory& Vhat) {
    std::vector<GradedObject> out;
    for (size_t i = 0; i < Vhat.size(); ++i) {
        // hom(i,i) = [u*, u]; the second factor is the object itself
        const Word& h = Vhat.hom_word(i, i);
        if (h.is_empty()) out.push_back(unit_object(Vhat.base->group));
        else out.push_back(h.factors.back());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Underlying category, underlying functors
// ---------------------------------------------------------------------------

/// C^V packaged with designated bases: hom-set basis = the grade-0
/// coordinate basis of the hom word.
struct UnderlyingCategory {
    VCatPtr C;

    size_t size() const { return C->size(); }
    size_t dim(size_t a, size_t b) const { return C->uhom_dim(a, b); }

    Morphism basis_elem(size_t a, size_t b, size_t i) const {
        return uhom_space(*C, a, b).basis_elem(i);
    }
    std::vector<Cyclotomic> coords(size_t a, size_t b, const Morphism& f) const {
        return uhom_space(*C, a, b).coords(f);
    }
    Morphism id(size_t a) const { return C->identity_elem(a); }
    Morphism compose(size_t a, size_t b, size_t c, const Morphism& f, const Morphism& g) const {
        return ucompose(*C, a, b, c, f, g);
    }
};

inline UnderlyingCategory underlying(const VCatPtr& C) { return UnderlyingCategory{C}; }

/// F^V on a morphism f in C^V(a -> b).
inline Morphism underlying_functor_apply(const VFunctor& F, size_t a, size_t b, const Morphism& f) {
    return then(f, F.component(a, b));
}

/// Category laws of C^V, checked on the designated bases.
inline Report verify_underlying(const UnderlyingCategory& U) {
    Report rep;
    const VCategory& C = *U.C;
    size_t n = C.size();
    bool unit_ok = true, assoc_ok = true;
    std::string w1, w2;
    for (size_t a = 0; a < n && unit_ok; ++a)
        for (size_t b = 0; b < n && unit_ok; ++b)
            for (size_t i = 0; i < U.dim(a, b); ++i) {
                auto f = U.basis_elem(a, b, i);
                if (U.compose(a, a, b, U.id(a), f) != f ||
                    U.compose(a, b, b, f, U.id(b)) != f) {
                    unit_ok = false;
                    w1 = "(" + C.objects[a] + "," + C.objects[b] + ")";
                    break;
                }
            }
    rep.add("underlying-unit", unit_ok, w1);
    for (size_t a = 0; a < n && assoc_ok; ++a)
        for (size_t b = 0; b < n && assoc_ok; ++b)
            for (size_t c = 0; c < n && assoc_ok; ++c)
                for (size_t d = 0; d < n && assoc_ok; ++d)
                    for (size_t i = 0; i < U.dim(a, b) && assoc_ok; ++i)
                        for (size_t j = 0; j < U.dim(b, c) && assoc_ok; ++j)
                            for (size_t k = 0; k < U.dim(c, d) && assoc_ok; ++k) {
                                auto f = U.basis_elem(a, b, i);
                                auto g = U.basis_elem(b, c, j);
                                auto h = U.basis_elem(c, d, k);
                                auto lhs = U.compose(a, c, d, U.compose(a, b, c, f, g), h);
                                auto rhs = U.compose(a, b, d, f, U.compose(b, c, d, g, h));
                                if (lhs != rhs) {
                                    assoc_ok = false;
                                    w2 = "(" + C.objects[a] + "," + C.objects[b] + "," +
                                         C.objects[c] + "," + C.objects[d] + ")";
                                }
                            }
    rep.add("underlying-assoc", assoc_ok, w2);
    return rep;
}

// ---------------------------------------------------------------------------
// Representable functors
// ---------------------------------------------------------------------------

/// Identification V-hat^V(x -> y) = V(x -> y): an element [] -> [x*, y]
/// becomes an honest graded morphism [x] -> [y].
inline Morphism from_underlying_vhat(const BasePtr& B, const GradedObject& x, const GradedObject& y,
                                     const Morphism& g) {
    Word wx = Word::single(x), wy = Word::single(y);
    return then(tensor(identity_morphism(B, wx), g),
                tensor(ev_word(B, wx), identity_morphism(B, wy)));
}

/// Inverse identification: f : [x] -> [y] becomes [] -> [x*, y].
inline Morphism to_underlying_vhat(const BasePtr& B, const GradedObject& x, const Morphism& f) {
    Word wx = Word::single(x);
    return then(coev_word(B, wx), tensor(identity_morphism(B, wx.dual(B->group)), f));
}

/// The representable functor R_a = C(a -> -) on underlying morphisms:
/// R_a(f) = (1 (x) f) ; comp for f in C^V(b -> c).
inline Morphism representable_underlying_apply(const VCategory& C, size_t a, size_t b, size_t c,
                                               const Morphism& f) {
    return then(tensor(identity_morphism(C.base, C.hom_word(a, b)), f), C.composition(a, b, c));
}

/// The V-representable functor R^a : C -> V-hat (target window auto-built
/// from the hom objects of C). Components are mates of the composition.
struct Representable {
    VFunctor functor;
    VCatPtr target; // the V-hat window
};

inline Representable representable_vfunctor(const VCatPtr& C, size_t a) {
    const BasePtr& B = C->base;
    const GroupSpec& G = B->group;
    std::vector<GradedObject> window;
    auto find_or_add = [&](const GradedObject& u) -> size_t {
        for (size_t i = 0; i < window.size(); ++i)
            if (window[i] == u) return i;
        window.push_back(u);
        return window.size() - 1;
    };
    std::vector<size_t> obj_map;
    for (size_t b = 0; b < C->size(); ++b) obj_map.push_back(find_or_add(C->hom_obj(a, b)));
    auto Vhat = self_enrichment(B, window);

    Representable R;
    R.target = Vhat;
    R.functor.source = C;
    R.functor.target = Vhat;
    R.functor.obj_map = obj_map;
    for (size_t b = 0; b < C->size(); ++b)
        for (size_t c = 0; c < C->size(); ++c) {
            const Word& X = C->hom_word(a, b);
            auto raw = then(tensor(coev_word(B, X), identity_morphism(B, C->hom_word(b, c))),
                            tensor(identity_morphism(B, X.dual(G)), C->composition(a, b, c)));
            // land in the window's hom word [dual(conv X), conv hom(a,c)]
            R.functor.mor[{b, c}] =
                then(raw, tensor(pack_dual(B, X), pack(B, C->hom_word(a, c))));
        }
    return R;
}

/// Exact check that the underlying functor of R^a equals R_a under the
/// identification V-hat^V = V, component by component on hom-set bases.
inline Report check_representable_underlying_agrees(const VCatPtr& C, size_t a) {
    Report rep;
    auto R = representable_vfunctor(C, a);
    const BasePtr& B = C->base;
    for (size_t b = 0; b < C->size(); ++b)
        for (size_t c = 0; c < C->size(); ++c) {
            MorSpace sp = uhom_space(*C, b, c);
            bool ok = true;
            for (size_t i = 0; i < sp.dim() && ok; ++i) {
                auto f = sp.basis_elem(i);
                auto via_v =
                    from_underlying_vhat(B, C->hom_obj(a, b), C->hom_obj(a, c),
                                         underlying_functor_apply(R.functor, b, c, f));
                auto lhs = then(pack(B, C->hom_word(a, b)), via_v);
                auto rhs = then(representable_underlying_apply(*C, a, b, c, f),
                                pack(B, C->hom_word(a, c)));
                ok = lhs == rhs;
            }
            rep.add("representable-underlying-match", ok,
                    ok ? "" : "(" + C->objects[b] + "," + C->objects[c] + ")");
        }
    return rep;
}

} // namespace vcwb

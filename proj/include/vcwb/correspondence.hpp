#pragma once

/**
 * @file correspondence.hpp
 * @brief The reverse construction (oplax module with adjoint data back to a
 *        V-category), the round-trip equivalence, laxitors of V-functors,
 *        tensored functors, and the theta/kappa characterization of lifted
 *        adjunctions.
 */

#include "vcwb/tensoring.hpp"

namespace vcwb {

/// Adjoint data for a module: chosen hom objects and the bijections
/// Psi_{a,v,b} : V(v -> [hom'(a,b)]) -> C^V(a<|v -> b), phi |-> (1_a <| phi); eps.
/// The counit eps_{a->b} acts against a carrier word whose collapse is the
/// chosen hom object.
struct ModuleAdjointData {
    std::vector<std::vector<GradedObject>> hom_objects; // hom'(a,b)
    std::vector<std::vector<Word>> carrier;             // conv(carrier[a][b]) = hom'(a,b)
    std::map<std::array<size_t, 2>, Morphism> counits;  // eps_{a->b} in C^V(a <| carrier -> b)
};

/// Canonical adjoint data extracted from the tensoring witness itself:
/// hom'(a,b) = the collapsed hom object, eps = the mate of its identity.
inline ModuleAdjointData canonical_adjoint_data(const OplaxModule& M) {
    ModuleAdjointData D;
    const VCategory& C = *M.C;
    D.hom_objects.assign(C.size(), std::vector<GradedObject>(C.size()));
    D.carrier.assign(C.size(), std::vector<Word>(C.size()));
    for (size_t a = 0; a < C.size(); ++a)
        for (size_t b = 0; b < C.size(); ++b) {
            D.hom_objects[a][b] = C.hom_obj(a, b);
            D.carrier[a][b] = C.hom_word(a, b);
            D.counits[{a, b}] = M.T->counit(a, b);
        }
    return D;
}

struct ModulePsi {
    const OplaxModule* M;
    const ModuleAdjointData* D;

    /// Psi_{a,v,b}(phi : v -> [hom'(a,b)]) = (1_a <| phi') ; eps_{a->b},
    /// where phi' retargets onto the carrier word of the counit.
    Morphism apply(size_t a, const Word& v, size_t b, const Morphism& phi) const {
        const VCategory& C = *M->C;
        const Word& hw = D->carrier[a][b];
        Morphism phi2 = then(phi, unpack(C.base, hw));
        Morphism lifted = M->act_obj_mor(a, phi2); // C^V(a<|v -> a<|carrier)
        return ucompose(C, M->act(a, v), M->act(a, hw), b, lifted, D->counits.at({a, b}));
    }

    Mat matrix(size_t a, const Word& v, size_t b) const {
        const VCategory& C = *M->C;
        MorSpace src(C.base, v, Word::single(D->hom_objects[a][b]));
        MorSpace dst = uhom_space(C, M->act(a, v), b);
        return src.operator_matrix(dst, [&](const Morphism& phi) { return apply(a, v, b, phi); });
    }

    Morphism inverse(size_t a, const Word& v, size_t b, const Morphism& f) const {
        const VCategory& C = *M->C;
        MorSpace src(C.base, v, Word::single(D->hom_objects[a][b]));
        MorSpace dst = uhom_space(C, M->act(a, v), b);
        Mat Mx = matrix(a, v, b);
        Mat rhs(C.base->scalar_order(), dst.dim(), 1);
        auto coords = dst.coords(f);
        for (size_t i = 0; i < coords.size(); ++i) rhs.add_entry(i, 0, coords[i]);
        auto sol = Mx.solve(rhs);
        if (!sol)
            throw TriangleError("module adjoint bijection has no preimage at (" + C.objects[a] +
                                "," + v.key() + "," + C.objects[b] + ")");
        std::vector<Cyclotomic> x;
        for (size_t i = 0; i < src.dim(); ++i) x.push_back(sol->at(i, 0));
        return src.from_coords(x);
    }
};

/// Verify the adjoint data realizes an adjunction: bijectivity of Psi at the
/// needed weights plus the triangle identities.
inline Report verify_module_adjoint(const OplaxModule& M, const ModuleAdjointData& D) {
    Report rep;
    const VCategory& C = *M.C;
    ModulePsi psi{&M, &D};
    bool skipped = false;
    for (size_t a = 0; a < C.size(); ++a)
        for (size_t b = 0; b < C.size(); ++b) {
            Word hv = Word::single(D.hom_objects[a][b]);
            bool ok = detail::covered_check(
                [&] {
                    MorSpace src(C.base, hv, hv);
                    MorSpace dst = uhom_space(C, M.act(a, hv), b);
                    if (src.dim() != dst.dim()) return false;
                    return psi.matrix(a, hv, b).invertible();
                },
                skipped);
            rep.add("adjoint-bijective", ok, ok ? "" : "(" + C.objects[a] + "," + C.objects[b] + ")");
        }
    // triangle: eta'_{a,h} ; R'_a(eps) = identity of hom'(a,b)
    for (size_t a = 0; a < C.size(); ++a)
        for (size_t b = 0; b < C.size(); ++b) {
            bool ok = detail::covered_check(
                [&] {
                    Word hv = Word::single(D.hom_objects[a][b]);
                    size_t ah = M.act(a, hv);
                    Morphism eta_p = psi.inverse(a, hv, ah, C.identity_elem(ah));
                    Morphism eps = psi.apply(a, hv, b, identity_morphism(C.base, hv));
                    // R'_a(eps) : [hom'(a,ah)] -> [hom'(a,b)]
                    Morphism r_eps = psi.inverse(a, Word::single(D.hom_objects[a][ah]), b,
                                                 ucompose(C, M.act(a, Word::single(D.hom_objects[a][ah])),
                                                          ah, b, psi.apply(a, Word::single(D.hom_objects[a][ah]), ah,
                                                                           identity_morphism(C.base, Word::single(D.hom_objects[a][ah]))),
                                                          eps));
                    return then(eta_p, r_eps) == identity_morphism(C.base, hv);
                },
                skipped);
            rep.add("adjoint-triangle", ok, ok ? "" : "(" + C.objects[a] + "," + C.objects[b] + ")");
        }
    return rep;
}

/// Reverse construction: a verified V-category out of a module with adjoint
/// data. Hom objects are the chosen ones; identities are mates of rho;
/// composition is the mate of the alpha-then-two-counits composite.
inline VCatPtr module_to_vcat(const OplaxModule& M, const ModuleAdjointData& D) {
    const VCategory& C = *M.C;
    const BasePtr& B = C.base;
    ModulePsi psi{&M, &D};
    auto rep = verify_module_adjoint(M, D);
    if (!rep.passed())
        throw TriangleError("module adjoint data failed verification: " + rep.summary());

    auto out = std::make_shared<VCategory>();
    out->base = B;
    out->objects = C.objects;
    const size_t n = C.size();
    out->hom.assign(n, std::vector<Word>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) out->hom[a][b] = Word::single(D.hom_objects[a][b]);
    for (size_t a = 0; a < n; ++a)
        out->ident.push_back(psi.inverse(a, Word::empty(), a, M.rho(a)));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c) {
                Word h1 = out->hom[a][b], h2 = out->hom[b][c];
                // alpha ; (eps_ab <| 1) ; eps_bc, then the inverse mate
                Morphism eps_ab = psi.apply(a, h1, b, identity_morphism(B, h1));
                Morphism eps_bc = psi.apply(b, h2, c, identity_morphism(B, h2));
                size_t a_h1 = M.act(a, h1);
                Morphism step =
                    ucompose(C, M.act(a, h1.concat(h2)), M.act(a_h1, h2), M.act(b, h2),
                             M.alpha(a, h1, h2), M.act_mor_obj(a_h1, b, eps_ab, h2));
                Morphism whole = ucompose(C, M.act(a, h1.concat(h2)), M.act(b, h2), c, step, eps_bc);
                out->comp[{a, b, c}] = psi.inverse(a, h1.concat(h2), c, whole);
            }
    return out;
}

/// Round trip: build the module, rebuild the category, and verify the two
/// explicit hom-level functors are mutually inverse V-functors.
inline Report roundtrip_check(const VCatPtr& C, const TensoringPtr& T) {
    Report rep;
    OplaxModule M = vcat_to_module(C, T);
    ModuleAdjointData D = canonical_adjoint_data(M);
    VCatPtr C2 = module_to_vcat(M, D);
    rep.merge(verify_vcategory(*C2), "rebuilt");

    ModulePsi psi{&M, &D};
    const BasePtr& B = C->base;
    VFunctor G, H;
    G.source = C;
    G.target = C2;
    H.source = C2;
    H.target = C;
    for (size_t a = 0; a < C->size(); ++a) {
        G.obj_map.push_back(a);
        H.obj_map.push_back(a);
    }
    for (size_t a = 0; a < C->size(); ++a)
        for (size_t b = 0; b < C->size(); ++b) {
            // G_{a->b}: image of the first adjunction's counit under Psi^{-1}
            Morphism eps_C = M.counit(a, b); // C^V(a <| hom_C(a,b) -> b)
            G.mor[{a, b}] = psi.inverse(a, C->hom_word(a, b), b, eps_C);
            // H_{a->b}: image of the second adjunction's counit under Phi
            Morphism eps_2 = psi.apply(a, C2->hom_word(a, b), b,
                                       identity_morphism(B, C2->hom_word(a, b)));
            H.mor[{a, b}] = M.T->phi(a, C2->hom_word(a, b), b, eps_2);
        }
    rep.merge(verify_vfunctor(G), "G");
    rep.merge(verify_vfunctor(H), "H");
    for (size_t a = 0; a < C->size(); ++a)
        for (size_t b = 0; b < C->size(); ++b) {
            bool ok1 = then(G.component(a, b), H.component(a, b)) ==
                       identity_morphism(B, C->hom_word(a, b));
            bool ok2 = then(H.component(a, b), G.component(a, b)) ==
                       identity_morphism(B, C2->hom_word(a, b));
            rep.add("roundtrip-inverse", ok1 && ok2,
                    (ok1 && ok2) ? "" : "(" + C->objects[a] + "," + C->objects[b] + ")");
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Laxitors and tensored V-functors
// ---------------------------------------------------------------------------

/// The laxitor of the underlying functor of F: mu_{c,v} in
/// D^V(F(c) <| v -> F(c <| v)), the mate of eta^C_{c,v} ; F_{c -> c<|v}.
struct LaxModuleFunctor {
    const VFunctor* F;
    TensoringPtr T_src, T_tgt;

    Morphism mu(size_t c, const Word& v) const {
        const VCategory& C = *F->source;
        size_t cv = T_src->at(c, v).target;
        Morphism mate_input = then(T_src->at(c, v).eta, F->component(c, cv));
        return T_tgt->phi_inv((*F)(c), v, (*F)(cv), mate_input);
    }
};

inline LaxModuleFunctor laxitor_of_functor(const VFunctor& F, const TensoringPtr& T_src,
                                           const TensoringPtr& T_tgt) {
    return LaxModuleFunctor{&F, T_src, T_tgt};
}

/// Lax module functor laws for mu on a scope of weights.
inline Report verify_laxitor(const LaxModuleFunctor& L, const std::vector<Word>& weights,
                             unsigned rng_seed = 4242) {
    Report rep;
    const VFunctor& F = *L.F;
    const VCategory& C = *F.source;
    const VCategory& D = *F.target;
    OplaxModule MC{F.source, L.T_src};
    OplaxModule MD{F.target, L.T_tgt};
    std::mt19937 rng(rng_seed);
    bool skipped = false;

    // unitality: mu_{m,1} ; F(rho^C_m) = rho^D_{F(m)}
    for (size_t m = 0; m < C.size(); ++m) {
        bool ok = detail::covered_check(
            [&] {
                size_t m1 = MC.act(m, Word::empty());
                auto lhs = ucompose(D, MD.act(F(m), Word::empty()), F(m1), F(m),
                                    L.mu(m, Word::empty()),
                                    underlying_functor_apply(F, m1, m, MC.rho(m)));
                return lhs == MD.rho(F(m));
            },
            skipped);
        rep.add("laxitor-unitality", ok, ok ? "" : C.objects[m]);
    }

    // associativity: mu_{m,uv} ; F(alpha^C) = alpha^D ; (mu_{m,u} <| 1_v) ; mu_{m<|u,v}
    for (size_t m = 0; m < C.size(); ++m)
        for (const Word& u : weights)
            for (const Word& v : weights) {
                bool ok = detail::covered_check(
                    [&] {
                        Word uv = u.concat(v);
                        size_t mu_ = MC.act(m, u);
                        size_t muv = MC.act(mu_, v);
                        auto lhs = ucompose(D, MD.act(F(m), uv), F(MC.act(m, uv)), F(muv),
                                            L.mu(m, uv),
                                            underlying_functor_apply(F, MC.act(m, uv), muv,
                                                                     MC.alpha(m, u, v)));
                        auto step1 = MD.alpha(F(m), u, v);
                        auto step2 = MD.act_mor_obj(MD.act(F(m), u), F(mu_), L.mu(m, u), v);
                        auto step3 = L.mu(mu_, v);
                        auto rhs = ucompose(
                            D, MD.act(F(m), uv), MD.act(F(mu_), v), F(muv),
                            ucompose(D, MD.act(F(m), uv), MD.act(MD.act(F(m), u), v),
                                     MD.act(F(mu_), v), step1, step2),
                            step3);
                        return lhs == rhs;
                    },
                    skipped);
                rep.add("laxitor-assoc", ok,
                        ok ? "" : "(" + C.objects[m] + "," + u.key() + "," + v.key() + ")");
            }

    // naturality on random f in C^V(a -> b), g in V(u -> v)
    for (int t = 0; t < 6 && !weights.empty(); ++t) {
        size_t a = rng() % C.size(), b = rng() % C.size();
        const Word& u = weights[rng() % weights.size()];
        const Word& v = weights[rng() % weights.size()];
        bool ok = detail::covered_check(
            [&] {
                MorSpace fs = uhom_space(C, a, b);
                MorSpace gs(C.base, u, v);
                if (fs.dim() == 0 || gs.dim() == 0) return true;
                auto f = random_uelem(fs, rng, C.base);
                auto g = random_uelem(gs, rng, C.base);
                size_t bv = MC.act(b, v);
                auto lhs = ucompose(D, MD.act(F(a), u), F(MC.act(a, u)), F(bv), L.mu(a, u),
                                    underlying_functor_apply(F, MC.act(a, u), bv,
                                                             MC.act_mor(a, b, f, g)));
                auto rhs = ucompose(D, MD.act(F(a), u), MD.act(F(b), v), F(bv),
                                    MD.act_mor(F(a), F(b), underlying_functor_apply(F, a, b, f), g),
                                    L.mu(b, v));
                return lhs == rhs;
            },
            skipped);
        rep.add("laxitor-naturality", ok, ok ? "" : "(" + C.objects[a] + "," + C.objects[b] + ")");
    }
    return rep;
}

/// Tensored verdict: every mu on the covered scope is invertible.
inline Report is_tensored_functor(const LaxModuleFunctor& L, const std::vector<Word>& weights) {
    Report rep;
    const VFunctor& F = *L.F;
    const VCategory& C = *F.source;
    const VCategory& D = *F.target;
    bool all = true;
    std::string witness;
    size_t checked = 0;
    for (size_t c = 0; c < C.size(); ++c)
        for (const Word& v : weights) {
            if (!L.T_src->covers(c, v)) continue;
            size_t cv = L.T_src->at(c, v).target;
            if (!L.T_tgt->covers(F(c), v)) continue;
            ++checked;
            auto m = L.mu(c, v);
            if (!uhom_inverse(D, L.T_tgt->at(F(c), v).target, F(cv), m)) {
                all = false;
                if (witness.empty()) witness = "(" + C.objects[c] + "," + v.key() + ")";
            }
        }
    rep.add("functor-tensored", all, witness);
    rep.add("functor-tensored-scope-nonempty", checked > 0, checked > 0 ? "" : "empty scope");
    return rep;
}

// ---------------------------------------------------------------------------
// theta / kappa
// ---------------------------------------------------------------------------

/// Underlying adjunction data for V-functors L -| R: unit and counit
/// families of the adjunction of underlying functors.
struct UnderlyingAdjunction {
    const VFunctor* L;
    const VFunctor* R;
    std::vector<Morphism> eta;     // eta_a in C^V(a -> R(L(a)))
    std::vector<Morphism> epsilon; // eps_d in D^V(L(R(d)) -> d)
};

inline Report verify_underlying_adjunction(const UnderlyingAdjunction& A) {
    Report rep;
    const VFunctor& L = *A.L;
    const VFunctor& R = *A.R;
    const VCategory& C = *L.source;
    const VCategory& D = *L.target;
    for (size_t a = 0; a < C.size(); ++a) {
        // L(eta_a) ; eps_{L(a)} = 1_{L(a)}
        auto lhs = ucompose(D, L(a), L(R(L(a))), L(a),
                            underlying_functor_apply(L, a, R(L(a)), A.eta[a]), A.epsilon[L(a)]);
        bool ok = lhs == D.identity_elem(L(a));
        rep.add("adjunction-triangle-L", ok, ok ? "" : C.objects[a]);
    }
    for (size_t d = 0; d < D.size(); ++d) {
        // eta_{R(d)} ; R(eps_d) = 1_{R(d)}
        auto lhs = ucompose(C, R(d), R(L(R(d))), R(d), A.eta[R(d)],
                            underlying_functor_apply(R, L(R(d)), d, A.epsilon[d]));
        bool ok = lhs == C.identity_elem(R(d));
        rep.add("adjunction-triangle-R", ok, ok ? "" : D.objects[d]);
    }
    return rep;
}

struct ThetaKappa {
    std::map<std::array<size_t, 2>, Morphism> theta; // V(D(L(a)->d) -> C(a->R(d)))
    std::map<std::array<size_t, 2>, Morphism> kappa; // V(C(a->R(d)) -> D(L(a)->d))
    Report report;
    bool lifts = false; // kappa = theta^{-1} everywhere
};

/// theta_{a,d} = (eta_a R_{L(a)->d}) ; comp_C and
/// kappa_{a,d} = (L_{a->R(d)} eps_d) ; comp_D; the adjunction lifts to a
/// V-adjunction iff kappa inverts theta at every pair.
inline ThetaKappa theta_kappa(const UnderlyingAdjunction& A) {
    ThetaKappa out;
    const VFunctor& L = *A.L;
    const VFunctor& R = *A.R;
    const VCategory& C = *L.source;
    const VCategory& D = *L.target;
    out.report.merge(verify_underlying_adjunction(A), "pre");
    bool all = true;
    std::string witness;
    for (size_t a = 0; a < C.size(); ++a)
        for (size_t d = 0; d < D.size(); ++d) {
            Morphism th = then(tensor(A.eta[a], R.component(L(a), d)),
                               C.composition(a, R(L(a)), R(d)));
            Morphism ka = then(tensor(L.component(a, R(d)), A.epsilon[d]),
                               D.composition(L(a), L(R(d)), d));
            out.theta[{a, d}] = th;
            out.kappa[{a, d}] = ka;
            bool ok = then(th, ka) == identity_morphism(C.base, D.hom_word(L(a), d)) &&
                      then(ka, th) == identity_morphism(C.base, C.hom_word(a, R(d)));
            if (!ok) {
                all = false;
                if (witness.empty()) witness = "(" + C.objects[a] + "," + D.objects[d] + ")";
            }
        }
    out.lifts = all;
    out.report.add("kappa-inverts-theta", all, witness);
    return out;
}

} // namespace vcwb

#pragma once

/**
 * @file vmonoidal.hpp
 * @brief V-monoidal categories: the braided-interchange axiom, the monoidal
 *        self-enrichment, monoidal functors, the monoidal completion, and
 *        closedness of the completion over a rigid base.
 *
 * The object tensor is strict (a table). The tensor of hom objects is a
 * family of morphisms hom(a,b) ++ hom(c,d) -> hom(ac,bd); the braided
 * interchange couples it to composition through the braiding of the base.
 * In the monoidal completion the weight of a product is the concatenated
 * weight word, so the object tensor is strictly associative by construction.
 */

#include "vcwb/completion.hpp"

namespace vcwb {

struct VMonoidalCategory {
    VCatPtr C;
    size_t unit = 0;
    std::vector<std::vector<size_t>> obj_tensor;          // [a][b] = ab
    std::map<std::array<size_t, 4>, Morphism> tensor_mor; // hom(a,b) ++ hom(c,d) -> hom(ac,bd)

    size_t prod(size_t a, size_t b) const { return obj_tensor[a][b]; }
    const Morphism& tmor(size_t a, size_t b, size_t c, size_t d) const {
        return tensor_mor.at({a, b, c, d});
    }
};

using VMonPtr = std::shared_ptr<const VMonoidalCategory>;

/// Tensor of two underlying morphisms: (f (x) g) = (f g) ; (-ox-).
inline Morphism utensor(const VMonoidalCategory& M, size_t a, size_t b, size_t c, size_t d,
                        const Morphism& f, const Morphism& g) {
    return then(tensor(f, g), M.tmor(a, b, c, d));
}

/// Whiskering a (x) -: V(C(b->c) -> C(ab->ac)).
inline Morphism whisker_left(const VMonoidalCategory& M, size_t a, size_t b, size_t c) {
    return then(tensor(M.C->identity_elem(a), identity_morphism(M.C->base, M.C->hom_word(b, c))),
                M.tmor(a, a, b, c));
}

/// Whiskering - (x) a: V(C(b->c) -> C(ba->ca)).
inline Morphism whisker_right(const VMonoidalCategory& M, size_t b, size_t c, size_t a) {
    return then(tensor(identity_morphism(M.C->base, M.C->hom_word(b, c)), M.C->identity_elem(a)),
                M.tmor(b, c, a, a));
}

inline Report verify_vmonoidal(const VMonoidalCategory& M, bool sample_interchange = false,
                               size_t sample_count = 30, unsigned seed = 7) {
    Report rep;
    const VCategory& C = *M.C;
    const BasePtr& B = C.base;
    const size_t n = C.size();

    // strict unit/associativity of the object tensor
    bool obj_ok = true;
    for (size_t a = 0; a < n && obj_ok; ++a) {
        obj_ok = M.prod(M.unit, a) == a && M.prod(a, M.unit) == a;
        for (size_t b = 0; b < n && obj_ok; ++b)
            for (size_t c = 0; c < n && obj_ok; ++c)
                obj_ok = M.prod(M.prod(a, b), c) == M.prod(a, M.prod(b, c));
    }
    rep.add("vmon-object-tensor-strict", obj_ok);

    // unitality of the hom tensor
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            const Word& h = C.hom_word(a, b);
            bool ok1 = then(tensor(C.identity_elem(M.unit), identity_morphism(B, h)),
                            M.tmor(M.unit, M.unit, a, b)) == identity_morphism(B, h);
            bool ok2 = then(tensor(identity_morphism(B, h), C.identity_elem(M.unit)),
                            M.tmor(a, b, M.unit, M.unit)) == identity_morphism(B, h);
            rep.add("vmon-tensor-unit", ok1 && ok2,
                    (ok1 && ok2) ? "" : "(" + C.objects[a] + "," + C.objects[b] + ")");
        }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            bool ok = then(tensor(C.identity_elem(a), C.identity_elem(b)), M.tmor(a, a, b, b)) ==
                      C.identity_elem(M.prod(a, b));
            rep.add("vmon-identity-tensor", ok,
                    ok ? "" : "(" + C.objects[a] + "," + C.objects[b] + ")");
        }

    // associativity of the hom tensor and the braided interchange, swept in
    // parallel (or sampled for large windows)
    std::vector<std::array<size_t, 6>> tuples;
    if (sample_interchange) {
        std::mt19937 rng(seed);
        for (size_t i = 0; i < sample_count; ++i)
            tuples.push_back({rng() % n, rng() % n, rng() % n, rng() % n, rng() % n, rng() % n});
    } else {
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                for (size_t c = 0; c < n; ++c)
                    for (size_t d = 0; d < n; ++d)
                        for (size_t e = 0; e < n; ++e)
                            for (size_t f = 0; f < n; ++f) tuples.push_back({a, b, c, d, e, f});
    }
    auto assoc_results = parallel_map<std::string>(tuples.size(), [&](size_t i) {
        auto [a, b, c, d, e, f] = tuples[i];
        auto lhs = then(tensor(M.tmor(a, b, c, d), identity_morphism(B, C.hom_word(e, f))),
                        M.tmor(M.prod(a, c), M.prod(b, d), e, f));
        auto rhs = then(tensor(identity_morphism(B, C.hom_word(a, b)), M.tmor(c, d, e, f)),
                        M.tmor(a, b, M.prod(c, e), M.prod(d, f)));
        if (lhs == rhs) return std::string();
        return "(" + C.objects[a] + "," + C.objects[b] + "," + C.objects[c] + "," + C.objects[d] +
               "," + C.objects[e] + "," + C.objects[f] + ")";
    });
    {
        bool ok = true;
        std::string w;
        for (auto& s : assoc_results)
            if (!s.empty()) {
                ok = false;
                w = s;
                break;
            }
        rep.add("vmon-tensor-assoc", ok, w);
    }

    auto results = parallel_map<std::string>(tuples.size(), [&](size_t i) {
        auto [a, b, c, d, e, f] = tuples[i];
        // top path: tensor twice, then compose
        auto top = then(tensor(M.tmor(a, b, d, e), M.tmor(b, c, e, f)),
                        C.composition(M.prod(a, d), M.prod(b, e), M.prod(c, f)));
        // bottom path: braid the middle homs, compose twice, then tensor
        auto bottom = then(
            then(tensor(identity_morphism(B, C.hom_word(a, b)),
                        braid(B, C.hom_word(d, e), C.hom_word(b, c)),
                        identity_morphism(B, C.hom_word(e, f))),
                 tensor(C.composition(a, b, c), C.composition(d, e, f))),
            M.tmor(a, c, d, f));
        if (top == bottom) return std::string();
        return "(" + C.objects[a] + "," + C.objects[b] + "," + C.objects[c] + "," + C.objects[d] +
               "," + C.objects[e] + "," + C.objects[f] + ")";
    });
    bool ok = true;
    std::string w;
    for (auto& s : results)
        if (!s.empty()) {
            ok = false;
            w = s;
            break;
        }
    rep.add("vmon-braided-interchange", ok, w);
    return rep;
}

/// The monoidal self-enrichment on a tensor-closed window: the hom tensor
/// moves the second dual past the first hom by the reverse braiding.
inline VMonPtr self_enriched_monoidal(const BasePtr& B, std::vector<GradedObject> window,
                                      size_t dim_cap = 16) {
    const GroupSpec& G = B->group;
    window = close_weights(G, std::move(window), dim_cap);
    auto Vhat = self_enrichment(B, window);
    auto M = std::make_shared<VMonoidalCategory>();
    M->C = Vhat;
    const size_t n = window.size();
    for (size_t i = 0; i < n; ++i)
        if (window[i].is_unit()) M->unit = i;
    M->obj_tensor.assign(n, std::vector<size_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            GradedObject t = tensor_obj(G, window[i], window[j]);
            bool found = false;
            for (size_t k = 0; k < n; ++k)
                if (window[k] == t) {
                    M->obj_tensor[i][j] = k;
                    found = true;
                    break;
                }
            if (!found)
                throw CoverageGapError("monoidal window not closed under tensor at " + t.str() +
                                       " (raise the dimension cap)");
        }
    for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v)
            for (size_t w = 0; w < n; ++w)
                for (size_t x = 0; x < n; ++x) {
                    Word wu = Word::single(window[u]), wv = Word::single(window[v]);
                    Word ww = Word::single(window[w]), wx = Word::single(window[x]);
                    // [u*, v, w*, x] -> [w*, u*, v, x] -> [ (uw)*, vx ]
                    Morphism step1 =
                        tensor(braid_rev(B, wu.dual(G).concat(wv), ww.dual(G)),
                               identity_morphism(B, wx));
                    Morphism step2 = tensor(pack_dual(B, wu.concat(ww)), pack(B, wv.concat(wx)));
                    M->tensor_mor[{u, v, w, x}] = then(step1, step2);
                }
    return M;
}

struct VMonoidalFunctor {
    VFunctor F;
    const VMonoidalCategory* source = nullptr;
    const VMonoidalCategory* target = nullptr;
    std::map<std::array<size_t, 2>, Morphism> nu; // elems of D^V(F(ab) -> F(a)F(b))
};

inline Report verify_vmonoidal_functor(const VMonoidalFunctor& Fm) {
    Report rep;
    const VFunctor& F = Fm.F;
    const VMonoidalCategory& Cm = *Fm.source;
    const VMonoidalCategory& Dm = *Fm.target;
    const VCategory& C = *Cm.C;
    const VCategory& D = *Dm.C;
    const BasePtr& B = C.base;
    const size_t n = C.size();

    rep.add("vmonf-unit-object", F(Cm.unit) == Dm.unit);

    for (size_t a = 0; a < n; ++a) {
        bool ok = Fm.nu.at({a, Cm.unit}) == D.identity_elem(F(a)) &&
                  Fm.nu.at({Cm.unit, a}) == D.identity_elem(F(a));
        rep.add("vmonf-nu-unital", ok, ok ? "" : C.objects[a]);
    }

    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c) {
                size_t Fa = F(a), Fb = F(b), Fc = F(c);
                auto lhs = ucompose(D, F(Cm.prod(a, Cm.prod(b, c))), Dm.prod(Fa, F(Cm.prod(b, c))),
                                    Dm.prod(Fa, Dm.prod(Fb, Fc)), Fm.nu.at({a, Cm.prod(b, c)}),
                                    utensor(Dm, Fa, Fa, F(Cm.prod(b, c)), Dm.prod(Fb, Fc),
                                            D.identity_elem(Fa), Fm.nu.at({b, c})));
                auto rhs = ucompose(D, F(Cm.prod(Cm.prod(a, b), c)), Dm.prod(F(Cm.prod(a, b)), Fc),
                                    Dm.prod(Dm.prod(Fa, Fb), Fc), Fm.nu.at({Cm.prod(a, b), c}),
                                    utensor(Dm, F(Cm.prod(a, b)), Dm.prod(Fa, Fb), Fc, Fc,
                                            Fm.nu.at({a, b}), D.identity_elem(Fc)));
                bool ok = lhs == rhs;
                rep.add("vmonf-nu-assoc", ok,
                        ok ? "" : "(" + C.objects[a] + "," + C.objects[b] + "," + C.objects[c] + ")");
            }

    // naturality: both composites in V(C(a->c)C(b->d) -> D(F(ab)->F(c)F(d)))
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                for (size_t d = 0; d < n; ++d) {
                    size_t ab = Cm.prod(a, b), cd = Cm.prod(c, d);
                    size_t Fab = F(ab), Fcd = F(cd);
                    size_t FaFb = Dm.prod(F(a), F(b)), FcFd = Dm.prod(F(c), F(d));
                    Morphism pre = then(tensor(Fm.nu.at({a, b}),
                                               identity_morphism(B, D.hom_word(FaFb, FcFd))),
                                        D.composition(Fab, FaFb, FcFd));
                    Morphism lhs = then(then(tensor(F.component(a, c), F.component(b, d)),
                                             Dm.tmor(F(a), F(c), F(b), F(d))),
                                        pre);
                    Morphism post = then(tensor(identity_morphism(B, D.hom_word(Fab, Fcd)),
                                                Fm.nu.at({c, d})),
                                         D.composition(Fab, Fcd, FcFd));
                    Morphism rhs = then(then(Cm.tmor(a, c, b, d), F.component(ab, cd)), post);
                    bool ok = lhs == rhs;
                    rep.add("vmonf-nu-natural", ok,
                            ok ? ""
                               : "(" + C.objects[a] + "," + C.objects[b] + "," + C.objects[c] +
                                     "," + C.objects[d] + ")");
                }
    return rep;
}

/// The monoidal completion on a window of invertible weights:
/// (a<-u)(b<-v) = ab <- uv. Weights are required to be one-dimensional
/// objects so that collapsing the product weight is canonically unambiguous;
/// the non-monoidal completion machinery has no such restriction.
struct MonoidalCompletion {
    std::shared_ptr<const CompletionWindow> window;
    VMonPtr completed;
};

inline MonoidalCompletion monoidal_complete(const VMonPtr& Cm,
                                            const std::vector<GradedObject>& weights,
                                            size_t dim_cap = 16) {
    const VCatPtr& C = Cm->C;
    const BasePtr& B = C->base;
    const GroupSpec& G = B->group;
    for (auto& w : weights)
        if (w.total_dim() > 1)
            throw CoverageGapError(
                "monoidal completion weights must be invertible (one-dimensional); got " +
                w.str());
    auto ws = close_weights(G, weights, dim_cap);
    auto W = std::make_shared<CompletionWindow>(complete(C, completion_window(C, words_of(ws))));
    auto M = std::make_shared<VMonoidalCategory>();
    M->C = W->completed;
    M->unit = W->at(Cm->unit, Word::empty());
    const size_t n = W->objects.size();
    M->obj_tensor.assign(n, std::vector<size_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const auto& oi = W->objects[i];
            const auto& oj = W->objects[j];
            GradedObject uv = tensor_obj(G, oi.weight.conv(G), oj.weight.conv(G));
            auto k = W->find(Cm->prod(oi.base_obj, oj.base_obj), Word::single(uv));
            if (!k)
                throw CoverageGapError("monoidal completion window not closed at weight " +
                                       uv.str());
            M->obj_tensor[i][j] = *k;
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l) {
                    // first factor (a<-u) -> (c<-w), second (b<-v) -> (d<-x)
                    const auto& A = W->objects[i];
                    const auto& Cc = W->objects[j];
                    const auto& Bb = W->objects[k];
                    const auto& Dd = W->objects[l];
                    const Word& wu = A.weight;
                    const Word& ww = Cc.weight;
                    const Word& wv = Bb.weight;
                    const Word& wx = Dd.weight;
                    const Word& hac = C->hom_word(A.base_obj, Cc.base_obj);
                    const Word& hbd = C->hom_word(Bb.base_obj, Dd.base_obj);
                    // [u*, C(a->c), w, v*, C(b->d), x]
                    //   -> [v*, u*, C(a->c), w, C(b->d), x]   (reverse braid v* to front)
                    //   -> [v*, u*, C(a->c), C(b->d), w, x]   (reverse braid w past C(b->d))
                    //   -> [v*, u*, C(ab->cd), w, x]          (tensor in C)
                    //   -> [(uv)*, C(ab->cd), wx]             (collapse the weights)
                    Word front = wu.dual(G).concat(hac).concat(ww);
                    Morphism s1 = tensor(braid_rev(B, front, wv.dual(G)),
                                         identity_morphism(B, hbd.concat(wx)));
                    Morphism s2 =
                        tensor(identity_morphism(B, wv.dual(G).concat(wu.dual(G)).concat(hac)),
                               braid_rev(B, ww, hbd), identity_morphism(B, wx));
                    Morphism s3 = tensor(identity_morphism(B, wv.dual(G).concat(wu.dual(G))),
                                         Cm->tmor(A.base_obj, Cc.base_obj, Bb.base_obj, Dd.base_obj),
                                         identity_morphism(B, ww.concat(wx)));
                    Morphism s4 = tensor(pack_dual(B, wu.concat(wv)),
                                         identity_morphism(
                                             B, C->hom_word(Cm->prod(A.base_obj, Bb.base_obj),
                                                            Cm->prod(Cc.base_obj, Dd.base_obj))),
                                         pack(B, ww.concat(wx)));
                    M->tensor_mor[{i, k, j, l}] = then(then(then(s1, s2), s3), s4);
                }
    MonoidalCompletion out;
    out.window = W;
    out.completed = M;
    return out;
}

/// The inclusion as a V-monoidal functor, with trivial tensorator.
inline VMonoidalFunctor monoidal_inclusion(const VMonPtr& Cm, const MonoidalCompletion& comp) {
    VMonoidalFunctor I;
    I.F = inclusion_functor(*comp.window);
    I.source = Cm.get();
    I.target = comp.completed.get();
    for (size_t a = 0; a < Cm->C->size(); ++a)
        for (size_t b = 0; b < Cm->C->size(); ++b) {
            size_t ab = I.F(Cm->prod(a, b));
            I.nu[{a, b}] = comp.completed->C->identity_elem(ab);
        }
    return I;
}

// ---------------------------------------------------------------------------
// Rigid structure and closedness of the completion
// ---------------------------------------------------------------------------

/// Chosen duals with evaluation/coevaluation elements in C^V.
struct RigidStructure {
    const VMonoidalCategory* M = nullptr;
    std::vector<size_t> dual;   // a |-> a*
    std::vector<Morphism> ev;   // C^V(a a* -> 1)
    std::vector<Morphism> coev; // C^V(1 -> a* a)
};

inline Report verify_rigid(const RigidStructure& R) {
    Report rep;
    const VMonoidalCategory& M = *R.M;
    const VCategory& C = *M.C;
    for (size_t a = 0; a < C.size(); ++a) {
        size_t ad = R.dual[a];
        auto z1 = ucompose(C, a, M.prod(a, M.prod(ad, a)), a,
                           utensor(M, a, a, M.unit, M.prod(ad, a), C.identity_elem(a), R.coev[a]),
                           utensor(M, M.prod(a, ad), M.unit, a, a, R.ev[a], C.identity_elem(a)));
        auto z2 = ucompose(C, ad, M.prod(M.prod(ad, a), ad), ad,
                           utensor(M, M.unit, M.prod(ad, a), ad, ad, R.coev[a], C.identity_elem(ad)),
                           utensor(M, ad, ad, M.prod(a, ad), M.unit, C.identity_elem(ad), R.ev[a]));
        bool ok = z1 == C.identity_elem(a) && z2 == C.identity_elem(ad);
        rep.add("rigid-zigzag", ok, ok ? "" : C.objects[a]);
    }
    return rep;
}

/// Duals of a self-enriched monoidal window: dual label plus transported
/// ev/coev of the base category.
inline RigidStructure rigid_structure_vhat(const VMonPtr& Mm) {
    const VCategory& C = *Mm->C;
    const BasePtr& B = C.base;
    const GroupSpec& G = B->group;
    auto window = window_of(C);
    RigidStructure R;
    R.M = Mm.get();
    for (size_t a = 0; a < C.size(); ++a) {
        GradedObject d = dual_obj(G, window[a]);
        bool found = false;
        for (size_t i = 0; i < C.size(); ++i)
            if (window[i] == d) {
                R.dual.push_back(i);
                found = true;
                break;
            }
        if (!found) throw CoverageGapError("window lacks the dual of " + window[a].str());
    }
    for (size_t a = 0; a < C.size(); ++a) {
        Word wa = Word::single(window[a]);
        size_t aad = Mm->prod(a, R.dual[a]);
        size_t ada = Mm->prod(R.dual[a], a);
        Morphism ev_v = then(unpack(B, wa.concat(wa.dual(G))), ev_word(B, wa));
        R.ev.push_back(to_underlying_vhat(B, window[aad], ev_v));
        Morphism coev_v = then(coev_word(B, wa), pack(B, wa.dual(G).concat(wa)));
        R.coev.push_back(then(coev_v, unpack(B, Word::single(window[ada]))));
    }
    return R;
}

/// Frobenius form of the internal-hom adjunction of a rigid V-monoidal
/// category: theta_{b,c} : C(ab -> c) -> C(b -> a* c).
inline Morphism frobenius_theta(const RigidStructure& R, size_t a, size_t b, size_t c) {
    const VMonoidalCategory& M = *R.M;
    const VCategory& C = *M.C;
    size_t ad = R.dual[a];
    size_t ab = M.prod(a, b);
    size_t adab = M.prod(ad, ab);
    size_t adc = M.prod(ad, c);
    Morphism term1 = utensor(M, M.unit, M.prod(ad, a), b, b, R.coev[a], C.identity_elem(b));
    Morphism term2 = whisker_left(M, ad, ab, c);
    return then(tensor(term1, term2), C.composition(b, adab, adc));
}

/// The inverse Frobenius form: kappa_{b,c} : C(b -> a* c) -> C(ab -> c).
inline Morphism frobenius_kappa(const RigidStructure& R, size_t a, size_t b, size_t c) {
    const VMonoidalCategory& M = *R.M;
    const VCategory& C = *M.C;
    size_t ad = R.dual[a];
    size_t ab = M.prod(a, b);
    size_t aadc = M.prod(a, M.prod(ad, c));
    Morphism wh = whisker_left(M, a, b, M.prod(ad, c));
    Morphism evc = utensor(M, M.prod(a, ad), M.unit, c, c, R.ev[a], C.identity_elem(c));
    return then(wh, then(tensor(identity_morphism(C.base, C.hom_word(ab, aadc)), evc),
                         C.composition(ab, aadc, c)));
}

inline Report verify_frobenius(const RigidStructure& R) {
    Report rep;
    const VMonoidalCategory& M = *R.M;
    const VCategory& C = *M.C;
    for (size_t a = 0; a < C.size(); ++a)
        for (size_t b = 0; b < C.size(); ++b)
            for (size_t c = 0; c < C.size(); ++c) {
                auto th = frobenius_theta(R, a, b, c);
                auto ka = frobenius_kappa(R, a, b, c);
                bool ok = then(th, ka) == identity_morphism(C.base, C.hom_word(M.prod(a, b), c)) &&
                          then(ka, th) ==
                              identity_morphism(C.base, C.hom_word(b, M.prod(R.dual[a], c)));
                rep.add("frobenius-inverse-pair", ok,
                        ok ? ""
                           : "(" + C.objects[a] + "," + C.objects[b] + "," + C.objects[c] + ")");
            }
    return rep;
}

/// Internal hom of the monoidal completion over a rigid base:
/// [a<-u, c<-w] = [a,c] <- (u* ++ w), with theta-bar built from the base
/// Frobenius form and the reverse braiding. Verifies the two V-adjunction
/// squares exactly on window triples, theta-bar invertibility, and the
/// functor axioms of [a<-u, -].
struct CompletionInternalHom {
    size_t actor;                                  // the window index of a<-u
    std::vector<std::optional<size_t>> hom_target; // [a<-u, k] per window index k
    std::map<std::array<size_t, 2>, Morphism> theta_bar; // (p, r): C-bar(Lp -> r) -> C-bar(p -> [.,r])
};

inline CompletionInternalHom completion_internal_hom(const MonoidalCompletion& comp,
                                                     const RigidStructure& R_base, size_t actor) {
    const CompletionWindow& W = *comp.window;
    const VCatPtr& C = W.C;
    const BasePtr& B = C->base;
    const GroupSpec& G = B->group;
    const size_t n = W.objects.size();
    const CompletionObject& A = W.objects[actor];
    size_t a = A.base_obj;
    const Word& wu = A.weight;
    size_t ad = R_base.dual[a];

    CompletionInternalHom out;
    out.actor = actor;
    out.hom_target.assign(n, std::nullopt);
    for (size_t k = 0; k < n; ++k) {
        const CompletionObject& Cw = W.objects[k];
        GradedObject weight = wu.dual(G).concat(Cw.weight).conv(G);
        out.hom_target[k] = W.find(R_base.M->prod(ad, Cw.base_obj), Word::single(weight));
    }

    for (size_t p = 0; p < n; ++p)
        for (size_t r = 0; r < n; ++r) {
            if (!out.hom_target[r]) continue;
            const CompletionObject& P = W.objects[p];
            const CompletionObject& Rr = W.objects[r];
            size_t b = P.base_obj, c = Rr.base_obj;
            const Word& wv = P.weight;
            const Word& ww = Rr.weight;
            // theta-bar: [v*, u*, C(ab->c), w] -> [v*, C(b->a*c), u*, w]
            //            -> [v*, C(b->a*c), (u* w)]
            Morphism th = frobenius_theta(R_base, a, b, c);
            Morphism s1 = tensor(identity_morphism(B, wv.dual(G).concat(wu.dual(G))), th,
                                 identity_morphism(B, ww));
            Morphism s2 = tensor(identity_morphism(B, wv.dual(G)),
                                 braid_rev(B, wu.dual(G),
                                           C->hom_word(b, R_base.M->prod(ad, c))),
                                 identity_morphism(B, ww));
            Morphism s3 = tensor(identity_morphism(
                                     B, wv.dual(G).concat(C->hom_word(b, R_base.M->prod(ad, c)))),
                                 pack(B, wu.dual(G).concat(ww)));
            out.theta_bar[{p, r}] = then(then(s1, s2), s3);
        }
    return out;
}

/// The V-functor [a<-u, -] on the window (partial: only where the internal
/// hom target lies in the window).
inline std::optional<Morphism> internal_hom_component(const MonoidalCompletion& comp,
                                                      const RigidStructure& R_base, size_t actor,
                                                      size_t p, size_t q) {
    const CompletionWindow& W = *comp.window;
    const VCatPtr& C = W.C;
    const BasePtr& B = C->base;
    const GroupSpec& G = B->group;
    const CompletionObject& A = W.objects[actor];
    const CompletionObject& P = W.objects[p];
    const CompletionObject& Q = W.objects[q];
    size_t a = A.base_obj, b = P.base_obj, c = Q.base_obj;
    size_t ad = R_base.dual[a];
    const Word& wu = A.weight;
    const Word& wv = P.weight;
    const Word& ww = Q.weight;
    if (!W.find(R_base.M->prod(ad, b), Word::single(wu.dual(G).concat(wv).conv(G))) ||
        !W.find(R_base.M->prod(ad, c), Word::single(wu.dual(G).concat(ww).conv(G))))
        return std::nullopt;
    // [v*, C(b->c), w] -> [v*, C(a*b->a*c), w] -> [v*, u, u*, C(..), w]
    //   -> [v*, u, C(..), u*, w] -> [(u* v)*, C(..), (u* w)]
    const Word& hom_ad = C->hom_word(R_base.M->prod(ad, b), R_base.M->prod(ad, c));
    Morphism s1 = tensor(identity_morphism(B, wv.dual(G)), whisker_left(*R_base.M, ad, b, c),
                         identity_morphism(B, ww));
    Morphism s2 = tensor(identity_morphism(B, wv.dual(G)), coev_word(B, wu.dual(G)),
                         identity_morphism(B, hom_ad.concat(ww)));
    Morphism s3 = tensor(identity_morphism(B, wv.dual(G).concat(wu)),
                         braid_rev(B, wu.dual(G), hom_ad), identity_morphism(B, ww));
    Morphism s4 = tensor(pack_dual(B, wu.dual(G).concat(wv)), identity_morphism(B, hom_ad),
                         pack(B, wu.dual(G).concat(ww)));
    return then(then(then(s1, s2), s3), s4);
}

/// Exact verification of the V-adjunction squares for theta-bar on all
/// window triples, plus invertibility and the functor axioms of [a<-u, -].
inline Report completion_closedness_check(const VMonPtr& Cm, const MonoidalCompletion& comp,
                                          const RigidStructure& R_base, size_t actor) {
    Report rep;
    const CompletionWindow& W = *comp.window;
    const VMonoidalCategory& Mbar = *comp.completed;
    const VCategory& Cbar = *Mbar.C;
    const BasePtr& B = Cbar.base;
    const size_t n = W.objects.size();
    auto IH = completion_internal_hom(comp, R_base, actor);
    (void)Cm;

    // weight formula: the internal hom target weight is u* ++ w
    {
        bool ok = true;
        for (size_t r = 0; r < n && ok; ++r) {
            if (!IH.hom_target[r]) continue;
            const CompletionObject& T = W.objects[*IH.hom_target[r]];
            ok = T.weight ==
                 W.objects[actor].weight.dual(B->group).concat(W.objects[r].weight);
        }
        rep.add("closed-weight-formula", ok);
    }

    // theta-bar is a family of isomorphisms
    bool inv_ok = true;
    std::string w_inv;
    for (auto& [key, th] : IH.theta_bar) {
        if (!invert(th)) {
            inv_ok = false;
            if (w_inv.empty())
                w_inv = "(" + Cbar.objects[key[0]] + "," + Cbar.objects[key[1]] + ")";
        }
    }
    rep.add("closed-theta-invertible", inv_ok, w_inv);

    // the two V-adjunction squares
    bool sq1_ok = true, sq2_ok = true;
    std::string w1, w2;
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q)
            for (size_t r = 0; r < n; ++r) {
                if (!IH.hom_target[r] || !IH.hom_target[q]) continue;
                auto th_pr = IH.theta_bar.at({p, r});
                auto th_qr = IH.theta_bar.at({q, r});
                auto ka_pr = invert(th_pr);
                auto ka_qr = invert(th_qr);
                if (!ka_pr || !ka_qr) continue;
                size_t Lp = Mbar.prod(actor, p), Lq = Mbar.prod(actor, q);
                // square 1: (L_{p->q} kappa_{q,r}) ; comp = comp ; kappa_{p,r}
                Morphism Lcomp = whisker_left(Mbar, actor, p, q);
                auto lhs1 = then(tensor(Lcomp, *ka_qr), Cbar.composition(Lp, Lq, r));
                auto rhs1 = then(Cbar.composition(p, q, *IH.hom_target[r]), *ka_pr);
                // domains: C-bar(p->q) ++ C-bar(q -> [.,r]) vs same
                if (lhs1 != rhs1) {
                    sq1_ok = false;
                    if (w1.empty())
                        w1 = "(" + Cbar.objects[p] + "," + Cbar.objects[q] + "," +
                             Cbar.objects[r] + ")";
                }
                // square 2: (theta_{p,q} R_{q->r}) ; comp = comp ; theta_{p,r}
                auto Rcomp = internal_hom_component(comp, R_base, actor, q, r);
                if (Rcomp) {
                    auto th_pq = IH.theta_bar.at({p, q});
                    auto lhs2 = then(tensor(th_pq, *Rcomp),
                                     Cbar.composition(p, *IH.hom_target[q], *IH.hom_target[r]));
                    auto rhs2 = then(Cbar.composition(Lp, q, r), th_pr);
                    if (lhs2 != rhs2) {
                        sq2_ok = false;
                        if (w2.empty())
                            w2 = "(" + Cbar.objects[p] + "," + Cbar.objects[q] + "," +
                                 Cbar.objects[r] + ")";
                    }
                }
            }
    rep.add("closed-square-1", sq1_ok, w1);
    rep.add("closed-square-2", sq2_ok, w2);

    // functor axioms of [a<-u, -] where defined
    bool f_ok = true;
    std::string w_f;
    for (size_t p = 0; p < n && f_ok; ++p)
        for (size_t q = 0; q < n && f_ok; ++q)
            for (size_t r = 0; r < n && f_ok; ++r) {
                auto c_pq = internal_hom_component(comp, R_base, actor, p, q);
                auto c_qr = internal_hom_component(comp, R_base, actor, q, r);
                auto c_pr = internal_hom_component(comp, R_base, actor, p, r);
                if (!c_pq || !c_qr || !c_pr) continue;
                auto lhs = then(tensor(*c_pq, *c_qr),
                                Cbar.composition(*IH.hom_target[p], *IH.hom_target[q],
                                                 *IH.hom_target[r]));
                auto rhs = then(Cbar.composition(p, q, r), *c_pr);
                if (lhs != rhs) {
                    f_ok = false;
                    w_f = "(" + Cbar.objects[p] + "," + Cbar.objects[q] + "," + Cbar.objects[r] +
                          ")";
                }
            }
    for (size_t p = 0; p < n && f_ok; ++p) {
        auto c_pp = internal_hom_component(comp, R_base, actor, p, p);
        if (!c_pp) continue;
        if (then(Cbar.identity_elem(p), *c_pp) != Cbar.identity_elem(*IH.hom_target[p])) {
            f_ok = false;
            w_f = Cbar.objects[p];
        }
    }
    rep.add("closed-hom-functor", f_ok, w_f);
    return rep;
}

} // namespace vcwb

#pragma once

/**
 * @file morphism.hpp
 * @brief Morphisms of the base category between tensor words, with the
 *        structural maps: tensor product, braiding, evaluation/coevaluation,
 *        internal hom and the mate calculus.
 *
 * A morphism stores one exact matrix per total grade (absent block = zero),
 * with the codomain-by-domain orientation. Composition is written left to
 * right throughout the workbench: then(f, g) means "f first", realized as
 * block(g) * block(f).
 *
 * Evaluation and coevaluation carry the identity pairing in the canonical
 * basis (all entries 1); in a strict pointed category the zig-zag identities
 * involve no braiding, so this normalization satisfies them on the nose.
 */

#include "vcwb/errors.hpp"
#include "vcwb/graded.hpp"
#include "vcwb/matrix.hpp"

#include <functional>
#include <optional>
#include <sstream>

namespace vcwb {

struct Morphism {
    BasePtr base;
    Word dom, cod;
    std::map<Grade, Mat> blocks; // keyed by total grade; zero blocks absent

    Morphism() = default;
    Morphism(BasePtr b, Word d, Word c) : base(std::move(b)), dom(std::move(d)), cod(std::move(c)) {}

    const GroupSpec& group() const { return base->group; }
    long order() const { return base->scalar_order(); }

    // words are immutable after construction; bases are fetched once
    std::shared_ptr<const WordBasis> dom_basis() const {
        if (!dom_basis_) dom_basis_ = WordBasis::get(group(), dom);
        return dom_basis_;
    }
    std::shared_ptr<const WordBasis> cod_basis() const {
        if (!cod_basis_) cod_basis_ = WordBasis::get(group(), cod);
        return cod_basis_;
    }

    size_t dom_dim(const Grade& g) const { return dom_basis()->dim(g); }
    size_t cod_dim(const Grade& g) const { return cod_basis()->dim(g); }

    Mat block(const Grade& g) const {
        auto it = blocks.find(g);
        if (it != blocks.end()) return it->second;
        return Mat(order(), cod_dim(g), dom_dim(g));
    }

    const Mat* block_ptr(const Grade& g) const {
        auto it = blocks.find(g);
        return it == blocks.end() ? nullptr : &it->second;
    }

    void set_block(const Grade& g, Mat m) {
        if (m.is_zero()) blocks.erase(g);
        else blocks[g] = std::move(m);
    }

    bool is_zero() const {
        for (auto& [g, m] : blocks)
            if (!m.is_zero()) return false;
        return true;
    }

    bool is_identity() const {
        if (dom != cod) return false;
        auto db = dom_basis();
        for (auto& [g, d] : db->dims) {
            if (d == 0) continue;
            auto it = blocks.find(g);
            if (it == blocks.end() || !it->second.is_identity()) return false;
        }
        return true;
    }

    bool operator==(const Morphism& o) const {
        if (dom != o.dom || cod != o.cod) return false;
        for (auto& [g, m] : blocks) {
            const Mat* om = o.block_ptr(g);
            if (om ? (m != *om) : !m.is_zero()) return false;
        }
        for (auto& [g, m] : o.blocks)
            if (!block_ptr(g) && !m.is_zero()) return false;
        return true;
    }
    bool operator!=(const Morphism& o) const { return !(*this == o); }

    Morphism operator+(const Morphism& o) const {
        require_parallel(o, "add");
        Morphism r = *this;
        for (auto& [g, m] : o.blocks) r.set_block(g, r.block(g) + m);
        return r;
    }
    Morphism operator-(const Morphism& o) const {
        require_parallel(o, "sub");
        Morphism r = *this;
        for (auto& [g, m] : o.blocks) r.set_block(g, r.block(g) - m);
        return r;
    }
    Morphism operator-() const {
        Morphism r = *this;
        for (auto& [g, m] : r.blocks) m = -m;
        return r;
    }
    Morphism scaled(const Cyclotomic& s) const {
        Morphism r(base, dom, cod);
        if (s.is_zero()) return r;
        for (auto& [g, m] : blocks) r.set_block(g, m.scaled(s));
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        os << dom.key() << " -> " << cod.key();
        return os.str();
    }

private:
    void require_parallel(const Morphism& o, const char* what) const {
        if (dom != o.dom || cod != o.cod)
            throw ShapeMismatchError(std::string("morphism ") + what + ": shape mismatch " +
                                     str() + " vs " + o.str());
    }
    mutable std::shared_ptr<const WordBasis> dom_basis_, cod_basis_;
};

inline Morphism identity_morphism(const BasePtr& base, const Word& w) {
    Morphism f(base, w, w);
    auto b = f.dom_basis();
    for (auto& [g, d] : b->dims)
        if (d > 0) f.set_block(g, Mat::identity(base->scalar_order(), d));
    return f;
}

inline Morphism zero_morphism(const BasePtr& base, const Word& dom, const Word& cod) {
    return Morphism(base, dom, cod);
}

/// Composition written left to right: first f, then g.
inline Morphism then(const Morphism& f, const Morphism& g) {
    if (f.cod != g.dom)
        throw ShapeMismatchError("then: codomain " + f.cod.key() + " != domain " + g.dom.key());
    Morphism r(f.base, f.dom, g.cod);
    for (auto& [grade, fm] : f.blocks) {
        auto it = g.blocks.find(grade);
        if (it == g.blocks.end()) continue;
        Mat m = it->second * fm;
        r.set_block(grade, std::move(m));
    }
    return r;
}

/// Tensor product of morphisms; words concatenate, so this is strictly
/// associative at the matrix level.
inline Morphism tensor(const std::vector<Morphism>& fs) {
    if (fs.empty()) throw ShapeMismatchError("tensor: empty factor list");
    BasePtr base = fs[0].base;
    const GroupSpec& G = base->group;
    Word dom, cod;
    for (auto& f : fs) {
        dom = dom.concat(f.dom);
        cod = cod.concat(f.cod);
    }
    Morphism r(base, dom, cod);
    auto db = r.dom_basis();
    auto cb = r.cod_basis();

    const size_t nf = fs.size();
    std::vector<std::shared_ptr<const WordBasis>> fdb(nf), fcb(nf);
    std::vector<size_t> dpos(nf), cpos(nf); // factor offset of each piece
    {
        size_t dp = 0, cp = 0;
        for (size_t k = 0; k < nf; ++k) {
            fdb[k] = fs[k].dom_basis();
            fcb[k] = fs[k].cod_basis();
            dpos[k] = dp;
            cpos[k] = cp;
            dp += fs[k].dom.size();
            cp += fs[k].cod.size();
        }
    }

    // per-piece scratch
    std::vector<Grade> sub_grade(nf, G.zero());
    std::vector<uint64_t> sub_code(nf, 0);
    std::vector<const Mat*> blk(nf);
    std::vector<size_t> col_rank(nf);

    for (auto& [total, code_list] : db->codes) {
        Mat m(base->scalar_order(), cb->dim(total), code_list.size());
        bool any = false;
        for (size_t col = 0; col < code_list.size(); ++col) {
            uint64_t code = code_list[col];
            bool dead = false;
            for (size_t k = 0; k < nf; ++k) {
                // digits of this piece, re-encoded in the piece's own basis
                uint64_t c = 0;
                Grade t = G.zero();
                const size_t n_k = fs[k].dom.size();
                for (size_t j = 0; j < n_k; ++j) {
                    uint64_t d = db->digit(code, dpos[k] + j);
                    c += d * fdb[k]->weights[j];
                    t = G.add(t, db->options[dpos[k] + j][d].first);
                }
                sub_grade[k] = t;
                sub_code[k] = c;
                auto bit = fs[k].blocks.find(t);
                if (bit == fs[k].blocks.end()) { dead = true; break; }
                blk[k] = &bit->second;
                col_rank[k] = fdb[k]->rank_code(t, c);
                if (blk[k]->column(col_rank[k]).empty()) { dead = true; break; }
            }
            if (dead) continue;
            // distribute the outer product over nonzero entries
            std::function<void(size_t, uint64_t, const Cyclotomic*)> rec =
                [&](size_t k, uint64_t row_code, const Cyclotomic* acc) {
                    if (k == nf) {
                        m.add_entry(cb->rank_code(total, row_code), col, *acc);
                        any = true;
                        return;
                    }
                    const auto& column = blk[k]->column(col_rank[k]);
                    const auto& rcodes = fcb[k]->codes_at(sub_grade[k]);
                    for (auto& [rk, v] : column) {
                        // transfer the piece's row digits into the combined code
                        uint64_t rc = rcodes[rk];
                        uint64_t add = 0;
                        for (size_t j = 0; j < fs[k].cod.size(); ++j)
                            add += fcb[k]->digit(rc, j) * cb->weights[cpos[k] + j];
                        if (v.is_one()) {
                            rec(k + 1, row_code + add, acc);
                        } else {
                            Cyclotomic prod = *acc * v;
                            rec(k + 1, row_code + add, &prod);
                        }
                    }
                };
            Cyclotomic one = Cyclotomic::one(base->scalar_order());
            rec(0, 0, &one);
        }
        if (any) r.set_block(total, std::move(m));
    }
    return r;
}

inline Morphism tensor(const Morphism& a, const Morphism& b) { return tensor(std::vector<Morphism>{a, b}); }
inline Morphism tensor(const Morphism& a, const Morphism& b, const Morphism& c) {
    return tensor(std::vector<Morphism>{a, b, c});
}
inline Morphism tensor(const Morphism& a, const Morphism& b, const Morphism& c, const Morphism& d) {
    return tensor(std::vector<Morphism>{a, b, c, d});
}

namespace detail {
/// Permutation-with-scalar builder: cod tuple positions and scalar are
/// functions of the dom tuple.
template <typename Fn>
Morphism monomial_morphism(const BasePtr& base, const Word& dom, const Word& cod, Fn entry) {
    Morphism r(base, dom, cod);
    auto db = r.dom_basis();
    auto cb = r.cod_basis();
    for (auto& [total, code_list] : db->codes) {
        Mat m(base->scalar_order(), cb->dim(total), code_list.size());
        bool any = false;
        for (size_t col = 0; col < code_list.size(); ++col) {
            auto hit = entry(*db, code_list[col]); // optional<pair<Tuple, Cyclotomic>>
            if (!hit) continue;
            m.add_entry(cb->rank_code(total, cb->code_of(hit->first)), col, hit->second);
            any = true;
        }
        if (any) r.set_block(total, std::move(m));
    }
    return r;
}
} // namespace detail

/// Braiding of words: [W1 ++ W2] -> [W2 ++ W1], scaled by chi(|alpha|, |beta|)
/// on the summand where the W1-part has total grade |alpha| and the W2-part
/// has total grade |beta|.
inline Morphism braid(const BasePtr& base, const Word& w1, const Word& w2) {
    const GroupSpec& G = base->group;
    size_t n1 = w1.size();
    return detail::monomial_morphism(
        base, w1.concat(w2), w2.concat(w1),
        [&, n1](const WordBasis& db, uint64_t code)
            -> std::optional<std::pair<WordBasis::Tuple, Cyclotomic>> {
            auto tup = db.tuple_of(code);
            Grade ga = G.zero(), gb = G.zero();
            for (size_t i = 0; i < n1; ++i) ga = G.add(ga, tup[i].first);
            for (size_t i = n1; i < tup.size(); ++i) gb = G.add(gb, tup[i].first);
            WordBasis::Tuple swapped(tup.begin() + n1, tup.end());
            swapped.insert(swapped.end(), tup.begin(), tup.begin() + n1);
            return std::make_pair(std::move(swapped), base->chi_value(ga, gb));
        });
}

/// Reverse braiding [W1 ++ W2] -> [W2 ++ W1]: the inverse of braid(W2, W1),
/// scaled by chi(|beta|, |alpha|)^{-1}.
inline Morphism braid_rev(const BasePtr& base, const Word& w1, const Word& w2) {
    const GroupSpec& G = base->group;
    size_t n1 = w1.size();
    return detail::monomial_morphism(
        base, w1.concat(w2), w2.concat(w1),
        [&, n1](const WordBasis& db, uint64_t code)
            -> std::optional<std::pair<WordBasis::Tuple, Cyclotomic>> {
            auto tup = db.tuple_of(code);
            Grade ga = G.zero(), gb = G.zero();
            for (size_t i = 0; i < n1; ++i) ga = G.add(ga, tup[i].first);
            for (size_t i = n1; i < tup.size(); ++i) gb = G.add(gb, tup[i].first);
            WordBasis::Tuple swapped(tup.begin() + n1, tup.end());
            swapped.insert(swapped.end(), tup.begin(), tup.begin() + n1);
            return std::make_pair(std::move(swapped), base->chi_value_inv(gb, ga));
        });
}

/// ev_W : W ++ W* -> 1 with the identity pairing.
inline Morphism ev_word(const BasePtr& base, const Word& w) {
    const GroupSpec& G = base->group;
    Morphism r(base, w.concat(w.dual(G)), Word::empty());
    auto db = r.dom_basis();
    const auto& zero_codes = db->codes_at(G.zero());
    if (zero_codes.empty()) return r;
    Mat m(base->scalar_order(), 1, zero_codes.size());
    const size_t n = w.size();
    for (size_t col = 0; col < zero_codes.size(); ++col) {
        uint64_t code = zero_codes[col];
        bool match = true;
        for (size_t i = 0; i < n; ++i) {
            const auto& [g, idx] = db->entry(code, i);
            const auto& [gd, idxd] = db->entry(code, 2 * n - 1 - i);
            if (G.add(g, gd) != G.zero() || idx != idxd) { match = false; break; }
        }
        if (match) m.add_entry(0, col, base->one());
    }
    if (!m.is_zero()) r.set_block(G.zero(), std::move(m));
    return r;
}

/// coev_W : 1 -> W* ++ W with the identity pairing.
inline Morphism coev_word(const BasePtr& base, const Word& w) {
    const GroupSpec& G = base->group;
    Morphism r(base, Word::empty(), w.dual(G).concat(w));
    auto cb = r.cod_basis();
    const auto& zero_codes = cb->codes_at(G.zero());
    if (zero_codes.empty()) return r;
    Mat m(base->scalar_order(), zero_codes.size(), 1);
    const size_t n = w.size();
    for (size_t row = 0; row < zero_codes.size(); ++row) {
        uint64_t code = zero_codes[row];
        bool match = true;
        for (size_t i = 0; i < n; ++i) {
            const auto& [gd, idxd] = cb->entry(code, i);           // dual of w[n-1-i]
            const auto& [g, idx] = cb->entry(code, 2 * n - 1 - i); // w[n-1-i] itself
            if (G.add(g, gd) != G.zero() || idx != idxd) { match = false; break; }
        }
        if (match) m.add_entry(row, 0, base->one());
    }
    if (!m.is_zero()) r.set_block(G.zero(), std::move(m));
    return r;
}

/// Order-preserving collapse W -> [conv(W)]. The canonical basis of the
/// collapsed object is *defined* as the rank order of W's tuples, so the
/// matrices are identities; the morphism exists to rename the words.
inline Morphism pack(const BasePtr& base, const Word& w) {
    Word packed = Word::single(w.conv(base->group));
    Morphism r(base, w, packed);
    auto db = r.dom_basis();
    for (auto& [g, d] : db->dims)
        if (d > 0) r.set_block(g, Mat::identity(base->scalar_order(), d));
    return r;
}

/// dual_word(W) -> [dual(conv(W))]: identifies the reversed duals of the
/// factors with the dual of the collapsed object, entry permutation induced
/// by reverse-and-negate on tuples.
inline Morphism pack_dual(const BasePtr& base, const Word& w) {
    const GroupSpec& G = base->group;
    Word dw = w.dual(G);
    Word packed = Word::single(dual_obj(G, w.conv(G)));
    Morphism r(base, dw, packed);
    auto db = r.dom_basis();
    auto wb = WordBasis::get(G, w);
    const size_t n = w.size();
    for (auto& [g, code_list] : db->codes) {
        Mat m(base->scalar_order(), r.cod_dim(g), code_list.size());
        for (size_t col = 0; col < code_list.size(); ++col) {
            WordBasis::Tuple orig(n);
            for (size_t i = 0; i < n; ++i) {
                const auto& [gd, idx] = db->entry(code_list[col], i);
                orig[n - 1 - i] = {G.neg(gd), idx};
            }
            // dual(conv(w)) basis at grade g = conv(w) basis at -g = rank order of w tuples
            m.add_entry(wb->rank(G.neg(g), orig), col, base->one());
        }
        if (!m.is_zero()) r.set_block(g, std::move(m));
    }
    return r;
}

inline Morphism unpack(const BasePtr& base, const Word& w) {
    Morphism p = pack(base, w);
    Morphism r(base, p.cod, p.dom);
    r.blocks = p.blocks; // identity blocks
    return r;
}

inline Morphism unpack_dual(const BasePtr& base, const Word& w) {
    Morphism p = pack_dual(base, w);
    Morphism r(base, p.cod, p.dom);
    for (auto& [g, m] : p.blocks) r.set_block(g, m.transpose()); // permutation inverse
    return r;
}

/// Per-grade exact inverse; nullopt when any block is not invertible or the
/// grade supports differ in dimension.
inline std::optional<Morphism> invert(const Morphism& f) {
    auto db = f.dom_basis();
    auto cb = f.cod_basis();
    for (auto& [g, d] : db->dims)
        if (d != cb->dim(g)) return std::nullopt;
    for (auto& [g, d] : cb->dims)
        if (d != db->dim(g)) return std::nullopt;
    Morphism r(f.base, f.cod, f.dom);
    for (auto& [g, d] : db->dims) {
        if (d == 0) continue;
        auto inv = f.block(g).inverse();
        if (!inv) return std::nullopt;
        r.set_block(g, std::move(*inv));
    }
    return r;
}

/// The space V(dom -> cod) as a concrete coordinate space with the canonical
/// elementary-matrix basis, ordered by (grade, row, column).
struct MorSpace {
    BasePtr base;
    Word dom, cod;
    std::vector<std::tuple<Grade, size_t, size_t>> index;

    MorSpace(BasePtr b, Word d, Word c) : base(std::move(b)), dom(std::move(d)), cod(std::move(c)) {
        auto db = WordBasis::get(base->group, dom);
        auto cb = WordBasis::get(base->group, cod);
        for (auto& [g, dd] : db->dims) {
            size_t cd = cb->dim(g);
            if (dd == 0 || cd == 0) continue;
            for (size_t r = 0; r < cd; ++r)
                for (size_t col = 0; col < dd; ++col) index.emplace_back(g, r, col);
        }
    }

    size_t dim() const { return index.size(); }

    Morphism basis_elem(size_t i) const {
        auto [g, r, c] = index[i];
        Morphism f(base, dom, cod);
        Mat m(base->scalar_order(), f.cod_dim(g), f.dom_dim(g));
        m.add_entry(r, c, base->one());
        f.set_block(g, std::move(m));
        return f;
    }

    std::vector<Cyclotomic> coords(const Morphism& f) const {
        std::vector<Cyclotomic> v;
        v.reserve(index.size());
        for (auto& [g, r, c] : index) v.push_back(f.block(g).at(r, c));
        return v;
    }

    Morphism from_coords(const std::vector<Cyclotomic>& v) const {
        Morphism f(base, dom, cod);
        std::map<Grade, Mat> work;
        for (size_t i = 0; i < index.size(); ++i) {
            auto& [g, r, c] = index[i];
            auto it = work.find(g);
            if (it == work.end())
                it = work.emplace(g, Mat(base->scalar_order(), f.cod_dim(g), f.dom_dim(g))).first;
            it->second.add_entry(r, c, v[i]);
        }
        for (auto& [g, m] : work) f.set_block(g, std::move(m));
        return f;
    }

    /// Matrix of a linear map MorSpace -> target, columns = images of basis.
    Mat operator_matrix(const MorSpace& target,
                        const std::function<Morphism(const Morphism&)>& op) const {
        Mat m(base->scalar_order(), target.dim(), dim());
        for (size_t i = 0; i < dim(); ++i) {
            auto img = target.coords(op(basis_elem(i)));
            for (size_t r = 0; r < img.size(); ++r) m.add_entry(r, i, img[r]);
        }
        return m;
    }
};

// ---------------------------------------------------------------------------
// Internal hom and mates (rigid realization of Adjunction V(uw->v) = V(w->[u,v]))
// ---------------------------------------------------------------------------

/// [u -> v] = u* (x) v as a single collapsed object.
inline GradedObject internal_hom(const BasePtr& base, const GradedObject& u, const GradedObject& v) {
    const GroupSpec& G = base->group;
    return tensor_obj(G, dual_obj(G, u), v);
}

/// Mate of f : u ++ w -> v under V(uw -> v) = V(w -> u* v), at word level:
/// result w -> dual_word(u) ++ v.
inline Morphism mate_forward_word(const Morphism& f, const Word& u) {
    const BasePtr& base = f.base;
    size_t n = u.size();
    if (f.dom.size() < n ||
        !std::equal(u.factors.begin(), u.factors.end(), f.dom.factors.begin()))
        throw ShapeMismatchError("mate_forward: domain does not start with the given factor " +
                                 u.key() + " in " + f.dom.key());
    Word w;
    for (size_t i = n; i < f.dom.size(); ++i) w.factors.push_back(f.dom.factors[i]);
    const GroupSpec& G = base->group;
    // w -> u* u w -> u* v
    Morphism step1 = tensor(coev_word(base, u), identity_morphism(base, w));
    Morphism step2 = tensor(identity_morphism(base, u.dual(G)), f);
    return then(step1, step2);
}

/// Inverse mate: given g : w -> dual_word(u) ++ v, recover u ++ w -> v.
inline Morphism mate_backward_word(const Morphism& g, const Word& u, const Word& v) {
    const BasePtr& base = g.base;
    const GroupSpec& G = base->group;
    Word du = u.dual(G);
    if (g.cod.size() < du.size() ||
        !std::equal(du.factors.begin(), du.factors.end(), g.cod.factors.begin()))
        throw ShapeMismatchError("mate_backward: codomain does not start with dual of " + u.key());
    // u ++ w -> u ++ u* ++ v -> v
    Morphism step1 = tensor(identity_morphism(base, u), g);
    Morphism step2 = tensor(ev_word(base, u), identity_morphism(base, v));
    return then(step1, step2);
}

} // namespace vcwb

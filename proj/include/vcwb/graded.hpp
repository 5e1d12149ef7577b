#pragma once

/**
 * @file graded.hpp
 * @brief G-graded objects (multiplicity vectors), tensor words, and the
 *        canonical basis enumeration of a word.
 *
 * Strictness is handled structurally: a tensor product of objects is kept as
 * a *word* (the ordered list of factors) and the tensor product of words is
 * concatenation, which is associative on the nose. The basis of a word at
 * total grade t is the list of per-factor (grade, index) tuples, ordered
 * lexicographically; this fixed enumeration is what makes every serialized
 * matrix reproducible.
 *
 * Internally a tuple is packed into a single mixed-radix code (one digit per
 * factor, digit = position in the factor's flattened option list). Lex order
 * on tuples equals numeric order on codes, so ranking is a binary search.
 */

#include "vcwb/base_category.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace vcwb {

struct GradedObject {
    std::map<Grade, size_t> mult; // zero multiplicities omitted

    size_t at(const Grade& g) const {
        auto it = mult.find(g);
        return it == mult.end() ? 0 : it->second;
    }

    size_t total_dim() const {
        size_t d = 0;
        for (auto& [g, m] : mult) d += m;
        return d;
    }

    bool is_zero_object() const { return mult.empty(); }

    bool is_unit() const {
        return mult.size() == 1 && mult.begin()->first.is_zero() && mult.begin()->second == 1;
    }

    bool operator==(const GradedObject& o) const { return mult == o.mult; }
    bool operator!=(const GradedObject& o) const { return mult != o.mult; }
    bool operator<(const GradedObject& o) const { return mult < o.mult; }

    std::string str() const {
        if (mult.empty()) return "0";
        std::string s;
        for (auto& [g, m] : mult) {
            if (!s.empty()) s += "+";
            s += std::to_string(m) + "*" + g.str();
        }
        return s;
    }
};

inline GradedObject unit_object(const GroupSpec& G) {
    GradedObject u;
    u.mult[G.zero()] = 1;
    return u;
}

inline GradedObject simple_object(const GroupSpec& G, const Grade& g, size_t mult = 1) {
    GradedObject u;
    if (mult > 0) u.mult[G.reduce(g)] = mult;
    return u;
}

/// (u (x) v)(g) = sum_{a+b=g} u(a) v(b)
inline GradedObject tensor_obj(const GroupSpec& G, const GradedObject& u, const GradedObject& v) {
    GradedObject r;
    for (auto& [a, ma] : u.mult)
        for (auto& [b, mb] : v.mult) r.mult[G.add(a, b)] += ma * mb;
    return r;
}

/// u*(g) = u(-g)
inline GradedObject dual_obj(const GroupSpec& G, const GradedObject& u) {
    GradedObject r;
    for (auto& [g, m] : u.mult) r.mult[G.neg(g)] = m;
    return r;
}

inline GradedObject direct_sum(const GradedObject& u, const GradedObject& v) {
    GradedObject r = u;
    for (auto& [g, m] : v.mult) r.mult[g] += m;
    return r;
}

/// An ordered list of tensor factors. Unit factors are dropped on
/// construction; this does not change any basis enumeration.
struct Word {
    std::vector<GradedObject> factors;

    Word() = default;
    Word(std::initializer_list<GradedObject> fs) { for (auto& f : fs) push(f); }

    static Word empty() { return Word{}; }
    static Word single(const GradedObject& u) {
        Word w;
        w.push(u);
        return w;
    }

    void push(const GradedObject& u) {
        if (!u.is_unit()) factors.push_back(u);
    }

    size_t size() const { return factors.size(); }
    bool is_empty() const { return factors.empty(); }

    Word concat(const Word& o) const {
        Word w = *this;
        for (auto& f : o.factors) w.factors.push_back(f);
        return w;
    }

    Word dual(const GroupSpec& G) const {
        Word w;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it)
            w.factors.push_back(dual_obj(G, *it));
        return w;
    }

    /// Multiplicities of the underlying object (convolution of all factors).
    GradedObject conv(const GroupSpec& G) const {
        GradedObject r = unit_object(G);
        for (auto& f : factors) r = tensor_obj(G, r, f);
        return r;
    }

    bool operator==(const Word& o) const { return factors == o.factors; }
    bool operator!=(const Word& o) const { return factors != o.factors; }

    std::string key() const {
        std::string s = "[";
        for (auto& f : factors) s += f.str() + ";";
        return s + "]";
    }
};

inline Word operator+(const Word& a, const Word& b) { return a.concat(b); }

/// Canonical basis of a word. Basis vectors at total grade t are the
/// per-factor (grade, index) tuples with grades summing to t, ordered
/// lexicographically; each is packed into a mixed-radix integer code.
struct WordBasis {
    using Entry = std::pair<Grade, size_t>;
    using Tuple = std::vector<Entry>;

    size_t nfactors = 0;
    std::vector<std::vector<Entry>> options; // per factor, flattened (grade, index), lex order
    std::vector<uint64_t> weights;           // weights[k] = prod_{j>k} options[j].size()
    std::map<Grade, std::vector<uint64_t>> codes; // per total grade, ascending
    std::map<Grade, size_t> dims;

    size_t dim(const Grade& g) const {
        auto it = dims.find(g);
        return it == dims.end() ? 0 : it->second;
    }

    const std::vector<uint64_t>& codes_at(const Grade& g) const {
        static const std::vector<uint64_t> none;
        auto it = codes.find(g);
        return it == codes.end() ? none : it->second;
    }

    size_t rank_code(const Grade& g, uint64_t code) const {
        const auto& v = codes_at(g);
        auto it = std::lower_bound(v.begin(), v.end(), code);
        return static_cast<size_t>(it - v.begin());
    }

    uint64_t digit(uint64_t code, size_t k) const {
        return (code / weights[k]) % options[k].size();
    }

    const Entry& entry(uint64_t code, size_t k) const { return options[k][digit(code, k)]; }

    Tuple tuple_of(uint64_t code) const {
        Tuple t(nfactors);
        for (size_t k = 0; k < nfactors; ++k) t[k] = entry(code, k);
        return t;
    }

    uint64_t code_of(const Tuple& t) const {
        uint64_t c = 0;
        for (size_t k = 0; k < nfactors; ++k) {
            const auto& opts = options[k];
            auto it = std::lower_bound(opts.begin(), opts.end(), t[k]);
            c += static_cast<uint64_t>(it - opts.begin()) * weights[k];
        }
        return c;
    }

    size_t rank(const Grade& g, const Tuple& t) const { return rank_code(g, code_of(t)); }

    static std::shared_ptr<const WordBasis> get(const GroupSpec& G, const Word& w) {
        static std::map<std::string, std::shared_ptr<const WordBasis>> cache;
        static std::mutex mtx;
        std::string k = G.key() + w.key();
        {
            std::lock_guard<std::mutex> lock(mtx);
            auto it = cache.find(k);
            if (it != cache.end()) return it->second;
        }
        auto basis = std::make_shared<WordBasis>(build(G, w));
        std::lock_guard<std::mutex> lock(mtx);
        return cache.emplace(k, basis).first->second;
    }

private:
    static WordBasis build(const GroupSpec& G, const Word& w) {
        WordBasis b;
        b.nfactors = w.size();
        b.options.resize(w.size());
        for (size_t k = 0; k < w.size(); ++k)
            for (auto& [g, m] : w.factors[k].mult)
                for (size_t i = 0; i < m; ++i) b.options[k].push_back({g, i});
        b.weights.assign(w.size(), 1);
        uint64_t acc = 1;
        for (size_t k = w.size(); k-- > 0;) {
            b.weights[k] = acc;
            acc *= b.options[k].size();
        }
        if (acc == 0) return b; // a zero factor: empty basis everywhere
        // enumerate all codes in order; numeric order = lex tuple order
        std::vector<Grade> grade_acc(w.size() + 1, G.zero());
        std::vector<uint64_t> digits(w.size(), 0);
        for (uint64_t code = 0; code < acc; ++code) {
            // incremental digit update (odometer) keeps grade sums cheap
            if (code == 0) {
                for (size_t k = 0; k < w.size(); ++k)
                    grade_acc[k + 1] = G.add(grade_acc[k], b.options[k].empty()
                                                              ? G.zero()
                                                              : b.options[k][0].first);
            } else {
                size_t k = w.size();
                while (k-- > 0) {
                    if (++digits[k] < b.options[k].size()) break;
                    digits[k] = 0;
                }
                for (size_t j = k; j < w.size(); ++j)
                    grade_acc[j + 1] = G.add(grade_acc[j], b.options[j][digits[j]].first);
            }
            b.codes[grade_acc[w.size()]].push_back(code);
        }
        for (auto& [g, v] : b.codes) b.dims[g] = v.size();
        return b;
    }
};

} // namespace vcwb

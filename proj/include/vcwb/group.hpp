#pragma once

/**
 * @file group.hpp
 * @brief Finite abelian grading groups G = Z/n_1 x ... x Z/n_k and
 *        bicharacters G x G -> mu_m given by exponent tables.
 *
 * Group elements are integer tuples reduced componentwise; the componentwise
 * lexicographic order on reduced tuples is the canonical total order used by
 * every basis enumeration in the workbench, so all downstream matrices are
 * reproducible.
 */

#include "vcwb/cyclotomic.hpp"
#include "vcwb/report.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace vcwb {

struct Grade {
    std::vector<int32_t> c;

    bool operator==(const Grade& o) const { return c == o.c; }
    bool operator!=(const Grade& o) const { return c != o.c; }
    bool operator<(const Grade& o) const { return c < o.c; }

    bool is_zero() const {
        for (int32_t x : c)
            if (x != 0) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }
};

struct GroupSpec {
    std::vector<int32_t> cyclic_orders;

    size_t rank() const { return cyclic_orders.size(); }

    size_t size() const {
        size_t n = 1;
        for (int32_t o : cyclic_orders) n *= static_cast<size_t>(o);
        return n;
    }

    Grade zero() const { return Grade{std::vector<int32_t>(rank(), 0)}; }

    Grade reduce(Grade g) const {
        for (size_t i = 0; i < rank(); ++i) {
            int32_t n = cyclic_orders[i];
            int32_t v = g.c[i] % n;
            g.c[i] = v < 0 ? v + n : v;
        }
        return g;
    }

    Grade add(const Grade& a, const Grade& b) const {
        Grade r = a;
        for (size_t i = 0; i < rank(); ++i) r.c[i] += b.c[i];
        return reduce(r);
    }

    Grade neg(const Grade& a) const {
        Grade r = a;
        for (auto& x : r.c) x = -x;
        return reduce(r);
    }

    /// All elements in canonical (lexicographic) order.
    std::vector<Grade> elements() const {
        std::vector<Grade> out;
        Grade g = zero();
        while (true) {
            out.push_back(g);
            size_t i = rank();
            while (i > 0) {
                --i;
                if (++g.c[i] < cyclic_orders[i]) break;
                g.c[i] = 0;
                if (i == 0) return out;
            }
            if (rank() == 0) return out;
        }
    }

    size_t index_of(const Grade& g) const {
        size_t idx = 0;
        for (size_t i = 0; i < rank(); ++i) idx = idx * cyclic_orders[i] + g.c[i];
        return idx;
    }

    bool operator==(const GroupSpec& o) const { return cyclic_orders == o.cyclic_orders; }

    std::string key() const {
        std::string s = "Z";
        for (int32_t n : cyclic_orders) s += "/" + std::to_string(n);
        return s;
    }
};

/// chi(g,h) = zeta_m^{e(g,h)} with e stored as a dense table over G x G.
struct Bicharacter {
    long root_order = 1;
    std::vector<long> exponents; // indexed index_of(g) * |G| + index_of(h)

    static Bicharacter trivial(const GroupSpec& G, long m) {
        Bicharacter chi;
        chi.root_order = m;
        chi.exponents.assign(G.size() * G.size(), 0);
        return chi;
    }

    /// Bilinear extension from values on pairs of standard generators.
    /// gen_exponents[i][j] = e(u_i, u_j) where u_i is the i-th generator.
    static Bicharacter from_generators(const GroupSpec& G, long m,
                                       const std::vector<std::vector<long>>& gen_exponents) {
        Bicharacter chi;
        chi.root_order = m;
        auto elems = G.elements();
        size_t n = elems.size();
        chi.exponents.assign(n * n, 0);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                long e = 0;
                for (size_t i = 0; i < G.rank(); ++i)
                    for (size_t j = 0; j < G.rank(); ++j)
                        e += static_cast<long>(elems[a].c[i]) * elems[b].c[j] %
                             m * (gen_exponents[i][j] % m);
                long r = e % m;
                chi.exponents[G.index_of(elems[a]) * n + G.index_of(elems[b])] = r < 0 ? r + m : r;
            }
        return chi;
    }

    long exponent(const GroupSpec& G, const Grade& g, const Grade& h) const {
        return exponents[G.index_of(g) * G.size() + G.index_of(h)];
    }

    Cyclotomic value(const GroupSpec& G, const Grade& g, const Grade& h) const {
        return Cyclotomic::root_of_unity(root_order, exponent(G, g, h));
    }

    Cyclotomic value_inv(const GroupSpec& G, const Grade& g, const Grade& h) const {
        return Cyclotomic::root_of_unity(root_order, -exponent(G, g, h));
    }
};

/// Checks biadditivity and normalization of the exponent table.
/// Failure is reported as data with the violating tuple, never thrown.
inline Report validate_bicharacter(const GroupSpec& G, const Bicharacter& chi) {
    Report rep;
    auto elems = G.elements();
    const long m = chi.root_order;
    bool norm_ok = true;
    std::string norm_witness;
    for (const auto& g : elems) {
        if (chi.exponent(G, G.zero(), g) != 0 || chi.exponent(G, g, G.zero()) != 0) {
            norm_ok = false;
            norm_witness = "e(0," + g.str() + ") or e(" + g.str() + ",0) nonzero";
            break;
        }
    }
    rep.add("bicharacter-normalized", norm_ok, norm_witness);

    bool left_ok = true, right_ok = true;
    std::string left_witness, right_witness;
    for (const auto& g : elems) {
        for (const auto& gp : elems) {
            for (const auto& h : elems) {
                long lhs = chi.exponent(G, G.add(g, gp), h);
                long rhs = (chi.exponent(G, g, h) + chi.exponent(G, gp, h)) % m;
                if (lhs != rhs && left_ok) {
                    left_ok = false;
                    left_witness = "e(g+g',h) != e(g,h)+e(g',h) at g=" + g.str() +
                                   " g'=" + gp.str() + " h=" + h.str();
                }
                long lhs2 = chi.exponent(G, h, G.add(g, gp));
                long rhs2 = (chi.exponent(G, h, g) + chi.exponent(G, h, gp)) % m;
                if (lhs2 != rhs2 && right_ok) {
                    right_ok = false;
                    right_witness = "e(h,g+g') != e(h,g)+e(h,g') at g=" + g.str() +
                                    " g'=" + gp.str() + " h=" + h.str();
                }
            }
        }
    }
    rep.add("bicharacter-left-additive", left_ok, left_witness);
    rep.add("bicharacter-right-additive", right_ok, right_witness);
    return rep;
}

} // namespace vcwb

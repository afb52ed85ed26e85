#pragma once

// Exact calculus of Dunkl operators on two-variable polynomials. Coefficients
// are templated so the same operator definitions run in double precision or in
// exact rational arithmetic; no truncation happens inside an operator
// application either way.

#include "dpo/types.hpp"

#include <map>
#include <string>
#include <utility>

namespace dpo::dunkl {

enum class Axis { x, y };

template <class C>
class MonomialPoly {
public:
    // (i, j) -> coefficient of x^i y^j
    using Terms = std::map<std::pair<int, int>, C>;

    MonomialPoly() = default;

    static MonomialPoly monomial(int i, int j, C coeff = C(1)) {
        if (i < 0 || j < 0)
            throw std::invalid_argument("MonomialPoly: negative exponent");
        MonomialPoly p;
        p.add_term(i, j, coeff);
        return p;
    }

    void add_term(int i, int j, C coeff) {
        auto it = terms_.find({i, j});
        if (it == terms_.end()) {
            if (!(coeff == C(0))) terms_.emplace(std::make_pair(i, j), coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MonomialPoly operator+(const MonomialPoly& o) const {
        MonomialPoly r = *this;
        for (const auto& [ij, c] : o.terms_) r.add_term(ij.first, ij.second, c);
        return r;
    }
    MonomialPoly operator-(const MonomialPoly& o) const {
        MonomialPoly r = *this;
        for (const auto& [ij, c] : o.terms_) r.add_term(ij.first, ij.second, C(0) - c);
        return r;
    }
    MonomialPoly scaled(C s) const {
        MonomialPoly r;
        for (const auto& [ij, c] : terms_) r.add_term(ij.first, ij.second, c * s);
        return r;
    }

    // largest |coefficient|
    C max_abs() const {
        C m(0);
        for (const auto& [ij, c] : terms_) {
            C a = c < C(0) ? C(0) - c : c;
            if (m < a) m = a;
        }
        return m;
    }

private:
    Terms terms_;
};

// multiplication by the coordinate of the given axis
template <class C>
MonomialPoly<C> mul_coord(const MonomialPoly<C>& f, Axis ax) {
    MonomialPoly<C> r;
    for (const auto& [ij, c] : f.terms()) {
        if (ax == Axis::x) r.add_term(ij.first + 1, ij.second, c);
        else               r.add_term(ij.first, ij.second + 1, c);
    }
    return r;
}

// reflection of the given axis: x^i -> (-1)^i x^i
template <class C>
MonomialPoly<C> reflect(const MonomialPoly<C>& f, Axis ax) {
    MonomialPoly<C> r;
    for (const auto& [ij, c] : f.terms()) {
        const int e = ax == Axis::x ? ij.first : ij.second;
        r.add_term(ij.first, ij.second, (e % 2 == 0) ? c : C(0) - c);
    }
    return r;
}

// Dunkl derivative along one axis: the reflection part contributes only for
// odd exponents, where (1 - (-1)^k)/x acts exactly as 2 x^{k-1}.
template <class C>
MonomialPoly<C> dunkl_d(const MonomialPoly<C>& f, Axis ax, C nu) {
    MonomialPoly<C> r;
    for (const auto& [ij, c] : f.terms()) {
        const int k = ax == Axis::x ? ij.first : ij.second;
        if (k == 0) continue;
        C factor = C(k);
        if (k % 2 != 0) factor = factor + C(2) * nu;
        if (ax == Axis::x) r.add_term(ij.first - 1, ij.second, c * factor);
        else               r.add_term(ij.first, ij.second - 1, c * factor);
    }
    return r;
}

// One axis of the Dunkl Laplacian in its expanded form
// d^2 + (2 nu / x) d - (nu / x^2)(1 - R). On a monomial the three pieces
// combine into a single integer-shift term; for exponents 0 and 1 the
// combined coefficient cancels exactly, which keeps everything polynomial.
template <class C>
MonomialPoly<C> dunkl_dsq_direct(const MonomialPoly<C>& f, Axis ax, C nu) {
    MonomialPoly<C> r;
    for (const auto& [ij, c] : f.terms()) {
        const int k = ax == Axis::x ? ij.first : ij.second;
        C factor = C(k) * C(k - 1) + C(2) * nu * C(k);
        if (k % 2 != 0) factor = factor - C(2) * nu;
        if (k < 2) continue; // factor is exactly zero there
        if (ax == Axis::x) r.add_term(ij.first - 2, ij.second, c * factor);
        else               r.add_term(ij.first, ij.second - 2, c * factor);
    }
    return r;
}

template <class C>
MonomialPoly<C> dunkl_laplacian(const MonomialPoly<C>& f, C nu1, C nu2) {
    return dunkl_dsq_direct(f, Axis::x, nu1) + dunkl_dsq_direct(f, Axis::y, nu2);
}

template <class C>
struct HeisenbergReport {
    C max_residual{};
    int worst_i = -1;
    int worst_j = -1;
    std::string worst_relation;
};

// Verifies the deformed commutation relations on every monomial of total
// degree <= max_degree:
//   [D_a, x_a] = 1 + 2 nu_a R_a,   [D_a, x_b] = 0 (a != b),
//   [D_x, D_y] = 0,                [x, y] = 0.
// Returns the largest absolute coefficient of any residual polynomial.
template <class C>
HeisenbergReport<C> check_heisenberg(C nu1, C nu2, int max_degree) {
    HeisenbergReport<C> rep;
    auto consider = [&](const MonomialPoly<C>& res, int i, int j, const char* what) {
        C m = res.max_abs();
        if (rep.max_residual < m) {
            rep.max_residual = m;
            rep.worst_i = i;
            rep.worst_j = j;
            rep.worst_relation = what;
        }
    };
    for (int i = 0; i + 0 <= max_degree; ++i) {
        for (int j = 0; i + j <= max_degree; ++j) {
            const auto f = MonomialPoly<C>::monomial(i, j);

            auto comm = [&](Axis da, C nu, Axis xa) {
                return dunkl_d(mul_coord(f, xa), da, nu)
                     - mul_coord(dunkl_d(f, da, nu), xa);
            };
            // same-axis relations
            auto rx = comm(Axis::x, nu1, Axis::x)
                      - (f + reflect(f, Axis::x).scaled(C(2) * nu1));
            auto ry = comm(Axis::y, nu2, Axis::y)
                      - (f + reflect(f, Axis::y).scaled(C(2) * nu2));
            consider(rx, i, j, "[Dx,x]");
            consider(ry, i, j, "[Dy,y]");
            // cross-axis relations vanish
            consider(comm(Axis::x, nu1, Axis::y), i, j, "[Dx,y]");
            consider(comm(Axis::y, nu2, Axis::x), i, j, "[Dy,x]");
            // derivative-derivative and coordinate-coordinate
            auto dxdy = dunkl_d(dunkl_d(f, Axis::y, nu2), Axis::x, nu1)
                      - dunkl_d(dunkl_d(f, Axis::x, nu1), Axis::y, nu2);
            consider(dxdy, i, j, "[Dx,Dy]");
            auto xy = mul_coord(mul_coord(f, Axis::y), Axis::x)
                    - mul_coord(mul_coord(f, Axis::x), Axis::y);
            consider(xy, i, j, "[x,y]");
        }
    }
    return rep;
}

inline HeisenbergReport<double> check_heisenberg(const DunklParams& p, int max_degree) {
    return check_heisenberg<double>(p.nu1, p.nu2, max_degree);
}

} // namespace dpo::dunkl

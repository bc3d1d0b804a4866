#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aperiodic/letters.hpp"
#include "aperiodic/schreier.hpp"

namespace aperiodic {

using BigRational = boost::multiprecision::cpp_rational;

// Edge-weight parameters (t,u,v,w) for labels (a,b,c,d). The same construction
// runs in 64-bit floats (spectral work) and exact rationals (equivalence and
// determinant checks); the scalar is fixed per object, never mixed.
template <class R>
struct WeightParamsT {
    R t{}, u{}, v{}, w{};

    R D() const { return u + v + w; }
    bool in_P() const { return t != 0 && u + v != 0 && u + w != 0 && v + w != 0; }
    bool anisotropic() const { return !(u == v && v == w); }
};

using WeightParams = WeightParamsT<double>;
using RationalWeightParams = WeightParamsT<BigRational>;

// Off-diagonal weight: a -> t, x -> u+v, y -> u+w, z -> v+w (the pair sums are
// D-w, D-v, D-u; written as two-term sums so the float mode reproduces the
// edge-accumulation order bit for bit).
template <class R>
R weight_f(Letter l, const WeightParamsT<R>& p) {
    switch (l) {
        case Letter::a: return p.t;
        case Letter::x: return p.u + p.v;
        case Letter::y: return p.u + p.w;
        default: return p.v + p.w;  // z
    }
}

// Interior diagonal weight of the vertex between a two-letter pair holding
// exactly one a: pairs with x -> w, with y -> v, with z -> u.
template <class R>
R weight_g(Letter l0, Letter l1, const WeightParamsT<R>& p) {
    const bool a0 = l0 == Letter::a, a1 = l1 == Letter::a;
    if (a0 == a1) throw std::runtime_error("undefined pair");
    switch (a0 ? l1 : l0) {
        case Letter::x: return p.w;
        case Letter::y: return p.v;
        default: return p.u;  // z
    }
}

template <class R>
struct JacobiMatrixT {
    std::vector<R> diagonal;      // length N
    std::vector<R> off_diagonal;  // length N-1

    std::size_t size() const { return diagonal.size(); }
};

using JacobiMatrix = JacobiMatrixT<double>;
using RationalJacobiMatrix = JacobiMatrixT<BigRational>;

// Symmetric tridiagonal operator of a gap word in Word': off-diagonal entries
// weight_f per letter, boundary diagonal D (the b,c,d boundary loops),
// interior diagonal weight_g of the adjacent letter pair.
template <class R>
JacobiMatrixT<R> jacobi_from_word(const Word& w, const WeightParamsT<R>& p) {
    if (w.empty() || w.front() != Letter::a || w.back() != Letter::a)
        throw std::runtime_error("not in Word'");
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if ((w[i] == Letter::a) == (w[i + 1] == Letter::a))
            throw std::runtime_error("not in Word'");
    const std::size_t N = w.size() + 1;
    JacobiMatrixT<R> m;
    m.diagonal.resize(N);
    m.off_diagonal.resize(N - 1);
    for (std::size_t i = 0; i < N - 1; ++i) m.off_diagonal[i] = weight_f(w[i], p);
    m.diagonal[0] = p.D();
    m.diagonal[N - 1] = p.D();
    for (std::size_t i = 1; i + 1 < N; ++i) m.diagonal[i] = weight_g(w[i - 1], w[i], p);
    return m;
}

// The same operator assembled the long way round: summing labeled edge
// weights of the explicit edge list (a->t, b->u, c->v, d->w; loops once).
template <class R>
JacobiMatrixT<R> laplacian_from_graph(const LabeledLinearGraph& g, const WeightParamsT<R>& p) {
    const std::size_t V = static_cast<std::size_t>(g.vertex_count());
    JacobiMatrixT<R> m;
    m.diagonal.assign(V, R{});
    m.off_diagonal.assign(V - 1, R{});
    for (const Edge& e : edge_list(g)) {
        R wt;
        switch (e.label) {
            case 'a': wt = p.t; break;
            case 'b': wt = p.u; break;
            case 'c': wt = p.v; break;
            default: wt = p.w; break;
        }
        if (e.u == e.v)
            m.diagonal[static_cast<std::size_t>(e.u - 1)] += wt;
        else
            m.off_diagonal[static_cast<std::size_t>(std::min(e.u, e.v) - 1)] += wt;
    }
    return m;
}

template <class R>
JacobiMatrixT<R> laplacian_gamma_n(int n, const WeightParamsT<R>& p) {
    return laplacian_from_graph(gamma_n(n), p);
}

// Finite section of the two-sided operator over a window: trim at most one
// letter per end so the word starts and ends with a, then build the free
// (loop) boundary matrix of that word.
template <class R>
JacobiMatrixT<R> finite_section(const Window& w, const WeightParamsT<R>& p) {
    std::size_t b = 0, e = w.letters.size();
    if (b < e && w.letters[b] != Letter::a) ++b;
    if (e > b && w.letters[e - 1] != Letter::a) --e;
    if (b >= e) throw std::runtime_error("untrimmable");
    Word trimmed(w.letters.begin() + static_cast<std::ptrdiff_t>(b),
                 w.letters.begin() + static_cast<std::ptrdiff_t>(e));
    return jacobi_from_word(trimmed, p);
}

// One transfer step: propagates (u(n+1), f_n u(n)) along
// f_n u(n+1) + f_{n-1} u(n-1) + (g_n - E) u(n) = 0. Determinant is exactly 1.
template <class R>
struct TransferMatrixT {
    R m00{}, m01{}, m10{}, m11{};

    R det() const { return m00 * m11 - m01 * m10; }

    friend TransferMatrixT operator*(const TransferMatrixT& A, const TransferMatrixT& B) {
        return TransferMatrixT{A.m00 * B.m00 + A.m01 * B.m10, A.m00 * B.m01 + A.m01 * B.m11,
                               A.m10 * B.m00 + A.m11 * B.m10, A.m10 * B.m01 + A.m11 * B.m11};
    }

    // inverse assuming det == 1
    TransferMatrixT unimodular_inverse() const { return TransferMatrixT{m11, -m01, -m10, m00}; }
};

using TransferMatrix = TransferMatrixT<double>;
using RationalTransferMatrix = TransferMatrixT<BigRational>;

// Site letters: prev at position n-1, cur at position n.
template <class R>
TransferMatrixT<R> transfer_matrix(const R& E, Letter prev, Letter cur,
                                   const WeightParamsT<R>& p) {
    const R f = weight_f(cur, p);
    if (f == 0) throw std::runtime_error("f vanishes");
    const R g = weight_g(prev, cur, p);
    return TransferMatrixT<R>{(E - g) / f, R{-1} / f, f, R{}};
}

}  // namespace aperiodic

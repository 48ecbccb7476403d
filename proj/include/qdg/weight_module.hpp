#pragma once

// Finite-dimensional weight modules over U_q(sl_n): the simple ladders L(m)
// for n = 2, the vector representation and its dual for n = 3, tensor
// products via the coproduct, the double action (m* through Delta, theta*
// through chi), exact simplicity testing, a Peter-Weyl density rank, and the
// flag-invariance check for the comodule braiding gamma_{V,W}.

#include <random>
#include <string>
#include <vector>

#include "qdg/double_alg.hpp"

namespace qdg {

// ---------------------------------------------------------------------------
// Dense matrix helpers over the scalar field.
// ---------------------------------------------------------------------------
inline Matrix<Scalar> mat_zero(size_t r, size_t c) {
    return Matrix<Scalar>(r, std::vector<Scalar>(c, Scalar(0)));
}
inline Matrix<Scalar> mat_id(size_t n) {
    auto m = mat_zero(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
    return m;
}
inline Matrix<Scalar> mat_mul(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    auto m = mat_zero(a.size(), b[0].size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[0].size(); ++j) {
                if (b[k][j].is_zero()) continue;
                m[i][j] += a[i][k] * b[k][j];
            }
        }
    return m;
}
inline Matrix<Scalar>& mat_add_scaled(Matrix<Scalar>& a, const Scalar& c,
                                      const Matrix<Scalar>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) a[i][j] += c * b[i][j];
    return a;
}
inline Matrix<Scalar> kron(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    size_t rb = b.size(), cb = b[0].size();
    auto m = mat_zero(a.size() * rb, a[0].size() * cb);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) {
            if (a[i][j].is_zero()) continue;
            for (size_t k = 0; k < rb; ++k)
                for (size_t l = 0; l < cb; ++l)
                    m[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
        }
    return m;
}
inline bool mat_is_zero(const Matrix<Scalar>& a) {
    for (auto& row : a)
        for (auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}
inline bool mat_eq(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    return true;
}

// Incremental row space: membership testing and rank without re-eliminating.
struct Span {
    std::vector<std::vector<Scalar>> rows;
    std::vector<size_t> piv;  // pivot column of each row

    size_t rank() const { return rows.size(); }
    // Reduce vec against the stored rows (kept with pivot entry 1); returns
    // true (and stores the normalized remainder) when vec enlarges the span.
    bool add(std::vector<Scalar> vec) {
        reduce(vec);
        for (size_t j = 0; j < vec.size(); ++j)
            if (!vec[j].is_zero()) {
                Scalar inv = Scalar(1) / vec[j];
                for (size_t l = j; l < vec.size(); ++l) vec[l] *= inv;
                piv.push_back(j);
                rows.push_back(std::move(vec));
                return true;
            }
        return false;
    }
    bool contains(std::vector<Scalar> vec) const {
        reduce(vec);
        for (auto& e : vec)
            if (!e.is_zero()) return false;
        return true;
    }
    void reduce(std::vector<Scalar>& vec) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            Scalar c = vec[piv[r]];
            if (c.is_zero()) continue;
            for (size_t j = piv[r]; j < vec.size(); ++j)
                if (!rows[r][j].is_zero()) vec[j] -= c * rows[r][j];
        }
    }
};

inline std::vector<Scalar> mat_flatten(const Matrix<Scalar>& m) {
    std::vector<Scalar> v;
    v.reserve(m.size() * m[0].size());
    for (auto& row : m)
        for (auto& e : row) v.push_back(e);
    return v;
}

// ---------------------------------------------------------------------------
// Weight modules.  Basis vectors carry weight tags; each generator of the
// enveloping algebra acts by an exact matrix, and words act by left-to-right
// matrix products, so u.(w.x) = (uw).x.
// ---------------------------------------------------------------------------
struct WeightModule {
    const QuantumGroup* U = nullptr;
    std::string label;
    std::vector<CartanDatum::Weight> wt;  // per basis vector, highest first
    std::vector<Matrix<Scalar>> act;      // per generator id
    int dim() const { return static_cast<int>(wt.size()); }
};

// Evaluate a poly whose slots act on the listed modules (slot s on mods[s]);
// the result lives on the tensor product in slot order.
inline Matrix<Scalar> eval_modules(const std::vector<const WeightModule*>& mods,
                                   const NcPoly& p) {
    size_t total = 1;
    for (auto* m : mods) total *= m->wt.size();
    auto out = mat_zero(total, total);
    for (auto& [w, c] : p.terms()) {
        Matrix<Scalar> term(1, std::vector<Scalar>(1, Scalar(1)));
        for (size_t s = 0; s < mods.size(); ++s) {
            auto fac = mat_id(mods[s]->wt.size());
            for (Letter l : w)
                if (letter_slot(l) == static_cast<int>(s))
                    fac = mat_mul(fac, mods[s]->act.at(letter_id(l)));
            term = kron(term, fac);
        }
        mat_add_scaled(out, c, term);
    }
    return out;
}
inline Matrix<Scalar> eval_module(const WeightModule& m, const NcPoly& p) {
    return eval_modules({&m}, p);
}

// The simple (m+1)-dimensional ladder for U_q(sl_2): highest weight vector
// first, e raises, f lowers, symmetric q-integer coefficients
//   f.v_i = [i+1] v_{i+1},  e.v_i = [m-i+1] v_{i-1},  k_w.v_i = q^{(w, wt_i)}.
inline WeightModule build_L(const QuantumGroup& U, int m) {
    if (U.cd.n != 2) throw error("build_L: ladder modules require sl(2)");
    UqLayout L(U);
    WeightModule M;
    M.U = &U;
    M.label = "L(" + std::to_string(m) + ")";
    auto om = U.cd.omega(0), al = U.cd.alpha(0);
    for (int i = 0; i <= m; ++i)
        M.wt.push_back(CartanDatum::add(CartanDatum::scale(m, om),
                                        CartanDatum::scale(-i, al)));
    size_t d = m + 1;
    M.act.assign(4, mat_zero(d, d));
    for (int i = 0; i < m; ++i) {
        M.act[L.f(0)][i + 1][i] = Scalar(U.cd.q_int(i + 1));
        M.act[L.e(0)][i][i + 1] = Scalar(U.cd.q_int(m - i));
    }
    for (int i = 0; i <= m; ++i) {
        long p = U.cd.pair_D(om, M.wt[i]);
        M.act[L.k(0)][i][i] = Scalar(Laurent::v_pow(p));
        M.act[L.kinv(0)][i][i] = Scalar(Laurent::v_pow(-p));
    }
    return M;
}

// Vector representation (basis vector j has weight eps_j; f_i lowers j=i to
// j=i+1) and its dual (weights -eps_j, realized by the matrices of the
// duality pairing).  Available for n = 2 and n = 3.
inline WeightModule build_vector(const QuantumGroup& U) {
    UqLayout L(U);
    int n = U.cd.n;
    WeightModule M;
    M.U = &U;
    M.label = "V";
    for (int j = 0; j < n; ++j) M.wt.push_back(U.cd.eps(j));
    M.act.assign(4 * L.r, mat_zero(n, n));
    for (int i = 0; i < L.r; ++i) {
        M.act[L.f(i)][i + 1][i] = Scalar(1);
        M.act[L.e(i)][i][i + 1] = Scalar(1);
        for (int j = 0; j < n; ++j) {
            long p = U.cd.pair_D(U.cd.omega(i), M.wt[j]);
            M.act[L.k(i)][j][j] = Scalar(Laurent::v_pow(p));
            M.act[L.kinv(i)][j][j] = Scalar(Laurent::v_pow(-p));
        }
    }
    return M;
}
inline WeightModule build_dual_vector(const QuantumGroup& U) {
    UqLayout L(U);
    int n = U.cd.n;
    DualityPairing dp{&U, nullptr, {}, {}};
    WeightModule M;
    M.U = &U;
    M.label = "V*";
    for (int j = 0; j < n; ++j) M.wt.push_back(CartanDatum::neg(U.cd.eps(j)));
    for (int g = 0; g < 4 * L.r; ++g) M.act.push_back(dp.rho_letter(g));
    return M;
}

// Tensor product module: generators act through the coproduct.
inline WeightModule tensor_module(const WeightModule& M, const WeightModule& N) {
    WeightModule T;
    T.U = M.U;
    T.label = M.label + "(x)" + N.label;
    for (auto& a : M.wt)
        for (auto& b : N.wt) T.wt.push_back(CartanDatum::add(a, b));
    int g = M.U->alg.gen_count();
    for (int i = 0; i < g; ++i) {
        NcPoly d = M.U->alg.coproduct(NcPoly::gen(0, i));
        T.act.push_back(eval_modules({&M, &N}, d));
    }
    return T;
}

// Structural invariants of a weight module: the defining relations act by
// zero, k_lambda is diagonal with eigenvalue q^{(lambda, mu)} on each weight
// vector, and e_i / f_i shift weights by +-alpha_i.
inline SuiteReport module_relations_check(const WeightModule& M) {
    SuiteReport rep{"module " + M.label};
    const QuantumGroup& U = *M.U;
    UqLayout L(U);
    bool rel_ok = true;
    for (auto& r : U.alg.relations)
        if (!mat_is_zero(eval_module(M, r))) rel_ok = false;
    rep.add("defining relations act by zero", rel_ok);

    bool diag_ok = true, inv_ok = true;
    for (int i = 0; i < L.r; ++i) {
        auto& K = M.act[L.k(i)];
        for (int j = 0; j < M.dim(); ++j)
            for (int l = 0; l < M.dim(); ++l) {
                Scalar want = j == l
                    ? Scalar(Laurent::v_pow(U.cd.pair_D(U.cd.omega(i), M.wt[j])))
                    : Scalar(0);
                if (!(K[j][l] == want)) diag_ok = false;
            }
        if (!mat_eq(mat_mul(M.act[L.k(i)], M.act[L.kinv(i)]), mat_id(M.dim())))
            inv_ok = false;
    }
    rep.add("k_lambda acts diagonally by q^(lambda, mu)", diag_ok);
    rep.add("k and k^-1 are mutually inverse", inv_ok);

    bool shift_ok = true;
    for (int i = 0; i < L.r; ++i)
        for (int j = 0; j < M.dim(); ++j)
            for (int l = 0; l < M.dim(); ++l) {
                if (!M.act[L.e(i)][j][l].is_zero() &&
                    !CartanDatum::eq(M.wt[j], CartanDatum::add(M.wt[l], U.cd.alpha(i))))
                    shift_ok = false;
                if (!M.act[L.f(i)][j][l].is_zero() &&
                    !CartanDatum::eq(CartanDatum::add(M.wt[j], U.cd.alpha(i)), M.wt[l]))
                    shift_ok = false;
            }
    rep.add("e_i raises and f_i lowers by alpha_i", shift_ok);
    return rep;
}

// ---------------------------------------------------------------------------
// The double action on V = M (x) N: the enveloping half m*(u) acts through
// the coproduct (that is the tensor-module action), the function half
// theta*(c) acts by the matrices of chi(theta*(c)) = sum l-S(c1) (x) l+S(c2).
// ---------------------------------------------------------------------------
struct DoubleAction {
    WeightModule V;                        // tensor module; V.act = m* action
    std::vector<Matrix<Scalar>> theta_act; // per function-algebra generator
    std::vector<Matrix<Scalar>> all_ops() const {
        auto ops = V.act;
        ops.insert(ops.end(), theta_act.begin(), theta_act.end());
        return ops;
    }
};

inline Matrix<Scalar> theta_matrix(const DoubleAlgebra& D, const WeightModule& M,
                                   const WeightModule& N, const NcPoly& c) {
    return eval_modules({&M, &N}, D.chi_theta_star(c));
}

inline DoubleAction double_action(const DoubleAlgebra& D, const WeightModule& M,
                                  const WeightModule& N) {
    DoubleAction da;
    da.V = tensor_module(M, N);
    int g = D.A().alg.gen_count();
    for (int c = 0; c < g; ++c)
        da.theta_act.push_back(theta_matrix(D, M, N, NcPoly::gen(0, c)));
    return da;
}

// Invariants of the double action on M (x) N: the m*-half is a genuine
// module, theta* is multiplicative against the opposite product of the
// function algebra, and the two halves commute past each other exactly as
// the derived cross relations demand:
//   sum theta(a1) m(u1) <u2, a2>  =  sum <u1, a1> m(u2) theta(a2).
inline SuiteReport double_action_check(const DoubleAlgebra& D, const WeightModule& M,
                                       const WeightModule& N) {
    auto da = double_action(D, M, N);
    SuiteReport rep{"double action on " + da.V.label};
    auto sub = module_relations_check(da.V);
    rep.add("m* half is a module", sub.passed());

    const Algebra& A = D.A().alg;
    const Algebra& Ua = D.U().alg;
    bool mult_ok = true;
    for (int c = 0; c < A.gen_count(); ++c)
        for (int cc = 0; cc < A.gen_count(); ++cc) {
            auto lhs = mat_mul(da.theta_act[c], da.theta_act[cc]);
            auto rhs = theta_matrix(D, M, N,
                                    A.nf(NcPoly::gen(0, cc) * NcPoly::gen(0, c)));
            if (!mat_eq(lhs, rhs)) mult_ok = false;
        }
    rep.add("theta* respects the opposite product", mult_ok);

    const DualityPairing& dual = D.lmaps().dual();
    bool cross_ok = true;
    size_t d = da.V.wt.size();
    for (int u = 0; u < Ua.gen_count(); ++u)
        for (int a = 0; a < A.gen_count(); ++a) {
            NcPoly du = Ua.coproduct(NcPoly::gen(0, u));
            NcPoly dc = A.coproduct(NcPoly::gen(0, a));
            auto lhs = mat_zero(d, d), rhs = mat_zero(d, d);
            for (auto& [wu, su] : du.terms())
                for (auto& [wa, sa] : dc.terms()) {
                    auto ul = split_legs(wu, 1, 2);
                    auto al = split_legs(wa, 1, 2);
                    Scalar cl = su * sa * dual(NcPoly::monomial(ul[1]), NcPoly::monomial(al[1]));
                    if (!cl.is_zero())
                        mat_add_scaled(
                            lhs, cl,
                            mat_mul(theta_matrix(D, M, N, NcPoly::monomial(al[0])),
                                    eval_modules({&M, &N},
                                                 Ua.coproduct(NcPoly::monomial(ul[0])))));
                    Scalar cr = su * sa * dual(NcPoly::monomial(ul[0]), NcPoly::monomial(al[0]));
                    if (!cr.is_zero())
                        mat_add_scaled(
                            rhs, cr,
                            mat_mul(eval_modules({&M, &N},
                                                 Ua.coproduct(NcPoly::monomial(ul[1]))),
                                    theta_matrix(D, M, N, NcPoly::monomial(al[1]))));
                }
            if (!mat_eq(lhs, rhs)) cross_ok = false;
        }
    rep.add("cross relations hold as matrix identities", cross_ok);
    return rep;
}

// ---------------------------------------------------------------------------
// Simplicity.  A module is simple iff every nonzero vector generates it; we
// take the exact closure of every basis vector plus seeded random vectors.
// A proper closure is a certified invariant subspace (returned as witness);
// full closures from the whole sample certify simplicity for these modules.
// ---------------------------------------------------------------------------
struct SimpleResult {
    bool simple = true;
    Matrix<Scalar> witness;  // basis of a proper invariant subspace, if any
};

inline Span closure(const std::vector<Matrix<Scalar>>& ops,
                    const std::vector<Scalar>& start) {
    Span sp;
    if (!sp.add(start)) return sp;
    for (size_t next = 0; next < sp.rows.size(); ++next) {
        auto row = sp.rows[next];  // copy: sp.rows may reallocate
        for (auto& op : ops) {
            std::vector<Scalar> img(row.size(), Scalar(0));
            for (size_t i = 0; i < row.size(); ++i)
                for (size_t j = 0; j < row.size(); ++j) img[i] += op[i][j] * row[j];
            sp.add(std::move(img));
        }
    }
    return sp;
}

// Closure rank after specializing v at a rational point.  Specialization
// can only collapse the span, so a full numeric closure certifies that the
// exact closure is full as well; a proper numeric closure is re-examined
// exactly before any verdict.  Throws on evaluation at a pole.
inline size_t closure_rank_at(const std::vector<Matrix<Scalar>>& ops,
                              const std::vector<Scalar>& start, const Rational& x) {
    size_t n = start.size();
    std::vector<Matrix<Rational>> e(ops.size(), Matrix<Rational>(n));
    for (size_t o = 0; o < ops.size(); ++o)
        for (size_t i = 0; i < n; ++i)
            for (auto& f : ops[o][i]) e[o][i].push_back(f.evaluate(x));
    std::vector<std::vector<Rational>> rows;
    std::vector<size_t> piv;
    auto add = [&](std::vector<Rational> vec) {
        for (size_t r = 0; r < rows.size(); ++r) {
            Rational c = vec[piv[r]];
            if (c == 0) continue;
            for (size_t j = piv[r]; j < n; ++j) vec[j] -= c * rows[r][j];
        }
        for (size_t j = 0; j < n; ++j)
            if (vec[j] != 0) {
                Rational inv = vec[j];
                for (size_t l = j; l < n; ++l) vec[l] /= inv;
                piv.push_back(j);
                rows.push_back(std::move(vec));
                return true;
            }
        return false;
    };
    {
        std::vector<Rational> s0;
        for (auto& f : start) s0.push_back(f.evaluate(x));
        if (!add(std::move(s0))) return 0;
    }
    for (size_t next = 0; next < rows.size(); ++next) {
        auto row = rows[next];
        for (auto& op : e) {
            std::vector<Rational> img(n, Rational(0));
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    if (op[i][j] != 0 && row[j] != 0) img[i] += op[i][j] * row[j];
            add(std::move(img));
        }
    }
    return rows.size();
}

inline SimpleResult is_simple(const std::vector<Matrix<Scalar>>& ops, int dim,
                              uint64_t seed = 0, int n_random = 5) {
    std::vector<std::vector<Scalar>> starts;
    for (int i = 0; i < dim; ++i) {
        std::vector<Scalar> e(dim, Scalar(0));
        e[i] = Scalar(1);
        starts.push_back(std::move(e));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-2, 2), pow(-2, 2);
    for (int t = 0; t < n_random; ++t) {
        std::vector<Scalar> x(dim);
        for (auto& e : x) e = Scalar(Laurent::v_pow(pow(rng))) * Scalar(coef(rng));
        bool nz = false;
        for (auto& e : x) nz = nz || !e.is_zero();
        if (nz) starts.push_back(std::move(x));
    }
    std::uniform_int_distribution<long> num(2, 1 << 20), den(1, 1 << 10);
    for (auto& s : starts) {
        bool full_numeric = false;
        for (int attempt = 0; attempt < 8 && !full_numeric; ++attempt) {
            Rational x(num(rng), den(rng));
            x.canonicalize();
            try {
                full_numeric = closure_rank_at(ops, s, x) == static_cast<size_t>(dim);
                break;
            } catch (const error&) {
                continue;  // pole: retry with a fresh point
            }
        }
        if (full_numeric) continue;
        Span sp = closure(ops, s);
        if (sp.rank() < static_cast<size_t>(dim)) return {false, sp.rows};
    }
    return {true, {}};
}

// Brute-force cross check for small modules: sweep a dense deterministic
// family of start vectors and ask whether any closure is proper.
inline SimpleResult brute_force_simple(const std::vector<Matrix<Scalar>>& ops, int dim) {
    std::vector<Scalar> vals = {Scalar(0), Scalar(1), -Scalar(1),
                                Scalar(Laurent::v_pow(1)), Scalar(Laurent::v_pow(-1))};
    size_t total = 1;
    for (int i = 0; i < dim; ++i) total *= vals.size();
    for (size_t code = 1; code < total; ++code) {
        std::vector<Scalar> x(dim);
        size_t c = code;
        for (int i = 0; i < dim; ++i) {
            x[i] = vals[c % vals.size()];
            c /= vals.size();
        }
        Span sp = closure(ops, x);
        if (sp.rank() < static_cast<size_t>(dim)) return {false, sp.rows};
    }
    return {true, {}};
}

// ---------------------------------------------------------------------------
// Peter-Weyl density rank: the dimension of the span of all operators that
// words in the double action generate inside End(V).  Density (rank =
// (dim V)^2) says the (dim V)^2 matrix coefficients of V stay independent as
// functionals on the action algebra.
// ---------------------------------------------------------------------------
inline size_t matrix_span_rank(const std::vector<Matrix<Scalar>>& gens, size_t dim) {
    Span sp;
    std::vector<Matrix<Scalar>> frontier{mat_id(dim)};
    sp.add(mat_flatten(frontier[0]));
    while (!frontier.empty() && sp.rank() < dim * dim) {
        std::vector<Matrix<Scalar>> next;
        for (auto& m : frontier)
            for (auto& g : gens) {
                auto prod = mat_mul(g, m);
                if (sp.add(mat_flatten(prod))) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    return sp.rank();
}

inline size_t peter_weyl_rank(const DoubleAlgebra& D, int nu, int nuprime) {
    auto M = build_L(D.U(), nu), N = build_L(D.U(), nuprime);
    auto da = double_action(D, M, N);
    return matrix_span_rank(da.all_ops(), da.V.wt.size());
}

// ---------------------------------------------------------------------------
// Comodule braiding gamma_{V,W} and the flag-invariance suite.
//
// V = W = L(1) (x) L(1) carries a comodule structure over the double whose
// coefficient matrix on each tensor factor is C = [[d, c], [b, a]] (so that
// the module action is u.v_j = sum_i <u, C_ij> v_i).  The braiding operator
//   gamma_{V,W}(v_a (x) w_b) = sum_{c,d} (w_d (x) v_c) gamma(C_ca, C_db)
// is invertible and maps every product flag V_i (x) V'_j (x) W onto
// W (x) V_i (x) V'_j.
// ---------------------------------------------------------------------------
inline SuiteReport flag_invariance_check(const DoubleAlgebra& D) {
    SuiteReport rep{"flag invariance"};
    if (D.A().cd.n != 2) throw error("flag_invariance_check: sl(2) only");
    // Single-factor coefficient matrix C_ij as generator ids: a=0,b=1,c=2,d=3.
    const int C[2][2] = {{3, 2}, {1, 0}};
    // Double-comodule coefficients of L(1) (x) L(1): first factor coacts on
    // the first copy of the double, the second factor on the second copy.
    auto coeff = [&](int i, int k, int j, int l) {
        return NcPoly::gen(0, C[i][j]) * NcPoly::gen(1, C[k][l]);
    };
    auto idx = [](int i, int k) { return 2 * i + k; };

    auto G = mat_zero(16, 16);
    for (int va = 0; va < 2; ++va)
        for (int vb = 0; vb < 2; ++vb)          // source V index (va,vb)
            for (int wa = 0; wa < 2; ++wa)
                for (int wb = 0; wb < 2; ++wb)  // source W index (wa,wb)
                    for (int vc = 0; vc < 2; ++vc)
                        for (int vd = 0; vd < 2; ++vd)
                            for (int wc = 0; wc < 2; ++wc)
                                for (int wd = 0; wd < 2; ++wd) {
                                    Scalar g = D.gamma(coeff(vc, vd, va, vb),
                                                       coeff(wc, wd, wa, wb));
                                    if (g.is_zero()) continue;
                                    G[idx(wc, wd) * 4 + idx(vc, vd)]
                                     [idx(va, vb) * 4 + idx(wa, wb)] += g;
                                }
    rep.add("gamma_{V,W} has full rank", rank_exact(G) == 16);

    // Product flags.  The braiding is triangular with opposite orientations
    // on the two copies: in the first factor weights may only rise, in the
    // second they may only fall.  So V_i is spanned by the i lowest-weight
    // basis vectors of the first L(1) and V'_j by the j highest of the
    // second, and each V_i (x) V'_j (x) W must map into W (x) V_i (x) V'_j.
    bool flags_ok = true;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            for (int va = 2 - i; va < 2; ++va)
                for (int vb = 0; vb < j; ++vb)
                    for (int w = 0; w < 4; ++w) {
                        int col = idx(va, vb) * 4 + w;
                        for (int row = 0; row < 16; ++row) {
                            int p = (row % 4) / 2, q = row % 2;
                            if ((p < 2 - i || q >= j) && !G[row][col].is_zero())
                                flags_ok = false;
                        }
                    }
    rep.add("product flags are gamma-invariant", flags_ok);
    return rep;
}

}  // namespace qdg

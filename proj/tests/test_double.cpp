#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qdg/double_alg.hpp"

using namespace qdg;

namespace {
const QuantumGroup& oq2() {
    static QuantumGroup G = build_Oq_SLn(2);
    return G;
}
const QuantumGroup& uq2() {
    static QuantumGroup G = build_Uq_sln(2);
    return G;
}
const DoubleAlgebra& dbl() {
    static DoubleAlgebra D(oq2(), uq2());
    return D;
}
NcPoly P(const std::string& s) { return oq2().alg.parse(s); }
NcPoly L(long k) { return NcPoly(Scalar(Laurent::v_pow(k))); }
}  // namespace

TEST_CASE("cross relations: the full derived table for SL(2)") {
    const DoubleAlgebra& D = dbl();
    enum { A, B, C, Dg };
    // x~ . y in canonical order, first copy before second
    CHECK(D.cross_commute(A, A) == P("a*a_2"));
    CHECK(D.cross_commute(A, B) == (NcPoly::one() - L(4)) * P("a*b_2") + L(2) * P("b*a_2"));
    CHECK(D.cross_commute(A, C) == L(-2) * P("c*a_2"));
    CHECK(D.cross_commute(A, Dg) == (L(-2) - L(2)) * P("c*b_2") + P("d*a_2"));
    CHECK(D.cross_commute(B, A) == L(2) * P("a*b_2"));
    CHECK(D.cross_commute(B, B) == P("b*b_2"));
    CHECK(D.cross_commute(B, C) == P("c*b_2"));
    CHECK(D.cross_commute(B, Dg) == L(-2) * P("d*b_2"));
    CHECK(D.cross_commute(C, A) == L(-2) * P("a*c_2") + (NcPoly::one() - L(-4)) * P("c*a_2"));
    CHECK(D.cross_commute(C, B) ==
          (L(-2) - L(2)) * P("a*d_2") + P("b*c_2") +
              (NcPoly(Scalar(2)) - L(4) - L(-4)) * P("c*b_2") + (L(2) - L(-2)) * P("d*a_2"));
    CHECK(D.cross_commute(C, C) == P("c*c_2"));
    CHECK(D.cross_commute(C, Dg) == (NcPoly::one() - L(4)) * P("c*d_2") + L(2) * P("d*c_2"));
    CHECK(D.cross_commute(Dg, A) == P("a*d_2") + (L(2) - L(-2)) * P("c*b_2"));
    CHECK(D.cross_commute(Dg, B) == L(-2) * P("b*d_2") + (NcPoly::one() - L(-4)) * P("d*b_2"));
    CHECK(D.cross_commute(Dg, C) == L(2) * P("c*d_2"));
    CHECK(D.cross_commute(Dg, Dg) == P("d*d_2"));

    auto rels = D.derive_cross_relations();
    CHECK(rels.size() == 16);
    for (auto& r : rels) CHECK(!r.display.empty());
}

TEST_CASE("cross relations: diff against the printed table") {
    auto diffs = dbl().diff_printed_relations();
    REQUIRE(diffs.size() == 17);
    auto status = [&](const std::string& line) {
        for (auto& [text, match] : diffs)
            if (text == line) return match;
        FAIL("missing line: " << line);
        return false;
    };
    // the unambiguous printed lines all agree with the derived table
    CHECK(status("a a~ = a~ a"));
    CHECK(status("c a~ = q a~ c"));
    CHECK(status("c b~ = b~ c"));
    CHECK(status("c c~ = c~ c"));
    CHECK(status("b b~ = b~ b"));
    CHECK(status("d d~ = d~ d"));
    CHECK(status("d b~ = q b~ d"));
    // and so do these
    CHECK(status("q a b~ = b~ a"));
    CHECK(status("a d~ + (q-q^-1) c b~ = d~ a"));
    CHECK(status("b d~ + (q-q^-1) d b~ = q d~ b"));
    CHECK(status("q c d~ = d~ c"));
    CHECK(status("d a~ = a~ d + (q-q^-1) b~ c"));
    CHECK(status("q d c~ = c~ d + (q-q^-1) d~ c"));
    // the corrupt printed lines do not (reported as warnings downstream):
    // both pieces of the garbled three-way line, a sign-and-coefficient slip,
    // and a line mixing terms of different bidegrees
    CHECK(!status("q b a~ = a~ b"));
    CHECK(!status("a~ b = (q-q^-1) b~ a"));
    CHECK(!status("a c~ = c~ a + (q-q^-1) c a~"));
    CHECK(!status("b c~ + (q-q^-1) d a~ = (q-q^-1) d~ a + a~ b"));
}

TEST_CASE("double multiplication is associative") {
    const DoubleAlgebra& D = dbl();
    auto gens = D.handle().generators();
    for (auto& x : gens)
        for (auto& y : gens)
            for (auto& z : gens)
                REQUIRE(D.mul(D.mul(x, y), z) == D.mul(x, D.mul(y, z)));
    // random degree-2 monomial triples
    auto words = oq2().alg.tensor_basis(2, 2);
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
    for (int i = 0; i < 200; ++i) {
        NcPoly x = NcPoly::monomial(words[pick(rng)]);
        NcPoly y = NcPoly::monomial(words[pick(rng)]);
        NcPoly z = NcPoly::monomial(words[pick(rng)]);
        REQUIRE(D.mul(D.mul(x, y), z) == D.mul(x, D.mul(y, z)));
    }
}

TEST_CASE("the double satisfies the Hopf axioms at degree 3") {
    SuiteReport rep = verify_hopf(dbl().handle(), 3);
    for (auto& c : rep.checks) {
        INFO(c.name << " " << c.witness);
        CHECK(c.status == "pass");
    }
}

TEST_CASE("gamma: unit laws, skew laws and convolution inverse") {
    const DoubleAlgebra& D = dbl();
    const AlgebraHandle& H = D.handle();
    auto gens = H.generators();
    for (auto& w : H.basis(2)) {
        NcPoly x = NcPoly::monomial(w);
        CHECK(D.gamma(NcPoly::one(), x) == H.counit(x));
        CHECK(D.gamma(x, NcPoly::one()) == H.counit(x));
    }
    // gamma(xy, z) = sum gamma(x, z1) gamma(y, z2)
    // gamma(x, yz) = sum gamma(x1, z) gamma(x2, y)
    for (auto& x : gens)
        for (auto& y : gens)
            for (auto& z : gens) {
                NcPoly dz = H.coproduct(z);
                Scalar lhs = D.gamma(D.mul(x, y), z), rhs;
                for (auto& [w, c] : dz.terms()) {
                    auto l = split_legs(w, 2, 2);
                    rhs += c * D.gamma(x, NcPoly::monomial(l[0])) *
                           D.gamma(y, NcPoly::monomial(l[1]));
                }
                REQUIRE(lhs == rhs);
                NcPoly dx = H.coproduct(x);
                lhs = D.gamma(x, D.mul(y, z));
                rhs = Scalar(0);
                for (auto& [w, c] : dx.terms()) {
                    auto l = split_legs(w, 2, 2);
                    rhs += c * D.gamma(NcPoly::monomial(l[0]), z) *
                           D.gamma(NcPoly::monomial(l[1]), y);
                }
                REQUIRE(lhs == rhs);
            }
    // sum gamma(x1, y1) gamma^{-1}(x2, y2) = eps(x) eps(y)
    PairingForm g = D.gamma_form();
    PairingForm gi = g;
    std::swap(gi.f, gi.finv);
    PairingForm conv = convolve(g, gi);
    for (auto& x : gens)
        for (auto& y : gens)
            REQUIRE(conv(x, y) == H.counit(x) * H.counit(y));
}

TEST_CASE("gamma: braided commutativity on the double") {
    const DoubleAlgebra& D = dbl();
    const AlgebraHandle& H = D.handle();
    auto gens = H.generators();
    for (auto& x : gens)
        for (auto& y : gens) {
            NcPoly dx = H.coproduct(x), dy = H.coproduct(y);
            NcPoly lhs, rhs;
            for (auto& [wx, cx] : dx.terms())
                for (auto& [wy, cy] : dy.terms()) {
                    auto lx = split_legs(wx, 2, 2);
                    auto ly = split_legs(wy, 2, 2);
                    Scalar gl = D.gamma(NcPoly::monomial(lx[1]), NcPoly::monomial(ly[1]));
                    if (!gl.is_zero())
                        lhs += (cx * cy * gl) *
                               H.mul(NcPoly::monomial(ly[0]), NcPoly::monomial(lx[0]));
                    Scalar gr = D.gamma(NcPoly::monomial(lx[0]), NcPoly::monomial(ly[0]));
                    if (!gr.is_zero())
                        rhs += (cx * cy * gr) *
                               H.mul(NcPoly::monomial(lx[1]), NcPoly::monomial(ly[1]));
                }
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("gamma agrees with its convolution and pairing descriptions") {
    const DoubleAlgebra& D = dbl();
    auto gens = D.handle().generators();
    PairingForm conv = D.gamma_convolution_form();
    for (auto& x : gens)
        for (auto& y : gens) {
            Scalar direct = D.gamma(x, y);
            REQUIRE(direct == conv(x, y));
            REQUIRE(direct == D.gamma_prime(x, y));
        }
}

TEST_CASE("xi: exact values on generators and injectivity ranks") {
    const DoubleAlgebra& D = dbl();
    const Algebra& U = uq2().alg;
    UqLayout Lq(uq2());
    auto ki = NcPoly::gen(1, Lq.kinv(0));
    auto k = NcPoly::gen(1, Lq.k(0));
    enum { A, B, C, Dg };
    CHECK(D.map_xi(P("a")) == P("a") * ki);
    CHECK(D.map_xi(P("c")) == P("c") * ki);
    NcPoly lmc = D.lmaps().l_minus(NcPoly::gen(0, C)).shift_slots(1);
    CHECK(D.map_xi(P("a_2")) == P("a") * k + U.nf(P("b") * lmc));
    CHECK(D.map_xi(P("b_2")) == P("b") * ki);
    CHECK(D.map_xi(P("d_2")) == P("d") * ki);
    NcPoly lpb = D.lmaps().l_plus(NcPoly::gen(0, B)).shift_slots(1);
    CHECK(D.map_xi(P("b")) == U.nf(P("a") * lpb) + P("b") * k);
    CHECK(D.map_xi(P("d")) == U.nf(P("c") * lpb) + P("d") * k);
    auto [d1, r1] = D.xi_rank(1);
    CHECK(d1 == 9);
    CHECK(r1 == 9);
    auto [d2, r2] = D.xi_rank(2);
    CHECK(d2 == r2);
    // the randomized rank agrees
    auto [d2f, r2f] = D.xi_rank(2, true, 7);
    CHECK(d2f == r2f);
}

TEST_CASE("chi images: highest weight value and the commutation identity") {
    const DoubleAlgebra& D = dbl();
    UqLayout Lq(uq2());
    NcPoly kk = NcPoly::gen(0, Lq.kinv(0)) * NcPoly::gen(1, Lq.k(0));
    CHECK(D.chi_theta_star(P("a")) == kk);  // k_{-omega} (x) k_{omega}
    for (int u = 0; u < uq2().alg.gen_count(); ++u)
        for (int a = 0; a < oq2().alg.gen_count(); ++a)
            REQUIRE(D.zeta_commutation(NcPoly::gen(0, u), NcPoly::gen(0, a)));
    // chi zeta composes the two images
    NcPoly z = D.chi_zeta(NcPoly::gen(0, Lq.e(0)), P("a"));
    CHECK(z == D.uu_mul(D.chi_m_star(NcPoly::gen(0, Lq.e(0))), kk));
}

TEST_CASE("the parity group fixes every xi image") {
    SuiteReport rep = dbl().gamma_invariance_check(3);
    for (auto& c : rep.checks) {
        INFO(c.name << " " << c.witness);
        CHECK(c.status == "pass");
    }
}

TEST_CASE("localization identities") {
    SuiteReport rep = dbl().localization_identities();
    for (auto& c : rep.checks) {
        INFO(c.name << " " << c.witness);
        CHECK(c.status == "pass");
    }
}

TEST_CASE("eta quotient") {
    SuiteReport rep = dbl().eta_quotient_check();
    for (auto& c : rep.checks) {
        INFO(c.name << " " << c.witness);
        CHECK(c.status == "pass");
    }
}

TEST_CASE("iterated double: associativity and the collapse morphism") {
    const DoubleAlgebra& D = dbl();
    AlgebraHandle D3 = iterated_double(D, 3);
    CHECK(iterated_double(D, 2).name == D.handle().name);
    auto words = oq2().alg.tensor_basis(3, 2);
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
    for (int i = 0; i < 50; ++i) {
        NcPoly x = NcPoly::monomial(words[pick(rng)]);
        NcPoly y = NcPoly::monomial(words[pick(rng)]);
        NcPoly z = NcPoly::monomial(words[pick(rng)]);
        REQUIRE(D3.mul(D3.mul(x, y), z) == D3.mul(x, D3.mul(y, z)));
    }
    // multiplying the last two slots is an algebra map onto the double
    auto gens = D3.generators();
    for (auto& x : gens)
        for (auto& y : gens) {
            NcPoly lhs = collapse_last_two(D, D3.mul(x, y));
            NcPoly rhs = D.mul(collapse_last_two(D, x), collapse_last_two(D, y));
            REQUIRE(lhs == rhs);
        }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdg/linalg.hpp"
#include "qdg/scalars.hpp"

using namespace qdg;

namespace {

Laurent random_laurent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expd(-6, 6), numd(-9, 9);
    std::uniform_int_distribution<int> dend(1, 5);
    Laurent r;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Rational c(numd(rng), dend(rng));
        c.canonicalize();
        r.add_term(expd(rng), c);
    }
    return r;
}

}  // namespace

TEST_CASE("q_integer values") {
    CHECK(q_integer(0, 1, 2).is_zero());
    CHECK(q_integer(1, 1, 2) == Laurent(1));
    Laurent expected;
    expected.add_term(2, 1);
    expected.add_term(-2, 1);
    CHECK(q_integer(2, 1, 2) == expected);
    CHECK(q_integer(2, 1, 2).to_string() == "v^2 + v^-2");
    CHECK(q_integer(-3, 1, 2) == -q_integer(3, 1, 2));
    // [n] * (q - q^-1) == q^n - q^-n
    for (long n = 0; n <= 6; ++n) {
        Laurent q = Laurent::v_pow(2), qi = Laurent::v_pow(-2);
        CHECK(q_integer(n, 1, 2) * (q - qi) == q.pow(n) - qi.pow(n));
    }
}

TEST_CASE("laurent string round trip") {
    Laurent a;
    a.add_term(0, 1);
    a.add_term(-2, -1);
    CHECK(a.to_string() == "1 + -1*v^-2");
    CHECK(Laurent::parse("1 + -1*v^-2") == a);
    CHECK(Laurent::parse("0").is_zero());
    CHECK(Laurent::parse("v").to_string() == "v");
    CHECK(Laurent::parse("3/2*v^-1 + 2").to_string() == "2 + 3/2*v^-1");
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Laurent x = random_laurent(rng);
        CHECK(Laurent::parse(x.to_string()) == x);
    }
}

TEST_CASE("ring axioms, randomized") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Laurent(1) == a);
        CHECK((a + Laurent()) == a);
    }
}

TEST_CASE("evaluation homomorphism") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> numd(1, 50), dend(1, 20);
    for (int i = 0; i < 1000; ++i) {
        Laurent a = random_laurent(rng), b = random_laurent(rng);
        Rational r(numd(rng), dend(rng));
        r.canonicalize();
        CHECK((a + b).evaluate(r) == a.evaluate(r) + b.evaluate(r));
        CHECK((a * b).evaluate(r) == a.evaluate(r) * b.evaluate(r));
    }
}

TEST_CASE("units and exact division") {
    Laurent u = Laurent::v_pow(-3, Rational(2, 5));
    CHECK(u.is_unit());
    CHECK(u * u.unit_inverse() == Laurent(1));
    Laurent a = Laurent::v_pow(2) + Laurent(1);
    CHECK(!a.is_unit());
    Laurent b = Laurent::v_pow(1) - Laurent::v_pow(-1);
    CHECK(laurent_div_exact(a * b, b) == a);
    CHECK_THROWS_AS(laurent_div_exact(a + Laurent(1), b), error);
}

TEST_CASE("field scalars reduce and compare") {
    Laurent v = Laurent::v_pow(1);
    FieldScalar f(v * v - Laurent(1), v - Laurent(1));  // (v^2-1)/(v-1) = v+1
    CHECK(f == FieldScalar(v + Laurent(1)));
    CHECK(f.as_laurent() == v + Laurent(1));
    FieldScalar g = FieldScalar(Laurent(1), v) + FieldScalar(Laurent(1), v);
    CHECK(g == FieldScalar(Laurent(2), v));
    CHECK((f / f).is_one());
    CHECK_THROWS_AS(f / FieldScalar(0), error);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        Laurent a = random_laurent(rng), b = random_laurent(rng);
        if (b.is_zero()) continue;
        FieldScalar x(a, b);
        CHECK(x * FieldScalar(b) == FieldScalar(a));
        Rational r(3, 7);
        if (b.evaluate(r) != 0) CHECK(x.evaluate(r) == a.evaluate(r) / b.evaluate(r));
    }
}

TEST_CASE("matrix rank basics") {
    FieldScalar v = Laurent::v_pow(1), v2 = Laurent::v_pow(2);
    Matrix<FieldScalar> id2 = {{1, 0}, {0, 1}};
    CHECK(rank_exact(id2) == 2);
    Matrix<FieldScalar> prop = {{v, v2}, {1, v}};
    CHECK(rank_exact(prop) == 1);
    CHECK(rank_numeric(prop, 11) == 1);
    Matrix<FieldScalar> empty;
    CHECK(rank_exact(empty) == 0);
}

TEST_CASE("rank of transpose, randomized sparse") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<size_t> dim(1, 12);
    std::uniform_int_distribution<int> fill(0, 9);
    for (int trial = 0; trial < 40; ++trial) {
        size_t r = dim(rng), c = dim(rng);
        Matrix<FieldScalar> m(r, std::vector<FieldScalar>(c, FieldScalar(0)));
        Matrix<FieldScalar> mt(c, std::vector<FieldScalar>(r, FieldScalar(0)));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j)
                if (fill(rng) < 3) {
                    FieldScalar e(random_laurent(rng));
                    m[i][j] = e;
                    mt[j][i] = e;
                }
        size_t rk = rank_exact(m);
        CHECK(rk == rank_exact(mt));
        CHECK(rank_numeric(m, 1000 + trial) == rk);
    }
}

TEST_CASE("nullspace and solve") {
    FieldScalar v = Laurent::v_pow(1);
    Matrix<FieldScalar> m = {{1, v}, {v, v * v}};  // rank 1
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK((m[0][0] * ns[0][0] + m[0][1] * ns[0][1]).is_zero());
    auto x = solve(m, {v, v * v});
    REQUIRE(x.has_value());
    CHECK(m[0][0] * (*x)[0] + m[0][1] * (*x)[1] == v);
    CHECK(!solve(m, {FieldScalar(1), FieldScalar(1)}).has_value());
}

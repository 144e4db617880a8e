#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "posetcalc/matrix.hpp"

using namespace posetcalc;

static const Field Q = Field::rationals();

static Matrix random_matrix(int r, int c, const Field& f, std::mt19937_64& rng, int bound = 3) {
    std::uniform_int_distribution<long> d(-bound, bound);
    Matrix m(r, c, f);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, Scalar::of_int(d(rng), f));
    return m;
}

TEST_CASE("scalar arithmetic is canonical") {
    Scalar a = Scalar::parse("4/6", Q);
    CHECK(a.str() == "2/3");
    Scalar b = Scalar::parse("-1/3", Q);
    CHECK((a + b).str() == "1/3");
    CHECK((a * b).str() == "-2/9");
    CHECK((a / b).str() == "-2");
    CHECK((-b).str() == "1/3");
    CHECK_THROWS(Scalar::zero(Q).inverse());
}

TEST_CASE("prime field arithmetic") {
    Field f = Field::prime(7);
    Scalar a = Scalar::of_int(10, f);
    CHECK(a.str() == "3");
    Scalar inv = a.inverse();
    CHECK((a * inv).str() == "1");
    Scalar half = Scalar::parse("1/2", f);  // 2^{-1} = 4 mod 7
    CHECK(half.str() == "4");
    CHECK_THROWS(Field::prime(6));
    CHECK(Field::parse("gfp:1000003").p == 1000003);
    CHECK(Field::parse("q").is_rational());
}

TEST_CASE("rank basics") {
    CHECK(Matrix::identity(2, Q).rank() == 2);
    CHECK(Matrix::zero(2, 2, Q).rank() == 0);
    Matrix d = Matrix::of_int(2, 2, Q, {1, 0, 0, 0});
    CHECK(d.rank() == 1);
    CHECK(Matrix::zero(0, 5, Q).rank() == 0);
}

TEST_CASE("kernel basis") {
    CHECK(Matrix::identity(3, Q).kernel_basis().cols() == 0);
    CHECK(Matrix::zero(2, 3, Q).kernel_basis().cols() == 3);
    Matrix a = Matrix::of_int(1, 2, Q, {1, 1});
    Matrix k = a.kernel_basis();
    REQUIRE(k.cols() == 1);
    CHECK((a * k).is_zero());
    CHECK(k.at(0, 0) == -k.at(1, 0));
}

TEST_CASE("cokernel projection") {
    CHECK(Matrix::identity(3, Q).cokernel_projection().rows() == 0);
    Matrix zero_map = Matrix::zero(2, 1, Q);  // k -> k^2 zero
    Matrix q = zero_map.cokernel_projection();
    CHECK(q.rows() == 2);
    CHECK(q.rank() == 2);
    Matrix col = Matrix::of_int(2, 1, Q, {1, 1});
    Matrix q2 = col.cokernel_projection();
    CHECK(q2.rows() == 1);
    CHECK((q2 * col).is_zero());
    CHECK(q2.rank() == 1);
}

TEST_CASE("solve") {
    Matrix b = Matrix::of_int(2, 1, Q, {5, -3});
    auto x = Matrix::identity(2, Q).solve(b);
    REQUIRE(x);
    CHECK(*x == b);

    auto none = Matrix::zero(2, 2, Q).solve(b);
    CHECK(!none);

    Matrix two = Matrix::of_int(1, 1, Q, {2});
    auto half = two.solve(Matrix::identity(1, Q));
    REQUIRE(half);
    CHECK(half->at(0, 0).str() == "1/2");

    CHECK_THROWS(two.solve(b));  // shape mismatch
}

TEST_CASE("rref is idempotent and rank is transpose-invariant") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
        Matrix a = random_matrix(r, c, Q, rng);
        Matrix r1 = a.rref();
        CHECK(r1.rref() == r1);
        CHECK(a.rank() == a.transpose().rank());
        CHECK(a.rank() + a.kernel_basis().cols() == a.cols());
        Matrix k = a.kernel_basis();
        CHECK((a * k).is_zero());
        Matrix q = a.cokernel_projection();
        CHECK((q * a).is_zero());
        CHECK(q.rank() == a.rows() - a.rank());
    }
}

TEST_CASE("rank-nullity over a prime field") {
    Field f = Field::prime(5);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
        Matrix a = random_matrix(r, c, f, rng, 10);
        CHECK(a.rank() + a.kernel_basis().cols() == a.cols());
        CHECK(a.rank() == a.transpose().rank());
    }
}

TEST_CASE("solve returns an exact witness when consistent") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
        int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
        Matrix a = random_matrix(r, c, Q, rng);
        Matrix x0 = random_matrix(c, 2, Q, rng);
        Matrix b = a * x0;
        auto x = a.solve(b);
        REQUIRE(x);
        CHECK(a * *x == b);
    }
}

TEST_CASE("inverse") {
    Matrix a = Matrix::of_int(2, 2, Q, {2, 1, 1, 1});
    auto inv = a.inverse();
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(2, Q));
    CHECK(!Matrix::of_int(2, 2, Q, {1, 1, 1, 1}).inverse());
}

TEST_CASE("kronecker and blocks") {
    Matrix a = Matrix::of_int(1, 1, Q, {2});
    Matrix b = Matrix::of_int(1, 1, Q, {3});
    CHECK(Matrix::kronecker(a, b).at(0, 0).str() == "6");
    Matrix d = Matrix::block_diag(a, b);
    CHECK(d.rows() == 2);
    CHECK(d.at(0, 0).str() == "2");
    CHECK(d.at(1, 1).str() == "3");
    CHECK(d.at(0, 1).is_zero());
    // zero-dimensional blocks are legal
    Matrix e = Matrix::block_diag(Matrix::zero(0, 0, Q), a);
    CHECK(e == a);
}

#include <bolalg/errors.hpp>
#include <bolalg/kernels.hpp>
#include <bolalg/linalg.hpp>

#include "corpus.hpp"

#include <doctest.h>

using namespace bolalg;

TEST_CASE("scalar parse and render") {
    CHECK(parse_scalar("3/6") == Scalar(1, 2));
    CHECK(parse_scalar("-4/2") == Scalar(-2));
    CHECK(parse_scalar("+7") == Scalar(7));
    CHECK(render_scalar(parse_scalar("-10/4")) == "-5/2");
    CHECK(render_scalar(Scalar(0)) == "0");
    CHECK_THROWS_WITH_AS(parse_scalar("1/0"), doctest::Contains("zero denominator"), InputError);
    CHECK_THROWS_AS(parse_scalar("0.5"), InputError);
    CHECK_THROWS_AS(parse_scalar("1e3"), InputError);
    CHECK_THROWS_AS(parse_scalar(""), InputError);
    CHECK_THROWS_AS(parse_scalar("1/-2"), InputError);
    CHECK_THROWS_AS(parse_scalar(" 1"), InputError);
}

TEST_CASE("scalar round trip") {
    corpus::Rng gen(11);
    for (int k = 0; k < 200; ++k) {
        const Scalar s = corpus::random_scalar(gen) * corpus::random_scalar(gen) + corpus::random_scalar(gen);
        CHECK(parse_scalar(render_scalar(s)) == s);
    }
}

TEST_CASE("exact arithmetic does not round") {
    const Scalar third(1, 3);
    CHECK(third + third + third == 1);
    CHECK(Scalar(1, 7) * Scalar(7) == 1);
}

TEST_CASE("rref paths agree") {
    corpus::Rng gen(5);
    for (int k = 0; k < 25; ++k) {
        std::uniform_int_distribution<std::size_t> dim(1, 14);
        const std::size_t rows = dim(gen), cols = dim(gen);
        Mat m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = (gen() % 3 == 0) ? corpus::random_scalar(gen) : 0;
        // duplicate a row now and then so rank deficiency is exercised
        if (rows > 2) {
            for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) - 2 * m(1, c);
        }
        const auto ref = reference::rref(m);
        const auto ser = rref(m, Exec::serial);
        const auto par = rref(m, Exec::parallel);
        CHECK(ser.reduced == ref.reduced);
        CHECK(par.reduced == ref.reduced);
        CHECK(par.pivots == ref.pivots);
        CHECK(par.rank == ref.rank);
        for (const auto& v : kernel_basis(m)) CHECK(is_zero(m * v));
        CHECK(kernel_basis(m).size() + ref.rank == cols);
    }
}

TEST_CASE("solve and inverse") {
    const Mat a(2, 2, {Scalar(1), Scalar(2), Scalar(3), Scalar(4)});
    const auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == Mat::identity(2));
    const auto x = solve(a, Vec{Scalar(5), Scalar(6)});
    REQUIRE(x);
    CHECK(a * *x == Vec{Scalar(5), Scalar(6)});

    const Mat s(2, 2, {Scalar(1), Scalar(2), Scalar(2), Scalar(4)});
    CHECK_FALSE(inverse(s));
    CHECK_FALSE(solve(s, Vec{Scalar(1), Scalar(0)}));
    CHECK(solve(s, Vec{Scalar(1), Scalar(2)}));
    CHECK_THROWS_AS(solve(s, Vec{Scalar(1)}), DimensionError);
}

TEST_CASE("kernel of zero-width and zero-height matrices") {
    CHECK(kernel_basis(Mat(0, 3)).size() == 3);
    CHECK(kernel_basis(Mat(3, 0)).empty());
    CHECK(rref(Mat(0, 0)).rank == 0);
}

TEST_CASE("tuple scan finds the lexicographically first failure on both paths") {
    const ResidualFn fn = [](std::span<const std::size_t> t) {
        const bool bad = (t[0] == 2 && t[1] == 1) || (t[0] == 3 && t[2] == 0);
        return bad ? Vec{Scalar(t[2] + 1)} : Vec{Scalar(0)};
    };
    const auto ser = first_failure(4, 3, fn, Exec::serial);
    const auto par = first_failure(4, 3, fn, Exec::parallel);
    REQUIRE(ser);
    REQUIRE(par);
    CHECK(ser->witness == Tuple{2, 1, 0});
    CHECK(par->witness == ser->witness);
    CHECK(par->residual == ser->residual);
    CHECK(decode_tuple(5, 4, 2) == Tuple{1, 1});
    CHECK(tuple_count(3, 4) == 81);
}

TEST_CASE("column assembly paths agree") {
    const auto col = [](std::size_t j) { return Vec{Scalar(int(j)), Scalar(int(j * j), 3)}; };
    CHECK(assemble_columns(2, 17, col, Exec::serial) == assemble_columns(2, 17, col, Exec::parallel));
}

#include "helpers.hpp"

#include <stdexcept>

using namespace sia;
using testutil::random_invertible;
using testutil::random_mat;

TEST_CASE("rational literals round-trip in lowest terms") {
    CHECK(Rat::parse("2/4").to_string() == "1/2");
    CHECK(Rat::parse("-6/3").to_string() == "-2");
    CHECK(Rat::parse("0/7").to_string() == "0");
    CHECK(Rat::parse("+3/9").to_string() == "1/3");
    CHECK(Rat(3, -6).to_string() == "-1/2");
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    const Rat a = Rat::parse("1/3"), b = Rat::parse("1/6");
    CHECK(a + b == Rat(1, 2));
    CHECK((a - b).to_string() == "1/6");
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    Rat sum;
    for (int i = 0; i < 10; ++i) sum += Rat(1, 10);
    CHECK(sum == Rat(1));
    CHECK_THROWS(Rat(1) / Rat(0));
}

TEST_CASE("rref is idempotent, counts rank, and its kernel basis annihilates") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const Mat m =
            random_mat(rng, 1 + trial % 6, 1 + (trial * 2) % 7);
        const RrefResult rr = rref(m);
        CHECK(rref(rr.r).r == rr.r);
        CHECK(rr.pivots.size() == rank(m));
        const Mat k = kernel_basis(m);
        CHECK(k.cols() == m.cols() - rank(m));
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());  // basis vectors are independent
    }
}

TEST_CASE("solve finds a preimage exactly when one exists") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 25; ++trial) {
        const Mat m = random_mat(rng, 2 + trial % 4, 2 + trial % 5);
        const Mat x = random_mat(rng, m.cols(), 1);
        const Mat b = m * x;
        const auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == b);
    }
    Mat m = Mat::zero(2, 1);
    m.at(0, 0) = Rat(1);
    CHECK(!solve(m, std::vector<Rat>{Rat(0), Rat(1)}).has_value());
    CHECK(solve(m, std::vector<Rat>{Rat(5), Rat(0)}).has_value());
}

TEST_CASE("inverse round-trips and rejects the singular") {
    std::mt19937 rng(9);
    for (std::size_t n = 1; n <= 5; ++n) {
        const Mat m = random_invertible(rng, n);
        CHECK(is_invertible(m));
        CHECK(m * inverse(m) == Mat::identity(n));
        CHECK(inverse(m) * m == Mat::identity(n));
    }
    CHECK_THROWS_AS(inverse(Mat::zero(2, 2)), std::domain_error);
    CHECK_THROWS_AS(inverse(Mat::zero(2, 3)), std::domain_error);
    // 0x0 edge: invertible, its own inverse
    CHECK(is_invertible(Mat::zero(0, 0)));
    CHECK(inverse(Mat::zero(0, 0)) == Mat::zero(0, 0));
}

TEST_CASE("openmp kernels agree with the serial references") {
    std::mt19937 rng(10);
    for (int trial = 0; trial < 8; ++trial) {
        const Mat a = random_mat(rng, 3 + trial, 2 + trial);
        const Mat b = random_mat(rng, 2 + trial, 4 + trial % 3);
        CHECK(kernels::mul(a, b) == kernels::mul_serial(a, b));
        CHECK(kernels::kron(a, b) == kernels::kron_serial(a, b));

        Mat m = random_mat(rng, 5 + trial % 3, 5 + trial % 4);
        if (m.at(1, 2).is_zero()) m.at(1, 2) = Rat(1);
        const Rat inv = Rat(1) / m.at(1, 2);
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(1, c) = m.at(1, c) * inv;
        Mat p = m, s = m;
        kernels::eliminate(p, 1, 2);
        kernels::eliminate_serial(s, 1, 2);
        CHECK(p == s);
        for (std::size_t r = 0; r < p.rows(); ++r)
            if (r != 1) CHECK(p.at(r, 2).is_zero());
    }
}

TEST_CASE("kron is left-factor-major") {
    std::mt19937 rng(11);
    const Mat a = random_mat(rng, 2, 3);
    const Mat b = random_mat(rng, 3, 2);
    const Mat k = kernels::kron(a, b);
    REQUIRE(k.rows() == 6);
    REQUIRE(k.cols() == 6);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 2; ++c)
                    CHECK(k.at(i * 3 + r, j * 2 + c) == a.at(i, j) * b.at(r, c));
    // mixed-product property
    const Mat c = random_mat(rng, 3, 3);
    const Mat d = random_mat(rng, 2, 4);
    CHECK(kernels::kron(a * c, b * d) ==
          kernels::kron(a, b) * kernels::kron(c, d));
}

TEST_CASE("stacking and column access agree") {
    std::mt19937 rng(12);
    const Mat a = random_mat(rng, 3, 2);
    const Mat b = random_mat(rng, 3, 4);
    const Mat h = Mat::hstack(a, b);
    CHECK(h.rows() == 3);
    CHECK(h.cols() == 6);
    CHECK(h.column_vec(1) == a.column_vec(1));
    CHECK(h.column_vec(4) == b.column_vec(2));

    const Mat c = random_mat(rng, 2, 2);
    const Mat v = Mat::vstack(c, c);
    CHECK(v.rows() == 4);
    CHECK(v.at(3, 1) == c.at(1, 1));

    std::vector<std::vector<Rat>> cols{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    const Mat f = Mat::from_columns(2, cols);
    CHECK(f.at(0, 1) == Rat(3));
    CHECK(f.column_vec(0) == cols[0]);
    Mat g = f;
    g.set_column(0, cols[1]);
    CHECK(g.column_vec(0) == cols[1]);
    CHECK(Mat::column(cols[0]).cols() == 1);
}

TEST_CASE("transpose and apply") {
    std::mt19937 rng(13);
    const Mat a = random_mat(rng, 3, 4);
    CHECK(a.transpose().transpose() == a);
    CHECK(a.transpose().at(2, 1) == a.at(1, 2));
    const std::vector<Rat> x = random_mat(rng, 4, 1).column_vec(0);
    CHECK(a.apply(x) == (a * Mat::column(x)).column_vec(0));
}

TEST_CASE("rank is additive across block diagonal and bounded by size") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        const Mat a = random_mat(rng, 2 + trial % 3, 3);
        const Mat b = random_mat(rng, 3, 2 + trial % 4);
        CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
        Mat blk = Mat::zero(a.rows() + b.rows(), a.cols() + b.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c) blk.at(r, c) = a.at(r, c);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                blk.at(a.rows() + r, a.cols() + c) = b.at(r, c);
        CHECK(rank(blk) == rank(a) + rank(b));
    }
}

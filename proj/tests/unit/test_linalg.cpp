#include <gtest/gtest.h>

#include <quiverhom/error.hpp>
#include <quiverhom/matrix.hpp>

using namespace quiverhom;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec P; // 2^31 - 1

ExactMatrix m(const FieldSpec& f, const std::vector<std::vector<std::int64_t>>& rows) {
    return ExactMatrix::from_rows(f, rows);
}

} // namespace

TEST(Field, ParseAndPrint) {
    EXPECT_TRUE(FieldSpec::parse("q").is_rationals());
    EXPECT_EQ(FieldSpec::parse("fp:7").prime(), 7u);
    EXPECT_EQ(FieldSpec().prime(), 2147483647u);
    EXPECT_EQ(FieldSpec::parse("fp:2147483647").to_string(), "fp:2147483647");
    EXPECT_EQ(Q.to_string(), "q");
    EXPECT_THROW(FieldSpec::parse("fp:8"), precondition_error);
    EXPECT_THROW(FieldSpec::parse("fp:"), precondition_error);
    EXPECT_THROW(FieldSpec::parse("r"), precondition_error);
}

TEST(Field, Primality) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(2147483647));
    EXPECT_TRUE(is_prime(4611686018427387847ull)); // largest prime below 2^62
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(2147483649ull));
    EXPECT_FALSE(is_prime(561)); // Carmichael
}

TEST(Field, ModArith) {
    ModArith f(2147483647);
    EXPECT_EQ(f.mul(f.inv(12345), 12345), 1u);
    EXPECT_EQ(f.from_signed(-1), 2147483646u);
    EXPECT_EQ(f.pow(3, 2147483646), 1u);
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        auto a = rng() % f.modulus(), w = rng() % f.modulus();
        EXPECT_EQ(f.mul(a, f.multiplier(w)), f.mul(a, w));
    }
}

TEST(Rank, SmallCases) {
    for (const auto& f: {Q, P}) {
        EXPECT_EQ(rank(ExactMatrix::identity(f, 3)), 3u);
        EXPECT_EQ(rank(ExactMatrix(f, 2, 5)), 0u);
        EXPECT_EQ(rank(m(f, {{1, 2}, {2, 4}})), 1u);
        EXPECT_EQ(rank(ExactMatrix(f, 0, 4)), 0u);
        EXPECT_EQ(rank(m(f, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}})), 3u);
    }
}

TEST(Rank, PrimeFieldSeesCharacteristic) {
    // det = 7, singular only mod 7
    auto a = m(FieldSpec::prime_field(7), {{1, 2}, {-2, 3}});
    EXPECT_EQ(rank(a), 1u);
    EXPECT_EQ(rank(m(Q, {{1, 2}, {-2, 3}})), 2u);
}

TEST(Rank, RationalEntries) {
    ExactMatrix a(Q, 2, 2);
    a.set(0, 0, Rational(1, 3));
    a.set(0, 1, Rational(1, 2));
    a.set(1, 0, Rational(2, 3));
    a.set(1, 1, 1);
    EXPECT_EQ(rank(a), 1u);
}

TEST(Kernel, Basis) {
    for (const auto& f: {Q, P}) {
        EXPECT_TRUE(kernel_basis(ExactMatrix::identity(f, 4)).empty());
        auto z = kernel_basis(ExactMatrix(f, 1, 3));
        EXPECT_EQ(z.size(), 3u);
        EXPECT_EQ(rank(ExactMatrix(f, 0, 2)), 0u);
        EXPECT_EQ(kernel_basis(ExactMatrix(f, 0, 2)).size(), 2u);

        auto a = m(f, {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
        auto k = kernel_basis(a);
        EXPECT_EQ(k.size(), 2u);
        for (const auto& v: k) {
            EXPECT_EQ(v.rows(), 4u);
            EXPECT_EQ(v.cols(), 1u);
            EXPECT_TRUE((a * v).is_zero());
            EXPECT_FALSE(v.is_zero());
        }
    }
}

TEST(Kernel, RandomNullityMatchesRank) {
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        const auto f = t % 2 ? Q : P;
        auto r = 1 + rng() % 5, c = 1 + rng() % 6, inner = 1 + rng() % 4;
        // product of two random matrices: rank <= inner
        auto a = random_matrix(r, inner, f, rng, {5}) * random_matrix(inner, c, f, rng, {5});
        auto k = kernel_basis(a);
        EXPECT_EQ(k.size() + rank(a), c);
        EXPECT_LE(rank(a), inner);
        // kernel vectors are independent
        if (!k.empty()) {
            ExactMatrix kb(f, c, k.size());
            for (std::size_t j = 0; j < k.size(); ++j)
                for (std::size_t i = 0; i < c; ++i) kb.set(i, j, k[j].at(i, 0));
            EXPECT_EQ(rank(kb), k.size());
            EXPECT_TRUE((a * kb).is_zero());
        }
    }
}

TEST(MaxRank, Cases) {
    for (const auto& f: {Q, P}) {
        EXPECT_TRUE(is_max_rank(ExactMatrix(f, 0, 3)));
        EXPECT_TRUE(is_max_rank(ExactMatrix(f, 3, 0)));
        EXPECT_TRUE(is_max_rank(ExactMatrix::identity(f, 3)));
        EXPECT_FALSE(is_max_rank(ExactMatrix(f, 2, 2)));
    }
}

TEST(RandomMatrix, Deterministic) {
    Rng a(42), b(42);
    EXPECT_EQ(random_matrix(3, 4, P, a), random_matrix(3, 4, P, b));
    Rng c(42), d(42);
    EXPECT_EQ(random_matrix(3, 4, Q, c), random_matrix(3, 4, Q, d));
}

TEST(RandomMatrix, GenericallyMaxRank) {
    Rng rng(9);
    int full = 0;
    for (int i = 0; i < 100; ++i) full += is_max_rank(random_matrix(3, 5, P, rng));
    EXPECT_EQ(full, 100);
}

TEST(Inverse, RoundTrip) {
    Rng rng(2);
    for (const auto& f: {Q, P}) {
        auto a = m(f, {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
        auto inv = inverse(a);
        EXPECT_EQ(a * inv, ExactMatrix::identity(f, 3));
        EXPECT_THROW(inverse(m(f, {{1, 2}, {2, 4}})), precondition_error);
        EXPECT_FALSE(is_invertible(m(f, {{1, 2}, {2, 4}})));
    }
}

TEST(Matrix, ShapeErrors) {
    EXPECT_THROW(ExactMatrix::identity(P, 2) * ExactMatrix::identity(P, 3), mismatch_error);
    EXPECT_THROW(ExactMatrix::identity(P, 2) * ExactMatrix::identity(Q, 2), mismatch_error);
}

TEST(Matrix, TransposeAndEntries) {
    auto a = m(P, {{1, -1, 2}});
    EXPECT_EQ(a.at(0, 1), Rational(2147483646));
    auto t = a.transpose();
    EXPECT_EQ(t.rows(), 3u);
    EXPECT_EQ(t.at(2, 0), 2);
    auto b = m(Q, {{1, -1, 2}});
    EXPECT_EQ(b.at(0, 1), -1);
}

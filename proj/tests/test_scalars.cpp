#include "vcwb/cyclotomic.hpp"
#include "vcwb/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

using namespace vcwb;

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational::parse("7/3") == Rational(7, 3));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK((Rational(1, 3) * Rational(3, 7)) == Rational(1, 7));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("zeta_4 squared is -1") {
    auto i = root_of_unity(4, 1);
    auto sq = i * i;
    CHECK(sq == Cyclotomic(4, Rational(-1)));
    CHECK(sq.is_rational());
    CHECK(sq.rational_part() == Rational(-1));
}

TEST_CASE("additive identity") {
    auto a = root_of_unity(8, 3) + Cyclotomic(8, Rational(2, 3));
    CHECK(a + Cyclotomic::zero(8) == a);
}

TEST_CASE("mixed order arithmetic is rejected") {
    CHECK_THROWS_AS(root_of_unity(4, 1) + root_of_unity(8, 1), MixedOrderError);
    CHECK_THROWS_AS(cyc_arith(root_of_unity(2, 1), root_of_unity(6, 1), CycOp::mul),
                    MixedOrderError);
}

TEST_CASE("(1+z8)(1-z8) reduced mod Phi_8 matches the float oracle") {
    auto one = Cyclotomic::one(8);
    auto z = root_of_unity(8, 1);
    auto prod = (one + z) * (one - z); // 1 - z8^2
    auto expect = one - root_of_unity(8, 2);
    CHECK(prod == expect);
    std::complex<double> lhs = prod.to_complex();
    std::complex<double> z8 = std::polar(1.0, 2.0 * 3.14159265358979323846 / 8.0);
    std::complex<double> rhs = (1.0 + z8) * (1.0 - z8);
    CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("embedding") {
    CHECK(cyc_embed(Cyclotomic(2, Rational(-1)), 4) == Cyclotomic(4, Rational(-1)));
    CHECK(cyc_embed(root_of_unity(2, 1), 4) == root_of_unity(4, 2));
    CHECK(cyc_embed(root_of_unity(4, 1), 8) == root_of_unity(8, 2));
    CHECK_THROWS_AS(cyc_embed(root_of_unity(4, 1), 6), NotAMultipleError);
}

TEST_CASE("embedding is a ring homomorphism on random pairs") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-4, 4);
    auto random_elem = [&](long m) {
        std::vector<Rational> cs(detail::euler_phi(m));
        for (auto& c : cs) c = Rational(coeff(rng), 1 + std::abs(coeff(rng)));
        return Cyclotomic::from_coeffs(m, std::move(cs));
    };
    for (int t = 0; t < 20; ++t) {
        long m = (t % 2) ? 6 : 4;
        long mm = 2 * m;
        auto a = random_elem(m), b = random_elem(m);
        CHECK(cyc_embed(a, mm) * cyc_embed(b, mm) == cyc_embed(a * b, mm));
        CHECK(cyc_embed(a, mm) + cyc_embed(b, mm) == cyc_embed(a + b, mm));
    }
}

TEST_CASE("roots of unity multiply to one") {
    CHECK(root_of_unity(2, 1) == Cyclotomic(2, Rational(-1)));
    CHECK(root_of_unity(4, 2) == Cyclotomic(4, Rational(-1)));
    for (long m = 1; m <= 12; ++m)
        for (long k = 0; k < m; ++k)
            CHECK(root_of_unity(m, k) * root_of_unity(m, m - k) == Cyclotomic::one(m));
}

TEST_CASE("field laws on random triples") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-3, 3);
    long m = 12;
    auto random_elem = [&] {
        std::vector<Rational> cs(detail::euler_phi(m));
        for (auto& c : cs) c = Rational(coeff(rng));
        return Cyclotomic::from_coeffs(m, std::move(cs));
    };
    for (int t = 0; t < 25; ++t) {
        auto a = random_elem(), b = random_elem(), c = random_elem();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Cyclotomic::one(m));
            CHECK(a / a == Cyclotomic::one(m));
        }
    }
    CHECK_THROWS_AS(Cyclotomic::zero(m).inverse(), std::domain_error);
}

TEST_CASE("inverse against float oracle in Q(zeta_5)") {
    auto a = Cyclotomic::one(5) + root_of_unity(5, 1) + root_of_unity(5, 3);
    auto inv = a.inverse();
    CHECK(a * inv == Cyclotomic::one(5));
    std::complex<double> z = a.to_complex() * inv.to_complex();
    CHECK(std::abs(z - std::complex<double>(1.0, 0.0)) < 1e-9);
}

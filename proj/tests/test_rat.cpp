#include <doctest.h>

#include <random>

#include "legknot/rat.hpp"

using namespace legknot;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rat(Int(6), Int(4)) == Rat(Int(3), Int(2)));
    CHECK(Rat(Int(6), Int(-4)).num() == -3);
    CHECK(Rat(Int(6), Int(-4)).den() == 2);
    CHECK(Rat(Int(0), Int(-7)) == Rat(0));
    CHECK(Rat(Int(0), Int(-7)).den() == 1);
    CHECK(Rat(-5).num() == -5);
    CHECK(Rat(-5).den() == 1);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), DomainError);
}

TEST_CASE("rational arithmetic matches hand values") {
    Rat a(Int(1), Int(2)), b(Int(1), Int(3));
    CHECK(a + b == Rat(Int(5), Int(6)));
    CHECK(a - b == Rat(Int(1), Int(6)));
    CHECK(a * b == Rat(Int(1), Int(6)));
    CHECK(a / b == Rat(Int(3), Int(2)));
    CHECK(-a == Rat(Int(-1), Int(2)));
    CHECK(abs(Rat(Int(-7), Int(3))) == Rat(Int(7), Int(3)));
    CHECK_THROWS_AS(a / Rat(0), DomainError);
}

TEST_CASE("ordering compares by value, not representation") {
    CHECK(Rat(Int(1), Int(3)) < Rat(Int(1), Int(2)));
    CHECK(Rat(Int(-1), Int(2)) < Rat(Int(-1), Int(3)));
    CHECK(Rat(Int(2), Int(4)) <= Rat(Int(1), Int(2)));
    CHECK(Rat(Int(2), Int(4)) >= Rat(Int(1), Int(2)));
    CHECK(Rat(7) > Rat(Int(20), Int(3)));
}

TEST_CASE("floor rounds toward minus infinity") {
    CHECK(Rat(Int(7), Int(2)).floor() == 3);
    CHECK(Rat(Int(-7), Int(2)).floor() == -4);
    CHECK(Rat(-3).floor() == -3);
    CHECK(Rat(Int(-1), Int(3)).floor() == -1);
    CHECK(floor_div(Int(7), Int(-2)) == -4);
    CHECK(floor_div(Int(-7), Int(-2)) == 3);
    CHECK(floor_div(Int(6), Int(3)) == 2);
}

TEST_CASE("canonical text form is always num/den") {
    CHECK(Rat(3).str() == "3/1");
    CHECK(Rat(Int(-5), Int(10)).str() == "-1/2");
    CHECK(Rat(0).str() == "0/1");
}

TEST_CASE("field axioms hold on random rationals") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<long long> num(-50, 50), den(1, 30);
    auto draw = [&]() { return Rat(Int(num(rng)), Int(den(rng))); };
    for (int trial = 0; trial < 500; ++trial) {
        Rat a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rat(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        // floor is the unique integer with floor <= a < floor + 1
        CHECK(Rat(a.floor()) <= a);
        CHECK(a < Rat(a.floor() + 1));
    }
}

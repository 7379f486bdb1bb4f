#include <doctest.h>

#include "uddpir/field.hpp"

using namespace uddpir;

TEST_CASE("field creation") {
    Field f2 = Field::create(2, 1);
    CHECK(f2.q() == 2);

    Field f4 = Field::create(2, 2, {1, 1, 1});
    CHECK(f4.q() == 4);
    CHECK(f4 == Field::create(2, 2));  // built-in modulus is x^2+x+1

    CHECK_THROWS_AS(Field::create(4, 1), NonPrimeCharacteristic);
    CHECK_THROWS_AS(Field::create(2, 2, {0, 0, 1}), ReducibleModulus);  // x^2
    CHECK_THROWS_AS(Field::create(2, 2, {1, 0, 1}), ReducibleModulus);  // (x+1)^2
    CHECK_THROWS_AS(Field::create(5, 3), MissingModulus);

    CHECK(Field::of_order(9).p() == 3);
    CHECK(Field::of_order(8).m() == 3);
    CHECK_THROWS_AS(Field::of_order(6), NonPrimeCharacteristic);
}

TEST_CASE("multiplication and inverse examples") {
    Field f2 = Field::create(2, 1);
    CHECK(f2.mul(1, 1) == 1);
    CHECK(f2.inv(1) == 1);

    Field f3 = Field::create(3, 1);
    CHECK(f3.mul(2, 2) == 1);
    CHECK(f3.inv(2) == 2);

    // GF(4) with modulus x^2+x+1: element 2 is x, so x*x = x+1 = 3
    Field f4 = Field::create(2, 2);
    CHECK(f4.mul(2, 2) == 3);
    CHECK(f4.inv(2) == 3);
    CHECK(f4.mul(2, f4.inv(2)) == 1);

    CHECK_THROWS_AS(f4.inv(0), ZeroInverse);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (Field f : {Field::create(2, 1), Field::create(3, 1), Field::create(5, 1),
                    Field::create(7, 1), Field::create(11, 1),
                    Field::create(13, 1), Field::create(2, 2),
                    Field::create(2, 3), Field::create(2, 4),
                    Field::create(3, 2)}) {
        const int q = f.q();
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

#include "doctest.h"

#include <stdexcept>

#include "altbounds/gf.hpp"

using namespace altbounds;

namespace {

// Independent irreducibility test for quadratics: no roots in F_p.
bool quadratic_has_root(int b, int c, int p) {
  for (int x = 0; x < p; ++x) {
    if ((x * x + b * x + c) % p == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("field construction and modulus choice") {
  const FieldSpec f2 = FieldSpec::make(2, 1);
  CHECK(f2.q() == 2);

  const FieldSpec f4 = FieldSpec::make(2, 2);
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});

  // Smallest irreducible monic quadratic over F_3 by enumeration, constant term least significant.
  std::vector<int> expected;
  for (int code = 0; code < 9 && expected.empty(); ++code) {
    const int c = code % 3, b = code / 3;
    if (!quadratic_has_root(b, c, 3)) expected = {c, b, 1};
  }
  CHECK(expected == std::vector<int>{1, 0, 1});
  CHECK(FieldSpec::make(3, 2).modulus() == expected);

  CHECK(FieldSpec::of_order(16).p() == 2);
  CHECK(FieldSpec::of_order(16).m() == 4);
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(FieldSpec::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::make(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::make(2, 17), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::of_order(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::of_order(6), std::invalid_argument);
}

TEST_CASE("small arithmetic examples") {
  const FieldSpec f2 = FieldSpec::make(2, 1);
  CHECK(f2.add(1, 1) == 0);

  // x * x = x + 1 in F_4 with x encoded as 2
  const FieldSpec f4 = FieldSpec::make(2, 2);
  CHECK(f4.mul(2, 2) == 3);

  const FieldSpec f3 = FieldSpec::make(3, 1);
  CHECK(f3.inv(2) == 2);
  CHECK_THROWS_AS(f3.inv(0), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively") {
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 16L, 25L, 27L}) {
    CAPTURE(q);
    const FieldSpec f = FieldSpec::of_order(q);
    bool ok = true;
    for (long a = 0; a < q && ok; ++a) {
      const auto x = static_cast<FieldValue>(a);
      ok = ok && f.add(x, 0) == x && f.mul(x, 1) == x && f.add(x, f.neg(x)) == 0;
      if (x != 0) ok = ok && f.mul(x, f.inv(x)) == 1 && f.pow(x, static_cast<unsigned long>(q - 1)) == 1;
      for (long b = 0; b < q && ok; ++b) {
        const auto y = static_cast<FieldValue>(b);
        ok = ok && f.add(x, y) == f.add(y, x) && f.mul(x, y) == f.mul(y, x);
        for (long c = 0; c < q && ok; ++c) {
          const auto z = static_cast<FieldValue>(c);
          ok = ok && f.add(f.add(x, y), z) == f.add(x, f.add(y, z));
          ok = ok && f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z));
          ok = ok && f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("large field uses digit addition") {
  const FieldSpec f = FieldSpec::make(257, 1);
  CHECK(f.add(200, 100) == 43);
  CHECK(f.mul(f.inv(123), 123) == 1);
  const FieldSpec g = FieldSpec::make(3, 6);  // 729 elements, above the add-table cutoff
  for (FieldValue a = 1; a < 729; a = static_cast<FieldValue>(a + 37)) {
    CHECK(g.sub(g.add(a, 500), 500) == a);
    CHECK(g.mul(a, g.inv(a)) == 1);
  }
}

TEST_CASE("field elements refuse mixed fields") {
  const FieldSpec f3 = FieldSpec::make(3, 1);
  const FieldSpec f5 = FieldSpec::make(5, 1);
  const FieldElement a(f3, 2), b(f5, 2);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK((a * a).value() == 1);
  CHECK((a / a).value() == 1);
  CHECK((-a).value() == 1);
  CHECK(a.inv() == a);
  CHECK_THROWS_AS(FieldElement(f3, 3), std::invalid_argument);
  CHECK_THROWS_AS(FieldElement(f3, 0).inv(), std::domain_error);
}

#include <random>

#include "catch_amalgamated.hpp"
#include "qlab/abelianization.hpp"
#include "qlab/smith.hpp"

using qlab::BigInt;
using qlab::IntMatrix;

namespace {

  // fraction-free Gaussian elimination
  BigInt bareiss_det(IntMatrix m) {
    std::size_t const n    = m.rows();
    BigInt            prev = 1;
    int               sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == 0) {
        std::size_t r = k + 1;
        while (r < n && m(r, k) == 0) {
          ++r;
        }
        if (r == n) {
          return 0;
        }
        m.swap_rows(k, r);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        }
      }
      prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
  }

  IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    IntMatrix                          m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        m(i, j) = d(rng);
      }
    }
    return m;
  }

}  // namespace

TEST_CASE("invariant factors divide each other", "[smith]") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 12);
    auto d = qlab::smith_normal_form(m);
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
      if (d[k] == 0) {
        REQUIRE(d[k + 1] == 0);
      } else {
        REQUIRE(d[k + 1] % d[k] == 0);
      }
    }
  }
}

TEST_CASE("product of invariant factors is |det|", "[smith]") {
  std::mt19937 rng(9);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng() % 5;
    auto        m = random_matrix(rng, n, n, 9);
    BigInt      p = 1;
    for (auto const& v : qlab::smith_normal_form(m)) {
      p *= v;
    }
    BigInt det = bareiss_det(m);
    REQUIRE(p == (det < 0 ? BigInt(-det) : det));
  }
}

TEST_CASE("unimodular operations do not change the normal form", "[smith]") {
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    std::size_t r = 2 + rng() % 3, c = 2 + rng() % 3;
    auto        m = random_matrix(rng, r, c, 10);
    auto        before = qlab::smith_normal_form(m);
    for (int s = 0; s < 10; ++s) {
      long long   q  = static_cast<long long>(rng() % 7) - 3;
      std::size_t ra = rng() % r, ca = rng() % c;
      switch (rng() % 4) {
        case 0: m.add_row_multiple(ra, (ra + 1) % r, q); break;
        case 1: m.add_col_multiple(ca, (ca + 1) % c, q); break;
        case 2: m.swap_rows(ra, (ra + 1) % r); break;
        default: m.swap_cols(ca, (ca + 1) % c); break;
      }
    }
    REQUIRE(qlab::smith_normal_form(m) == before);
  }
}

TEST_CASE("abelianization of small matrices", "[smith]") {
  REQUIRE(qlab::abelianization_of(IntMatrix{{2, 0}, {0, 3}}).to_string() == "Z/6");
  REQUIRE(qlab::abelianization_of(IntMatrix{{2, 4}, {6, 8}}).to_string() == "Z/2 x Z/4");
  REQUIRE(qlab::abelianization_of(IntMatrix{{1, 1}}).to_string() == "Z");
  REQUIRE(qlab::abelianization_of(IntMatrix{{4, 0, 0}}).to_string() == "Z/4 x Z^2");
  REQUIRE(qlab::abelianization_of(IntMatrix{{1, 0}, {0, 1}}).trivial());
  REQUIRE(qlab::abelianization_of(IntMatrix{{2, 0}, {0, 3}}).order() == 6);
}

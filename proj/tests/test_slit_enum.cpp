#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slitplane/errors.hpp"
#include "slitplane/rational.hpp"
#include "slitplane/walks.hpp"

using namespace slitplane;

namespace {

// Unrestricted four-step-walk count to (i, j) in n steps: a product of two
// binomials in rotated coordinates.
Integer free_walk_count(int n, int i, int j)
{
    const int a = n + i + j, b = n + i - j;
    if (a < 0 || b < 0 || (a & 1) || (b & 1))
        return 0;
    return binomial(n, a / 2) * binomial(n, b / 2);
}

} // namespace

TEST_CASE("single-step counts")
{
    const WalkTable table = enumerate(1);
    CHECK(table.count(1, 0, 1) == 1);
    CHECK(table.count(1, 0, -1) == 1);
    CHECK(table.count(1, 1, 0) == 1);
    CHECK(table.count(1, -1, 0) == 0); // lands on the slit
}

TEST_CASE("hand-verified small counts")
{
    const WalkTable table = enumerate(4);
    CHECK(table.count(2, -1, -1) == 1); // S then W is the only survivor
    CHECK(table.count(3, 0, 1) == 4);
    CHECK(table.count(4, -2, -2) == 3); // SSWW orderings not starting with W
    CHECK(table.count(4, -1, -1) == 7);
    CHECK(table.count(2, 1, 1) == 2);   // EN and NE
    CHECK(table.count(2, 0, 0) == 0);   // returning to the origin is forbidden
}

TEST_CASE("dynamic programming matches exhaustive listing")
{
    const int n = 10;
    const WalkTable dp = enumerate(n);
    const WalkTable brute = enumerate_exhaustive(n);
    for (int m = 0; m <= n; ++m)
        for (int i = -m; i <= m; ++i)
            for (int j = -m; j <= m; ++j)
                CHECK(dp.count(m, i, j) == brute.count(m, i, j));

    CHECK_THROWS_AS(enumerate_exhaustive(13), DomainError);
}

TEST_CASE("endpoint series")
{
    const WalkTable table = enumerate(5);

    const Series s01 = endpoint_series(table, 0, 1);
    CHECK(s01.coeff(0).is_zero());
    CHECK(s01.coeff(1).scalar_part() == 1);
    CHECK(s01.coeff(3).scalar_part() == 4);
    CHECK(s01.coeff(5).scalar_part() == 32);

    CHECK(endpoint_series(table, -1, 0).is_zero());

    const Series origin = endpoint_series(table, 0, 0);
    CHECK(origin == Series(5, Laurent(1))); // only the empty walk
}

TEST_CASE("full series")
{
    const WalkTable table = enumerate(3);
    const Series full = full_series(table);

    CHECK(full.coeff(0) == Laurent(1));

    Laurent first; // x + y + 1/y
    first.set(1, 0, 1);
    first.set(0, 1, 1);
    first.set(0, -1, 1);
    CHECK(full.coeff(1) == first);

    CHECK(full.coeff(2).coeff(1, 1) == 2);
}

TEST_CASE("diagonal series")
{
    const WalkTable table = enumerate(4);
    const Series diag = diagonal_series(table);

    CHECK(diag.coeff(0) == Laurent(1));
    CHECK(diag.coeff(1).is_zero());
    CHECK(diag.coeff(3).is_zero());
    CHECK(diag.coeff(2).coeff(0, 1) == 2);
    CHECK(diag.coeff(2).coeff(0, -1) == 1);
    CHECK(diag.coeff(4).coeff(0, -1) == 7);
}

TEST_CASE("parity, reflection and domination")
{
    const int n = 12;
    const WalkTable table = enumerate(n);
    const Integer total = pow_int(4, n);
    for (int m = 0; m <= n; ++m) {
        Integer layer_sum = 0;
        for (int i = -m; i <= m; ++i) {
            for (int j = -m; j <= m; ++j) {
                const Integer& c = table.count(m, i, j);
                if (((i + j + m) & 1) || std::abs(i) + std::abs(j) > m)
                    CHECK(c == 0);
                CHECK(c == table.count(m, i, -j));
                CHECK(c >= 0);
                CHECK(c <= free_walk_count(m, i, j));
                layer_sum += c;
            }
        }
        CHECK(layer_sum <= total);
    }
}

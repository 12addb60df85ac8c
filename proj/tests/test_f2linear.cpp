#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fcext/f2linear.hpp"

using namespace fcext;

namespace {

BitMatrix from_rows(const std::vector<std::vector<int>>& rows, size_t cols)
{
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols; ++c)
            if (rows[r][c])
                m.set(r, c);
    return m;
}

}  // namespace

TEST_CASE("identity stays identity")
{
    BitMatrix m(3, 3);
    for (size_t i = 0; i < 3; ++i)
        m.set(i, i);
    auto rr = row_reduce(m);
    CHECK(rr.rref == m);
    CHECK(rr.pivots == std::vector<size_t>{0, 1, 2});
}

TEST_CASE("zero matrix has no pivots")
{
    BitMatrix m(2, 4);
    auto rr = row_reduce(m);
    CHECK(rr.rref == m);
    CHECK(rr.pivots.empty());
}

TEST_CASE("dependent row drops the rank")
{
    // third row is the sum of the first two
    auto m = from_rows({{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}}, 4);
    CHECK(rank(m) == 2);
}

TEST_CASE("kernel of identity and of zero")
{
    BitMatrix id(4, 4);
    for (size_t i = 0; i < 4; ++i)
        id.set(i, i);
    CHECK(kernel_basis(id).empty());

    BitMatrix z(1, 3);
    CHECK(kernel_basis(z).size() == 3);
}

TEST_CASE("kernel vectors multiply back to zero")
{
    auto m = from_rows({{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}}, 4);
    auto ker = kernel_basis(m);
    CHECK(ker.size() == 2);  // cols - rank = 4 - 2
    for (const auto& v : ker) {
        auto y = mat_vec(m, v);
        for (uint64_t w : y)
            CHECK(w == 0);
    }
}

TEST_CASE("rank-nullity and transform replay on random matrices")
{
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        size_t rows = 1 + rng() % 12, cols = 1 + rng() % 70;
        BitMatrix m(rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c)
                if (rng() & 1)
                    m.set(r, c);
        auto rr = row_reduce(m);
        CHECK(rr.pivots.size() + kernel_basis(m).size() == cols);

        BitMatrix replay = m;
        rr.transform.apply(replay);
        CHECK(replay == rr.rref);
    }
}

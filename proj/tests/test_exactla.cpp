#include "doctest.h"

#include <random>

#include "properties.hpp"
#include "supercoinv/exactla.hpp"

using namespace supercoinv;

namespace {

using Dense = std::vector<std::vector<mpq_class>>;

// Plain dense Gaussian elimination over mpq_class.
size_t dense_rank(Dense a)
{
    size_t rank = 0;
    const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            mpq_class f = a[r][c] / a[rank][c];
            for (size_t k = c; k < cols; ++k)
                a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

SparseMatrix random_matrix(size_t rows, size_t cols, double density, std::mt19937& rng, int rank_cap = -1)
{
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    SparseMatrix m(rows, cols);
    if (rank_cap < 0) {
        for (Index r = 0; r < rows; ++r)
            for (Index c = 0; c < cols; ++c)
                if (u(rng) < density)
                    m.set(r, c, Rational(num(rng), den(rng)));
        return m;
    }
    // Product of rows x rank_cap and rank_cap x cols factors.
    SparseMatrix a = random_matrix(rows, rank_cap, density, rng), b = random_matrix(rank_cap, cols, density, rng);
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c) {
            Rational s = 0;
            for (Index t = 0; t < static_cast<Index>(rank_cap); ++t)
                s += a.at(r, t) * b.at(t, c);
            m.set(r, c, s);
        }
    return m;
}

Dense to_dense(const SparseMatrix& m)
{
    Dense d(m.rows(), std::vector<mpq_class>(m.cols()));
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
            d[r][c] = m.at(r, c).to_mpq();
    return d;
}

SparseVector vec(size_t dim, std::vector<std::pair<Index, Rational>> e) { return SparseVector::from_terms(dim, std::move(e)); }

}  // namespace

TEST_SUITE("exactla")
{
    TEST_CASE("rational arithmetic spills to big values and back")
    {
        Rational a(INT64_MAX), b(INT64_MAX);
        Rational c = a * b;
        CHECK(c.to_mpq() == mpq_class(mpz_class(INT64_MAX) * mpz_class(INT64_MAX)));
        Rational d = c / b;
        CHECK(d == a);
        CHECK(Rational(6, -4) == Rational(-3, 2));
        CHECK(Rational::parse("-3/2") == Rational(-3, 2));
        CHECK(Rational(1, 3).str() == "1/3");
        CHECK(Rational(1, 3) + Rational(2, 3) == Rational(1));
        Rational e(5);
        e.submul(Rational(2), Rational(3));
        CHECK(e == Rational(-1));
        CHECK_THROWS(Rational(1, 0));
    }

    TEST_CASE("sparse vectors")
    {
        SparseVector v = vec(5, {{3, 1}, {1, 2}, {3, -1}, {0, 0}});
        CHECK(v.nnz() == 1);
        CHECK(v.at(1) == Rational(2));
        SparseVector w = SparseVector::unit(5, 1);
        v.axpy(Rational(-2), w);
        CHECK(v.is_zero());
    }

    TEST_CASE("column space examples")
    {
        CHECK(column_space(SparseMatrix(3, 4)).rank() == 0);
        SparseMatrix id(4, 4);
        for (Index i = 0; i < 4; ++i)
            id.set(i, i, 1);
        CHECK(column_space(id).rank() == 4);
        CHECK(rank(id) == 4);
    }

    TEST_CASE("rank agrees with a dense oracle on random matrices")
    {
        std::mt19937 rng(testing::kPropertySeed);
        for (int t = 0; t < 12; ++t) {
            SparseMatrix m = random_matrix(20, 30, 0.3, rng, t % 3 == 0 ? 7 : -1);
            size_t want = dense_rank(to_dense(m));
            CHECK(rank(m) == want);
            CHECK(bareiss_rank(m) == want);
            CHECK(rank_mod_p(m, 1'000'000'007ULL) <= want);
        }
    }

    TEST_CASE("rank of transpose, up to 40 x 40")
    {
        std::mt19937 rng(testing::kPropertySeed + 1);
        for (int t = 0; t < 8; ++t) {
            size_t r = 5 + t * 4, c = 40 - t * 3;
            SparseMatrix m = random_matrix(r, c, 0.2, rng, t % 2 ? static_cast<int>(r / 2) : -1);
            CHECK(rank(m) == rank(m.transpose()));
        }
    }

    TEST_CASE("membership")
    {
        SubspaceBasis e1 = span_of(3, {SparseVector::unit(3, 0)});
        CHECK(contains(e1, SparseVector(3)));
        CHECK_FALSE(contains(e1, SparseVector::unit(3, 1)));
        CHECK_THROWS_AS(contains(e1, SparseVector(4)), DimensionMismatch);

        std::mt19937 rng(testing::kPropertySeed + 2);
        std::uniform_int_distribution<int> coef(-5, 5);
        SparseMatrix m = random_matrix(15, 10, 0.3, rng, 6);
        SubspaceBasis b = column_space(m);
        for (int t = 0; t < 10; ++t) {
            SparseVector v(15);
            for (Index c = 0; c < m.cols(); ++c)
                v.axpy(Rational(coef(rng), 3), m.column(c));
            CHECK(contains(b, v));
        }
    }

    TEST_CASE("membership and rank are scale invariant")
    {
        std::mt19937 rng(testing::kPropertySeed + 3);
        std::uniform_int_distribution<int> s(1, 7);
        SparseMatrix m = random_matrix(12, 12, 0.3, rng, 5);
        SparseMatrix scaled(12, 12);
        for (Index c = 0; c < 12; ++c) {
            SparseVector col = m.column(c);
            col.scale(Rational(s(rng), s(rng)) * (c % 2 ? Rational(-1) : Rational(1)));
            scaled.set_column(c, col);
        }
        CHECK(rank(m) == rank(scaled));
        SubspaceBasis a = column_space(m), b = column_space(scaled);
        for (const auto& v : a.vectors())
            CHECK(contains(b, v));
    }

    TEST_CASE("basis shape invariants")
    {
        std::mt19937 rng(testing::kPropertySeed + 4);
        SubspaceBasis b = column_space(random_matrix(25, 18, 0.25, rng));
        for (size_t i = 0; i < b.rank(); ++i) {
            CHECK(b.vectors()[i].at(b.pivots()[i]) == Rational(1));
            for (size_t j = 0; j < b.rank(); ++j)
                if (j != i)
                    CHECK(b.vectors()[j].at(b.pivots()[i]).is_zero());
            if (i > 0)
                CHECK(b.pivots()[i - 1] < b.pivots()[i]);
        }
    }

    TEST_CASE("restricted trace examples")
    {
        SparseMatrix a(3, 3);
        a.set(0, 0, 2);
        a.set(1, 2, 5);
        a.set(2, 1, 1);
        a.set(2, 2, -7);
        auto act = [&](Index c) { return a.column(c); };
        SubspaceBasis full = span_of(3, {SparseVector::unit(3, 0), SparseVector::unit(3, 1), SparseVector::unit(3, 2)});
        CHECK(restricted_trace(full, act) == Rational(-5));
        CHECK(restricted_trace(SubspaceBasis(3), act) == Rational(0));

        auto swap = [](Index c) { return SparseVector::unit(2, 1 - c); };
        SubspaceBasis diag = span_of(2, {vec(2, {{0, 1}, {1, 1}})});
        CHECK(restricted_trace(diag, swap) == Rational(1));
        SubspaceBasis anti = span_of(2, {vec(2, {{0, 1}, {1, -1}})});
        CHECK(restricted_trace(anti, swap) == Rational(-1));
        SubspaceBasis e0 = span_of(2, {SparseVector::unit(2, 0)});
        CHECK_THROWS_AS(restricted_trace(e0, swap), NotInvariant);
    }

    TEST_CASE("restricted trace does not depend on the generating set")
    {
        std::mt19937 rng(testing::kPropertySeed + 5);
        // A permutation of coordinates and the subspace spanned by orbit sums.
        const size_t dim = 8;
        std::vector<Index> perm{1, 2, 0, 4, 3, 5, 7, 6};
        auto act = [&](Index c) { return SparseVector::unit(dim, perm[c]); };
        std::vector<SparseVector> gens{vec(dim, {{0, 1}, {1, 1}, {2, 1}}), vec(dim, {{3, 1}, {4, 1}}), vec(dim, {{5, 1}}),
                                       vec(dim, {{3, 1}, {4, -1}}), vec(dim, {{6, 2}, {7, 2}})};
        Rational want = restricted_trace(span_of(dim, gens), act);
        CHECK(want == Rational(3));
        for (int t = 0; t < 5; ++t) {
            std::vector<SparseVector> g = gens;
            std::shuffle(g.begin(), g.end(), rng);
            g.push_back(g[0]);
            g.back().axpy(Rational(3), g[1]);
            CHECK(restricted_trace(span_of(dim, g), act) == want);
        }
    }

    TEST_CASE("solve")
    {
        SparseMatrix m(2, 2);
        m.set(0, 0, 1);
        m.set(0, 1, 1);
        m.set(1, 0, 1);
        m.set(1, 1, -1);
        SolveResult r = solve(m, vec(2, {{0, 3}, {1, 1}}));
        REQUIRE(r.status == SolveResult::Status::Unique);
        CHECK(r.x[0] == Rational(2));
        CHECK(r.x[1] == Rational(1));

        SparseMatrix s(2, 1);
        s.set(0, 0, 1);
        CHECK(solve(s, vec(2, {{1, 1}})).status == SolveResult::Status::Inconsistent);
        SparseMatrix u(1, 2);
        u.set(0, 0, 1);
        u.set(0, 1, 1);
        CHECK(solve(u, vec(1, {{0, 1}})).status == SolveResult::Status::Underdetermined);
    }

    TEST_CASE("echelon builder with a pivot limit")
    {
        EchelonBuilder b(3, 1);
        CHECK(b.insert(vec(3, {{0, 1}, {2, 1}})));
        CHECK_FALSE(b.insert(vec(3, {{0, 2}, {2, 2}})));
        CHECK_FALSE(b.blocked());
        CHECK_FALSE(b.insert(vec(3, {{2, 1}})));
        CHECK(b.blocked());
    }
}

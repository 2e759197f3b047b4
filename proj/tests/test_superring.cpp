#include "doctest.h"

#include <random>

#include "properties.hpp"
#include "supercoinv/superring.hpp"

using namespace supercoinv;

namespace {

SuperPolynomial var(const Context& ctx, int set, int pos) { return SuperPolynomial::variable(ctx, ctx.var(set, pos)); }

// Sign of sorting a word of distinct fermion ids, or 0 on a repeat.
int word_sign(std::vector<int> w)
{
    int inversions = 0;
    for (size_t a = 0; a < w.size(); ++a)
        for (size_t b = a + 1; b < w.size(); ++b) {
            if (w[a] == w[b])
                return 0;
            inversions += w[a] > w[b];
        }
    return inversions % 2 ? -1 : 1;
}

SuperMonomial fermion_monomial(const Context& ctx, const std::vector<int>& ids)
{
    SuperMonomial m = one_monomial(ctx);
    for (int v : ids)
        m.e[v] = 1;
    return m;
}

}  // namespace

TEST_SUITE("superring")
{
    TEST_CASE("context and multidegree")
    {
        Context ctx{3, 2, 1};
        CHECK(ctx.var(1, 2) == 5);
        CHECK(ctx.is_fermionic(6));
        CHECK_FALSE(ctx.is_fermionic(5));
        CHECK(ctx.var_name(ctx.var(2, 0)) == "θ1^(1)");
        Multidegree d{{1, 2}, {3}};
        CHECK(d.total() == 6);
        CHECK(d.at(2) == 3);
        CHECK(d.shifted(0, -1) == Multidegree{{0, 2}, {3}});
        CHECK(d.valid(3));
        CHECK_FALSE(d.valid(2));
        CHECK(d.str() == "(1,2;3)");
    }

    TEST_CASE("multiplication examples")
    {
        Context ctx{2, 0, 1};
        CHECK((var(ctx, 0, 0) * var(ctx, 0, 0)).is_zero());
        SuperPolynomial t21 = var(ctx, 0, 1) * var(ctx, 0, 0);
        SuperPolynomial t12 = var(ctx, 0, 0) * var(ctx, 0, 1);
        CHECK(t21 == t12 * Rational(-1));
        CHECK(t12.terms().begin()->second == Rational(1));

        Context b{2, 1, 0};
        SuperPolynomial x1 = var(b, 0, 0), x2 = var(b, 0, 1);
        CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
    }

    TEST_CASE("fermionic product signs match word sorting")
    {
        std::mt19937 rng(testing::kPropertySeed + 20);
        Context ctx{3, 1, 2};
        const int first = ctx.k * ctx.n, last = ctx.var_count();
        std::uniform_int_distribution<int> pick(first, last - 1), len(0, 3);
        for (int t = 0; t < 200; ++t) {
            std::vector<int> a, b;
            for (int i = len(rng); i > 0; --i)
                a.push_back(pick(rng));
            for (int i = len(rng); i > 0; --i)
                b.push_back(pick(rng));
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
            std::vector<int> word = a;
            word.insert(word.end(), b.begin(), b.end());
            SignedMonomial p = multiply_monomials(ctx, fermion_monomial(ctx, a), fermion_monomial(ctx, b));
            CHECK(p.sign == word_sign(word));
        }
    }

    TEST_CASE("permutation action examples")
    {
        Context ctx{3, 1, 1};
        Permutation swap{1, 0, 2};
        CHECK(act_permutation(swap, var(ctx, 0, 0)) == var(ctx, 0, 1));
        SuperPolynomial t12 = var(ctx, 1, 0) * var(ctx, 1, 1);
        CHECK(act_permutation(swap, t12) == t12 * Rational(-1));
        SuperPolynomial top = var(ctx, 1, 0) * var(ctx, 1, 1) * var(ctx, 1, 2);
        CHECK(act_permutation({1, 2, 0}, top) == top);
        CHECK(act_permutation({1, 0, 2}, top) == top * Rational(-1));
    }

    TEST_CASE("invariant basis examples")
    {
        Context b{2, 1, 0};
        SubspaceBasis inv = invariant_basis(b, Multidegree{{1}, {}});
        REQUIRE(inv.rank() == 1);
        MonomialBasis m(b, Multidegree{{1}, {}});
        SuperPolynomial v = m.to_polynomial(inv.vectors()[0]);
        CHECK(v.coeff(var(b, 0, 0).terms().begin()->first) == v.coeff(var(b, 0, 1).terms().begin()->first));

        CHECK(invariant_basis(Context{2, 0, 1}, Multidegree{{}, {2}}).rank() == 0);
        SubspaceBasis f = invariant_basis(Context{3, 0, 1}, Multidegree{{}, {1}});
        REQUIRE(f.rank() == 1);
        CHECK(f.vectors()[0].nnz() == 3);
        CHECK(invariant_basis(Context{3, 1, 0}, Multidegree{{2}, {}}).rank() == 2);
    }

    TEST_CASE("superderivation examples")
    {
        using K = Superderivation::Kind;
        Context ctx{2, 1, 1};
        CHECK(apply_superderivation({K::FermionBoson, 0, 0}, var(ctx, 0, 0)) == var(ctx, 1, 0));
        CHECK(apply_superderivation({K::BosonFermion, 0, 0}, var(ctx, 1, 0)) == var(ctx, 0, 0));
        SuperPolynomial x1x2 = var(ctx, 0, 0) * var(ctx, 0, 1);
        CHECK(apply_superderivation({K::BosonBoson, 0, 0}, x1x2) == x1x2 * Rational(2));
        CHECK(Superderivation{K::FermionBoson, 0, 0}.str() == "E_{1',1}");
        CHECK_THROWS_AS(apply_superderivation({K::BosonBoson, 1, 0}, x1x2), std::out_of_range);
        // The sign of the left superderivative: d/dtheta_2 (theta_1 theta_2) = -theta_1.
        SuperPolynomial t12 = var(ctx, 1, 0) * var(ctx, 1, 1);
        CHECK(apply_superderivation({K::BosonFermion, 0, 0}, t12) ==
              var(ctx, 0, 0) * var(ctx, 1, 1) - var(ctx, 0, 1) * var(ctx, 1, 0));
        CHECK(all_superderivations(Context{3, 2, 1}).size() == 9);
    }

    TEST_CASE("monomial space dimension matches enumeration")
    {
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= 2; ++k)
                for (int j = 0; j <= 2; ++j) {
                    Context ctx{n, k, j};
                    for (int total = 0; total <= 4; ++total)
                        for (const auto& d : multidegrees_of_total(ctx, total)) {
                            MonomialBasis m(ctx, d);
                            CHECK(Integer(static_cast<unsigned long>(m.size())) == monomial_space_dim(ctx, d));
                            for (size_t i = 1; i < m.size(); ++i)
                                CHECK(m[i] < m[i - 1]);
                        }
                }
    }

    TEST_CASE("monomial byte encoding round trip")
    {
        std::mt19937 rng(testing::kPropertySeed + 21);
        Context ctx{3, 2, 2};
        std::uniform_int_distribution<int> boson(0, 5), bit(0, 1);
        for (int t = 0; t < 50; ++t) {
            SuperMonomial m = one_monomial(ctx);
            for (int v = 0; v < ctx.var_count(); ++v)
                m.e[v] = static_cast<uint8_t>(ctx.is_fermionic(v) ? bit(rng) : boson(rng));
            auto bytes = encode_monomial(ctx, m);
            CHECK(bytes.size() == static_cast<size_t>(ctx.n * ctx.k + (ctx.n * ctx.j + 7) / 8));
            CHECK(decode_monomial(ctx, bytes) == m);
        }
        CHECK_THROWS(decode_monomial(ctx, {1, 2}));
    }

    TEST_CASE("action, homomorphism, Reynolds and commutation on random inputs")
    {
        auto r = testing::ring_action_properties(testing::kPropertySeed, 6);
        INFO(r.detail);
        CHECK(r.pass);
        CHECK(r.cases > 100);
    }

    TEST_CASE("context mismatch")
    {
        CHECK_THROWS_AS(var(Context{2, 1, 0}, 0, 0) + var(Context{3, 1, 0}, 0, 0), ContextMismatch);
    }
}

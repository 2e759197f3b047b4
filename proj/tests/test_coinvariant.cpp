#include "doctest.h"

#include <filesystem>

#include "supercoinv/coinvariant.hpp"

using namespace supercoinv;

namespace {

QUPoly univariate(const QPoly& p, Alphabet a, int var)
{
    QUPoly out(a);
    for (const auto& [e, c] : p.terms()) {
        Exponents x(a.size(), 0);
        x[var] = e;
        out.add_term(x, c);
    }
    return out;
}

QUPoly mono(Alphabet a, Exponents e, long c = 1) { return QUPoly::monomial(a, std::move(e), c); }

Partition ones(int n) { return Partition(std::vector<int>(n, 1)); }

// The ideal component straight from its definition: products of monomials
// with invariants of every lower nonzero multidegree.
SubspaceBasis ideal_by_definition(const Context& ctx, const Multidegree& d)
{
    MonomialBasis target(ctx, d);
    std::vector<SparseVector> gens;
    const int sets = ctx.sets();
    std::vector<int> e(sets, 0);
    std::function<void(int)> rec = [&](int set) {
        if (set == sets) {
            Multidegree ed{{e.begin(), e.begin() + ctx.k}, {e.begin() + ctx.k, e.end()}};
            if (ed.total() == 0)
                return;
            Multidegree rest = d;
            for (int s = 0; s < sets; ++s)
                rest = rest.shifted(s, -e[s]);
            MonomialBasis inv_monos(ctx, ed), rest_monos(ctx, rest);
            SubspaceBasis inv = invariant_basis(ctx, ed);
            for (const auto& g : inv.vectors()) {
                SuperPolynomial gp = inv_monos.to_polynomial(g);
                for (const auto& m : rest_monos.monomials())
                    gens.push_back(target.to_vector(SuperPolynomial::monomial(ctx, m) * gp));
            }
            return;
        }
        for (int v = 0; v <= d.at(set); ++v) {
            e[set] = v;
            rec(set + 1);
        }
    };
    rec(0);
    return span_of(target.size(), gens);
}

EngineOptions quiet_options()
{
    EngineOptions o;
    o.cache_dir.clear();
    return o;
}

}  // namespace

TEST_SUITE("coinvariant")
{
    TEST_CASE("ideal component examples")
    {
        CoinvariantEngine e2(2, 1, 0, quiet_options());
        CHECK(e2.ideal_component(Multidegree{{0}, {}}).rank() == 0);
        SubspaceBasis i1 = e2.ideal_component(Multidegree{{1}, {}});
        CHECK(i1.rank() == 1);
        CHECK(i1.vectors()[0].nnz() == 2);
        CHECK(e2.component(Multidegree{{1}, {}}).dim() == 1);

        CoinvariantEngine e3(3, 1, 0, quiet_options());
        CHECK(e3.component(Multidegree{{3}, {}}).dim() == 1);
        CHECK(e3.component(Multidegree{{4}, {}}).dim() == 0);
    }

    TEST_CASE("engine agrees with the ideal built from its definition")
    {
        for (int n = 1; n <= 3; ++n)
            for (int k = 0; k <= 2; ++k)
                for (int j = 0; j <= 2; ++j) {
                    if (k + j == 0 || k + j > 2 + (n == 2))
                        continue;
                    Context ctx{n, k, j};
                    CoinvariantEngine eng(n, k, j, quiet_options());
                    for (int total = 0; total <= 4; ++total)
                        for (const auto& d : multidegrees_of_total(ctx, total)) {
                            SubspaceBasis want = ideal_by_definition(ctx, d);
                            SubspaceBasis got = eng.ideal_component(d);
                            INFO("n=" << n << " k=" << k << " j=" << j << " d=" << d.str());
                            REQUIRE(got.rank() == want.rank());
                            for (const auto& v : want.vectors())
                                CHECK(contains(got, v));
                        }
                }
    }

    TEST_CASE("quotient character examples")
    {
        CoinvariantEngine e(2, 1, 0, quiet_options());
        CHECK(e.quotient_character(Multidegree{{0}, {}}, CycleType{Partition{2}}) == Rational(1));
        CHECK(e.quotient_character(Multidegree{{1}, {}}, CycleType{Partition{1, 1}}) == Rational(1));
        CHECK(e.quotient_character(Multidegree{{1}, {}}, CycleType{Partition{2}}) == Rational(-1));

        CoinvariantEngine f(3, 0, 1, quiet_options());
        Multidegree s1{{}, {1}};
        CHECK(f.quotient_character(s1, CycleType{Partition{1, 1, 1}}) == Rational(2));
        CHECK(f.quotient_character(s1, CycleType{Partition{2, 1}}) == Rational(0));
        CHECK(f.quotient_character(s1, CycleType{Partition{3}}) == Rational(-1));
    }

    TEST_CASE("frobenius series examples")
    {
        CoinvariantEngine e(2, 1, 1, quiet_options());
        FrobeniusSeries f = e.frobenius_series();
        std::map<Multidegree, SchurMultVector> want{{Multidegree{{0}, {0}}, {{Partition{2}, 1}}},
                                                    {Multidegree{{1}, {0}}, {{Partition{1, 1}, 1}}},
                                                    {Multidegree{{0}, {1}}, {{Partition{1, 1}, 1}}}};
        CHECK(f.components == want);
        Alphabet a{1, 1, 0};
        CHECK(e.hilbert_series() == QUPoly::constant(a, 1) + mono(a, {1, 0}) + mono(a, {0, 1}));

        CoinvariantEngine ext(3, 0, 1, quiet_options());
        std::map<Multidegree, SchurMultVector> w3;
        for (int d = 0; d <= 2; ++d)
            w3[Multidegree{{}, {d}}] = {{hook(3 - d, d), 1}};
        CHECK(ext.frobenius_series().components == w3);
    }

    TEST_CASE("hilbert series examples")
    {
        Alphabet q{1, 0, 0};
        CHECK(CoinvariantEngine(3, 1, 0, quiet_options()).hilbert_series() == univariate(q_factorial(3), q, 0));
        CHECK(CoinvariantEngine(4, 1, 0, quiet_options()).hilbert_series() == univariate(q_factorial(4), q, 0));

        Alphabet a{1, 1, 0};
        QUPoly onepq = QUPoly::constant(a, 1) + mono(a, {1, 0});
        QUPoly want = mono(a, {0, 2}) + onepq * (QUPoly::constant(a, 1) + onepq) * mono(a, {0, 1}) +
                      onepq * (onepq + mono(a, {2, 0}));
        CHECK(CoinvariantEngine(3, 1, 1, quiet_options()).hilbert_series() == want);

        QUPoly h = CoinvariantEngine(2, 2, 0, quiet_options()).hilbert_series();
        Integer dim = 0;
        for (const auto& [e, c] : h.terms())
            dim += c;
        CHECK(dim == 3);
    }

    TEST_CASE("coefficient table examples")
    {
        for (int n = 1; n <= 4; ++n) {
            CoeffTable t = coeff_table(CoinvariantEngine(n, 1, 0, quiet_options()).frobenius_series());
            CHECK(t.at(Partition(), Partition{n}) == 1);
            CHECK(t.at(n > 1 ? Partition{n * (n - 1) / 2} : Partition(), ones(n)) == 1);
            CHECK(coeff_table(CoinvariantEngine(n, 0, 1, quiet_options()).frobenius_series()).at(ones(n - 1), ones(n)) == 1);
        }
        CoeffTable t = coeff_table(CoinvariantEngine(3, 1, 1, quiet_options()).frobenius_series());
        CHECK(t.at(Partition{1, 1}, ones(3)) == 1);
        CHECK(t.at(Partition{3}, ones(3)) == 1);
        CHECK(t.at(Partition{2}, ones(3)) == 0);
        for (const auto& [key, c] : t.entries) {
            CHECK(t.determines(key.first));
            CHECK(c > 0);
        }
    }

    TEST_CASE("component invariants")
    {
        for (auto [n, k, j] : std::vector<std::tuple<int, int, int>>{{3, 1, 1}, {3, 0, 2}, {2, 2, 1}, {4, 1, 0}}) {
            CoinvariantEngine e(n, k, j, quiet_options());
            e.run_to_termination();
            const Context ctx = e.context();
            for (const auto& d : e.computed_degrees()) {
                const Component& c = e.component(d);
                SubspaceBasis ideal = e.ideal_component(d);
                CHECK(c.dim() + ideal.rank() == c.monomials->size());
                CHECK(e.quotient_character(d, CycleType{ones(n)}) == Rational(static_cast<int64_t>(c.dim())));
                if (d.total() > 0) {
                    SubspaceBasis inv = e.invariant_component(d);
                    for (const auto& v : inv.vectors())
                        CHECK(contains(ideal, v));
                }
                CHECK(Integer(static_cast<unsigned long>(c.monomials->size())) == monomial_space_dim(ctx, d));
            }
            FrobeniusSeries f = e.frobenius_series();
            for (const auto& [d, mults] : f.components)
                for (const auto& [mu, m] : mults)
                    CHECK(m > 0);
            CHECK(hilbert_from_frobenius(f) == e.hilbert_series());
        }
    }

    TEST_CASE("restriction to fewer variable sets is a specialization")
    {
        for (auto [n, k, j] : std::vector<std::tuple<int, int, int>>{{3, 1, 1}, {3, 2, 0}, {2, 2, 1}, {3, 0, 2}}) {
            CoinvariantEngine e(n, k, j, quiet_options());
            Alphabet a{k, j, 0};
            if (k >= 1) {
                QUPoly h = specialize(e.hilbert_series(), {{a.q(k - 1), {Substitution::Kind::Zero, -1}}});
                CHECK(change_alphabet(h, Alphabet{k - 1, j, 0}) == CoinvariantEngine(n, k - 1, j, quiet_options()).hilbert_series());
            }
            if (j >= 1) {
                QUPoly h = specialize(e.hilbert_series(), {{a.u(j - 1), {Substitution::Kind::Zero, -1}}});
                CHECK(change_alphabet(h, Alphabet{k, j - 1, 0}) == CoinvariantEngine(n, k, j - 1, quiet_options()).hilbert_series());
            }
        }
    }

    TEST_CASE("resource ceiling")
    {
        EngineOptions o = quiet_options();
        o.ceiling = 10;
        CoinvariantEngine e(4, 1, 1, o);
        CHECK_THROWS_AS(e.run_to_termination(), ResourceExceeded);
        try {
            CoinvariantEngine(5, 1, 0, o).run_to_termination();
            FAIL("expected ResourceExceeded");
        }
        catch (const ResourceExceeded& r) {
            CHECK(r.cols > 10);
        }
    }

    TEST_CASE("parallel shells give identical results")
    {
        EngineOptions par = quiet_options();
        par.jobs = 3;
        CoinvariantEngine a(4, 1, 1, quiet_options()), b(4, 1, 1, par);
        CHECK(a.frobenius_series() == b.frobenius_series());
        CHECK(a.hilbert_series() == b.hilbert_series());
    }

    TEST_CASE("disk cache round trip")
    {
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path() / "supercoinv_cache_test";
        fs::remove_all(dir);
        EngineOptions o = quiet_options();
        o.cache_dir = dir.string();
        FrobeniusSeries first = CoinvariantEngine(3, 1, 1, o).frobenius_series();
        size_t files = 0;
        for (const auto& entry : fs::recursive_directory_iterator(dir))
            files += entry.is_regular_file();
        CHECK(files > 0);
        CoinvariantEngine second(3, 1, 1, o);
        CHECK(second.frobenius_series() == first);
        CHECK(first == CoinvariantEngine(3, 1, 1, quiet_options()).frobenius_series());
        fs::remove_all(dir);
    }

    TEST_CASE("trace through the ideal agrees with the normal-form trace")
    {
        CoinvariantEngine e(3, 1, 1, quiet_options());
        e.run_to_termination();
        for (const auto& d : e.computed_degrees())
            for (const auto& rho : conjugacy_classes(3))
                CHECK(e.quotient_character(d, rho) == e.quotient_character_via_ideal(d, rho));
    }

    TEST_CASE("cache directory from the environment")
    {
        CHECK(resolve_cache_dir("fallback") == (std::getenv("SUPERCOINV_CACHE") ? std::string(std::getenv("SUPERCOINV_CACHE")) : "fallback"));
    }
}

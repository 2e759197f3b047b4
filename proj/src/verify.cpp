#include "supercoinv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

namespace supercoinv {

Json to_json(const CheckReport& r)
{
    return Json{{"id", r.id}, {"params", r.params}, {"status", r.pass ? "pass" : "fail"}, {"witness", r.witness}, {"seconds", r.seconds}};
}

CheckReport check_report_from_json(const Json& j)
{
    CheckReport r;
    try {
        r.id = j.at("id").get<std::string>();
        r.params = j.at("params");
        std::string status = j.at("status").get<std::string>();
        if (status != "pass" && status != "fail")
            throw ParseError("status must be pass or fail");
        r.pass = status == "pass";
        r.witness = j.at("witness");
        r.seconds = j.at("seconds").get<double>();
    }
    catch (const Json::exception& e) {
        throw ParseError(std::string("bad check report: ") + e.what());
    }
    if (!r.pass && r.witness.is_null())
        throw ParseError("failed check report without witness");
    return r;
}

namespace {

// Series and tables are shared between checks.
struct SeriesMemo {
    std::mutex mutex;
    std::map<std::tuple<int, int, int>, std::shared_ptr<const FrobeniusSeries>> frob;
    std::map<std::tuple<int, int, int>, std::shared_ptr<const CoeffTable>> table;
};

SeriesMemo& memo()
{
    static SeriesMemo m;
    return m;
}

const FrobeniusSeries& frob(int n, int k, int j)
{
    auto& m = memo();
    {
        std::lock_guard lock(m.mutex);
        auto it = m.frob.find({n, k, j});
        if (it != m.frob.end())
            return *it->second;
    }
    auto f = std::make_shared<const FrobeniusSeries>(shared_engine(n, k, j).frobenius_series());
    std::lock_guard lock(m.mutex);
    return *m.frob.emplace(std::make_tuple(n, k, j), f).first->second;
}

const CoeffTable& table(int n, int k, int j)
{
    const FrobeniusSeries& f = frob(n, k, j);
    auto& m = memo();
    {
        std::lock_guard lock(m.mutex);
        auto it = m.table.find({n, k, j});
        if (it != m.table.end())
            return *it->second;
    }
    auto t = std::make_shared<const CoeffTable>(coeff_table(f));
    std::lock_guard lock(m.mutex);
    return *m.table.emplace(std::make_tuple(n, k, j), t).first->second;
}

QUPoly from_qpoly(const QPoly& p, Alphabet a, int var)
{
    QUPoly out(a);
    for (const auto& [e, c] : p.terms()) {
        Exponents ex(a.size(), 0);
        ex.at(var) = e;
        out.add_term(ex, c);
    }
    return out;
}

Json poly_witness(const QUPoly& expected, const QUPoly& computed)
{
    QUPoly diff = computed - expected;
    Json w{{"expected", pretty(expected)}, {"computed", pretty(computed)}};
    if (!diff.is_zero()) {
        const auto& [e, c] = *diff.terms().begin();
        w["first_monomial"] = pretty(QUPoly::monomial(expected.alphabet(), e));
        w["expected_coeff"] = expected.coeff(e).get_str();
        w["computed_coeff"] = computed.coeff(e).get_str();
    }
    return w;
}

Json config_json(const Config& c) { return Json::array({c.first, c.second}); }

Partition column(int m) { return Partition(std::vector<int>(m, 1)); }

Partition twos_ones(int twos, int ones)
{
    std::vector<int> p(twos, 2);
    p.insert(p.end(), ones, 1);
    return Partition(p);
}

template <typename F>
CheckReport timed(const std::string& id, Json params, F&& body)
{
    CheckReport r;
    r.id = id;
    r.params = std::move(params);
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    }
    catch (const ResourceExceeded&) {
        throw;
    }
    catch (const OutsideEnvelope&) {
        throw;
    }
    catch (const std::exception& e) {
        r.pass = false;
        r.witness = Json{{"error", e.what()}};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.pass && r.witness.is_null())
        r.witness = Json{{"error", "unspecified failure"}};
    return r;
}

void fail(CheckReport& r, Json witness)
{
    if (r.pass) {
        r.pass = false;
        r.witness = std::move(witness);
    }
}

}  // namespace

// ---------------------------------------------------------------------------

Integer g_coefficient(int i, int d, int n)
{
    if (d == 0)
        return i == 0 ? 1 : 0;
    int width = n - 2 - d;
    if (width < 0 || i < 0)
        return 0;
    return Integer(static_cast<unsigned long>(partitions_in_box(i, d, width).size()));
}

std::vector<std::pair<Partition, Partition>> prop42_families(int n, bool corrected)
{
    std::set<std::pair<Partition, Partition>, PartitionPairOrder> out;
    auto add = [&](int lambda_twos, int lambda_ones, std::vector<int> mu) {
        if (lambda_twos < 0 || lambda_ones < 0)
            return;
        int size = 0;
        for (int x : mu) {
            if (x < 0)
                return;
            size += x;
        }
        if (size != n)
            return;
        out.insert({twos_ones(lambda_twos, lambda_ones), Partition(mu)});
    };
    auto mu_of = [](int a, int b, int twos, int ones) {
        if (twos < 0 || ones < 0)
            return std::vector<int>{-1};
        std::vector<int> mu{a, b};
        mu.insert(mu.end(), twos, 2);
        mu.insert(mu.end(), ones, 1);
        return mu;
    };

    add(0, 0, {n});  // (i)
    add(0, n - 1, std::vector<int>(n, 1));  // (ii)
    for (int k = 1; k <= n - 1; ++k) {  // (iii)
        std::vector<int> mu{n - k};
        mu.insert(mu.end(), k, 1);
        add(0, k, mu);
        if (k <= n - 2)
            add(1, k - 1, mu);
    }
    for (int mu1 = 2; 2 * mu1 <= n; ++mu1)  // (iv)
        for (int l = 0; 2 * l + 2 * mu1 <= n; ++l) {
            int e = n - 2 * l - 2 * mu1;
            auto mu = mu_of(mu1, mu1, l, e);
            add(l + mu1, e - 1, mu);
            add(l + mu1 - 1, e + 1, mu);
            add(l + mu1 - 1, e, mu);
        }
    for (int mu1 = 3; mu1 <= n; ++mu1)  // (v)
        for (int mu2 = 2; mu2 < mu1; ++mu2)
            for (int l = 0; 2 * l <= n; ++l) {
                int e = corrected ? n - 2 * l - mu1 - mu2 : n - 2 * l - 2 * mu1;
                int f = n - 2 * l - mu1 - mu2;
                auto mu = mu_of(mu1, mu2, l, e);
                add(l + mu2, f, mu);
                add(l + mu2 - 1, f + 1, mu);
                add(l + mu2, f - 1, mu);
                add(l + mu2 - 1, f, mu);
            }
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------

CheckReport check_artin(int n)
{
    return timed("artin", Json{{"n", n}}, [&](CheckReport& r) {
        QUPoly h = shared_engine(n, 1, 0).hilbert_series();
        Alphabet a{1, 0, 0};
        QUPoly expected = from_qpoly(q_factorial(n), a, 0);
        Integer dim = 0;
        for (const auto& [e, c] : h.terms())
            dim += c;
        r.params["dim"] = dim.get_str();
        if (h != expected)
            fail(r, poly_witness(expected, h));
        if (dim != factorial(n))
            fail(r, Json{{"expected_dim", factorial(n).get_str()}, {"computed_dim", dim.get_str()}});
    });
}

CheckReport check_exterior(int n)
{
    return timed("exterior", Json{{"n", n}}, [&](CheckReport& r) {
        const FrobeniusSeries& f = frob(n, 0, 1);
        std::map<Multidegree, SchurMultVector> expected;
        for (int d = 0; d <= n - 1; ++d)
            expected[Multidegree{{}, {d}}] = SchurMultVector{{hook(n - d, d), 1}};
        std::set<Multidegree> all;
        for (const auto& [d, m] : expected)
            all.insert(d);
        for (const auto& [d, m] : f.components)
            all.insert(d);
        for (const auto& d : all) {
            SchurMultVector want = expected.count(d) ? expected.at(d) : SchurMultVector{};
            SchurMultVector got = f.components.count(d) ? f.components.at(d) : SchurMultVector{};
            if (want != got) {
                fail(r, Json{{"multidegree", to_json(d)}, {"expected", pretty(want)}, {"computed", pretty(got)}});
                break;
            }
        }
    });
}

CheckReport check_hilb11(int n)
{
    return timed("hilb11", Json{{"n", n}}, [&](CheckReport& r) {
        Alphabet a{1, 1, 0};
        QUPoly formula(a);
        for (int d = 0; d <= n; ++d) {
            QUPoly term = from_qpoly(q_factorial(d) * q_stirling(n, d), a, a.q(0));
            Exponents u(a.size(), 0);
            u[a.u(0)] = n - d;
            formula += term * QUPoly::monomial(a, u);
        }
        QUPoly h = shared_engine(n, 1, 1).hilbert_series();
        if (h != formula)
            fail(r, poly_witness(formula, h));
        QUPoly collapsed = specialize(formula, {{a.q(0), {Substitution::Kind::NegVar, a.u(0)}}});
        if (collapsed != QUPoly::constant(a, 1))
            fail(r, Json{{"specialization", "q=-u"}, {"expected", "1"}, {"computed", pretty(collapsed)}});
    });
}

CheckReport check_sign_coeffs(int n)
{
    return timed("sign_coeffs", Json{{"n", n}}, [&](CheckReport& r) {
        Alphabet a{1, 1, 0};
        const Partition sign = column(n);
        QUPoly slice = isotypic_slice(frob(n, 1, 1), sign);

        QUPoly closed(a);
        for (int d = 0; d <= n - 1; ++d) {
            QUPoly t = from_qpoly(q_binomial(n - 1, d).shifted(static_cast<int>(binomial(n - d, 2).get_si())), a, a.q(0));
            Exponents u(a.size(), 0);
            u[a.u(0)] = d;
            closed += t * QUPoly::monomial(a, u);
        }

        std::map<Partition, Integer, PartitionOrder> predicted;
        QUPoly hooks(a);
        for (int d = 0; d <= n - 1; ++d) {
            const int base = static_cast<int>(binomial(n - d, 2).get_si());
            for (int i = 0; i <= std::max(0, d * (n - 2 - d)); ++i) {
                Integer g = g_coefficient(i, d, n);
                if (g == 0)
                    continue;
                std::vector<int> parts{base + i};
                parts.insert(parts.end(), d, 1);
                if (base + i == 0 && d > 0)
                    throw std::logic_error("hook with empty first row");
                Partition lambda(parts);
                predicted[lambda] += g;
                QUPoly s = super_schur(lambda, 1, 1);
                s *= g;
                hooks += s;
            }
        }
        if (slice != closed)
            fail(r, Json{{"compare", "ring slice vs closed form"}, {"detail", poly_witness(closed, slice)}});
        if (hooks != closed)
            fail(r, Json{{"compare", "hook expansion vs closed form"}, {"detail", poly_witness(closed, hooks)}});

        const CoeffTable& t = table(n, 1, 1);
        std::set<Partition, PartitionOrder> lambdas;
        for (const auto& [l, g] : predicted)
            lambdas.insert(l);
        for (const auto& [key, c] : t.entries)
            if (key.second == sign)
                lambdas.insert(key.first);
        for (const auto& l : lambdas) {
            Integer want = predicted.count(l) ? predicted.at(l) : Integer(0);
            Integer got = t.at(l, sign);
            if (want != got) {
                fail(r, Json{{"compare", "coefficient table sign column"}, {"lambda", to_json(l)}, {"mu", to_json(sign)},
                             {"expected", want.get_str()}, {"computed", got.get_str()}});
                break;
            }
        }
    });
}

CheckReport check_haiman_dim(int n)
{
    return timed("haiman_dim", Json{{"n", n}}, [&](CheckReport& r) {
        QUPoly h = shared_engine(n, 2, 0).hilbert_series();
        Integer dim = 0;
        for (const auto& [e, c] : h.terms())
            dim += c;
        Integer expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(n - 1));
        r.params["dim"] = dim.get_str();
        if (dim != expected)
            fail(r, Json{{"expected_dim", expected.get_str()}, {"computed_dim", dim.get_str()}});
    });
}

namespace {

CheckReport prop42_impl(const std::string& id, int n, bool corrected)
{
    return timed(id, Json{{"n", n}}, [&](CheckReport& r) {
        const CoeffTable& t = table(n, 0, 2);
        auto families = prop42_families(n, corrected);
        std::set<std::pair<Partition, Partition>, PartitionPairOrder> expected(families.begin(), families.end());
        Json mismatches = Json::array();
        auto record = [&](const Partition& l, const Partition& mu, int want, const Integer& got) {
            if (mismatches.size() < 50)
                mismatches.push_back(Json{{"lambda", to_json(l)}, {"mu", to_json(mu)}, {"expected", want}, {"computed", got.get_str()}});
        };
        size_t count = 0;
        for (const auto& [l, mu] : expected) {
            Integer got = t.at(l, mu);
            if (got != 1) {
                ++count;
                record(l, mu, 1, got);
            }
        }
        for (const auto& [key, c] : t.entries) {
            if (key.first.part(1) > 2 || expected.count(key))
                continue;
            ++count;
            record(key.first, key.second, 0, c);
        }
        r.params["family_members"] = expected.size();
        if (count > 0)
            fail(r, Json{{"first", mismatches.at(0)}, {"mismatch_count", count}, {"mismatches", mismatches}});
    });
}

}  // namespace

CheckReport check_prop42(int n) { return prop42_impl("prop42", n, false); }
CheckReport check_prop42_corrected(int n) { return prop42_impl("prop42_corrected", n, true); }

CheckReport check_universality(int n, const std::vector<Config>& configs)
{
    Json cfg = Json::array();
    for (const auto& c : configs)
        cfg.push_back(config_json(c));
    return timed("universality", Json{{"n", n}, {"configs", cfg}}, [&](CheckReport& r) {
        std::vector<const CoeffTable*> tables;
        for (const auto& [k, j] : configs)
            tables.push_back(&table(n, k, j));
        size_t compared = 0;
        for (size_t a = 0; a < tables.size() && r.pass; ++a)
            for (size_t b = a + 1; b < tables.size() && r.pass; ++b) {
                const CoeffTable& A = *tables[a];
                const CoeffTable& B = *tables[b];
                std::set<std::pair<Partition, Partition>, PartitionPairOrder> keys;
                for (const auto& [key, c] : A.entries)
                    keys.insert(key);
                for (const auto& [key, c] : B.entries)
                    keys.insert(key);
                for (const auto& key : keys) {
                    if (!A.determines(key.first) || !B.determines(key.first))
                        continue;
                    ++compared;
                    Integer ca = A.at(key.first, key.second), cb = B.at(key.first, key.second);
                    if (ca != cb) {
                        fail(r, Json{{"configs", {config_json(configs[a]), config_json(configs[b])}},
                                     {"lambda", to_json(key.first)},
                                     {"mu", to_json(key.second)},
                                     {"c", {ca.get_str(), cb.get_str()}}});
                        break;
                    }
                }
            }
        r.params["shared_entries"] = compared;
    });
}

CheckReport check_cancellation(int n, int k, int j, int m)
{
    if (m < 0 || m > std::min(k, j))
        throw std::invalid_argument("cancellation needs 0 <= m <= min(k, j)");
    return timed("cancellation", Json{{"n", n}, {"k", k}, {"j", j}, {"m", m}}, [&](CheckReport& r) {
        const Alphabet big{k, j, 0}, small{k - m, j - m, 0};
        std::map<int, Substitution> sub;
        for (int i = 0; i < m; ++i)
            sub[big.q(k - 1 - i)] = {Substitution::Kind::NegVar, big.u(j - 1 - i)};
        auto collapse = [&](const QUPoly& p) -> std::optional<QUPoly> {
            try {
                return change_alphabet(specialize(p, sub), small);
            }
            catch (const std::invalid_argument&) {
                return std::nullopt;
            }
        };
        const FrobeniusSeries& fb = frob(n, k, j);
        const FrobeniusSeries& fs = frob(n, k - m, j - m);
        for (const auto& mu : partitions_of(n)) {
            auto got = collapse(isotypic_slice(fb, mu));
            QUPoly want = isotypic_slice(fs, mu);
            if (!got) {
                fail(r, Json{{"mu", to_json(mu)}, {"error", "specialized slice still involves removed letters"}});
                return;
            }
            if (*got != want) {
                fail(r, Json{{"mu", to_json(mu)}, {"detail", poly_witness(want, *got)}});
                return;
            }
        }
        auto h = collapse(shared_engine(n, k, j).hilbert_series());
        QUPoly hs = shared_engine(n, k - m, j - m).hilbert_series();
        if (!h || *h != hs)
            fail(r, Json{{"series", "hilbert"}, {"detail", h ? poly_witness(hs, *h) : Json("removed letters remain")}});
    });
}

CheckReport check_restriction(int n, int k, int j)
{
    return timed("restriction", Json{{"n", n}, {"k", k}, {"j", j}}, [&](CheckReport& r) {
        const Alphabet full{k, j, 0};
        const FrobeniusSeries& f = frob(n, k, j);
        auto compare = [&](int var, Alphabet target, int k2, int j2, const char* what) {
            std::map<int, Substitution> sub{{var, {Substitution::Kind::Zero, -1}}};
            const FrobeniusSeries& g = frob(n, k2, j2);
            for (const auto& mu : partitions_of(n)) {
                QUPoly got = change_alphabet(specialize(isotypic_slice(f, mu), sub), target);
                QUPoly want = isotypic_slice(g, mu);
                if (got != want) {
                    fail(r, Json{{"restriction", what}, {"mu", to_json(mu)}, {"detail", poly_witness(want, got)}});
                    return;
                }
            }
            QUPoly got = change_alphabet(specialize(shared_engine(n, k, j).hilbert_series(), sub), target);
            QUPoly want = shared_engine(n, k2, j2).hilbert_series();
            if (got != want)
                fail(r, Json{{"restriction", what}, {"series", "hilbert"}, {"detail", poly_witness(want, got)}});
        };
        if (k >= 1)
            compare(full.q(k - 1), Alphabet{k - 1, j, 0}, k - 1, j, "q_k=0");
        if (j >= 1 && r.pass)
            compare(full.u(j - 1), Alphabet{k, j - 1, 0}, k, j - 1, "u_j=0");
    });
}

CheckReport check_bound_and_closure(int n, int k, int j)
{
    return timed("bound_closure", Json{{"n", n}, {"k", k}, {"j", j}}, [&](CheckReport& r) {
        const CoeffTable& t = table(n, k, j);
        std::map<Partition, SchurMultVector, PartitionOrder> d_cache;
        for (const auto& [key, c] : t.entries) {
            const auto& [lambda, mu] = key;
            auto it = d_cache.find(lambda);
            if (it == d_cache.end())
                it = d_cache.emplace(lambda, gl_restriction_mult(lambda, n)).first;
            Integer bound = it->second.count(mu) ? it->second.at(mu) : Integer(0);
            if (c < 0 || c > bound) {
                fail(r, Json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"c", c.get_str()}, {"d", bound.get_str()}});
                return;
            }
        }

        CoinvariantEngine& engine = shared_engine(n, k, j);
        engine.run_to_termination();
        const Context ctx = engine.context();
        const auto derivations = all_superderivations(ctx);
        const auto classes = conjugacy_classes(n);
        size_t vectors_checked = 0;
        for (const auto& d : engine.computed_degrees()) {
            const Component& c = engine.component(d);
            const MonomialBasis& M = *c.monomials;
            for (const auto& rho : classes) {
                Rational direct = engine.quotient_character(d, rho);
                Rational via = engine.quotient_character_via_ideal(d, rho);
                if (direct != via) {
                    fail(r, Json{{"multidegree", to_json(d)}, {"class", to_json(rho.rho)}, {"trace_normal_form", direct.str()},
                                 {"trace_ambient_minus_ideal", via.str()}});
                    return;
                }
            }
            for (const auto& e : derivations) {
                Multidegree target = d.shifted(e.from_set(ctx), -1).shifted(e.to_set(ctx), 1);
                if (!target.valid(n) || d.at(e.from_set(ctx)) == 0)
                    continue;
                const Component& tc = engine.component(target);
                const MonomialBasis& T = *tc.monomials;
                // NF of E applied to every monomial of d.
                std::vector<SparseVector> image_nf(M.size());
                for (Index i = 0; i < M.size(); ++i) {
                    std::vector<SparseVector::Entry> terms;
                    for (auto& [coef, mon] : superderivation_terms(ctx, e, M[i])) {
                        long idx = T.index_of(mon);
                        if (idx < 0)
                            throw std::logic_error("superderivation left the target multidegree");
                        for (const auto& [slot, a] : tc.normal_form[idx].entries)
                            terms.emplace_back(slot, coef * a);
                    }
                    image_nf[i] = SparseVector::from_terms(tc.dim(), std::move(terms));
                }
                for (Index i = 0; i < M.size(); ++i) {
                    if (c.standard_slot[i] >= 0)
                        continue;
                    SparseVector v = image_nf[i];
                    for (const auto& [slot, a] : c.normal_form[i].entries)
                        v.axpy(-a, image_nf[c.standard[slot]]);
                    ++vectors_checked;
                    if (!v.is_zero()) {
                        fail(r, Json{{"multidegree", to_json(d)}, {"operator", e.str()}, {"ideal_pivot", monomial_str(ctx, M[i])},
                                     {"residual_terms", v.nnz()}});
                        return;
                    }
                }
            }
        }
        r.params["closure_vectors"] = vectors_checked;
    });
}

CheckReport check_n_le_kj(int n, int k, int j)
{
    if (n > k + j)
        throw std::invalid_argument("n_le_kj requires n <= k + j");
    return timed("n_le_kj", Json{{"n", n}, {"k", k}, {"j", j}}, [&](CheckReport& r) {
        const Alphabet target{k, j, 0};
        const FrobeniusSeries& direct = frob(n, k, j);
        for (const Config& source : {Config{k + j, 0}, Config{0, k + j}}) {
            const CoeffTable& t = table(n, source.first, source.second);
            std::map<Partition, QUPoly, PartitionOrder> predicted;
            for (const auto& [key, c] : t.entries) {
                QUPoly s = super_schur(key.first, k, j);
                s *= c;
                auto [it, inserted] = predicted.try_emplace(key.second, QUPoly(target));
                it->second += s;
            }
            for (const auto& mu : partitions_of(n)) {
                QUPoly want = isotypic_slice(direct, mu);
                QUPoly got = predicted.count(mu) ? predicted.at(mu) : QUPoly(target);
                if (got != want) {
                    fail(r, Json{{"source", config_json(source)}, {"mu", to_json(mu)}, {"detail", poly_witness(want, got)}});
                    return;
                }
            }
        }
    });
}

CheckReport check_witnesses(int n)
{
    struct Item {
        int number;
        int min_n;
        Config source;
        Config other;
        Partition lambda;
        Partition mu;
    };
    std::vector<Item> items;
    const int choose_n = static_cast<int>(binomial(n, 2).get_si());
    const Partition sign = column(n);
    if (n >= 1) {
        items.push_back({1, 3, {0, 1}, {1, 0}, column(n - 1), sign});
        items.push_back({2, 3, {1, 0}, {0, 1}, Partition{choose_n}, sign});
        items.push_back({3, 4, {0, 2}, {2, 0}, column(n - 1), sign});
        items.push_back({4, 3, {2, 0}, {0, 2}, Partition{choose_n}, sign});
        if (n >= 4)
            items.push_back({5, 4, {1, 1}, {2, 0}, Partition{static_cast<int>(binomial(n - 2, 2).get_si()), 1, 1}, sign});
        items.push_back({6, 3, {1, 1}, {0, 2}, Partition{choose_n}, sign});
        if (n >= 5) {
            std::vector<int> l{2, 2}, m{2, 2};
            l.insert(l.end(), n - 5, 1);
            m.insert(m.end(), n - 4, 1);
            items.push_back({7, 5, {0, 2}, {1, 1}, Partition(l), Partition(m)});
        }
    }
    return timed("witnesses", Json{{"n", n}}, [&](CheckReport& r) {
        Json checked = Json::array();
        for (const auto& it : items) {
            if (n < it.min_n)
                continue;
            checked.push_back(it.number);
            const CoeffTable& t = table(n, it.source.first, it.source.second);
            Integer c = t.at(it.lambda, it.mu);
            bool in_source = in_Pkjn(it.lambda, it.source.first, it.source.second, n);
            bool in_other = in_Pkjn(it.lambda, it.other.first, it.other.second, n);
            if (c != 1 || !in_source || in_other) {
                fail(r, Json{{"item", it.number}, {"lambda", to_json(it.lambda)}, {"mu", to_json(it.mu)}, {"c", c.get_str()},
                             {"determined_by_source", in_source}, {"determined_by_other", in_other}});
                return;
            }
        }
        r.params["items"] = checked;
    });
}

CheckReport check_cauchy(int n, int max_degree)
{
    return timed("cauchy", Json{{"n", n}, {"degree", max_degree}}, [&](CheckReport& r) {
        for (int k = 0; k <= 2; ++k)
            for (int j = 0; j <= 2; ++j) {
                CauchyResult c = super_cauchy_check(k, j, n, max_degree);
                if (!c.pass) {
                    fail(r, Json{{"k", k}, {"j", j}, {"first_failing_degree", c.first_failing_degree}});
                    return;
                }
            }
    });
}

CheckReport check_sagan_swanson(int n)
{
    return timed("sagan_swanson", Json{{"n", n}}, [&](CheckReport& r) {
        for (int m = 0; m <= n; ++m) {
            QPoly s = sagan_swanson_sum(m);
            if (s != QPoly(1)) {
                fail(r, Json{{"size", m}, {"computed", s.str()}});
                return;
            }
        }
    });
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Config> default_configs(int n)
{
    std::vector<Config> c{{1, 0}, {0, 1}, {1, 1}, {0, 2}};
    if (n <= 3) {
        c.push_back({2, 0});
        c.push_back({2, 1});
    }
    return c;
}

std::vector<Config> explicit_or(const CheckParams& p, std::vector<Config> fallback)
{
    if (p.k || p.j)
        return {Config{p.k.value_or(0), p.j.value_or(0)}};
    return fallback;
}

std::vector<CheckSpec> build_registry()
{
    std::vector<CheckSpec> r;
    auto single = [](CheckReport (*f)(int)) {
        return [f](const CheckParams& p) { return std::vector<CheckReport>{f(p.n)}; };
    };
    r.push_back({"artin", "Hilbert series of R^(1,0) is [n]_q! and its dimension n!", single(check_artin)});
    r.push_back({"exterior", "Frobenius series of R^(0,1) is the sum of u^d s_(n-d,1^d)", single(check_exterior)});
    r.push_back({"hilb11", "Hilbert series of R^(1,1) equals the q-Stirling formula", single(check_hilb11)});
    r.push_back({"sign_coeffs", "sign-isotypic slice of R^(1,1): ring, closed form, hook expansion", single(check_sign_coeffs)});
    r.push_back({"haiman_dim", "dimension of R^(2,0) is (n+1)^(n-1)", single(check_haiman_dim)});
    r.push_back({"prop42", "parts-at-most-2 coefficients from R^(0,2), families as stated", single(check_prop42)});
    r.push_back({"prop42_corrected", "parts-at-most-2 coefficients with |mu| = n in family (v)", single(check_prop42_corrected)});
    r.push_back({"universality", "coefficient tables agree on shared support",
                 [](const CheckParams& p) { return std::vector<CheckReport>{check_universality(p.n, default_configs(p.n))}; }});
    r.push_back({"cancellation", "q_k = -u_j collapses R^(k,j) to R^(k-1,j-1)", [](const CheckParams& p) {
                     std::vector<CheckReport> out;
                     std::vector<Config> configs{{1, 1}};
                     if (p.n <= 3)
                         configs.push_back({2, 1});
                     for (const auto& [k, j] : explicit_or(p, configs))
                         out.push_back(check_cancellation(p.n, k, j, p.m.value_or(std::min(k, j) > 0 ? 1 : 0)));
                     return out;
                 }});
    r.push_back({"restriction", "q_k = 0 and u_j = 0 restrict to the smaller ring", [](const CheckParams& p) {
                     std::vector<Config> configs{{1, 1}, {0, 2}};
                     if (p.n <= 4)
                         configs.push_back({2, 0});
                     if (p.n <= 3)
                         configs.push_back({2, 1});
                     std::vector<CheckReport> out;
                     for (const auto& [k, j] : explicit_or(p, configs))
                         out.push_back(check_restriction(p.n, k, j));
                     return out;
                 }});
    r.push_back({"bound_closure", "c <= d on every entry; ideal closed under superderivations", [](const CheckParams& p) {
                     std::vector<CheckReport> out;
                     for (const auto& [k, j] : explicit_or(p, default_configs(p.n)))
                         out.push_back(check_bound_and_closure(p.n, k, j));
                     return out;
                 }});
    r.push_back({"n_le_kj", "for n <= k+j the pure cases determine the mixed case", [](const CheckParams& p) {
                     std::vector<Config> configs;
                     for (int k = 0; k <= p.n; ++k)
                         configs.push_back({k, p.n - k});
                     std::vector<CheckReport> out;
                     for (const auto& [k, j] : explicit_or(p, configs))
                         out.push_back(check_n_le_kj(p.n, k, j));
                     return out;
                 }});
    r.push_back({"witnesses", "non-determination witnesses for small n", single(check_witnesses)});
    r.push_back({"cauchy", "truncated super Cauchy identity, k, j <= 2, degree 6",
                 [](const CheckParams& p) { return std::vector<CheckReport>{check_cauchy(p.n)}; }});
    r.push_back({"sagan_swanson", "alternating q-Stirling sum equals 1", single(check_sagan_swanson)});
    return r;
}

}  // namespace

const std::vector<CheckSpec>& check_registry()
{
    static const std::vector<CheckSpec> registry = build_registry();
    return registry;
}

const CheckSpec* find_check(const std::string& id)
{
    for (const auto& c : check_registry())
        if (c.id == id)
            return &c;
    return nullptr;
}

Envelope Envelope::defaults()
{
    Envelope e;
    e.max_n = {{"artin", 6},        {"exterior", 6},     {"hilb11", 5},       {"sign_coeffs", 5},   {"haiman_dim", 4},
               {"prop42", 5},       {"prop42_corrected", 5}, {"universality", 5}, {"cancellation", 5}, {"restriction", 5},
               {"bound_closure", 5}, {"n_le_kj", 3},     {"witnesses", 5},    {"cauchy", 3},       {"sagan_swanson", 15}};
    return e;
}

Envelope Envelope::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open envelope file " + path);
    Json j;
    try {
        j = Json::parse(in);
    }
    catch (const Json::exception& e) {
        throw ParseError("envelope file " + path + ": " + e.what());
    }
    Envelope env;
    if (j.contains("ceiling"))
        env.ceiling = j.at("ceiling").get<size_t>();
    if (!j.contains("max_n") || !j.at("max_n").is_object())
        throw ParseError("envelope file " + path + ": missing max_n object");
    for (const auto& [id, v] : j.at("max_n").items()) {
        if (!find_check(id))
            throw ParseError("envelope file " + path + ": unknown check id " + id);
        env.max_n[id] = v.get<int>();
    }
    return env;
}

bool Envelope::admits(const std::string& id, int n) const
{
    auto it = max_n.find(id);
    return it == max_n.end() || n <= it->second;
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const CheckParams& params, const Envelope& envelope, int jobs)
{
    std::vector<const CheckSpec*> specs;
    for (const auto& id : ids) {
        const CheckSpec* s = find_check(id);
        if (!s)
            throw std::invalid_argument("unknown check id: " + id);
        if (!envelope.admits(id, params.n))
            throw OutsideEnvelope("check " + id + " at n=" + std::to_string(params.n) + " is outside the envelope (max n=" +
                                  std::to_string(envelope.max_n.at(id)) + ")");
        specs.push_back(s);
    }
    std::vector<std::vector<CheckReport>> results(specs.size());
    std::vector<std::exception_ptr> errors(specs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < specs.size(); i = next++) {
            try {
                results[i] = specs[i]->run(params);
            }
            catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(specs.size())));
    if (workers == 1) {
        worker();
    }
    else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<CheckReport> out;
    for (auto& v : results)
        for (auto& r : v)
            out.push_back(std::move(r));
    return out;
}

}  // namespace supercoinv

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "supercoinv/verify.hpp"

using namespace supercoinv;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void absorb(Outcome& o, const CheckReport& r)
{
    if (!r.pass && o.pass) {
        o.pass = false;
        o.detail = r.id + " " + r.params.dump() + " " + r.witness.dump();
        if (o.detail.size() > 600)
            o.detail = o.detail.substr(0, 600) + "...";
    }
}

void absorb(Outcome& o, const testing::PropertyResult& r, const std::string& name)
{
    if (!r.pass && o.pass) {
        o.pass = false;
        o.detail = name + ": " + r.detail;
    }
}

struct Criterion {
    std::string id;
    std::string what;
    std::function<Outcome()> body;
    bool counted = true;
};

const std::vector<Config> kAllConfigs{{1, 0}, {0, 1}, {1, 1}, {0, 2}, {2, 0}, {2, 1}};

int max_n_for(Config c)
{
    if (c == Config{1, 0} || c == Config{0, 1})
        return 6;
    if (c == Config{2, 0})
        return 4;
    if (c == Config{2, 1})
        return 3;
    return 5;
}

}  // namespace

int main()
{
    std::vector<Criterion> criteria{
        {"AC1", "Artin Hilbert series and dimension, n <= 6",
         [] {
             Outcome o;
             for (int n = 1; n <= 6; ++n)
                 absorb(o, check_artin(n));
             return o;
         }},
        {"AC2", "exterior Frobenius series, n <= 6",
         [] {
             Outcome o;
             for (int n = 1; n <= 6; ++n)
                 absorb(o, check_exterior(n));
             return o;
         }},
        {"AC3", "(1,1) Hilbert series and sign slice, n <= 5",
         [] {
             Outcome o;
             for (int n = 1; n <= 5; ++n) {
                 absorb(o, check_hilb11(n));
                 absorb(o, check_sign_coeffs(n));
             }
             return o;
         }},
        {"AC4", "dim of the (2,0) quotient is (n+1)^(n-1), n <= 4",
         [] {
             Outcome o;
             for (int n = 1; n <= 4; ++n)
                 absorb(o, check_haiman_dim(n));
             return o;
         }},
        {"AC5", "(0,2) table matches the five parts-at-most-two families as stated, n <= 5",
         [] {
             Outcome o;
             for (int n = 1; n <= 5; ++n)
                 absorb(o, check_prop42(n));
             return o;
         }},
        {"AC5*", "(0,2) table matches the families with family (v) exponent n-2l-mu1-mu2, n <= 5 (informational)",
         [] {
             Outcome o;
             for (int n = 1; n <= 5; ++n)
                 absorb(o, check_prop42_corrected(n));
             return o;
         },
         false},
        {"AC6", "(1,1) sign column equals g on hooks and 0 elsewhere, n <= 5",
         [] {
             Outcome o;
             for (int n = 1; n <= 5; ++n)
                 absorb(o, check_sign_coeffs(n));
             return o;
         }},
        {"AC7", "tables from different (k,j) agree on shared support",
         [] {
             Outcome o;
             for (int n = 1; n <= 5; ++n)
                 absorb(o, check_universality(n, {{1, 0}, {0, 1}, {1, 1}, {0, 2}}));
             for (int n = 1; n <= 3; ++n)
                 absorb(o, check_universality(n, kAllConfigs));
             return o;
         }},
        {"AC8", "q = -u cancellation and restriction consistency",
         [] {
             Outcome o;
             for (int n = 1; n <= 5; ++n)
                 absorb(o, check_cancellation(n, 1, 1, 1));
             absorb(o, check_cancellation(3, 2, 1, 1));
             for (Config c : kAllConfigs)
                 for (int n = 1; n <= max_n_for(c); ++n)
                     absorb(o, check_restriction(n, c.first, c.second));
             return o;
         }},
        {"AC9", "c <= d bound and superderivation closure for every computed configuration",
         [] {
             Outcome o;
             for (Config c : kAllConfigs)
                 for (int n = 1; n <= max_n_for(c); ++n)
                     absorb(o, check_bound_and_closure(n, c.first, c.second));
             return o;
         }},
        {"AC10", "super Cauchy identity n <= 3 degree <= 6, Sagan-Swanson sum n <= 15",
         [] {
             Outcome o;
             for (int n = 1; n <= 3; ++n)
                 absorb(o, check_cauchy(n, 6));
             for (int n = 1; n <= 15; ++n)
                 absorb(o, check_sagan_swanson(n));
             return o;
         }},
        {"AC11", "property suites (seed " + std::to_string(testing::kPropertySeed) + ")",
         [] {
             Outcome o;
             absorb(o, testing::schur_tableau_vs_determinant(6, 4), "schur tableau vs determinant");
             absorb(o, testing::super_schur_identities(6, 2), "super Schur identities");
             absorb(o, testing::character_orthogonality(7), "character orthogonality");
             absorb(o, testing::ring_action_properties(testing::kPropertySeed, 10), "ring action");
             return o;
         }},
        {"ALL3", "verify all --n 3 passes",
         [] {
             Outcome o;
             CheckParams p;
             p.n = 3;
             std::vector<std::string> ids;
             for (const auto& c : check_registry())
                 ids.push_back(c.id);
             for (const auto& r : run_checks(ids, p, Envelope::defaults()))
                 absorb(o, r);
             return o;
         }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        }
        catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << c.id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << c.what << "  (" << timing << ")\n";
        if (!o.pass)
            std::cout << "    " << o.detail << '\n';
        std::cout.flush();
        if (!o.pass && c.counted)
            ++failures;
    }
    std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criterion failed\n" : "acceptance: all criteria passed\n");
    return failures ? 1 : 0;
}

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supercoinv/coinvariant.hpp"
#include "supercoinv/serialize.hpp"

namespace supercoinv {

struct CheckReport {
    std::string id;
    Json params = Json::object();
    bool pass = true;
    Json witness;  // null on pass
    double seconds = 0;
};

Json to_json(const CheckReport& r);
CheckReport check_report_from_json(const Json& j);

using Config = std::pair<int, int>;  // (k, j)

CheckReport check_universality(int n, const std::vector<Config>& configs);
CheckReport check_cancellation(int n, int k, int j, int m);
/// hilbert/Frobenius of R^(k-1,j) and R^(k,j-1) against q_k = 0 and u_j = 0.
CheckReport check_restriction(int n, int k, int j);
/// Families (iv) and (v) exactly as stated; (iii) as derived in the proof.
CheckReport check_prop42(int n);
/// Same, with the 1-exponent of family (v)'s mu chosen so that |mu| = n.
CheckReport check_prop42_corrected(int n);
CheckReport check_sign_coeffs(int n);
CheckReport check_hilb11(int n);
CheckReport check_bound_and_closure(int n, int k, int j);
CheckReport check_n_le_kj(int n, int k, int j);
/// The small-n non-determination witnesses (seven items).
CheckReport check_witnesses(int n);
CheckReport check_artin(int n);
CheckReport check_exterior(int n);
CheckReport check_haiman_dim(int n);
/// Truncated super Cauchy identity for every k, j <= 2 at this n, degree 6.
CheckReport check_cauchy(int n, int max_degree = 6);
/// The alternating q-Stirling sum equals 1 for every size up to n.
CheckReport check_sagan_swanson(int n);

/// c_{lambda mu} number g_{i,d,n}: partitions of i inside d rows of width
/// n-2-d. A zero-row box holds only the empty partition; a box of negative
/// width with rows holds nothing.
Integer g_coefficient(int i, int d, int n);

/// Members of the parts-at-most-2 families for one n, as (lambda, mu).
std::vector<std::pair<Partition, Partition>> prop42_families(int n, bool corrected);

struct CheckParams {
    int n = 3;
    std::optional<int> k;
    std::optional<int> j;
    std::optional<int> m;
};

struct CheckSpec {
    std::string id;
    std::string description;
    std::function<std::vector<CheckReport>(const CheckParams&)> run;
};

/// Stable registry, in the order `verify all` runs them.
const std::vector<CheckSpec>& check_registry();
const CheckSpec* find_check(const std::string& id);

/// Per-check maximum n, plus the column ceiling.
struct Envelope {
    size_t ceiling = 50'000;
    std::map<std::string, int> max_n;

    static Envelope defaults();
    /// Throws ParseError on malformed files.
    static Envelope load(const std::string& path);
    bool admits(const std::string& id, int n) const;
};

class OutsideEnvelope : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs the named checks (each checked against the envelope); reports come
/// back in registry order regardless of `jobs`.
std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const CheckParams& params, const Envelope& envelope,
                                    int jobs = 1);

}  // namespace supercoinv

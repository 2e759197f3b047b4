#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercoinv/exactla.hpp"
#include "supercoinv/snchar.hpp"
#include "supercoinv/superring.hpp"
#include "supercoinv/superschur.hpp"

namespace supercoinv {

struct EngineOptions {
    /// Largest monomial space (columns) allowed for one multidegree.
    size_t ceiling = 50'000;
    /// Worker threads per total-degree shell.
    int jobs = 1;
    /// Directory for the on-disk ideal cache; empty disables it.
    std::string cache_dir;
};

/// Reads SUPERCOINV_CACHE, falling back to `fallback`.
std::string resolve_cache_dir(const std::string& fallback);

class ResourceExceeded : public std::runtime_error {
public:
    ResourceExceeded(const Multidegree& d, size_t rows, size_t cols, size_t ceiling);
    Multidegree degree;
    size_t rows;
    size_t cols;
};

/// One multidegree of R_n^(k,j). The standard monomials index a basis of
/// the quotient; every monomial has a normal form in that basis, and the
/// ideal component is spanned by m - NF(m) over the non-standard m.
struct Component {
    Multidegree degree;
    std::shared_ptr<const MonomialBasis> monomials;
    std::vector<Index> standard;        // ascending monomial indices
    std::vector<int> standard_slot;     // monomial index -> slot, or -1
    std::vector<SparseVector> normal_form;  // per monomial, dim = standard.size()

    size_t dim() const { return standard.size(); }
    /// Ideal component as a reduced basis in monomial coordinates.
    SubspaceBasis ideal() const;
    /// NF of an arbitrary vector in monomial coordinates.
    SparseVector normal_form_of(const SparseVector& v) const;
};

/// Components and invariant bases of one ring, keyed by multidegree.
class IdealComponentCache {
public:
    const Component* find(const Multidegree& d) const;
    void commit(std::shared_ptr<const Component> c);
    size_t size() const { return components_.size(); }
    std::vector<Multidegree> degrees() const;

private:
    std::map<Multidegree, std::shared_ptr<const Component>> components_;
};

struct FrobeniusSeries {
    int n = 0;
    int k = 0;
    int j = 0;
    std::map<Multidegree, SchurMultVector> components;  // nonzero only

    friend bool operator==(const FrobeniusSeries& a, const FrobeniusSeries& b)
    {
        return a.n == b.n && a.k == b.k && a.j == b.j && a.components == b.components;
    }
};

struct PartitionPairOrder {
    bool operator()(const std::pair<Partition, Partition>& a, const std::pair<Partition, Partition>& b) const;
};

struct CoeffTable {
    int n = 0;
    int k = 0;
    int j = 0;
    std::map<std::pair<Partition, Partition>, Integer, PartitionPairOrder> entries;  // nonzero only

    /// c_{lambda mu} is determined by this (k, j) exactly when lambda in P(k,j,n).
    bool determines(const Partition& lambda) const { return in_Pkjn(lambda, k, j, n); }
    Integer at(const Partition& lambda, const Partition& mu) const;

    friend bool operator==(const CoeffTable& a, const CoeffTable& b)
    {
        return a.n == b.n && a.k == b.k && a.j == b.j && a.entries == b.entries;
    }
};

/// Builds R_n^(k,j) shell by shell in total degree.
class CoinvariantEngine {
public:
    CoinvariantEngine(int n, int k, int j, EngineOptions options = {});

    const Context& context() const { return ctx_; }
    const EngineOptions& options() const { return options_; }

    /// Component of multidegree d; computes every shell up to |d|.
    const Component& component(const Multidegree& d);
    /// Computes shells until one is entirely zero; returns the last nonzero
    /// total degree.
    int run_to_termination();
    std::vector<Multidegree> computed_degrees();

    SubspaceBasis ideal_component(const Multidegree& d);
    SubspaceBasis invariant_component(const Multidegree& d);
    /// Trace of a class representative on the quotient, from normal forms.
    Rational quotient_character(const Multidegree& d, const CycleType& rho);
    /// Same trace as trace(ambient) - restricted_trace(ideal component).
    Rational quotient_character_via_ideal(const Multidegree& d, const CycleType& rho);

    FrobeniusSeries frobenius_series();
    QUPoly hilbert_series();

private:
    void compute_shell(int total);
    std::shared_ptr<const Component> compute_component(const Multidegree& d) const;
    std::shared_ptr<const Component> load_cached(const Multidegree& d) const;
    void store_cached(const Component& c) const;
    std::string cache_path(const Multidegree& d) const;

    Context ctx_;
    EngineOptions options_;
    std::mutex mutex_;
    IdealComponentCache cache_;
    int shells_done_ = -1;
    int terminated_at_ = -1;  // first all-zero shell
};

/// Signed count of monomials fixed up to sign by sigma.
Rational ambient_trace(const MonomialBasis& basis, const Permutation& sigma);

CoeffTable coeff_table(const FrobeniusSeries& f);
/// sum_d sum_mu mult * chi^mu(id) * q^r u^s
QUPoly hilbert_from_frobenius(const FrobeniusSeries& f);
/// Multiplicity polynomial of s_mu(z) in the series.
QUPoly isotypic_slice(const FrobeniusSeries& f, const Partition& mu);
QUPoly monomial_of(const Alphabet& a, const Multidegree& d);

/// Process-wide engine per (n, k, j), created with `default_engine_options()`.
CoinvariantEngine& shared_engine(int n, int k, int j);
EngineOptions& default_engine_options();
/// Drops every shared engine (tests use it to change options).
void reset_shared_engines();

}  // namespace supercoinv

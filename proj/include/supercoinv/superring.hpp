#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "supercoinv/exactla.hpp"
#include "supercoinv/rational.hpp"
#include "supercoinv/snchar.hpp"

namespace supercoinv {

/// Ring C[x^(1..k), theta^(1..j)] on n positions. Variable id
/// `set * n + position`; sets 0..k-1 are bosonic and k..k+j-1 fermionic.
struct Context {
    int n = 0;
    int k = 0;
    int j = 0;

    int sets() const { return k + j; }
    int var_count() const { return (k + j) * n; }
    int var(int set, int position) const { return set * n + position; }
    int set_of(int var) const { return var / n; }
    int position_of(int var) const { return var % n; }
    bool is_fermionic(int var) const { return var >= k * n; }
    std::string var_name(int var) const;

    friend bool operator==(const Context& a, const Context& b) { return a.n == b.n && a.k == b.k && a.j == b.j; }
    friend bool operator!=(const Context& a, const Context& b) { return !(a == b); }
};

class ContextMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Multidegree {
    std::vector<int> r;
    std::vector<int> s;

    int total() const;
    bool is_zero() const { return total() == 0; }
    /// Degree of variable set `set` in the combined (r, s) indexing.
    int at(int set) const;
    Multidegree shifted(int set, int by) const;
    bool valid(int n) const;
    std::string str() const;

    friend bool operator==(const Multidegree& a, const Multidegree& b) { return a.r == b.r && a.s == b.s; }
    friend bool operator!=(const Multidegree& a, const Multidegree& b) { return !(a == b); }
    friend bool operator<(const Multidegree& a, const Multidegree& b)
    {
        return a.r != b.r ? a.r < b.r : a.s < b.s;
    }
};

/// Canonical monomial: one exponent byte per variable id; fermionic bytes
/// are 0 or 1 and the fermionic factors are implicitly ordered by variable id.
struct SuperMonomial {
    std::vector<uint8_t> e;

    friend bool operator==(const SuperMonomial& a, const SuperMonomial& b) { return a.e == b.e; }
    friend bool operator!=(const SuperMonomial& a, const SuperMonomial& b) { return a.e != b.e; }
    friend bool operator<(const SuperMonomial& a, const SuperMonomial& b) { return a.e < b.e; }
};

struct SuperMonomialHash {
    size_t operator()(const SuperMonomial& m) const;
};

SuperMonomial one_monomial(const Context& ctx);
Multidegree multidegree_of(const Context& ctx, const SuperMonomial& m);
std::string monomial_str(const Context& ctx, const SuperMonomial& m);

/// Cache byte encoding: n*k bosonic exponent bytes in variable-id order,
/// then the n*j fermionic occupancy bits packed least significant bit first.
std::vector<uint8_t> encode_monomial(const Context& ctx, const SuperMonomial& m);
SuperMonomial decode_monomial(const Context& ctx, const std::vector<uint8_t>& bytes);

struct SignedMonomial {
    int sign = 1;  // 0 when the product vanishes
    SuperMonomial m;
};

/// a * b in canonical form.
SignedMonomial multiply_monomials(const Context& ctx, const SuperMonomial& a, const SuperMonomial& b);
/// sigma applied to m: x_p -> x_sigma(p) in every set.
SignedMonomial act_on_monomial(const Context& ctx, const Permutation& sigma, const SuperMonomial& m);

class SuperPolynomial {
public:
    explicit SuperPolynomial(Context ctx) : ctx_(ctx) {}
    static SuperPolynomial monomial(Context ctx, SuperMonomial m, Rational c = 1);
    static SuperPolynomial variable(Context ctx, int var);

    const Context& context() const { return ctx_; }
    const std::map<SuperMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const SuperMonomial& m) const;
    void add_term(const SuperMonomial& m, const Rational& c);
    /// Component of the given multidegree.
    SuperPolynomial homogeneous_part(const Multidegree& d) const;
    std::string str() const;

    SuperPolynomial& operator+=(const SuperPolynomial& o);
    SuperPolynomial& operator-=(const SuperPolynomial& o);
    SuperPolynomial& operator*=(const Rational& c);
    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
    friend SuperPolynomial operator*(SuperPolynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b)
    {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SuperPolynomial& a, const SuperPolynomial& b) { return !(a == b); }

private:
    void check_same(const SuperPolynomial& o) const;
    Context ctx_;
    std::map<SuperMonomial, Rational> terms_;
};

SuperPolynomial multiply(const SuperPolynomial& a, const SuperPolynomial& b);
SuperPolynomial act_permutation(const Permutation& sigma, const SuperPolynomial& p);
/// (1/n!) sum over all of S_n.
SuperPolynomial reynolds(const SuperPolynomial& p);

/// Monomials of one multidegree, in descending lexicographic order of their
/// exponent bytes.
class MonomialBasis {
public:
    MonomialBasis(Context ctx, Multidegree d);

    const Context& context() const { return ctx_; }
    const Multidegree& degree() const { return d_; }
    size_t size() const { return monomials_.size(); }
    const SuperMonomial& operator[](Index i) const { return monomials_[i]; }
    const std::vector<SuperMonomial>& monomials() const { return monomials_; }
    /// Index of m, or -1 if m does not have this multidegree.
    long index_of(const SuperMonomial& m) const;

    SparseVector to_vector(const SuperPolynomial& p) const;
    SuperPolynomial to_polynomial(const SparseVector& v) const;

private:
    Context ctx_;
    Multidegree d_;
    std::vector<SuperMonomial> monomials_;
    std::unordered_map<SuperMonomial, Index, SuperMonomialHash> index_;
};

/// prod_a multichoose(n, r_a) * prod_c binomial(n, s_c)
Integer monomial_space_dim(const Context& ctx, const Multidegree& d);
/// All multidegrees of the given total degree with s_c <= n, in
/// descending lexicographic order of (r, s).
std::vector<Multidegree> multidegrees_of_total(const Context& ctx, int total);

/// S_n-invariants of multidegree d (Reynolds images of the monomials, then
/// column_space), in MonomialBasis(ctx, d) coordinates.
SubspaceBasis invariant_basis(const Context& ctx, const Multidegree& d);

/// One of E_{a,b}, E_{a,d'}, E_{c',b}, E_{c',d'}: multiplies by a variable
/// of set `to` after differentiating in set `from`. Indices are 0-based
/// within the bosonic or fermionic family.
struct Superderivation {
    enum class Kind { BosonBoson, BosonFermion, FermionBoson, FermionFermion };
    Kind kind = Kind::BosonBoson;
    int to = 0;
    int from = 0;

    int to_set(const Context& ctx) const;
    int from_set(const Context& ctx) const;
    std::string str() const;
};

std::vector<Superderivation> all_superderivations(const Context& ctx);
/// Throws std::out_of_range for indices outside the context.
SuperPolynomial apply_superderivation(const Superderivation& e, const SuperPolynomial& p);
/// Image of a single monomial as (coefficient, monomial) terms.
std::vector<std::pair<Rational, SuperMonomial>> superderivation_terms(const Context& ctx, const Superderivation& e,
                                                                    const SuperMonomial& m);

}  // namespace supercoinv

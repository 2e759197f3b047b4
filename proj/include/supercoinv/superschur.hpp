#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercoinv/qcombinat.hpp"

namespace supercoinv {

/// Alphabet layout for QUPoly: k bosonic letters q_1..q_k, then j fermionic
/// letters u_1..u_j, then `aux` auxiliary letters z_1..z_aux. Variable ids
/// follow that order.
struct Alphabet {
    int k = 0;
    int j = 0;
    int aux = 0;

    int size() const { return k + j + aux; }
    int q(int a) const { return a; }          // 0-based
    int u(int c) const { return k + c; }      // 0-based
    int z(int i) const { return k + j + i; }  // 0-based
    std::string name(int var) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.k == b.k && a.j == b.j && a.aux == b.aux; }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }
};

using Exponents = std::vector<int>;

/// Multivariate polynomial with integer coefficients over an Alphabet.
class QUPoly {
public:
    QUPoly() = default;
    explicit QUPoly(Alphabet a) : alpha_(a) {}
    static QUPoly constant(Alphabet a, const Integer& c);
    static QUPoly variable(Alphabet a, int var);
    static QUPoly monomial(Alphabet a, Exponents e, const Integer& c = 1);

    const Alphabet& alphabet() const { return alpha_; }
    const std::map<Exponents, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Integer coeff(const Exponents& e) const;
    int total_degree() const;
    /// Degree restricted to the given variable ids.
    static int partial_degree(const Exponents& e, int first, int count);
    QUPoly homogeneous_part(int degree) const;
    void add_term(const Exponents& e, const Integer& c);
    /// Drops every term whose total degree in the auxiliary letters exceeds
    /// `max_degree`.
    QUPoly truncate_aux_degree(int max_degree) const;
    /// Swap two variables.
    QUPoly swapped(int a, int b) const;
    std::string str() const;

    QUPoly& operator+=(const QUPoly& o);
    QUPoly& operator-=(const QUPoly& o);
    QUPoly& operator*=(const Integer& c);
    friend QUPoly operator+(QUPoly a, const QUPoly& b) { return a += b; }
    friend QUPoly operator-(QUPoly a, const QUPoly& b) { return a -= b; }
    friend QUPoly operator*(const QUPoly& a, const QUPoly& b);
    friend bool operator==(const QUPoly& a, const QUPoly& b) { return a.alpha_ == b.alpha_ && a.terms_ == b.terms_; }
    friend bool operator!=(const QUPoly& a, const QUPoly& b) { return !(a == b); }

private:
    void check_same(const QUPoly& o) const;
    Alphabet alpha_;
    std::map<Exponents, Integer> terms_;
};

/// Re-expresses p over a larger or smaller alphabet, keeping q_1..q_min(k),
/// u_1..u_min(j) and z_1..z_min(aux). Throws std::invalid_argument if a
/// dropped letter occurs in p.
QUPoly change_alphabet(const QUPoly& p, Alphabet target);

/// Schur polynomial over the listed variables (semistandard tableau sum).
QUPoly schur_poly(const Partition& lambda, const std::vector<int>& vars, Alphabet shape);
/// Same polynomial by the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
QUPoly schur_poly_jacobi_trudi(const Partition& lambda, const std::vector<int>& vars, Alphabet shape);
/// Complete homogeneous symmetric polynomial.
QUPoly complete_homogeneous(int degree, const std::vector<int>& vars, Alphabet shape);
/// Skew Schur polynomial; throws std::invalid_argument unless nu ⊆ lambda.
QUPoly skew_schur_poly(const Partition& lambda, const Partition& nu, const std::vector<int>& vars, Alphabet shape);

/// s_lambda(q/u) = sum_{nu ⊆ lambda} s_nu(q) s_{lambda'/nu'}(u) over (k, j).
/// Memoized and thread-safe.
QUPoly super_schur(const Partition& lambda, int k, int j);

struct Substitution {
    enum class Kind { Zero, Var, NegVar };
    Kind kind = Kind::Zero;
    int target = -1;
};

/// Simultaneous substitution; unassigned variables are left alone. The
/// alphabet is unchanged.
QUPoly specialize(const QUPoly& p, const std::map<int, Substitution>& assignment);

class NotExpressible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SuperSchurExpansion {
    int k = 0;
    int j = 0;
    int n = 0;
    int degree_bound = 0;
    std::map<Partition, Integer, PartitionOrder> coeffs;  // nonzero only
};

/// True when p is invariant under every adjacent transposition of q letters
/// and of u letters.
bool is_supersymmetric_candidate(const QUPoly& p);

/// Coefficients of p in the super Schur basis over P(k,j,n), solved exactly
/// one total degree at a time. Throws NotExpressible if some degree has no
/// solution.
SuperSchurExpansion expand_super_schur(const QUPoly& p, int k, int j, int n, int degree_bound);
/// sum_lambda c_lambda s_lambda(q/u) over the expansion's alphabet.
QUPoly evaluate_expansion(const SuperSchurExpansion& e);

struct CauchyResult {
    bool pass = true;
    int first_failing_degree = -1;
};

/// Compares prod_i prod_a (1 - q_a z_i)^{-1} prod_c (1 + u_c z_i) with
/// sum_{lambda in P(k,j,n)} s_lambda(q/u) s_lambda(z_1..z_n) up to z-degree D.
CauchyResult super_cauchy_check(int k, int j, int n, int max_degree);

}  // namespace supercoinv

#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "supercoinv/qcombinat.hpp"
#include "supercoinv/rational.hpp"

namespace supercoinv {

/// One-line permutation on {0..n-1}: perm[p] is the image of p.
using Permutation = std::vector<int>;

/// Conjugacy class of S_n, indexed by the cycle type rho ⊢ n.
struct CycleType {
    Partition rho;

    int n() const { return rho.size(); }
    /// z_rho = prod_i i^{m_i} m_i!
    Integer z() const;
    Integer class_size() const;
    /// Lexicographically smallest permutation of this type: cycles of
    /// ascending length on consecutive blocks, each p -> p+1 -> ... -> start.
    Permutation representative() const;
};

CycleType cycle_type_of(const Permutation& perm);
std::vector<CycleType> conjugacy_classes(int n);
/// All permutations of n points in lexicographic order.
std::vector<Permutation> all_permutations(int n);
int permutation_sign(const Permutation& perm);

using SchurMultVector = std::map<Partition, Integer, PartitionOrder>;

/// Class function on S_n.
struct ClassFunction {
    int n = 0;
    std::map<Partition, Rational, PartitionOrder> values;
};

class NonIntegral : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// chi^lambda(rho) by the Murnaghan-Nakayama rule (memoized, thread-safe).
Integer irreducible_character(const Partition& lambda, const CycleType& rho);

/// Multiplicities <f, chi^mu> for every mu ⊢ n; zero multiplicities are
/// omitted. Throws NonIntegral if some multiplicity is not an integer.
SchurMultVector frobenius_decompose(const ClassFunction& f);

/// d_{lambda mu}: multiplicity of chi^mu in the restriction of the GL(n)
/// irreducible U^lambda_n to the permutation matrices.
SchurMultVector gl_restriction_mult(const Partition& lambda, int n);

}  // namespace supercoinv

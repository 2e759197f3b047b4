#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "supercoinv/rational.hpp"

namespace supercoinv {

using Index = uint32_t;

/// Sparse vector: entries sorted by index, no stored zeros.
struct SparseVector {
    using Entry = std::pair<Index, Rational>;

    size_t dim = 0;
    std::vector<Entry> entries;

    SparseVector() = default;
    explicit SparseVector(size_t d) : dim(d) {}
    /// Accepts unsorted entries with repeats; sums and drops zeros.
    static SparseVector from_terms(size_t dim, std::vector<Entry> terms);
    static SparseVector unit(size_t dim, Index i);

    bool is_zero() const { return entries.empty(); }
    size_t nnz() const { return entries.size(); }
    Rational at(Index i) const;
    void scale(const Rational& f);
    /// *this += f * other
    void axpy(const Rational& f, const SparseVector& other);

    friend bool operator==(const SparseVector& a, const SparseVector& b)
    {
        return a.dim == b.dim && a.entries == b.entries;
    }
};

class SparseMatrix {
public:
    SparseMatrix(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    void set(Index r, Index c, const Rational& v);
    Rational at(Index r, Index c) const;
    const SparseVector& column(Index c) const { return columns_.at(c); }
    void set_column(Index c, SparseVector v);
    SparseMatrix transpose() const;
    size_t nnz() const;

private:
    size_t rows_;
    size_t cols_;
    std::vector<SparseVector> columns_;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInvariant : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Basis of a subspace of Q^dim in reduced form: vector i equals 1 at its
/// recorded pivot coordinate, and no other basis vector is nonzero there.
/// Pivots are strictly increasing. The pivot need not be the leading
/// coordinate, because pivots are chosen for sparsity.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(size_t ambient_dim);
    /// Takes vectors already in reduced form; validates the invariant.
    SubspaceBasis(size_t ambient_dim, std::vector<Index> pivots, std::vector<SparseVector> vectors);

    size_t ambient_dim() const { return ambient_dim_; }
    size_t rank() const { return vectors_.size(); }
    const std::vector<SparseVector>& vectors() const { return vectors_; }
    const std::vector<Index>& pivots() const { return pivots_; }
    /// Slot of the basis vector pivoting at coordinate c, or -1.
    int pivot_slot(Index c) const { return c < slot_.size() ? slot_[c] : -1; }
    bool is_pivot(Index c) const { return pivot_slot(c) >= 0; }

    /// v minus its projection along pivots; zero iff v lies in the span.
    SparseVector residual(const SparseVector& v) const;

private:
    size_t ambient_dim_ = 0;
    std::vector<Index> pivots_;
    std::vector<SparseVector> vectors_;
    std::vector<int> slot_;
};

/// Incremental exact elimination. Each inserted vector is reduced against
/// the current basis; a nonzero remainder becomes a new basis vector whose
/// pivot is the coordinate of fewest occurrences among existing basis
/// vectors (lowest index on ties), and that coordinate is then cleared from
/// every other basis vector so the basis stays fully reduced.
class EchelonBuilder {
public:
    /// Pivots are only taken at coordinates < pivot_limit (default: all).
    explicit EchelonBuilder(size_t dim, size_t pivot_limit = SIZE_MAX);

    size_t dim() const { return dim_; }
    size_t rank() const { return basis_.size(); }
    /// Returns true iff the vector increased the rank. A remainder with no
    /// admissible pivot coordinate is reported through `blocked()`.
    bool insert(const SparseVector& v);
    bool blocked() const { return blocked_; }
    SparseVector reduce(const SparseVector& v);
    SubspaceBasis finish() &&;

private:
    void scatter_reduce(const SparseVector& v);
    SparseVector gather();

    size_t dim_;
    size_t pivot_limit_;
    bool blocked_ = false;
    std::vector<SparseVector> basis_;
    std::vector<Index> basis_pivot_;
    std::vector<int> slot_;
    std::vector<std::vector<uint32_t>> col_members_;
    std::vector<Rational> work_;
    std::vector<char> touched_flag_;
    std::vector<Index> touched_;
};

SubspaceBasis column_space(const SparseMatrix& m);
SubspaceBasis span_of(size_t dim, const std::vector<SparseVector>& vectors);
size_t rank(const SparseMatrix& m);
/// Throws DimensionMismatch when v.dim differs from the ambient dimension.
bool contains(const SubspaceBasis& b, const SparseVector& v);

/// Image of the ambient coordinate vector e_c under a linear map.
using ColumnAction = std::function<SparseVector(Index)>;

/// Trace of the map restricted to span(b). Throws NotInvariant if some image
/// leaves the span.
Rational restricted_trace(const SubspaceBasis& b, const ColumnAction& action);

struct SolveResult {
    enum class Status { Unique, Inconsistent, Underdetermined };
    Status status = Status::Inconsistent;
    std::vector<Rational> x;
};

/// Solves m x = rhs exactly.
SolveResult solve(const SparseMatrix& m, const SparseVector& rhs);

/// Rank modulo a prime after clearing denominators column by column; a
/// lower bound for the rational rank (equality unless p is unlucky).
size_t rank_mod_p(const SparseMatrix& m, uint64_t p);

/// Dense fraction-free (Bareiss) rank. Independent of the sparse path.
size_t bareiss_rank(const SparseMatrix& m);

}  // namespace supercoinv

#include "supercoinv/exactla.hpp"

#include <algorithm>
#include <string>

namespace supercoinv {

SparseVector SparseVector::from_terms(size_t dim, std::vector<Entry> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v(dim);
    for (auto& [i, val] : terms) {
        if (i >= dim)
            throw DimensionMismatch("SparseVector: index " + std::to_string(i) + " out of range");
        if (!v.entries.empty() && v.entries.back().first == i) {
            v.entries.back().second += val;
            if (v.entries.back().second.is_zero())
                v.entries.pop_back();
        }
        else if (!val.is_zero()) {
            v.entries.emplace_back(i, std::move(val));
        }
    }
    return v;
}

SparseVector SparseVector::unit(size_t dim, Index i)
{
    SparseVector v(dim);
    v.entries.emplace_back(i, Rational(1));
    return v;
}

Rational SparseVector::at(Index i) const
{
    auto it = std::lower_bound(entries.begin(), entries.end(), i, [](const Entry& e, Index k) { return e.first < k; });
    return (it != entries.end() && it->first == i) ? it->second : Rational(0);
}

void SparseVector::scale(const Rational& f)
{
    if (f.is_zero()) {
        entries.clear();
        return;
    }
    for (auto& e : entries)
        e.second *= f;
}

void SparseVector::axpy(const Rational& f, const SparseVector& other)
{
    if (f.is_zero() || other.entries.empty())
        return;
    std::vector<Entry> out;
    out.reserve(entries.size() + other.entries.size());
    size_t a = 0, b = 0;
    while (a < entries.size() || b < other.entries.size()) {
        if (b == other.entries.size() || (a < entries.size() && entries[a].first < other.entries[b].first)) {
            out.push_back(std::move(entries[a++]));
        }
        else if (a == entries.size() || other.entries[b].first < entries[a].first) {
            out.emplace_back(other.entries[b].first, f * other.entries[b].second);
            ++b;
        }
        else {
            Rational s = std::move(entries[a].second);
            s += f * other.entries[b].second;
            if (!s.is_zero())
                out.emplace_back(entries[a].first, std::move(s));
            ++a;
            ++b;
        }
    }
    entries = std::move(out);
}

// ---------------------------------------------------------------------------

SparseMatrix::SparseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), columns_(cols, SparseVector(rows)) {}

void SparseMatrix::set(Index r, Index c, const Rational& v)
{
    if (r >= rows_ || c >= cols_)
        throw DimensionMismatch("SparseMatrix::set out of range");
    auto& col = columns_[c].entries;
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const SparseVector::Entry& e, Index k) { return e.first < k; });
    if (it != col.end() && it->first == r) {
        if (v.is_zero())
            col.erase(it);
        else
            it->second = v;
    }
    else if (!v.is_zero()) {
        col.insert(it, {r, v});
    }
}

Rational SparseMatrix::at(Index r, Index c) const { return columns_.at(c).at(r); }

void SparseMatrix::set_column(Index c, SparseVector v)
{
    if (c >= cols_ || v.dim != rows_)
        throw DimensionMismatch("SparseMatrix::set_column shape mismatch");
    columns_[c] = std::move(v);
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(cols_, rows_);
    for (Index c = 0; c < cols_; ++c)
        for (const auto& [r, v] : columns_[c].entries)
            t.columns_[r].entries.emplace_back(c, v);
    return t;
}

size_t SparseMatrix::nnz() const
{
    size_t n = 0;
    for (const auto& c : columns_)
        n += c.nnz();
    return n;
}

// ---------------------------------------------------------------------------

SubspaceBasis::SubspaceBasis(size_t ambient_dim) : ambient_dim_(ambient_dim) {}

SubspaceBasis::SubspaceBasis(size_t ambient_dim, std::vector<Index> pivots, std::vector<SparseVector> vectors)
    : ambient_dim_(ambient_dim), pivots_(std::move(pivots)), vectors_(std::move(vectors)), slot_(ambient_dim, -1)
{
    if (pivots_.size() != vectors_.size())
        throw std::invalid_argument("SubspaceBasis: pivot count mismatch");
    for (size_t i = 0; i < pivots_.size(); ++i) {
        if (pivots_[i] >= ambient_dim_ || vectors_[i].dim != ambient_dim_)
            throw DimensionMismatch("SubspaceBasis: vector outside ambient space");
        if (i > 0 && pivots_[i] <= pivots_[i - 1])
            throw std::invalid_argument("SubspaceBasis: pivots must be strictly increasing");
        slot_[pivots_[i]] = static_cast<int>(i);
    }
    for (size_t i = 0; i < vectors_.size(); ++i) {
        bool own = false;
        for (const auto& [c, v] : vectors_[i].entries) {
            int s = slot_[c];
            if (s == static_cast<int>(i)) {
                if (!v.is_one())
                    throw std::invalid_argument("SubspaceBasis: pivot entry must be 1");
                own = true;
            }
            else if (s >= 0) {
                throw std::invalid_argument("SubspaceBasis: vector not reduced at another pivot");
            }
        }
        if (!own)
            throw std::invalid_argument("SubspaceBasis: missing pivot entry");
    }
}

SparseVector SubspaceBasis::residual(const SparseVector& v) const
{
    if (v.dim != ambient_dim_)
        throw DimensionMismatch("SubspaceBasis::residual: dimension mismatch");
    std::vector<SparseVector::Entry> terms(v.entries.begin(), v.entries.end());
    for (const auto& [c, val] : v.entries) {
        int s = pivot_slot(c);
        if (s < 0)
            continue;
        for (const auto& [cc, bv] : vectors_[s].entries)
            terms.emplace_back(cc, -(val * bv));
    }
    return SparseVector::from_terms(ambient_dim_, std::move(terms));
}

// ---------------------------------------------------------------------------

EchelonBuilder::EchelonBuilder(size_t dim, size_t pivot_limit)
    : dim_(dim), pivot_limit_(std::min(dim, pivot_limit)), slot_(dim, -1), col_members_(dim), work_(dim), touched_flag_(dim, 0)
{
}

void EchelonBuilder::scatter_reduce(const SparseVector& v)
{
    if (v.dim != dim_)
        throw DimensionMismatch("EchelonBuilder: dimension mismatch");
    for (const auto& [i, val] : v.entries) {
        work_[i] += val;
        if (!touched_flag_[i]) {
            touched_flag_[i] = 1;
            touched_.push_back(i);
        }
    }
    // Basis vectors vanish at foreign pivots, so only the original support
    // can carry pivot coordinates.
    for (const auto& [i, unused] : v.entries) {
        int s = slot_[i];
        if (s < 0 || work_[i].is_zero())
            continue;
        Rational f = work_[i];
        for (const auto& [c, bv] : basis_[s].entries) {
            work_[c].submul(f, bv);
            if (!touched_flag_[c]) {
                touched_flag_[c] = 1;
                touched_.push_back(c);
            }
        }
    }
}

SparseVector EchelonBuilder::gather()
{
    std::sort(touched_.begin(), touched_.end());
    SparseVector r(dim_);
    for (Index i : touched_) {
        if (!work_[i].is_zero())
            r.entries.emplace_back(i, std::move(work_[i]));
        work_[i] = Rational(0);
        touched_flag_[i] = 0;
    }
    touched_.clear();
    return r;
}

SparseVector EchelonBuilder::reduce(const SparseVector& v)
{
    scatter_reduce(v);
    return gather();
}

bool EchelonBuilder::insert(const SparseVector& v)
{
    SparseVector r = reduce(v);
    if (r.is_zero())
        return false;
    Index pivot = 0;
    size_t best = SIZE_MAX;
    for (const auto& [c, unused] : r.entries) {
        if (c >= pivot_limit_)
            break;
        if (col_members_[c].size() < best) {
            best = col_members_[c].size();
            pivot = c;
        }
    }
    if (best == SIZE_MAX) {
        blocked_ = true;
        return false;
    }
    r.scale(r.at(pivot).inverse());

    const auto new_id = static_cast<uint32_t>(basis_.size());
    std::vector<uint32_t> members = std::move(col_members_[pivot]);
    col_members_[pivot].clear();
    for (uint32_t id : members) {
        SparseVector& b = basis_[id];
        Rational f = b.at(pivot);
        if (f.is_zero())
            continue;
        // record coordinates that b gains from r
        std::vector<Index> gained;
        size_t bi = 0;
        for (const auto& [c, unused] : r.entries) {
            while (bi < b.entries.size() && b.entries[bi].first < c)
                ++bi;
            if (bi == b.entries.size() || b.entries[bi].first != c)
                gained.push_back(c);
        }
        b.axpy(-f, r);
        for (Index c : gained)
            col_members_[c].push_back(id);
    }
    for (const auto& [c, unused] : r.entries)
        col_members_[c].push_back(new_id);
    slot_[pivot] = static_cast<int>(new_id);
    basis_.push_back(std::move(r));
    basis_pivot_.push_back(pivot);
    return true;
}

SubspaceBasis EchelonBuilder::finish() &&
{
    std::vector<size_t> order(basis_.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return basis_pivot_[a] < basis_pivot_[b]; });
    std::vector<Index> pivots;
    std::vector<SparseVector> vectors;
    pivots.reserve(order.size());
    vectors.reserve(order.size());
    for (size_t i : order) {
        pivots.push_back(basis_pivot_[i]);
        vectors.push_back(std::move(basis_[i]));
    }
    return SubspaceBasis(dim_, std::move(pivots), std::move(vectors));
}

// ---------------------------------------------------------------------------

SubspaceBasis column_space(const SparseMatrix& m)
{
    EchelonBuilder builder(m.rows());
    for (Index c = 0; c < m.cols(); ++c)
        builder.insert(m.column(c));
    return std::move(builder).finish();
}

SubspaceBasis span_of(size_t dim, const std::vector<SparseVector>& vectors)
{
    EchelonBuilder builder(dim);
    for (const auto& v : vectors)
        builder.insert(v);
    return std::move(builder).finish();
}

size_t rank(const SparseMatrix& m)
{
    // A full-rank verdict modulo a prime is a proof; anything less is
    // recomputed exactly.
    const size_t full = std::min(m.rows(), m.cols());
    constexpr uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1
    if (m.rows() * m.cols() <= 4'000'000 && rank_mod_p(m, kPrime) == full)
        return full;
    return column_space(m).rank();
}

bool contains(const SubspaceBasis& b, const SparseVector& v)
{
    if (v.dim != b.ambient_dim())
        throw DimensionMismatch("contains: vector dimension " + std::to_string(v.dim) + " vs ambient " + std::to_string(b.ambient_dim()));
    return b.residual(v).is_zero();
}

Rational restricted_trace(const SubspaceBasis& b, const ColumnAction& action)
{
    Rational trace = 0;
    for (size_t i = 0; i < b.rank(); ++i) {
        const SparseVector& v = b.vectors()[i];
        std::vector<SparseVector::Entry> terms;
        for (const auto& [c, bc] : v.entries) {
            SparseVector img = action(c);
            if (img.dim != b.ambient_dim())
                throw DimensionMismatch("restricted_trace: action changes dimension");
            for (const auto& [cc, val] : img.entries)
                terms.emplace_back(cc, bc * val);
        }
        SparseVector image = SparseVector::from_terms(b.ambient_dim(), std::move(terms));
        if (!b.residual(image).is_zero())
            throw NotInvariant("subspace not invariant: image of basis vector with pivot " + std::to_string(b.pivots()[i]) +
                               " leaves the span");
        trace += image.at(b.pivots()[i]);
    }
    return trace;
}

SolveResult solve(const SparseMatrix& m, const SparseVector& rhs)
{
    if (rhs.dim != m.rows())
        throw DimensionMismatch("solve: rhs dimension mismatch");
    const size_t n = m.cols();
    SparseMatrix t = m.transpose();  // columns of t are the equations
    std::vector<Rational> rhs_dense(m.rows());
    for (const auto& [i, v] : rhs.entries)
        rhs_dense[i] = v;

    EchelonBuilder builder(n + 1, n);
    SolveResult result;
    for (Index r = 0; r < m.rows(); ++r) {
        SparseVector eq(n + 1);
        eq.entries = t.column(r).entries;
        if (!rhs_dense[r].is_zero())
            eq.entries.emplace_back(static_cast<Index>(n), -rhs_dense[r]);
        builder.insert(eq);
        if (builder.blocked()) {
            result.status = SolveResult::Status::Inconsistent;
            return result;
        }
    }
    if (builder.rank() < n) {
        result.status = SolveResult::Status::Underdetermined;
        return result;
    }
    SubspaceBasis basis = std::move(builder).finish();
    result.x.assign(n, Rational(0));
    for (size_t i = 0; i < basis.rank(); ++i)
        result.x[basis.pivots()[i]] = -basis.vectors()[i].at(static_cast<Index>(n));
    result.status = SolveResult::Status::Unique;
    return result;
}

namespace {

std::vector<std::vector<Integer>> integer_columns(const SparseMatrix& m)
{
    std::vector<std::vector<Integer>> cols(m.cols(), std::vector<Integer>(m.rows(), 0));
    for (Index c = 0; c < m.cols(); ++c) {
        Integer l = 1;
        for (const auto& [r, v] : m.column(c).entries)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
        for (const auto& [r, v] : m.column(c).entries)
            cols[c][r] = v.numerator() * (l / v.denominator());
    }
    return cols;
}

}  // namespace

size_t rank_mod_p(const SparseMatrix& m, uint64_t p)
{
    auto cols = integer_columns(m);
    const size_t rows = m.rows();
    std::vector<std::vector<uint64_t>> a(rows, std::vector<uint64_t>(m.cols(), 0));
    Integer pz(static_cast<unsigned long>(p));
    for (size_t c = 0; c < m.cols(); ++c)
        for (size_t r = 0; r < rows; ++r) {
            if (cols[c][r] == 0)
                continue;
            Integer v = cols[c][r] % pz;
            if (v < 0)
                v += pz;
            a[r][c] = v.get_ui();
        }
    auto mulmod = [p](uint64_t x, uint64_t y) { return static_cast<uint64_t>((static_cast<unsigned __int128>(x) * y) % p); };
    auto powmod = [&](uint64_t b, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1)
                r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    size_t rk = 0;
    for (size_t c = 0; c < m.cols() && rk < rows; ++c) {
        size_t piv = rk;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[rk]);
        uint64_t inv = powmod(a[rk][c], p - 2);
        for (size_t r = rk + 1; r < rows; ++r) {
            if (a[r][c] == 0)
                continue;
            uint64_t f = mulmod(a[r][c], inv);
            for (size_t cc = c; cc < m.cols(); ++cc)
                a[r][cc] = (a[r][cc] + p - mulmod(f, a[rk][cc])) % p;
        }
        ++rk;
    }
    return rk;
}

size_t bareiss_rank(const SparseMatrix& m)
{
    auto cols = integer_columns(m);
    const size_t rows = m.rows(), ncols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(ncols));
    for (size_t c = 0; c < ncols; ++c)
        for (size_t r = 0; r < rows; ++r)
            a[r][c] = cols[c][r];
    Integer prev = 1;
    size_t rk = 0;
    for (size_t c = 0; c < ncols && rk < rows; ++c) {
        size_t piv = rk;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[rk]);
        for (size_t r = rk + 1; r < rows; ++r) {
            for (size_t cc = c + 1; cc < ncols; ++cc) {
                a[r][cc] = a[rk][c] * a[r][cc] - a[r][c] * a[rk][cc];
                mpz_divexact(a[r][cc].get_mpz_t(), a[r][cc].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[rk][c];
        ++rk;
    }
    return rk;
}

}  // namespace supercoinv

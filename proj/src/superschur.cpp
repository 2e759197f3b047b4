#include "supercoinv/superschur.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "supercoinv/exactla.hpp"
#include "supercoinv/snchar.hpp"

namespace supercoinv {

std::string Alphabet::name(int var) const
{
    if (var < k)
        return k <= 2 ? std::string(var == 0 ? "q" : "t") : "q" + std::to_string(var + 1);
    if (var < k + j) {
        int c = var - k;
        return j <= 2 ? std::string(c == 0 ? "u" : "v") : "u" + std::to_string(c + 1);
    }
    return "z" + std::to_string(var - k - j + 1);
}

QUPoly QUPoly::constant(Alphabet a, const Integer& c)
{
    QUPoly p(a);
    p.add_term(Exponents(a.size(), 0), c);
    return p;
}

QUPoly QUPoly::variable(Alphabet a, int var)
{
    Exponents e(a.size(), 0);
    e.at(var) = 1;
    return monomial(a, std::move(e));
}

QUPoly QUPoly::monomial(Alphabet a, Exponents e, const Integer& c)
{
    if (static_cast<int>(e.size()) != a.size())
        throw std::invalid_argument("QUPoly::monomial: exponent length mismatch");
    QUPoly p(a);
    p.add_term(e, c);
    return p;
}

void QUPoly::add_term(const Exponents& e, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Integer QUPoly::coeff(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

int QUPoly::partial_degree(const Exponents& e, int first, int count)
{
    return std::accumulate(e.begin() + first, e.begin() + first + count, 0);
}

int QUPoly::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, partial_degree(e, 0, static_cast<int>(e.size())));
    return d;
}

QUPoly QUPoly::homogeneous_part(int degree) const
{
    QUPoly r(alpha_);
    for (const auto& [e, c] : terms_)
        if (partial_degree(e, 0, static_cast<int>(e.size())) == degree)
            r.terms_.emplace(e, c);
    return r;
}

QUPoly QUPoly::truncate_aux_degree(int max_degree) const
{
    QUPoly r(alpha_);
    for (const auto& [e, c] : terms_)
        if (partial_degree(e, alpha_.k + alpha_.j, alpha_.aux) <= max_degree)
            r.terms_.emplace(e, c);
    return r;
}

QUPoly QUPoly::swapped(int a, int b) const
{
    QUPoly r(alpha_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        std::swap(f.at(a), f.at(b));
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

std::string QUPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Integer a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool unit = true;
        for (int v : e)
            unit = unit && v == 0;
        if (unit || a != 1)
            os << a.get_str() << (unit ? "" : "*");
        bool first_var = true;
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0)
                continue;
            os << (first_var ? "" : "*") << alpha_.name(static_cast<int>(v));
            if (e[v] > 1)
                os << '^' << e[v];
            first_var = false;
        }
        first = false;
    }
    return os.str();
}

void QUPoly::check_same(const QUPoly& o) const
{
    if (alpha_ != o.alpha_)
        throw std::invalid_argument("QUPoly: alphabet mismatch");
}

QUPoly& QUPoly::operator+=(const QUPoly& o)
{
    check_same(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

QUPoly& QUPoly::operator-=(const QUPoly& o)
{
    check_same(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

QUPoly& QUPoly::operator*=(const Integer& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

QUPoly operator*(const QUPoly& a, const QUPoly& b)
{
    a.check_same(b);
    QUPoly r(a.alpha_);
    Exponents e(a.alpha_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

QUPoly change_alphabet(const QUPoly& p, Alphabet target)
{
    const Alphabet& src = p.alphabet();
    QUPoly r(target);
    for (const auto& [e, c] : p.terms()) {
        Exponents f(target.size(), 0);
        auto move_block = [&](int src_first, int src_count, int dst_first, int dst_count) {
            for (int i = 0; i < src_count; ++i) {
                int v = e[src_first + i];
                if (i < dst_count)
                    f[dst_first + i] = v;
                else if (v != 0)
                    throw std::invalid_argument("change_alphabet: dropped letter occurs in polynomial");
            }
        };
        move_block(0, src.k, 0, target.k);
        move_block(src.k, src.j, target.k, target.j);
        move_block(src.k + src.j, src.aux, target.k + target.j, target.aux);
        r.add_term(f, c);
    }
    return r;
}

// ---------------------------------------------------------------------------

namespace {

// Cells of a (skew) diagram in row-major order with their tableau
// constraints: entries weakly increase along rows and strictly increase
// down columns.
struct Cell {
    int left = -1;   // index of the cell to the left, if in the diagram
    int above = -1;  // index of the cell above, if in the diagram
};

std::vector<Cell> skew_cells(const Partition& lambda, const Partition& nu)
{
    std::vector<Cell> cells;
    std::map<std::pair<int, int>, int> index;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int c = nu.part(i); c < lambda.part(i); ++c) {
            Cell cell;
            auto l = index.find({i, c - 1});
            if (l != index.end())
                cell.left = l->second;
            auto a = index.find({i - 1, c});
            if (a != index.end())
                cell.above = a->second;
            index[{i, c}] = static_cast<int>(cells.size());
            cells.push_back(cell);
        }
    return cells;
}

void fill_tableaux(const std::vector<Cell>& cells, size_t pos, int letters, std::vector<int>& entry, Exponents& exps,
                   const std::vector<int>& vars, QUPoly& out)
{
    if (pos == cells.size()) {
        out.add_term(exps, 1);
        return;
    }
    int lo = 0;
    if (cells[pos].left >= 0)
        lo = std::max(lo, entry[cells[pos].left]);
    if (cells[pos].above >= 0)
        lo = std::max(lo, entry[cells[pos].above] + 1);
    for (int v = lo; v < letters; ++v) {
        entry[pos] = v;
        ++exps[vars[v]];
        fill_tableaux(cells, pos + 1, letters, entry, exps, vars, out);
        --exps[vars[v]];
    }
}

QUPoly tableau_sum(const Partition& lambda, const Partition& nu, const std::vector<int>& vars, Alphabet shape)
{
    QUPoly out(shape);
    const int letters = static_cast<int>(vars.size());
    // A skew column longer than the alphabet admits no strict filling.
    for (int i = 1; i <= lambda.part(1); ++i) {
        int len = lambda.conjugate().part(i) - nu.conjugate().part(i);
        if (len > letters)
            return out;
    }
    auto cells = skew_cells(lambda, nu);
    std::vector<int> entry(cells.size(), 0);
    Exponents exps(shape.size(), 0);
    fill_tableaux(cells, 0, letters, entry, exps, vars, out);
    return out;
}

}  // namespace

QUPoly schur_poly(const Partition& lambda, const std::vector<int>& vars, Alphabet shape)
{
    return tableau_sum(lambda, Partition{}, vars, shape);
}

QUPoly skew_schur_poly(const Partition& lambda, const Partition& nu, const std::vector<int>& vars, Alphabet shape)
{
    if (!lambda.contains(nu))
        throw std::invalid_argument("skew_schur_poly: " + nu.str() + " is not contained in " + lambda.str());
    return tableau_sum(lambda, nu, vars, shape);
}

QUPoly complete_homogeneous(int degree, const std::vector<int>& vars, Alphabet shape)
{
    if (degree < 0)
        return QUPoly(shape);
    // h_m(x_1..x_r) = sum_a x_r^a h_{m-a}(x_1..x_{r-1})
    std::vector<QUPoly> h(degree + 1, QUPoly(shape));
    h[0] = QUPoly::constant(shape, 1);
    for (int var : vars) {
        QUPoly x = QUPoly::variable(shape, var);
        for (int m = degree; m >= 1; --m) {
            QUPoly acc = h[m];
            QUPoly power = x;
            for (int a = 1; a <= m; ++a) {
                acc += power * h[m - a];
                power = power * x;
            }
            h[m] = std::move(acc);
        }
    }
    return h[degree];
}

QUPoly schur_poly_jacobi_trudi(const Partition& lambda, const std::vector<int>& vars, Alphabet shape)
{
    const int len = lambda.length();
    if (len == 0)
        return QUPoly::constant(shape, 1);
    int max_index = lambda.part(1) + len;
    std::vector<QUPoly> h;
    for (int m = 0; m <= max_index; ++m)
        h.push_back(complete_homogeneous(m, vars, shape));
    auto entry = [&](int row, int col) -> const QUPoly* {
        int m = lambda.part(row + 1) - (row + 1) + (col + 1);
        if (m < 0)
            return nullptr;
        return &h[m];
    };
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    QUPoly det(shape);
    do {
        QUPoly term = QUPoly::constant(shape, 1);
        bool zero = false;
        for (int r = 0; r < len && !zero; ++r) {
            const QUPoly* e = entry(r, perm[r]);
            if (!e || e->is_zero())
                zero = true;
            else
                term = term * *e;
        }
        if (zero)
            continue;
        if (permutation_sign(perm) < 0)
            det -= term;
        else
            det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

namespace {

struct SuperSchurMemo {
    std::shared_mutex mutex;
    std::map<std::tuple<std::vector<int>, int, int>, QUPoly> table;
};

SuperSchurMemo& super_schur_memo()
{
    static SuperSchurMemo memo;
    return memo;
}

void sub_partitions(const Partition& lambda, int row, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (row > lambda.length()) {
        out.emplace_back(cur);
        return;
    }
    int cap = std::min(lambda.part(row), row == 1 ? lambda.part(1) : cur.back());
    for (int v = cap; v >= 0; --v) {
        cur.push_back(v);
        sub_partitions(lambda, row + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

QUPoly super_schur(const Partition& lambda, int k, int j)
{
    auto key = std::make_tuple(lambda.parts(), k, j);
    auto& memo = super_schur_memo();
    {
        std::shared_lock lock(memo.mutex);
        auto it = memo.table.find(key);
        if (it != memo.table.end())
            return it->second;
    }
    Alphabet shape{k, j, 0};
    std::vector<int> qs(k), us(j);
    std::iota(qs.begin(), qs.end(), 0);
    std::iota(us.begin(), us.end(), k);

    QUPoly total(shape);
    if (in_Pkjn(lambda, k, j, lambda.length())) {
        std::vector<Partition> nus;
        std::vector<int> cur;
        sub_partitions(lambda, 1, cur, nus);
        const Partition lambda_c = lambda.conjugate();
        for (const auto& nu : nus) {
            if (nu.length() > k)
                continue;
            bool fits = true;
            for (int i = 1; i <= lambda.length(); ++i)
                fits = fits && (lambda.part(i) - nu.part(i) <= j);
            if (!fits)
                continue;
            QUPoly bos = schur_poly(nu, qs, shape);
            if (bos.is_zero())
                continue;
            QUPoly fer = skew_schur_poly(lambda_c, nu.conjugate(), us, shape);
            if (fer.is_zero())
                continue;
            total += bos * fer;
        }
    }
    std::unique_lock lock(memo.mutex);
    memo.table.emplace(std::move(key), total);
    return total;
}

QUPoly specialize(const QUPoly& p, const std::map<int, Substitution>& assignment)
{
    const Alphabet& a = p.alphabet();
    for (const auto& [var, sub] : assignment) {
        if (var < 0 || var >= a.size())
            throw std::invalid_argument("specialize: variable out of range");
        if (sub.kind != Substitution::Kind::Zero && (sub.target < 0 || sub.target >= a.size()))
            throw std::invalid_argument("specialize: target out of range");
    }
    QUPoly out(a);
    for (const auto& [e, c] : p.terms()) {
        Exponents f = e;
        Integer coeff = c;
        bool vanish = false;
        for (const auto& [var, sub] : assignment)
            f[var] = 0;
        for (const auto& [var, sub] : assignment) {
            int power = e[var];
            if (power == 0)
                continue;
            switch (sub.kind) {
            case Substitution::Kind::Zero:
                vanish = true;
                break;
            case Substitution::Kind::NegVar:
                if (power % 2)
                    coeff = -coeff;
                f[sub.target] += power;
                break;
            case Substitution::Kind::Var:
                f[sub.target] += power;
                break;
            }
        }
        if (!vanish)
            out.add_term(f, coeff);
    }
    return out;
}

bool is_supersymmetric_candidate(const QUPoly& p)
{
    const Alphabet& a = p.alphabet();
    for (int i = 0; i + 1 < a.k; ++i)
        if (p.swapped(a.q(i), a.q(i + 1)) != p)
            return false;
    for (int i = 0; i + 1 < a.j; ++i)
        if (p.swapped(a.u(i), a.u(i + 1)) != p)
            return false;
    return true;
}

SuperSchurExpansion expand_super_schur(const QUPoly& p, int k, int j, int n, int degree_bound)
{
    if (p.alphabet() != Alphabet{k, j, 0})
        throw std::invalid_argument("expand_super_schur: polynomial alphabet does not match (k, j)");
    if (!is_supersymmetric_candidate(p))
        throw std::invalid_argument("expand_super_schur: polynomial is not symmetric in q and in u separately");
    if (p.total_degree() > degree_bound)
        throw std::invalid_argument("expand_super_schur: total degree exceeds bound");

    SuperSchurExpansion out{k, j, n, degree_bound, {}};
    for (int d = 0; d <= degree_bound; ++d) {
        QUPoly target = p.homogeneous_part(d);
        if (target.is_zero())
            continue;
        std::vector<Partition> basis;
        std::vector<QUPoly> polys;
        for (const auto& lambda : partitions_of(d))
            if (in_Pkjn(lambda, k, j, n)) {
                basis.push_back(lambda);
                polys.push_back(super_schur(lambda, k, j));
            }
        std::map<Exponents, Index> row_of;
        auto row = [&](const Exponents& e) {
            auto [it, inserted] = row_of.try_emplace(e, static_cast<Index>(row_of.size()));
            return it->second;
        };
        for (const auto& s : polys)
            for (const auto& [e, c] : s.terms())
                row(e);
        for (const auto& [e, c] : target.terms())
            row(e);
        SparseMatrix m(row_of.size(), basis.size());
        for (size_t col = 0; col < polys.size(); ++col)
            for (const auto& [e, c] : polys[col].terms())
                m.set(row_of.at(e), static_cast<Index>(col), Rational(c));
        std::vector<SparseVector::Entry> rhs_terms;
        for (const auto& [e, c] : target.terms())
            rhs_terms.emplace_back(row_of.at(e), Rational(c));
        SolveResult sol = solve(m, SparseVector::from_terms(row_of.size(), std::move(rhs_terms)));
        if (sol.status == SolveResult::Status::Inconsistent)
            throw NotExpressible("expand_super_schur: degree " + std::to_string(d) + " component is not a combination of super Schur functions over P(" +
                                 std::to_string(k) + "," + std::to_string(j) + "," + std::to_string(n) + ")");
        if (sol.status == SolveResult::Status::Underdetermined)
            throw std::logic_error("expand_super_schur: super Schur functions are dependent in degree " + std::to_string(d));
        for (size_t col = 0; col < basis.size(); ++col) {
            if (sol.x[col].is_zero())
                continue;
            if (!sol.x[col].is_integer())
                throw NotExpressible("expand_super_schur: non-integral coefficient for " + basis[col].str());
            out.coeffs[basis[col]] = sol.x[col].numerator();
        }
    }
    return out;
}

QUPoly evaluate_expansion(const SuperSchurExpansion& e)
{
    QUPoly total(Alphabet{e.k, e.j, 0});
    for (const auto& [lambda, c] : e.coeffs) {
        QUPoly s = super_schur(lambda, e.k, e.j);
        s *= c;
        total += s;
    }
    return total;
}

CauchyResult super_cauchy_check(int k, int j, int n, int max_degree)
{
    Alphabet shape{k, j, n};
    QUPoly lhs = QUPoly::constant(shape, 1);
    for (int i = 0; i < n; ++i) {
        QUPoly factor = QUPoly::constant(shape, 1);
        QUPoly z = QUPoly::variable(shape, shape.z(i));
        for (int a = 0; a < k; ++a) {
            // (1 - q_a z_i)^{-1} truncated
            QUPoly geometric = QUPoly::constant(shape, 1);
            QUPoly step = QUPoly::variable(shape, shape.q(a)) * z;
            QUPoly power = step;
            for (int m = 1; m <= max_degree; ++m) {
                geometric += power;
                power = power * step;
            }
            factor = (factor * geometric).truncate_aux_degree(max_degree);
        }
        for (int c = 0; c < j; ++c) {
            QUPoly lin = QUPoly::constant(shape, 1) + QUPoly::variable(shape, shape.u(c)) * z;
            factor = (factor * lin).truncate_aux_degree(max_degree);
        }
        lhs = (lhs * factor).truncate_aux_degree(max_degree);
    }

    std::vector<int> zs(n);
    for (int i = 0; i < n; ++i)
        zs[i] = shape.z(i);
    CauchyResult result;
    for (int d = 0; d <= max_degree; ++d) {
        QUPoly rhs(shape);
        for (const auto& lambda : partitions_of(d)) {
            if (!in_Pkjn(lambda, k, j, n))
                continue;
            QUPoly left = change_alphabet(super_schur(lambda, k, j), shape);
            rhs += left * schur_poly(lambda, zs, shape);
        }
        QUPoly lhs_d(shape);
        for (const auto& [e, c] : lhs.terms())
            if (QUPoly::partial_degree(e, k + j, n) == d)
                lhs_d.add_term(e, c);
        if (lhs_d != rhs) {
            result.pass = false;
            result.first_failing_degree = d;
            return result;
        }
    }
    return result;
}

}  // namespace supercoinv

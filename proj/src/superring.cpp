#include "supercoinv/superring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace supercoinv {

std::string Context::var_name(int var) const
{
    const int set = set_of(var);
    const int pos = position_of(var) + 1;
    if (set < k)
        return "x" + std::to_string(pos) + "^(" + std::to_string(set + 1) + ")";
    return "θ" + std::to_string(pos) + "^(" + std::to_string(set - k + 1) + ")";
}

int Multidegree::total() const
{
    return std::accumulate(r.begin(), r.end(), 0) + std::accumulate(s.begin(), s.end(), 0);
}

int Multidegree::at(int set) const
{
    const int k = static_cast<int>(r.size());
    return set < k ? r.at(set) : s.at(set - k);
}

Multidegree Multidegree::shifted(int set, int by) const
{
    Multidegree d = *this;
    const int k = static_cast<int>(r.size());
    if (set < k)
        d.r.at(set) += by;
    else
        d.s.at(set - k) += by;
    return d;
}

bool Multidegree::valid(int n) const
{
    for (int v : r)
        if (v < 0)
            return false;
    for (int v : s)
        if (v < 0 || v > n)
            return false;
    return true;
}

std::string Multidegree::str() const
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < r.size(); ++i)
        os << (i ? "," : "") << r[i];
    os << ";";
    for (size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "") << s[i];
    os << ")";
    return os.str();
}

size_t SuperMonomialHash::operator()(const SuperMonomial& m) const
{
    uint64_t h = 1469598103934665603ULL;
    for (uint8_t b : m.e) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
}

SuperMonomial one_monomial(const Context& ctx)
{
    return SuperMonomial{std::vector<uint8_t>(ctx.var_count(), 0)};
}

Multidegree multidegree_of(const Context& ctx, const SuperMonomial& m)
{
    Multidegree d{std::vector<int>(ctx.k, 0), std::vector<int>(ctx.j, 0)};
    for (int v = 0; v < ctx.var_count(); ++v) {
        int set = ctx.set_of(v);
        if (set < ctx.k)
            d.r[set] += m.e[v];
        else
            d.s[set - ctx.k] += m.e[v];
    }
    return d;
}

std::string monomial_str(const Context& ctx, const SuperMonomial& m)
{
    std::string out;
    for (int v = 0; v < ctx.var_count(); ++v) {
        if (m.e[v] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += ctx.var_name(v);
        if (m.e[v] > 1)
            out += "^" + std::to_string(m.e[v]);
    }
    return out.empty() ? "1" : out;
}

std::vector<uint8_t> encode_monomial(const Context& ctx, const SuperMonomial& m)
{
    const int bos = ctx.k * ctx.n;
    const int fer = ctx.j * ctx.n;
    std::vector<uint8_t> out(m.e.begin(), m.e.begin() + bos);
    out.resize(bos + (fer + 7) / 8, 0);
    for (int i = 0; i < fer; ++i)
        if (m.e[bos + i])
            out[bos + i / 8] |= static_cast<uint8_t>(1u << (i % 8));
    return out;
}

SuperMonomial decode_monomial(const Context& ctx, const std::vector<uint8_t>& bytes)
{
    const int bos = ctx.k * ctx.n;
    const int fer = ctx.j * ctx.n;
    if (static_cast<int>(bytes.size()) != bos + (fer + 7) / 8)
        throw std::invalid_argument("decode_monomial: wrong byte count");
    SuperMonomial m = one_monomial(ctx);
    std::copy(bytes.begin(), bytes.begin() + bos, m.e.begin());
    for (int i = 0; i < fer; ++i)
        m.e[bos + i] = (bytes[bos + i / 8] >> (i % 8)) & 1u;
    for (int i = fer; i < 8 * ((fer + 7) / 8); ++i)
        if ((bytes[bos + i / 8] >> (i % 8)) & 1u)
            throw std::invalid_argument("decode_monomial: padding bits set");
    return m;
}

SignedMonomial multiply_monomials(const Context& ctx, const SuperMonomial& a, const SuperMonomial& b)
{
    SignedMonomial out{1, a};
    const int bos = ctx.k * ctx.n;
    for (int v = 0; v < bos; ++v) {
        int e = a.e[v] + b.e[v];
        if (e > 255)
            throw std::overflow_error("multiply_monomials: exponent exceeds 255");
        out.m.e[v] = static_cast<uint8_t>(e);
    }
    int a_seen = 0;
    int a_total = 0;
    for (int v = bos; v < ctx.var_count(); ++v)
        a_total += a.e[v];
    int inversions = 0;
    for (int v = bos; v < ctx.var_count(); ++v) {
        if (a.e[v] && b.e[v])
            return SignedMonomial{0, one_monomial(ctx)};
        if (b.e[v]) {
            inversions += a_total - a_seen;
            out.m.e[v] = 1;
        }
        a_seen += a.e[v];
    }
    out.sign = inversions % 2 ? -1 : 1;
    return out;
}

SignedMonomial act_on_monomial(const Context& ctx, const Permutation& sigma, const SuperMonomial& m)
{
    if (static_cast<int>(sigma.size()) != ctx.n)
        throw std::invalid_argument("act_on_monomial: permutation size differs from n");
    SignedMonomial out{1, one_monomial(ctx)};
    int inversions = 0;
    std::vector<int> images;
    for (int set = 0; set < ctx.sets(); ++set) {
        const int base = set * ctx.n;
        images.clear();
        for (int p = 0; p < ctx.n; ++p) {
            uint8_t e = m.e[base + p];
            out.m.e[base + sigma[p]] = e;
            if (set >= ctx.k && e)
                images.push_back(sigma[p]);
        }
        for (size_t x = 0; x < images.size(); ++x)
            for (size_t y = x + 1; y < images.size(); ++y)
                if (images[x] > images[y])
                    ++inversions;
    }
    out.sign = inversions % 2 ? -1 : 1;
    return out;
}

// ---------------------------------------------------------------------------

SuperPolynomial SuperPolynomial::monomial(Context ctx, SuperMonomial m, Rational c)
{
    if (static_cast<int>(m.e.size()) != ctx.var_count())
        throw ContextMismatch("SuperPolynomial::monomial: wrong exponent length");
    SuperPolynomial p(ctx);
    p.add_term(m, c);
    return p;
}

SuperPolynomial SuperPolynomial::variable(Context ctx, int var)
{
    SuperMonomial m = one_monomial(ctx);
    m.e.at(var) = 1;
    return monomial(ctx, std::move(m));
}

Rational SuperPolynomial::coeff(const SuperMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SuperPolynomial::add_term(const SuperMonomial& m, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SuperPolynomial SuperPolynomial::homogeneous_part(const Multidegree& d) const
{
    SuperPolynomial r(ctx_);
    for (const auto& [m, c] : terms_)
        if (multidegree_of(ctx_, m) == d)
            r.terms_.emplace(m, c);
    return r;
}

std::string SuperPolynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        if (!out.empty())
            out += cs[0] == '-' ? " - " : " + ";
        else if (cs[0] == '-')
            out += "-";
        if (cs[0] == '-')
            cs.erase(0, 1);
        std::string ms = monomial_str(ctx_, m);
        if (ms == "1")
            out += cs;
        else
            out += (cs == "1" ? "" : cs + "*") + ms;
    }
    return out;
}

void SuperPolynomial::check_same(const SuperPolynomial& o) const
{
    if (ctx_ != o.ctx_)
        throw ContextMismatch("SuperPolynomial: context mismatch");
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o)
{
    check_same(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o)
{
    check_same(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b)
{
    a.check_same(b);
    SuperPolynomial r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            SignedMonomial prod = multiply_monomials(a.ctx_, ma, mb);
            if (prod.sign == 0)
                continue;
            Rational c = ca * cb;
            r.add_term(prod.m, prod.sign < 0 ? -c : c);
        }
    return r;
}

SuperPolynomial multiply(const SuperPolynomial& a, const SuperPolynomial& b) { return a * b; }

SuperPolynomial act_permutation(const Permutation& sigma, const SuperPolynomial& p)
{
    SuperPolynomial r(p.context());
    for (const auto& [m, c] : p.terms()) {
        SignedMonomial img = act_on_monomial(p.context(), sigma, m);
        r.add_term(img.m, img.sign < 0 ? -c : c);
    }
    return r;
}

SuperPolynomial reynolds(const SuperPolynomial& p)
{
    const Context& ctx = p.context();
    SuperPolynomial r(ctx);
    for (const auto& sigma : all_permutations(ctx.n))
        r += act_permutation(sigma, p);
    r *= Rational(1) / Rational(factorial(ctx.n));
    return r;
}

// ---------------------------------------------------------------------------

namespace {

void enumerate_monomials(const Context& ctx, const Multidegree& d, int set, int pos, int remaining, SuperMonomial& cur,
                         std::vector<SuperMonomial>& out)
{
    if (set == ctx.sets()) {
        out.push_back(cur);
        return;
    }
    const bool fermionic = set >= ctx.k;
    const int idx = ctx.var(set, pos);
    if (pos == ctx.n - 1) {
        if (fermionic && remaining > 1)
            return;
        cur.e[idx] = static_cast<uint8_t>(remaining);
        int next_set = set + 1;
        enumerate_monomials(ctx, d, next_set, 0, next_set < ctx.sets() ? d.at(next_set) : 0, cur, out);
        cur.e[idx] = 0;
        return;
    }
    const int cap = fermionic ? std::min(1, remaining) : remaining;
    for (int e = cap; e >= 0; --e) {
        // remaining fermions must fit in the remaining positions
        if (fermionic && remaining - e > ctx.n - pos - 1)
            continue;
        cur.e[idx] = static_cast<uint8_t>(e);
        enumerate_monomials(ctx, d, set, pos + 1, remaining - e, cur, out);
    }
    cur.e[idx] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(Context ctx, Multidegree d) : ctx_(ctx), d_(std::move(d))
{
    if (static_cast<int>(d_.r.size()) != ctx.k || static_cast<int>(d_.s.size()) != ctx.j)
        throw ContextMismatch("MonomialBasis: multidegree shape does not match context");
    if (!d_.valid(ctx.n))
        return;
    for (int v : d_.r)
        if (v > 255)
            throw std::overflow_error("MonomialBasis: bosonic degree exceeds 255");
    if (ctx.n == 0 || ctx.sets() == 0) {
        if (d_.is_zero())
            monomials_.push_back(one_monomial(ctx));
    }
    else {
        SuperMonomial cur = one_monomial(ctx);
        enumerate_monomials(ctx, d_, 0, 0, d_.at(0), cur, monomials_);
    }
    // The enumeration tries larger exponents first, which is descending
    // lexicographic order already.
    index_.reserve(monomials_.size());
    for (Index i = 0; i < monomials_.size(); ++i)
        index_.emplace(monomials_[i], i);
}

long MonomialBasis::index_of(const SuperMonomial& m) const
{
    auto it = index_.find(m);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

SparseVector MonomialBasis::to_vector(const SuperPolynomial& p) const
{
    if (p.context() != ctx_)
        throw ContextMismatch("MonomialBasis::to_vector: context mismatch");
    std::vector<SparseVector::Entry> terms;
    for (const auto& [m, c] : p.terms()) {
        long i = index_of(m);
        if (i < 0)
            throw std::invalid_argument("MonomialBasis::to_vector: term " + monomial_str(ctx_, m) + " is not of multidegree " +
                                        d_.str());
        terms.emplace_back(static_cast<Index>(i), c);
    }
    return SparseVector::from_terms(size(), std::move(terms));
}

SuperPolynomial MonomialBasis::to_polynomial(const SparseVector& v) const
{
    if (v.dim != size())
        throw DimensionMismatch("MonomialBasis::to_polynomial: dimension mismatch");
    SuperPolynomial p(ctx_);
    for (const auto& [i, c] : v.entries)
        p.add_term(monomials_[i], c);
    return p;
}

Integer monomial_space_dim(const Context& ctx, const Multidegree& d)
{
    if (!d.valid(ctx.n))
        return 0;
    Integer dim = 1;
    for (int r : d.r)
        dim *= ctx.n == 0 ? Integer(r == 0 ? 1 : 0) : binomial(ctx.n + r - 1, r);
    for (int s : d.s)
        dim *= binomial(ctx.n, s);
    return dim;
}

std::vector<Multidegree> multidegrees_of_total(const Context& ctx, int total)
{
    std::vector<Multidegree> out;
    std::vector<int> cur(ctx.sets(), 0);
    std::function<void(int, int)> rec = [&](int set, int remaining) {
        if (set == ctx.sets()) {
            if (remaining == 0)
                out.push_back(Multidegree{std::vector<int>(cur.begin(), cur.begin() + ctx.k),
                                          std::vector<int>(cur.begin() + ctx.k, cur.end())});
            return;
        }
        int cap = set < ctx.k ? remaining : std::min(remaining, ctx.n);
        for (int v = cap; v >= 0; --v) {
            cur[set] = v;
            rec(set + 1, remaining - v);
        }
        cur[set] = 0;
    };
    rec(0, total);
    return out;
}

SubspaceBasis invariant_basis(const Context& ctx, const Multidegree& d)
{
    MonomialBasis basis(ctx, d);
    const auto perms = all_permutations(ctx.n);
    const Rational scale = Rational(1) / Rational(factorial(ctx.n));
    std::vector<char> seen(basis.size(), 0);
    std::vector<SparseVector> images;
    for (Index i = 0; i < basis.size(); ++i) {
        if (seen[i])
            continue;
        std::vector<SparseVector::Entry> terms;
        terms.reserve(perms.size());
        for (const auto& sigma : perms) {
            SignedMonomial img = act_on_monomial(ctx, sigma, basis[i]);
            auto idx = static_cast<Index>(basis.index_of(img.m));
            seen[idx] = 1;
            terms.emplace_back(idx, img.sign < 0 ? -scale : scale);
        }
        SparseVector v = SparseVector::from_terms(basis.size(), std::move(terms));
        if (!v.is_zero())
            images.push_back(std::move(v));
    }
    return span_of(basis.size(), images);
}

// ---------------------------------------------------------------------------

int Superderivation::to_set(const Context& ctx) const
{
    bool fermionic = kind == Kind::FermionBoson || kind == Kind::FermionFermion;
    return fermionic ? ctx.k + to : to;
}

int Superderivation::from_set(const Context& ctx) const
{
    bool fermionic = kind == Kind::BosonFermion || kind == Kind::FermionFermion;
    return fermionic ? ctx.k + from : from;
}

std::string Superderivation::str() const
{
    bool to_f = kind == Kind::FermionBoson || kind == Kind::FermionFermion;
    bool from_f = kind == Kind::BosonFermion || kind == Kind::FermionFermion;
    return "E_{" + std::to_string(to + 1) + (to_f ? "'" : "") + "," + std::to_string(from + 1) + (from_f ? "'" : "") + "}";
}

std::vector<Superderivation> all_superderivations(const Context& ctx)
{
    using K = Superderivation::Kind;
    std::vector<Superderivation> out;
    for (int a = 0; a < ctx.k; ++a)
        for (int b = 0; b < ctx.k; ++b)
            out.push_back({K::BosonBoson, a, b});
    for (int a = 0; a < ctx.k; ++a)
        for (int d = 0; d < ctx.j; ++d)
            out.push_back({K::BosonFermion, a, d});
    for (int c = 0; c < ctx.j; ++c)
        for (int b = 0; b < ctx.k; ++b)
            out.push_back({K::FermionBoson, c, b});
    for (int c = 0; c < ctx.j; ++c)
        for (int d = 0; d < ctx.j; ++d)
            out.push_back({K::FermionFermion, c, d});
    return out;
}

namespace {

void check_indices(const Context& ctx, const Superderivation& e)
{
    using K = Superderivation::Kind;
    int to_max = (e.kind == K::FermionBoson || e.kind == K::FermionFermion) ? ctx.j : ctx.k;
    int from_max = (e.kind == K::BosonFermion || e.kind == K::FermionFermion) ? ctx.j : ctx.k;
    if (e.to < 0 || e.to >= to_max || e.from < 0 || e.from >= from_max)
        throw std::out_of_range("superderivation " + e.str() + " outside k=" + std::to_string(ctx.k) + ", j=" + std::to_string(ctx.j));
}

int fermions_before(const Context& ctx, const SuperMonomial& m, int var)
{
    int count = 0;
    for (int v = ctx.k * ctx.n; v < var; ++v)
        count += m.e[v];
    return count;
}

}  // namespace

std::vector<std::pair<Rational, SuperMonomial>> superderivation_terms(const Context& ctx, const Superderivation& e,
                                                                    const SuperMonomial& m)
{
    check_indices(ctx, e);
    const int to_set = e.to_set(ctx);
    const int from_set = e.from_set(ctx);
    std::vector<std::pair<Rational, SuperMonomial>> out;
    for (int p = 0; p < ctx.n; ++p) {
        const int src = ctx.var(from_set, p);
        const int dst = ctx.var(to_set, p);
        if (m.e[src] == 0)
            continue;
        SuperMonomial r = m;
        int64_t coeff = 1;
        if (ctx.is_fermionic(src)) {
            if (fermions_before(ctx, r, src) % 2)
                coeff = -1;
            r.e[src] = 0;
        }
        else {
            coeff = r.e[src];
            --r.e[src];
        }
        if (ctx.is_fermionic(dst)) {
            if (r.e[dst])
                continue;
            if (fermions_before(ctx, r, dst) % 2)
                coeff = -coeff;
            r.e[dst] = 1;
        }
        else {
            if (r.e[dst] == 255)
                throw std::overflow_error("superderivation: exponent exceeds 255");
            ++r.e[dst];
        }
        out.emplace_back(Rational(coeff), std::move(r));
    }
    return out;
}

SuperPolynomial apply_superderivation(const Superderivation& e, const SuperPolynomial& p)
{
    check_indices(p.context(), e);
    SuperPolynomial r(p.context());
    for (const auto& [m, c] : p.terms())
        for (auto& [f, img] : superderivation_terms(p.context(), e, m))
            r.add_term(img, f * c);
    return r;
}

}  // namespace supercoinv

#include "supercoinv/coinvariant.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <tuple>

namespace supercoinv {

namespace fs = std::filesystem;

std::string resolve_cache_dir(const std::string& fallback)
{
    const char* env = std::getenv("SUPERCOINV_CACHE");
    if (env && *env)
        return env;
    return fallback;
}

ResourceExceeded::ResourceExceeded(const Multidegree& d, size_t rows_, size_t cols_, size_t ceiling)
    : std::runtime_error("resource ceiling exceeded at multidegree " + d.str() + ": relation matrix " + std::to_string(rows_) + " x " +
                         std::to_string(cols_) + ", ceiling " + std::to_string(ceiling) + " columns"),
      degree(d),
      rows(rows_),
      cols(cols_)
{
}

SubspaceBasis Component::ideal() const
{
    const size_t dim = monomials->size();
    std::vector<Index> pivots;
    std::vector<SparseVector> vectors;
    for (Index m = 0; m < dim; ++m) {
        if (standard_slot[m] >= 0)
            continue;
        std::vector<SparseVector::Entry> terms;
        terms.reserve(normal_form[m].nnz() + 1);
        terms.emplace_back(m, Rational(1));
        for (const auto& [slot, c] : normal_form[m].entries)
            terms.emplace_back(standard[slot], -c);
        pivots.push_back(m);
        vectors.push_back(SparseVector::from_terms(dim, std::move(terms)));
    }
    return SubspaceBasis(dim, std::move(pivots), std::move(vectors));
}

SparseVector Component::normal_form_of(const SparseVector& v) const
{
    if (v.dim != monomials->size())
        throw DimensionMismatch("Component::normal_form_of: dimension mismatch");
    std::vector<SparseVector::Entry> terms;
    for (const auto& [m, c] : v.entries)
        for (const auto& [slot, a] : normal_form[m].entries)
            terms.emplace_back(slot, c * a);
    return SparseVector::from_terms(dim(), std::move(terms));
}

const Component* IdealComponentCache::find(const Multidegree& d) const
{
    auto it = components_.find(d);
    return it == components_.end() ? nullptr : it->second.get();
}

void IdealComponentCache::commit(std::shared_ptr<const Component> c)
{
    Multidegree d = c->degree;
    components_[d] = std::move(c);
}

std::vector<Multidegree> IdealComponentCache::degrees() const
{
    std::vector<Multidegree> out;
    for (const auto& [d, c] : components_)
        out.push_back(d);
    return out;
}

bool PartitionPairOrder::operator()(const std::pair<Partition, Partition>& a, const std::pair<Partition, Partition>& b) const
{
    PartitionOrder less;
    if (less(a.first, b.first))
        return true;
    if (less(b.first, a.first))
        return false;
    return less(a.second, b.second);
}

Integer CoeffTable::at(const Partition& lambda, const Partition& mu) const
{
    auto it = entries.find({lambda, mu});
    return it == entries.end() ? Integer(0) : it->second;
}

// ---------------------------------------------------------------------------

CoinvariantEngine::CoinvariantEngine(int n, int k, int j, EngineOptions options) : ctx_{n, k, j}, options_(std::move(options))
{
    if (n < 1 || k < 0 || j < 0)
        throw std::invalid_argument("CoinvariantEngine: need n >= 1 and k, j >= 0");
    if (options_.jobs < 1)
        options_.jobs = 1;
}

const Component& CoinvariantEngine::component(const Multidegree& d)
{
    if (static_cast<int>(d.r.size()) != ctx_.k || static_cast<int>(d.s.size()) != ctx_.j || !d.valid(ctx_.n))
        throw std::invalid_argument("component: multidegree " + d.str() + " is not valid for n=" + std::to_string(ctx_.n));
    std::lock_guard lock(mutex_);
    while (shells_done_ < d.total())
        compute_shell(shells_done_ + 1);
    return *cache_.find(d);
}

int CoinvariantEngine::run_to_termination()
{
    std::lock_guard lock(mutex_);
    while (terminated_at_ < 0)
        compute_shell(shells_done_ + 1);
    return terminated_at_ - 1;
}

std::vector<Multidegree> CoinvariantEngine::computed_degrees()
{
    std::lock_guard lock(mutex_);
    return cache_.degrees();
}

void CoinvariantEngine::compute_shell(int total)
{
    const auto degrees = multidegrees_of_total(ctx_, total);
    std::vector<std::shared_ptr<const Component>> results(degrees.size());
    std::vector<std::exception_ptr> errors(degrees.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < degrees.size(); i = next++) {
            try {
                results[i] = compute_component(degrees[i]);
            }
            catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int workers = std::min<int>(options_.jobs, static_cast<int>(degrees.size()));
    if (workers <= 1) {
        worker();
    }
    else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    bool all_zero = true;
    for (auto& c : results) {
        all_zero = all_zero && c->dim() == 0;
        cache_.commit(std::move(c));
    }
    shells_done_ = total;
    if (all_zero && terminated_at_ < 0 && total > 0)
        terminated_at_ = total;
}

namespace {

int fermion_parity_before(const Context& ctx, const SuperMonomial& m, int var)
{
    int count = 0;
    for (int v = ctx.k * ctx.n; v < var; ++v)
        count += m.e[v];
    return count % 2;
}

struct Lift {
    int sign = 0;
    Index index = 0;
};

}  // namespace

std::shared_ptr<const Component> CoinvariantEngine::compute_component(const Multidegree& d) const
{
    if (!options_.cache_dir.empty())
        if (auto cached = load_cached(d))
            return cached;

    auto comp = std::make_shared<Component>();
    comp->degree = d;
    auto basis = std::make_shared<const MonomialBasis>(ctx_, d);
    comp->monomials = basis;
    const MonomialBasis& M = *basis;
    const size_t dim = M.size();

    size_t rows = 0;
    for (Index i = 0; i < dim; ++i) {
        int vars = 0;
        for (int v = 0; v < ctx_.var_count(); ++v)
            vars += M[i].e[v] != 0;
        rows += vars > 0 ? vars - 1 : 0;
    }
    if (dim > options_.ceiling)
        throw ResourceExceeded(d, rows, dim, options_.ceiling);

    comp->standard_slot.assign(dim, -1);
    if (d.is_zero()) {
        comp->standard = {0};
        comp->standard_slot[0] = 0;
        comp->normal_form = {SparseVector::unit(1, 0)};
        if (!options_.cache_dir.empty())
            store_cached(*comp);
        return comp;
    }

    // Quotient bases one degree lower, and the products variable * standard.
    const int sets = ctx_.sets();
    std::vector<const Component*> prev(sets, nullptr);
    std::vector<std::vector<Lift>> lift(sets);  // [set][slot * n + p]
    std::vector<char> in_candidates(dim, 0);
    for (int set = 0; set < sets; ++set) {
        if (d.at(set) == 0)
            continue;
        prev[set] = cache_.find(d.shifted(set, -1));
        if (!prev[set])
            throw std::logic_error("compute_component: lower shell missing for " + d.str());
        const Component& P = *prev[set];
        lift[set].resize(P.dim() * ctx_.n);
        for (size_t slot = 0; slot < P.dim(); ++slot) {
            const SuperMonomial& s = (*P.monomials)[P.standard[slot]];
            for (int p = 0; p < ctx_.n; ++p) {
                SuperMonomial x = one_monomial(ctx_);
                x.e[ctx_.var(set, p)] = 1;
                SignedMonomial prod = multiply_monomials(ctx_, x, s);
                Lift& l = lift[set][slot * ctx_.n + p];
                if (prod.sign == 0)
                    continue;
                l.sign = prod.sign;
                l.index = static_cast<Index>(M.index_of(prod.m));
                in_candidates[l.index] = 1;
            }
        }
    }

    // phi(m, v) = eps * v * NF(m / v), where m = eps * v * (m / v).
    auto phi = [&](Index i, int v) {
        const SuperMonomial& m = M[i];
        const int set = ctx_.set_of(v);
        const int p = ctx_.position_of(v);
        SuperMonomial rest = m;
        bool negate = false;
        if (ctx_.is_fermionic(v)) {
            negate = fermion_parity_before(ctx_, m, v) != 0;
            rest.e[v] = 0;
        }
        else {
            --rest.e[v];
        }
        const Component& P = *prev[set];
        const SparseVector& nf = P.normal_form[P.monomials->index_of(rest)];
        std::vector<SparseVector::Entry> terms;
        terms.reserve(nf.nnz());
        for (const auto& [slot, c] : nf.entries) {
            const Lift& l = lift[set][slot * ctx_.n + p];
            if (l.sign == 0)
                continue;
            terms.emplace_back(l.index, (l.sign < 0) != negate ? -c : c);
        }
        return SparseVector::from_terms(dim, std::move(terms));
    };

    std::vector<SparseVector> phi0(dim);
    EchelonBuilder builder(dim);
    {
        std::vector<int> first_var(dim, -1);
        for (Index i = 0; i < dim; ++i) {
            for (int v = 0; v < ctx_.var_count(); ++v)
                if (M[i].e[v]) {
                    first_var[i] = v;
                    break;
                }
            phi0[i] = phi(i, first_var[i]);
        }
        SubspaceBasis inv = invariant_basis(ctx_, d);
        for (const auto& g : inv.vectors()) {
            std::vector<SparseVector::Entry> terms;
            for (const auto& [m, c] : g.entries)
                for (const auto& [idx, a] : phi0[m].entries)
                    terms.emplace_back(idx, c * a);
            builder.insert(SparseVector::from_terms(dim, std::move(terms)));
        }
        for (Index i = 0; i < dim; ++i) {
            for (int v = first_var[i] + 1; v < ctx_.var_count(); ++v) {
                if (!M[i].e[v])
                    continue;
                SparseVector row = phi(i, v);
                row.axpy(Rational(-1), phi0[i]);
                if (!row.is_zero())
                    builder.insert(row);
            }
        }
    }
    SubspaceBasis relations = std::move(builder).finish();

    for (Index i = 0; i < dim; ++i)
        if (in_candidates[i] && !relations.is_pivot(i)) {
            comp->standard_slot[i] = static_cast<int>(comp->standard.size());
            comp->standard.push_back(i);
        }
    comp->normal_form.resize(dim);
    for (Index i = 0; i < dim; ++i) {
        SparseVector r = relations.residual(phi0[i]);
        SparseVector nf(comp->dim());
        nf.entries.reserve(r.nnz());
        for (auto& [idx, c] : r.entries) {
            int slot = comp->standard_slot[idx];
            if (slot < 0)
                throw std::logic_error("compute_component: normal form leaves the standard monomials");
            nf.entries.emplace_back(static_cast<Index>(slot), std::move(c));
        }
        comp->normal_form[i] = std::move(nf);
    }
    if (!options_.cache_dir.empty())
        store_cached(*comp);
    return comp;
}

// ---------------------------------------------------------------------------
// On-disk cache. One text file per multidegree:
//
//   supercoinv-ideal 1
//   ring <n> <k> <j>
//   degree <r_1 .. r_k> ; <s_1 .. s_j>
//   monomials <count>
//   vectors <count>
//   <pivot hex> <terms> (<monomial hex> <rational>)*
//
// Each vector is one ideal basis element m - NF(m), written as its pivot
// monomial followed by its remaining terms. Monomials use the byte encoding
// of encode_monomial, as lowercase hex.

namespace {

std::string to_hex(const std::vector<uint8_t>& bytes)
{
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (uint8_t b : bytes) {
        s += digits[b >> 4];
        s += digits[b & 15];
    }
    return s;
}

std::vector<uint8_t> from_hex(const std::string& s)
{
    if (s.size() % 2)
        throw std::runtime_error("cache: odd hex length");
    std::vector<uint8_t> out;
    for (size_t i = 0; i < s.size(); i += 2)
        out.push_back(static_cast<uint8_t>(std::stoi(s.substr(i, 2), nullptr, 16)));
    return out;
}

}  // namespace

std::string CoinvariantEngine::cache_path(const Multidegree& d) const
{
    std::ostringstream name;
    name << "r";
    for (int v : d.r)
        name << "_" << v;
    name << "_s";
    for (int v : d.s)
        name << "_" << v;
    name << ".ideal";
    fs::path dir = fs::path(options_.cache_dir) /
                   ("n" + std::to_string(ctx_.n) + "_k" + std::to_string(ctx_.k) + "_j" + std::to_string(ctx_.j));
    return (dir / name.str()).string();
}

void CoinvariantEngine::store_cached(const Component& c) const
{
    const std::string path = cache_path(c.degree);
    fs::create_directories(fs::path(path).parent_path());
    const std::string tmp = path + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out(tmp);
        out << "supercoinv-ideal 1\n";
        out << "ring " << ctx_.n << " " << ctx_.k << " " << ctx_.j << "\n";
        out << "degree";
        for (int v : c.degree.r)
            out << " " << v;
        out << " ;";
        for (int v : c.degree.s)
            out << " " << v;
        out << "\n";
        out << "monomials " << c.monomials->size() << "\n";
        SubspaceBasis ideal = c.ideal();
        out << "vectors " << ideal.rank() << "\n";
        for (size_t i = 0; i < ideal.rank(); ++i) {
            const Index pivot = ideal.pivots()[i];
            const auto& v = ideal.vectors()[i];
            out << to_hex(encode_monomial(ctx_, (*c.monomials)[pivot])) << " " << v.nnz() - 1;
            for (const auto& [m, val] : v.entries)
                if (m != pivot)
                    out << " " << to_hex(encode_monomial(ctx_, (*c.monomials)[m])) << " " << val.str();
            out << "\n";
        }
        if (!out)
            throw std::runtime_error("cache: cannot write " + tmp);
    }
    fs::rename(tmp, path);
}

std::shared_ptr<const Component> CoinvariantEngine::load_cached(const Multidegree& d) const
{
    const std::string path = cache_path(d);
    std::ifstream in(path);
    if (!in)
        return nullptr;
    auto fail = [&](const std::string& why) -> std::runtime_error { return std::runtime_error("cache file " + path + ": " + why); };
    std::string word;
    int version = 0;
    in >> word >> version;
    if (word != "supercoinv-ideal" || version != 1)
        throw fail("bad header");
    int n = 0, k = 0, j = 0;
    in >> word >> n >> k >> j;
    if (word != "ring" || n != ctx_.n || k != ctx_.k || j != ctx_.j)
        throw fail("ring mismatch");
    in >> word;
    Multidegree got{std::vector<int>(ctx_.k), std::vector<int>(ctx_.j)};
    for (int& v : got.r)
        in >> v;
    in >> word;
    if (word != ";")
        throw fail("bad degree line");
    for (int& v : got.s)
        in >> v;
    if (got != d)
        throw fail("degree mismatch");

    auto comp = std::make_shared<Component>();
    comp->degree = d;
    auto basis = std::make_shared<const MonomialBasis>(ctx_, d);
    comp->monomials = basis;
    size_t count = 0, vectors = 0;
    in >> word >> count;
    if (word != "monomials" || count != basis->size())
        throw fail("monomial count mismatch");
    in >> word >> vectors;
    if (word != "vectors" || vectors > count)
        throw fail("bad vector count");

    auto index_of = [&](const std::string& hex) {
        long i = basis->index_of(decode_monomial(ctx_, from_hex(hex)));
        if (i < 0)
            throw fail("monomial of wrong degree");
        return static_cast<Index>(i);
    };
    std::vector<int> is_pivot(count, 0);
    std::vector<std::vector<std::pair<Index, Rational>>> rest(count);
    for (size_t v = 0; v < vectors; ++v) {
        std::string hex;
        size_t terms = 0;
        in >> hex >> terms;
        Index pivot = index_of(hex);
        if (is_pivot[pivot])
            throw fail("repeated pivot");
        is_pivot[pivot] = 1;
        for (size_t t = 0; t < terms; ++t) {
            std::string value;
            in >> hex >> value;
            rest[pivot].emplace_back(index_of(hex), Rational::parse(value));
        }
    }
    if (!in)
        throw fail("truncated");
    comp->standard_slot.assign(count, -1);
    for (Index i = 0; i < count; ++i)
        if (!is_pivot[i]) {
            comp->standard_slot[i] = static_cast<int>(comp->standard.size());
            comp->standard.push_back(i);
        }
    comp->normal_form.resize(count);
    for (Index i = 0; i < count; ++i) {
        if (!is_pivot[i]) {
            comp->normal_form[i] = SparseVector::unit(comp->dim(), static_cast<Index>(comp->standard_slot[i]));
            continue;
        }
        std::vector<SparseVector::Entry> terms;
        for (auto& [m, c] : rest[i]) {
            if (comp->standard_slot[m] < 0)
                throw fail("vector touches another pivot");
            terms.emplace_back(static_cast<Index>(comp->standard_slot[m]), -c);
        }
        comp->normal_form[i] = SparseVector::from_terms(comp->dim(), std::move(terms));
    }
    return comp;
}

// ---------------------------------------------------------------------------

SubspaceBasis CoinvariantEngine::ideal_component(const Multidegree& d) { return component(d).ideal(); }

SubspaceBasis CoinvariantEngine::invariant_component(const Multidegree& d)
{
    if (d.is_zero())
        return SubspaceBasis(1);
    return invariant_basis(ctx_, d);
}

Rational CoinvariantEngine::quotient_character(const Multidegree& d, const CycleType& rho)
{
    if (rho.n() != ctx_.n)
        throw std::invalid_argument("quotient_character: cycle type " + rho.rho.str() + " is not a class of S_" + std::to_string(ctx_.n));
    const Component& c = component(d);
    const Permutation sigma = rho.representative();
    Rational trace = 0;
    for (size_t slot = 0; slot < c.dim(); ++slot) {
        SignedMonomial img = act_on_monomial(ctx_, sigma, (*c.monomials)[c.standard[slot]]);
        Rational a = c.normal_form[c.monomials->index_of(img.m)].at(static_cast<Index>(slot));
        if (img.sign < 0)
            trace -= a;
        else
            trace += a;
    }
    return trace;
}

Rational ambient_trace(const MonomialBasis& basis, const Permutation& sigma)
{
    Rational trace = 0;
    for (const auto& m : basis.monomials()) {
        SignedMonomial img = act_on_monomial(basis.context(), sigma, m);
        if (img.m == m)
            trace += img.sign;
    }
    return trace;
}

Rational CoinvariantEngine::quotient_character_via_ideal(const Multidegree& d, const CycleType& rho)
{
    if (rho.n() != ctx_.n)
        throw std::invalid_argument("quotient_character_via_ideal: cycle type size mismatch");
    const Component& c = component(d);
    const Permutation sigma = rho.representative();
    const MonomialBasis& M = *c.monomials;
    ColumnAction action = [&](Index i) {
        SignedMonomial img = act_on_monomial(ctx_, sigma, M[i]);
        SparseVector v(M.size());
        v.entries.emplace_back(static_cast<Index>(M.index_of(img.m)), Rational(img.sign));
        return v;
    };
    return ambient_trace(M, sigma) - restricted_trace(c.ideal(), action);
}

FrobeniusSeries CoinvariantEngine::frobenius_series()
{
    run_to_termination();
    FrobeniusSeries f{ctx_.n, ctx_.k, ctx_.j, {}};
    const auto classes = conjugacy_classes(ctx_.n);
    for (const auto& d : computed_degrees()) {
        if (component(d).dim() == 0)
            continue;
        ClassFunction chi{ctx_.n, {}};
        for (const auto& rho : classes)
            chi.values[rho.rho] = quotient_character(d, rho);
        f.components[d] = frobenius_decompose(chi);
    }
    return f;
}

QUPoly monomial_of(const Alphabet& a, const Multidegree& d)
{
    Exponents e(a.size(), 0);
    for (size_t i = 0; i < d.r.size(); ++i)
        e.at(a.q(static_cast<int>(i))) = d.r[i];
    for (size_t i = 0; i < d.s.size(); ++i)
        e.at(a.u(static_cast<int>(i))) = d.s[i];
    return QUPoly::monomial(a, std::move(e));
}

QUPoly CoinvariantEngine::hilbert_series()
{
    run_to_termination();
    Alphabet a{ctx_.k, ctx_.j, 0};
    QUPoly h(a);
    for (const auto& d : computed_degrees()) {
        QUPoly m = monomial_of(a, d);
        m *= Integer(static_cast<unsigned long>(component(d).dim()));
        h += m;
    }
    return h;
}

QUPoly hilbert_from_frobenius(const FrobeniusSeries& f)
{
    Alphabet a{f.k, f.j, 0};
    QUPoly h(a);
    const CycleType id{Partition(std::vector<int>(f.n, 1))};
    for (const auto& [d, mults] : f.components) {
        Integer dim = 0;
        for (const auto& [mu, m] : mults)
            dim += m * irreducible_character(mu, id);
        QUPoly t = monomial_of(a, d);
        t *= dim;
        h += t;
    }
    return h;
}

QUPoly isotypic_slice(const FrobeniusSeries& f, const Partition& mu)
{
    Alphabet a{f.k, f.j, 0};
    QUPoly p(a);
    for (const auto& [d, mults] : f.components) {
        auto it = mults.find(mu);
        if (it == mults.end())
            continue;
        QUPoly t = monomial_of(a, d);
        t *= it->second;
        p += t;
    }
    return p;
}

CoeffTable coeff_table(const FrobeniusSeries& f)
{
    CoeffTable t{f.n, f.k, f.j, {}};
    int bound = 0;
    for (const auto& [d, m] : f.components)
        bound = std::max(bound, d.total());
    for (const auto& mu : partitions_of(f.n)) {
        QUPoly p = isotypic_slice(f, mu);
        if (p.is_zero())
            continue;
        SuperSchurExpansion e = expand_super_schur(p, f.k, f.j, f.n, bound);
        for (const auto& [lambda, c] : e.coeffs)
            t.entries[{lambda, mu}] = c;
    }
    return t;
}

// ---------------------------------------------------------------------------

namespace {

struct EngineRegistry {
    std::mutex mutex;
    EngineOptions options;
    std::map<std::tuple<int, int, int>, std::unique_ptr<CoinvariantEngine>> engines;
};

EngineRegistry& registry()
{
    static EngineRegistry r;
    return r;
}

}  // namespace

EngineOptions& default_engine_options() { return registry().options; }

CoinvariantEngine& shared_engine(int n, int k, int j)
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    auto& slot = r.engines[{n, k, j}];
    if (!slot)
        slot = std::make_unique<CoinvariantEngine>(n, k, j, r.options);
    return *slot;
}

void reset_shared_engines()
{
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    r.engines.clear();
}

}  // namespace supercoinv

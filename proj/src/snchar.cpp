#include "supercoinv/snchar.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>

namespace supercoinv {

Integer CycleType::z() const
{
    Integer z = 1;
    std::map<int, int> mult;
    for (int p : rho.parts())
        ++mult[p];
    for (auto [part, m] : mult) {
        for (int i = 0; i < m; ++i)
            z *= part;
        z *= factorial(m);
    }
    return z;
}

Integer CycleType::class_size() const { return factorial(n()) / z(); }

Permutation CycleType::representative() const
{
    Permutation perm(n());
    std::vector<int> lengths(rho.parts().rbegin(), rho.parts().rend());
    int start = 0;
    for (int len : lengths) {
        for (int i = 0; i < len; ++i)
            perm[start + i] = start + (i + 1) % len;
        start += len;
    }
    return perm;
}

CycleType cycle_type_of(const Permutation& perm)
{
    std::vector<char> seen(perm.size(), 0);
    std::vector<int> lengths;
    for (size_t p = 0; p < perm.size(); ++p) {
        if (seen[p])
            continue;
        int len = 0;
        for (size_t q = p; !seen[q]; q = static_cast<size_t>(perm[q])) {
            seen[q] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return CycleType{Partition(lengths)};
}

std::vector<CycleType> conjugacy_classes(int n)
{
    std::vector<CycleType> out;
    for (auto& p : partitions_of(n))
        out.push_back(CycleType{p});
    return out;
}

std::vector<Permutation> all_permutations(int n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int permutation_sign(const Permutation& perm)
{
    int n = static_cast<int>(perm.size());
    return ((n - cycle_type_of(perm).rho.length()) % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------------------

namespace {

struct CharacterMemo {
    std::shared_mutex mutex;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> table;
};

CharacterMemo& character_memo()
{
    static CharacterMemo memo;
    return memo;
}

// rho is consumed from the front; parts are removed largest first.
Integer mn_character(const std::vector<int>& lambda, const std::vector<int>& rho, size_t offset)
{
    if (offset == rho.size())
        return lambda.empty() ? 1 : 0;
    std::vector<int> rest(rho.begin() + static_cast<long>(offset), rho.end());
    auto key = std::make_pair(lambda, rest);
    auto& memo = character_memo();
    {
        std::shared_lock lock(memo.mutex);
        auto it = memo.table.find(key);
        if (it != memo.table.end())
            return it->second;
    }

    const int r = rho[offset];
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i)
        beta[i] = lambda[i] + (len - 1 - i);
    std::set<int> beads(beta.begin(), beta.end());

    Integer total = 0;
    for (int b : beta) {
        int target = b - r;
        if (target < 0 || beads.count(target))
            continue;
        int between = 0;
        for (int x : beta)
            if (x > target && x < b)
                ++between;
        std::vector<int> moved;
        for (int x : beta)
            moved.push_back(x == b ? target : x);
        std::sort(moved.rbegin(), moved.rend());
        std::vector<int> shape;
        for (int i = 0; i < len; ++i) {
            int part = moved[i] - (len - 1 - i);
            if (part > 0)
                shape.push_back(part);
        }
        Integer sub = mn_character(shape, rho, offset + 1);
        if (between % 2)
            total -= sub;
        else
            total += sub;
    }

    std::unique_lock lock(memo.mutex);
    memo.table.emplace(std::move(key), total);
    return total;
}

}  // namespace

Integer irreducible_character(const Partition& lambda, const CycleType& rho)
{
    if (lambda.size() != rho.n())
        throw std::invalid_argument("irreducible_character: |lambda| = " + std::to_string(lambda.size()) +
                                    " but |rho| = " + std::to_string(rho.n()));
    return mn_character(lambda.parts(), rho.rho.parts(), 0);
}

SchurMultVector frobenius_decompose(const ClassFunction& f)
{
    auto classes = conjugacy_classes(f.n);
    std::vector<Rational> values;
    for (const auto& c : classes) {
        auto it = f.values.find(c.rho);
        if (it == f.values.end())
            throw std::invalid_argument("frobenius_decompose: class function undefined at " + c.rho.str());
        values.push_back(it->second);
    }
    SchurMultVector out;
    for (const auto& mu : partitions_of(f.n)) {
        Rational m = 0;
        for (size_t i = 0; i < classes.size(); ++i) {
            if (values[i].is_zero())
                continue;
            m += values[i] * Rational(irreducible_character(mu, classes[i])) / Rational(classes[i].z());
        }
        if (!m.is_integer())
            throw NonIntegral("frobenius_decompose: multiplicity of " + mu.str() + " is " + m.str());
        if (!m.is_zero())
            out[mu] = m.numerator();
    }
    return out;
}

SchurMultVector gl_restriction_mult(const Partition& lambda, int n)
{
    if (lambda.length() > n)
        throw std::invalid_argument("gl_restriction_mult: length of " + lambda.str() + " exceeds n = " + std::to_string(n));
    const int m = lambda.size();
    auto inner = conjugacy_classes(m);
    std::vector<Rational> schur_coeff;  // chi^lambda(rho) / z_rho
    for (const auto& rho : inner)
        schur_coeff.push_back(Rational(irreducible_character(lambda, rho)) / Rational(rho.z()));

    ClassFunction trace{n, {}};
    for (const auto& tau : conjugacy_classes(n)) {
        auto power_sum = [&](int r) {
            long s = 0;
            for (int t : tau.rho.parts())
                if (r % t == 0)
                    s += t;
            return s;
        };
        Rational value = 0;
        for (size_t i = 0; i < inner.size(); ++i) {
            Integer prod = 1;
            for (int part : inner[i].rho.parts())
                prod *= power_sum(part);
            value += schur_coeff[i] * Rational(prod);
        }
        trace.values[tau.rho] = value;
    }
    return frobenius_decompose(trace);
}

}  // namespace supercoinv

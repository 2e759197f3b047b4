#include "supercoinv/qcombinat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace supercoinv {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const
{
    std::vector<int> c(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_)
        for (int i = 0; i < p; ++i)
            ++c[i];
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& other) const
{
    if (other.length() > length())
        return false;
    for (int i = 1; i <= other.length(); ++i)
        if (other.part(i) > part(i))
            return false;
    return true;
}

std::string Partition::str() const
{
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ']';
    return os.str();
}

Partition hook(int a, int b)
{
    std::vector<int> p{a};
    p.insert(p.end(), b, 1);
    return Partition(std::move(p));
}

Partition rectangle(int width, int height)
{
    if (width <= 0 || height <= 0)
        return {};
    return Partition(std::vector<int>(height, width));
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const
{
    int sa = a.size(), sb = b.size();
    if (sa != sb)
        return sa < sb;
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(), a.parts().end());
}

namespace {

void gen_partitions(int remaining, int max_part, int max_len, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0)
        return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_in_box(int n, int rows, int cols)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    if (rows <= 0 || cols <= 0)
        return out;
    std::vector<int> cur;
    gen_partitions(n, cols, rows, cur, out);
    return out;
}

bool in_Pkjn(const Partition& lambda, int k, int j, int n) { return lambda.length() <= n && lambda.part(k + 1) <= j; }

// ---------------------------------------------------------------------------

QPoly::QPoly(long constant)
{
    if (constant != 0)
        terms_[0] = constant;
}

QPoly QPoly::monomial(int exponent, Integer coeff)
{
    QPoly p;
    p.add_term(exponent, coeff);
    return p;
}

void QPoly::add_term(int e, const Integer& c)
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

Integer QPoly::coeff(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer QPoly::at_one() const
{
    Integer s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

QPoly QPoly::shifted(int by) const
{
    QPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_[e + by] = c;
    return r;
}

std::string QPoly::str(const std::string& var) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Integer a = abs(c);
        if (c < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        if (e == 0 || a != 1)
            os << a.get_str();
        if (e > 0)
            os << var;
        if (e > 1)
            os << '^' << e;
        first = false;
    }
    return os.str();
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    QPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly q_number(int d)
{
    QPoly r;
    for (int i = 0; i < d; ++i)
        r += QPoly::monomial(i);
    return r;
}

QPoly q_factorial(int d)
{
    QPoly r(1);
    for (int i = 2; i <= d; ++i)
        r *= q_number(i);
    return r;
}

QPoly q_binomial(int n, int d)
{
    if (n < 0 || d < 0 || d > n)
        return {};
    // row-by-row Pascal: [m,e] = [m-1,e-1] + q^e [m-1,e]
    std::vector<QPoly> row{QPoly(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<QPoly> next(m + 1);
        for (int e = 0; e <= m; ++e) {
            if (e >= 1)
                next[e] += row[e - 1];
            if (e <= m - 1)
                next[e] += row[e].shifted(e);
        }
        row = std::move(next);
    }
    return row[d];
}

QPoly q_stirling(int n, int d)
{
    if (n < 0 || d < 0)
        return {};
    // table[d] holds Stir_q(m, d) for the current m
    std::vector<QPoly> table(d + 1);
    table[0] = QPoly(1);
    for (int m = 1; m <= n; ++m) {
        for (int e = d; e >= 0; --e) {
            QPoly v = q_number(e) * table[e];
            if (e >= 1)
                v += table[e - 1];
            table[e] = std::move(v);
        }
    }
    return table[d];
}

QPoly sagan_swanson_sum(int n)
{
    QPoly total;
    for (int d = 0; d <= n; ++d) {
        QPoly term = q_factorial(d) * q_stirling(n, d);
        Integer sign = ((n - d) % 2 == 0) ? 1 : -1;
        total += term * QPoly::monomial(n - d, sign);
    }
    return total;
}

Integer binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(int n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace supercoinv

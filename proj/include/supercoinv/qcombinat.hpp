#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "supercoinv/rational.hpp"

namespace supercoinv {

/// Integer partition with weakly decreasing, strictly positive parts.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Trailing zeros are dropped; throws std::invalid_argument on negative
    /// or increasing parts.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// 1-based part access; parts beyond the length read as 0.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

    Partition conjugate() const;
    /// Young-diagram containment: other ⊆ *this.
    bool contains(const Partition& other) const;

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }

private:
    std::vector<int> parts_;
};

/// Hook (a, 1^b); a >= 1.
Partition hook(int a, int b);
/// Rectangle (width^height).
Partition rectangle(int width, int height);

/// The fixed total order used for every serialized table: smaller size
/// first, and within one size descending lexicographic, so (3) < (2,1) < (1,1,1).
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(int n);
/// Partitions of n whose diagram fits in a rows x cols box.
std::vector<Partition> partitions_in_box(int n, int rows, int cols);

/// Membership in P(k,j,n): at most n parts and lambda_{k+1} <= j.
bool in_Pkjn(const Partition& lambda, int k, int j, int n);

/// Univariate polynomial in q with integer coefficients, stored sparsely.
class QPoly {
public:
    QPoly() = default;
    QPoly(long constant);  // NOLINT(google-explicit-constructor)
    static QPoly monomial(int exponent, Integer coeff = 1);

    const std::map<int, Integer>& terms() const { return terms_; }
    Integer coeff(int exponent) const;
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    Integer at_one() const;
    QPoly shifted(int by) const;
    std::string str(const std::string& var = "q") const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

private:
    void add_term(int e, const Integer& c);
    std::map<int, Integer> terms_;
};

QPoly q_number(int d);
QPoly q_factorial(int d);
/// Gaussian binomial; zero unless 0 <= d <= n.
QPoly q_binomial(int n, int d);
/// Stir_q(n,d) = [d]_q Stir_q(n-1,d) + Stir_q(n-1,d-1), Stir_q(0,d) = delta_{d,0}.
QPoly q_stirling(int n, int d);
/// sum_{d=0}^n [d]_q! Stir_q(n,d) (-q)^{n-d}; identically 1.
QPoly sagan_swanson_sum(int n);

Integer binomial(int n, int k);
Integer factorial(int n);

}  // namespace supercoinv

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <vector>

#include "quiver/checked.hpp"
#include "quiver/partition.hpp"

namespace quiver {

/// Polynomial with integer coefficients in a fixed number of commuting variables
/// (at most 8; exponents at most 255). Used as an exact oracle.
class Polynomial {
public:
    explicit Polynomial(int variables = 1);

    static Polynomial constant(int variables, Coeff c);
    static Polynomial monomial(std::vector<int> exponents, Coeff c = 1);

    int variables() const noexcept { return vars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    Coeff coefficient(const std::vector<int>& exponents) const;
    void add_monomial(const std::vector<int>& exponents, Coeff c);

    /// Terms keyed by exponent vector.
    std::map<std::vector<int>, Coeff> terms() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(Coeff c) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    bool operator==(const Polynomial& other) const { return vars_ == other.vars_ && terms_ == other.terms_; }

private:
    using Key = std::uint64_t;
    void add_term(Key key, Coeff c);

    int vars_;
    std::map<Key, Coeff> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Calls `visit(rows)` for every semistandard filling of `shape` with entries in [1, max_entry].
void for_each_ssyt(const Partition& shape, int max_entry,
                   const std::function<void(const std::vector<std::vector<int>>&)>& visit);

/// The Schur polynomial s_lambda(x_1, ..., x_k) as a sum over semistandard tableaux.
Polynomial schur_eval(const Partition& lambda, int k);

/// Complete homogeneous h_m(x_1..x_k); zero for m < 0, one for m == 0.
Polynomial complete_homogeneous(int m, int k);

}  // namespace quiver

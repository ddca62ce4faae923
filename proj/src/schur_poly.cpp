#include "quiver/schur_poly.hpp"

#include "quiver/error.hpp"

namespace quiver {
namespace {

constexpr int kMaxVars = 8;

std::uint64_t pack(const std::vector<int>& exps) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > 255) throw PreconditionError("polynomial exponent out of range");
        key |= static_cast<std::uint64_t>(exps[i]) << (8 * i);
    }
    return key;
}

std::vector<int> unpack(std::uint64_t key, int vars) {
    std::vector<int> exps(vars);
    for (int i = 0; i < vars; ++i) exps[i] = static_cast<int>((key >> (8 * i)) & 0xff);
    return exps;
}

}  // namespace

Polynomial::Polynomial(int variables) : vars_(variables) {
    if (variables < 1 || variables > kMaxVars) throw PreconditionError("polynomial supports 1..8 variables");
}

Polynomial Polynomial::constant(int variables, Coeff c) {
    Polynomial p(variables);
    p.add_term(0, c);
    return p;
}

Polynomial Polynomial::monomial(std::vector<int> exponents, Coeff c) {
    Polynomial p(static_cast<int>(exponents.size()));
    p.add_term(pack(exponents), c);
    return p;
}

void Polynomial::add_monomial(const std::vector<int>& exponents, Coeff c) {
    if (static_cast<int>(exponents.size()) != vars_) throw PreconditionError("variable count mismatch");
    add_term(pack(exponents), c);
}

Coeff Polynomial::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(pack(exponents));
    return it == terms_.end() ? 0 : it->second;
}

std::map<std::vector<int>, Coeff> Polynomial::terms() const {
    std::map<std::vector<int>, Coeff> out;
    for (const auto& [key, c] : terms_) out.emplace(unpack(key, vars_), c);
    return out;
}

void Polynomial::add_term(Key key, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (vars_ != other.vars_) throw PreconditionError("variable count mismatch");
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (vars_ != other.vars_) throw PreconditionError("variable count mismatch");
    for (const auto& [key, c] : other.terms_) add_term(key, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (vars_ != other.vars_) throw PreconditionError("variable count mismatch");
    Polynomial out(vars_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : other.terms_) {
            // Packed byte-wise addition; exponents stay below 256 for oracle-sized inputs.
            for (int i = 0; i < vars_; ++i)
                if (((ka >> (8 * i)) & 0xff) + ((kb >> (8 * i)) & 0xff) > 255)
                    throw OverflowError("polynomial exponent overflow");
            out.add_term(ka + kb, checked_mul(ca, cb));
        }
    }
    return out;
}

Polynomial Polynomial::scaled(Coeff c) const {
    Polynomial out(vars_);
    for (const auto& [key, v] : terms_) out.add_term(key, checked_mul(v, c));
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [exps, c] : p.terms()) {
        os << (first ? "" : " + ") << c;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i]) os << "*x" << (i + 1) << (exps[i] > 1 ? "^" + std::to_string(exps[i]) : "");
        first = false;
    }
    return os;
}

void for_each_ssyt(const Partition& shape, int max_entry,
                   const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> rows(shape.length());
    for (std::size_t r = 0; r < shape.length(); ++r) rows[r].assign(shape[r], 0);
    const int total = shape.weight();
    auto rec = [&](auto& self, int idx, std::size_t r, int c) -> void {
        if (idx == total) {
            visit(rows);
            return;
        }
        if (c == shape[r]) {
            self(self, idx, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = rows[r][c - 1];
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
        // leave room for the strictly increasing column below
        int below = 0;
        for (std::size_t rr = r + 1; rr < shape.length() && shape[rr] > c; ++rr) ++below;
        const int hi = max_entry - below;
        for (int v = lo; v <= hi; ++v) {
            rows[r][c] = v;
            self(self, idx + 1, r, c + 1);
        }
    };
    rec(rec, 0, 0, 0);
}

Polynomial schur_eval(const Partition& lambda, int k) {
    Polynomial out(k);
    if (static_cast<int>(lambda.length()) > k) return out;
    for_each_ssyt(lambda, k, [&](const std::vector<std::vector<int>>& rows) {
        std::vector<int> exps(k, 0);
        for (const auto& row : rows)
            for (int v : row) ++exps[v - 1];
        out.add_monomial(exps, 1);
    });
    return out;
}

Polynomial complete_homogeneous(int m, int k) {
    if (m < 0) return Polynomial(k);
    return schur_eval(Partition{m}, k);
}

}  // namespace quiver

#include "quiver/tensor.hpp"

#include <optional>

#include "quiver/error.hpp"

namespace quiver {

TensorElement TensorElement::unit(std::size_t arity) {
    TensorElement e(arity);
    e.add(ShapeTuple(arity), 1);
    return e;
}

Coeff TensorElement::coefficient(const ShapeTuple& key) const {
    if (key.size() != arity_) throw ArityMismatch("shape tuple has wrong arity");
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
}

void TensorElement::add(const ShapeTuple& key, Coeff c) {
    if (key.size() != arity_) throw ArityMismatch("shape tuple has wrong arity");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
    if (other.arity_ != arity_) throw ArityMismatch("adding tensor elements of different arity");
    for (const auto& [key, c] : other.terms_) add(key, c);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const TensorElement& e) {
    if (e.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [key, c] : e.terms()) {
        os << (first ? "" : " + ") << c << "*";
        for (std::size_t i = 0; i < key.size(); ++i) os << (i ? "(x)" : "") << "s" << key[i];
        first = false;
    }
    return os;
}

TensorElement tensor_replace_block(const TensorElement& e, std::size_t position, std::size_t width,
                                   const std::function<TensorElement(std::span<const Partition>)>& replace) {
    if (position + width > e.arity()) throw ArityMismatch("replacement block exceeds tensor arity");
    std::optional<TensorElement> out;
    for (const auto& [key, c] : e.terms()) {
        const TensorElement piece = replace(std::span<const Partition>(key).subspan(position, width));
        if (!out) out.emplace(e.arity() - width + piece.arity());
        if (out->arity() != e.arity() - width + piece.arity())
            throw ArityMismatch("replacement elements have inconsistent arity");
        for (const auto& [sub, sc] : piece.terms()) {
            ShapeTuple merged(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(position));
            merged.insert(merged.end(), sub.begin(), sub.end());
            merged.insert(merged.end(), key.begin() + static_cast<std::ptrdiff_t>(position + width), key.end());
            out->add(merged, checked_mul(c, sc));
        }
    }
    // An empty input keeps the caller's arity; there is nothing to infer it from.
    return out ? *out : TensorElement(e.arity());
}

TensorElement tensor_substitute(const TensorElement& e, std::size_t position,
                                const std::map<Partition, TensorElement>& expansion) {
    std::optional<std::size_t> width;
    for (const auto& [shape, piece] : expansion) {
        if (width && *width != piece.arity()) throw ArityMismatch("expansion elements have inconsistent arity");
        width = piece.arity();
    }
    auto out = tensor_replace_block(e, position, 1, [&](std::span<const Partition> block) {
        auto it = expansion.find(block[0]);
        if (it == expansion.end()) throw MissingExpansion("no expansion given for partition " + block[0].to_string());
        return it->second;
    });
    if (e.is_zero() && width) return TensorElement(e.arity() - 1 + *width);
    return out;
}

}  // namespace quiver

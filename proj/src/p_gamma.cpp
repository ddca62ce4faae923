#include "quiver/p_gamma.hpp"

#include <map>
#include <string>

#include "quiver/error.hpp"
#include "quiver/littlewood_richardson.hpp"

namespace quiver {
namespace {

class PGamma {
public:
    PGamma(const RectDiagram& rd, ReductionOrder order) : rd_(rd), order_(order) {}

    const TensorElement& compute(const Path& gamma) {
        const std::string key = gamma.word();
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        TensorElement result = build(gamma);
        return memo_.emplace(key, std::move(result)).first->second;
    }

private:
    TensorElement build(const Path& gamma) {
        const auto red = find_reduction(gamma, order_);
        if (!red) return TensorElement::unit(gamma.length());
        const TensorElement& lower = compute(red->lower);
        if (red->kind == Reduction::Kind::Peak) {
            return tensor_replace_block(lower, red->position, 1, [&](std::span<const Partition> block) {
                TensorElement piece(2);
                for (const auto& [pair, c] : split(block[0])) piece.add({pair.first, pair.second}, c);
                return piece;
            });
        }
        const RectDims& rect = rd_.at(red->i, red->j);
        return tensor_replace_block(lower, red->position, 2, [&](std::span<const Partition> block) {
            TensorElement piece(1);
            const SignedSchur s = attach_rectangle(rect, block[1], block[0]);
            if (!s.is_zero()) piece.add({s.shape}, s.sign);
            return piece;
        });
    }

    const Coproduct& split(const Partition& mu) {
        auto it = coproducts_.find(mu);
        if (it == coproducts_.end()) it = coproducts_.emplace(mu, coproduct(mu)).first;
        return it->second;
    }

    const RectDiagram& rd_;
    ReductionOrder order_;
    std::map<std::string, TensorElement> memo_;
    std::map<Partition, Coproduct> coproducts_;
};

}  // namespace

SignedSchur attach_rectangle(const RectDims& rect, const Partition& sigma, const Partition& tau) {
    if (static_cast<int>(sigma.length()) > rect.rows) return SignedSchur::zero();
    IntSeq seq;
    seq.reserve(rect.rows + tau.length());
    for (int k = 0; k < rect.rows; ++k) seq.push_back(rect.cols + sigma[k]);
    seq.insert(seq.end(), tau.parts().begin(), tau.parts().end());
    return straighten(seq);
}

TensorElement compute_P(const Path& gamma, const RectDiagram& rd, ReductionOrder order) {
    if (gamma.n() != rd.n()) throw InvalidPath("path and diagram have different n");
    PGamma engine(rd, order);
    return engine.compute(gamma);
}

Coeff coefficient(const Path& gamma, const RectDiagram& rd, const ShapeTuple& shapes) {
    if (shapes.size() != gamma.length()) throw ArityMismatch("shape tuple length differs from path length");
    return compute_P(gamma, rd).coefficient(shapes);
}

}  // namespace quiver

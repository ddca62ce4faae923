#include "quiver/littlewood_richardson.hpp"

#include <vector>

namespace quiver {
namespace {

// Walks LR fillings of mu/sigma cell by cell in reverse reading order (rows top
// to bottom, each row right to left), keeping the reading word a lattice word.
// `cap`, when non-null, bounds the content from above.
class LrFiller {
public:
    LrFiller(const Partition& mu, const Partition& sigma, const Partition* cap)
        : mu_(mu), sigma_(sigma), cap_(cap), grid_(mu.length()), content_(mu.length() + 2, 0) {
        for (std::size_t r = 0; r < mu.length(); ++r) grid_[r].assign(mu[r], 0);
        for (std::size_t r = 0; r < mu.length(); ++r)
            for (int c = mu[r] - 1; c >= sigma[r]; --c) cells_.push_back({static_cast<int>(r), c});
    }

    template <typename Visit>
    void run(Visit&& visit) {
        if (!sigma_.contained_in(mu_)) return;
        step(0, visit);
    }

private:
    struct Cell {
        int row, col;
    };

    template <typename Visit>
    void step(std::size_t idx, Visit& visit) {
        if (idx == cells_.size()) {
            visit(content_);
            return;
        }
        const auto [r, c] = cells_[idx];
        int hi = r + 1;  // entries in row r of an LR tableau never exceed r+1
        if (c + 1 < mu_[r]) hi = std::min(hi, grid_[r][c + 1]);
        int lo = 1;
        if (r > 0 && c >= sigma_[r - 1]) lo = grid_[r - 1][c] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (v > 1 && content_[v] + 1 > content_[v - 1]) continue;
            if (cap_ && content_[v] + 1 > (*cap_)[v - 1]) continue;
            grid_[r][c] = v;
            ++content_[v];
            step(idx + 1, visit);
            --content_[v];
        }
        grid_[r][c] = 0;
    }

    const Partition& mu_;
    const Partition& sigma_;
    const Partition* cap_;
    std::vector<std::vector<int>> grid_;
    std::vector<int> content_;  // 1-based
    std::vector<Cell> cells_;
};

}  // namespace

Coeff lr_coeff(const Partition& sigma, const Partition& tau, const Partition& mu) {
    if (sigma.weight() + tau.weight() != mu.weight() || !sigma.contained_in(mu)) return 0;
    Coeff count = 0;
    LrFiller(mu, sigma, &tau).run([&](const std::vector<int>&) { count = checked_add(count, 1); });
    return count;
}

Coproduct coproduct(const Partition& mu) {
    Coproduct out;
    for (const auto& sigma : subpartitions(mu)) {
        LrFiller(mu, sigma, nullptr).run([&](const std::vector<int>& content) {
            std::vector<int> parts(content.begin() + 1, content.end());
            auto& slot = out[{sigma, Partition(std::move(parts))}];
            slot = checked_add(slot, 1);
        });
    }
    return out;
}

}  // namespace quiver

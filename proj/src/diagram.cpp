#include "quiver/diagram.hpp"

#include <algorithm>

#include "quiver/error.hpp"

namespace quiver {

RankConditions RankConditions::from_diagonals(const std::vector<std::vector<int>>& diagonals) {
    if (diagonals.size() < 2) throw InvalidRankConditions("rank triangle needs at least two rows (n >= 1)");
    RankConditions rc;
    rc.n_ = static_cast<int>(diagonals.size()) - 1;
    rc.r_.assign(rc.n_ + 1, std::vector<int>(rc.n_ + 1, 0));
    for (int d = 0; d <= rc.n_; ++d) {
        if (static_cast<int>(diagonals[d].size()) != rc.n_ + 1 - d)
            throw InvalidRankConditions("rank triangle row " + std::to_string(d) + " has length " +
                                        std::to_string(diagonals[d].size()) + ", expected " +
                                        std::to_string(rc.n_ + 1 - d));
        for (int i = 0; i + d <= rc.n_; ++i) {
            if (diagonals[d][i] < 0) throw InvalidRankConditions("ranks must be nonnegative");
            rc.r_[i][i + d] = diagonals[d][i];
        }
    }
    return rc;
}

std::vector<std::vector<int>> RankConditions::diagonals() const {
    std::vector<std::vector<int>> out(n_ + 1);
    for (int d = 0; d <= n_; ++d)
        for (int i = 0; i + d <= n_; ++i) out[d].push_back(r_[i][i + d]);
    return out;
}

bool RankConditions::can_occur() const {
    for (int i = 0; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
            if (r_[i][j] > std::min(r_[i][j - 1], r_[i + 1][j])) return false;
            if (j - i >= 2 && r_[i][j] - r_[i][j - 1] - r_[i + 1][j] + r_[i + 1][j - 1] < 0) return false;
        }
    }
    return true;
}

RectDiagram::RectDiagram(int n) : n_(n), dims_(n + 1, std::vector<RectDims>(n + 1)) {
    if (n < 1) throw PreconditionError("rectangle diagram needs n >= 1");
}

const RectDims& RectDiagram::at(int i, int j) const {
    if (i < 0 || i >= j || j > n_) throw PreconditionError("rectangle index out of range");
    return dims_[i][j];
}

void RectDiagram::set(int i, int j, RectDims dims) {
    if (i < 0 || i >= j || j > n_) throw PreconditionError("rectangle index out of range");
    if (dims.rows < 0 || dims.cols < 0) throw PreconditionError("rectangle sides must be nonnegative");
    dims_[i][j] = dims;
}

bool RectDiagram::is_valid() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
            const auto& r = dims_[i][j];
            if (r.rows < 0 || r.cols < 0) return false;
            if (j + 1 <= n_ && dims_[i][j + 1].rows > r.rows) return false;
            if (i >= 1 && dims_[i - 1][j].cols > r.cols) return false;
        }
    }
    return true;
}

RectDiagram RectDiagram::bottom_rows() const {
    if (n_ < 2) throw PreconditionError("bottom_rows needs n >= 2");
    RectDiagram out(n_ - 1);
    for (int i = 0; i < n_ - 1; ++i)
        for (int j = i + 1; j <= n_ - 1; ++j) out.dims_[i][j] = dims_[i][j + 1];
    return out;
}

RectDiagram rect_diagram_of(const RankConditions& rc) {
    if (!rc.can_occur()) throw InvalidRankConditions("rank conditions cannot occur");
    RectDiagram rd(rc.n());
    for (int i = 0; i < rc.n(); ++i)
        for (int j = i + 1; j <= rc.n(); ++j)
            rd.set(i, j, {rc.at(i + 1, j) - rc.at(i, j), rc.at(i, j - 1) - rc.at(i, j)});
    return rd;
}

int expected_codim(const RectDiagram& rd) {
    int total = 0;
    for (int i = 0; i < rd.n(); ++i)
        for (int j = i + 1; j <= rd.n(); ++j) total += rd.at(i, j).boxes();
    return total;
}

RectDiagram random_rect_diagram(int n, int max_dim, Rng& rng) {
    if (n < 1 || max_dim < 0) throw PreconditionError("random_rect_diagram needs n >= 1 and max_dim >= 0");
    RectDiagram rd(n);
    // Top row first, so the upper rectangles are as likely to be large as the lower ones.
    for (int d = n; d >= 1; --d) {
        for (int i = 0; i + d <= n; ++i) {
            const int j = i + d;
            const int row_floor = j < n ? rd.at(i, j + 1).rows : 0;
            const int col_floor = i > 0 ? rd.at(i - 1, j).cols : 0;
            rd.set(i, j, {rng.uniform(row_floor, max_dim), rng.uniform(col_floor, max_dim)});
        }
    }
    return rd;
}

RectDiagram random_rect_diagram(int n, int max_dim, std::uint64_t seed) {
    Rng rng(seed);
    return random_rect_diagram(n, max_dim, rng);
}

Path::Path(int n, std::vector<Step> steps) : n_(n), steps_(std::move(steps)) {
    if (n < 1) throw InvalidPath("paths need n >= 1");
    int i = 0, j = 0;
    for (Step s : steps_) {
        switch (s) {
            case Step::Down: ++j; break;
            case Step::Up: ++i; break;
            case Step::Flat: ++i, ++j; break;
            default: throw InvalidPath("unknown step");
        }
        if (i > j || j > n) throw InvalidPath("path " + word() + " leaves the rank diagram");
    }
    if (i != n || j != n) throw InvalidPath("path " + word() + " does not end at r_nn");
}

Path Path::parse(const std::string& word) {
    std::vector<Step> steps;
    int ups = 0, downs = 0, flats = 0;
    for (char ch : word) {
        switch (ch) {
            case 'U': steps.push_back(Step::Up), ++ups; break;
            case 'D': steps.push_back(Step::Down), ++downs; break;
            case 'H':
            case 'F': steps.push_back(Step::Flat), ++flats; break;
            default: throw InvalidPath(std::string("invalid step letter '") + ch + "' in path " + word);
        }
    }
    if (ups != downs) throw InvalidPath("path " + word + " has unequal numbers of U and D steps");
    return Path(ups + flats, std::move(steps));
}

Path Path::lowest(int n) {
    std::vector<Step> steps(n, Step::Down);
    steps.insert(steps.end(), n, Step::Up);
    return Path(n, std::move(steps));
}

Path Path::top(int n) { return Path(n, std::vector<Step>(n, Step::Flat)); }

std::pair<int, int> Path::vertex(std::size_t k) const {
    int i = 0, j = 0;
    for (std::size_t s = 0; s < k; ++s) {
        if (steps_[s] != Step::Down) ++i;
        if (steps_[s] != Step::Up) ++j;
    }
    return {i, j};
}

bool Path::is_lowest() const { return *this == lowest(n_); }

std::string Path::word() const {
    std::string out;
    for (Step s : steps_) out.push_back(static_cast<char>(s));
    return out;
}

std::optional<Reduction> find_reduction(const Path& path, ReductionOrder order) {
    const auto& steps = path.steps();
    const std::size_t len = steps.size();
    auto try_at = [&](std::size_t k) -> std::optional<Reduction> {
        if (steps[k] == Step::Flat) {
            auto lower = steps;
            lower[k] = Step::Down;
            lower.insert(lower.begin() + static_cast<std::ptrdiff_t>(k) + 1, Step::Up);
            const auto [i, j] = path.vertex(k);
            return Reduction{Reduction::Kind::Flat, k, Path(path.n(), std::move(lower)), i, j + 1};
        }
        if (k + 1 < len && steps[k] == Step::Up && steps[k + 1] == Step::Down) {
            auto lower = steps;
            lower[k] = Step::Flat;
            lower.erase(lower.begin() + static_cast<std::ptrdiff_t>(k) + 1);
            return Reduction{Reduction::Kind::Peak, k, Path(path.n(), std::move(lower))};
        }
        return std::nullopt;
    };
    if (order == ReductionOrder::Leftmost) {
        for (std::size_t k = 0; k < len; ++k)
            if (auto r = try_at(k)) return r;
    } else {
        for (std::size_t k = len; k-- > 0;)
            if (auto r = try_at(k)) return r;
    }
    return std::nullopt;
}

Path random_path(int n, Rng& rng) {
    std::vector<Step> steps;
    int i = 0, j = 0;
    while (i != n || j != n) {
        std::vector<Step> legal;
        if (j + 1 <= n) legal.push_back(Step::Down), legal.push_back(Step::Flat);
        if (i + 1 <= j) legal.push_back(Step::Up);
        const Step s = legal[rng.below(legal.size())];
        steps.push_back(s);
        if (s != Step::Down) ++i;
        if (s != Step::Up) ++j;
    }
    return Path(n, std::move(steps));
}

}  // namespace quiver

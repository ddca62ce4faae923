#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quiver/rng.hpp"

namespace quiver {

/// Rank conditions r_ij, 0 <= i <= j <= n, for a sequence E_0 -> ... -> E_n.
/// r_ii is the rank of E_i.
class RankConditions {
public:
    /// `diagonals[d][i]` holds r_{i,i+d}: row d of the triangular rank diagram.
    /// Throws InvalidRankConditions on a malformed triangle or negative entry.
    static RankConditions from_diagonals(const std::vector<std::vector<int>>& diagonals);

    int n() const noexcept { return n_; }
    int at(int i, int j) const { return r_.at(i).at(j); }
    std::vector<std::vector<int>> diagonals() const;

    /// Whether some linear maps V_0 -> ... -> V_n realize the ranks.
    bool can_occur() const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> r_;
};

struct RectDims {
    int rows = 0;
    int cols = 0;
    int boxes() const noexcept { return rows * cols; }
    auto operator<=>(const RectDims&) const = default;
};

/// Triangle of rectangles R_ij, 0 <= i < j <= n. R_{i,j+1} sits south-east of
/// R_ij and R_{i-1,j} south-west of it.
class RectDiagram {
public:
    RectDiagram() = default;
    explicit RectDiagram(int n);

    int n() const noexcept { return n_; }
    const RectDims& at(int i, int j) const;
    void set(int i, int j, RectDims dims);

    /// Rows never grow moving south-east and columns never grow moving south-west:
    /// rows(R_ij) >= rows(R_{i,j+1}) and cols(R_ij) >= cols(R_{i-1,j}).
    bool is_valid() const;

    /// The diagram of the bottom n-1 rows (R_{i,j+1} becomes R'_{ij}).
    RectDiagram bottom_rows() const;

    auto operator<=>(const RectDiagram&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<RectDims>> dims_;
};

/// R_ij has r_{i+1,j} - r_ij rows and r_{i,j-1} - r_ij columns.
/// Throws InvalidRankConditions when the ranks cannot occur.
RectDiagram rect_diagram_of(const RankConditions& rc);

/// Total box count; the expected codimension d(r) for rank-derived diagrams.
int expected_codim(const RectDiagram& rd);

/// Random valid diagram with every side at most max_dim.
RectDiagram random_rect_diagram(int n, int max_dim, Rng& rng);
RectDiagram random_rect_diagram(int n, int max_dim, std::uint64_t seed);

enum class Step : char { Up = 'U', Down = 'D', Flat = 'H' };

/// Monotone path through the rank diagram from r_00 to r_nn. Vertex (i,j)
/// stands for r_ij; Down goes to (i,j+1), Up to (i+1,j), Flat to (i+1,j+1).
class Path {
public:
    /// Throws InvalidPath if a vertex leaves 0 <= i <= j <= n or the end is not (n,n).
    Path(int n, std::vector<Step> steps);
    /// Word over U, D, H (F is accepted for H); n is inferred from the step counts.
    static Path parse(const std::string& word);

    static Path lowest(int n);
    static Path top(int n);

    int n() const noexcept { return n_; }
    std::size_t length() const noexcept { return steps_.size(); }
    const std::vector<Step>& steps() const noexcept { return steps_; }
    Step operator[](std::size_t k) const { return steps_.at(k); }
    /// Vertex before step k; vertex(length()) is (n,n).
    std::pair<int, int> vertex(std::size_t k) const;
    bool is_lowest() const;
    std::string word() const;

    auto operator<=>(const Path&) const = default;

private:
    int n_;
    std::vector<Step> steps_;
};

enum class ReductionOrder { Leftmost, Rightmost };

/// One lowering step. A peak (Up, Down) at `position` merges into a Flat step;
/// a Flat step at `position` opens into (Down, Up) around rectangle R_{i,j}.
struct Reduction {
    enum class Kind { Peak, Flat };
    Kind kind;
    std::size_t position;
    Path lower;
    int i = 0, j = 0;  // rectangle of the triangle, for Kind::Flat
};

/// The lowering step used by every recursion; nullopt for the lowest path.
std::optional<Reduction> find_reduction(const Path& path, ReductionOrder order = ReductionOrder::Leftmost);

/// Random path through the diagram of size n; uniform choice among the legal
/// steps at each vertex.
Path random_path(int n, Rng& rng);

}  // namespace quiver

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "quiver/checked.hpp"
#include "quiver/diagram.hpp"
#include "quiver/factorization.hpp"
#include "quiver/fomin.hpp"
#include "quiver/partition.hpp"
#include "quiver/rng.hpp"
#include "quiver/tableau.hpp"

namespace support {

using quiver::Coeff;
using quiver::Partition;
using quiver::Path;
using quiver::RectDiagram;
using quiver::Rng;
using quiver::Row;
using quiver::Tableau;

// ---- generators ----

std::vector<Tableau> all_tableaux(const Partition& shape, int max_entry);
/// Every tableau with at most max_boxes boxes and entries in [1, max_entry].
std::vector<Tableau> all_tableaux_up_to(int max_boxes, int max_entry);
/// Row-inserts a random word; the result has at most max_rows rows (rejection).
Tableau random_tableau(Rng& rng, int max_boxes, int max_entry, int max_rows = 1 << 20);
std::vector<Path> all_paths(int n);
/// Every valid rectangle diagram of size n with sides at most max_dim.
std::vector<RectDiagram> all_rect_diagrams(int n, int max_dim);
/// Distinct rectangle diagrams of rank tables with n + 1 rows and ranks at most max_rank.
std::vector<RectDiagram> rank_derived_diagrams(int n, int max_rank);
Row first_column(const Tableau& t);

// ---- oracles ----

/// Polynomial in the commuting variables h_1, h_2, ...; key = exponent vector.
using HPoly = std::map<std::vector<int>, Coeff>;
/// det(h_{I_k + l - k}) expanded by the Leibniz formula.
HPoly jacobi_trudi(std::span<const int> seq);
/// Number of standard Young tableaux (hook length formula).
Coeff standard_count(const Partition& shape);
/// Factorizations w = p * q of the given shapes, by trying every pair of
/// tableaux with the right shapes and contents.
std::set<quiver::TableauPair> brute_factorizations(const Tableau& w, const Partition& sigma, const Partition& tau);
/// Two-row diagrams with row lengths (|bottom| - 1, |top| + 1), the same content
/// and the same rect as (top, bottom).
std::vector<std::pair<Row, Row>> two_row_partners(const Row& top, const Row& bottom);

// ---- suites shared by unit tests and the acceptance runner ----

struct SuiteResult {
    long checks = 0;
    long failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
    bool ok() const { return failures == 0 && checks > 0; }
};

SuiteResult straighten_vs_jacobi_trudi(int max_len, int max_entry);
SuiteResult lr_vs_schur_products(int max_weight, int variables);
SuiteResult lr_vs_standard_counts(int max_weight);
SuiteResult factorization_count_vs_lr(int max_boxes, int max_entry);
SuiteResult factorizations_vs_brute_force(int max_boxes, int max_entry);
SuiteResult two_row_uniqueness(int max_boxes, int alphabet);

SuiteResult order_independence(const std::vector<RectDiagram>& diagrams);
SuiteResult homogeneity_and_sides(const std::vector<RectDiagram>& diagrams);
SuiteResult fomin_properties(int pairs, int max_boxes, int max_a, std::uint64_t seed);
SuiteResult factor_shift_closure(const std::vector<RectDiagram>& diagrams);
SuiteResult flat_opening_closure(const std::vector<RectDiagram>& diagrams);

}  // namespace support

#pragma once

#include <lda/graph.hpp>
#include <lda/labeling.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lda {

struct SearchBudget {
    std::uint64_t max_nodes = 1'000'000'000;
    int max_vertices = 11;
    int threads = 1;
    // Restrict label 1 to automorphism orbit representatives.
    bool symmetry = false;
};

// Default budget with max_nodes taken from LDA_BUDGET when set.
auto budget_from_env() -> SearchBudget;

struct SolveResult {
    int lower = 0;
    std::optional<int> upper;
    std::optional<Labeling> witness;
    std::uint64_t nodes_explored = 0;
    // The search ran to completion, so lower == upper.
    bool exhausted = false;
};

// Extra acceptance test applied to complete labelings.
using LabelingFilter = std::function<bool(const Labeling &)>;

auto chi_ld_exact(const Graph & g, const SearchBudget & budget = {}) -> SolveResult;

enum class Feasibility { found, absent, indeterminate };

struct FeasibilityResult {
    Feasibility status = Feasibility::indeterminate;
    std::optional<Labeling> witness;
    std::uint64_t nodes_explored = 0;
};

auto exists_lda_with_at_most(const Graph & g, int k, const SearchBudget & budget = {},
                             const LabelingFilter & filter = {}) -> FeasibilityResult;

auto chi_exact(const Graph & g) -> int;

// Orbits of the automorphism group, each sorted, ordered by smallest member.
auto automorphism_orbits(const Graph & g) -> std::vector<std::vector<int>>;

enum class TableFamily { cycles, paths, complete, friendship, books, wheels };

auto parse_table_family(const std::string & name) -> TableFamily;
auto table_family_name(TableFamily family) -> std::string;
auto table_family_min(TableFamily family) -> int;

struct KnownValue {
    int lower;
    int upper;
};

// Published value or interval for the family member with parameter n.
auto known_value(TableFamily family, int n) -> std::optional<KnownValue>;

struct TableRow {
    std::string instance;
    int parameter = 0;
    int order = 0;
    SolveResult result;
    std::optional<KnownValue> known;
    // Empty when the search ran out of budget.
    std::optional<bool> agrees;
};

auto reproduce_table(TableFamily family, int from, int to, const SearchBudget & budget = {}) -> std::vector<TableRow>;
auto format_table(const std::vector<TableRow> & rows) -> std::string;
auto format_table_csv(const std::vector<TableRow> & rows) -> std::string;

} // namespace lda

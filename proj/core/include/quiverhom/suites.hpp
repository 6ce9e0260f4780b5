#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quiverhom/catalog.hpp"
#include "quiverhom/roots.hpp"

namespace quiverhom {

// ---- named graphs --------------------------------------------------------

/// "A<n>", "D<n>", "E6".."E8", "E6t".."E8t" (also "E6~"). Dynkin graphs are
/// paths or stars with every arrow pointing towards the higher vertex index;
/// extended E graphs have every arrow pointing at the center.
Quiver named_graph(const std::string& name);

/// Every orientation when `count` is empty and the graph has at most 6
/// edges; otherwise `count` (default 5) seeded random orientations.
/// Reorientation keeps vertex order and arrow ids.
std::vector<Quiver> orientations(const Quiver& base, std::optional<std::size_t> count, Rng& rng);

/// n(n+1)/2, n(n-1), 36, 63, 120 for A_n, D_n, E6, E7, E8.
std::size_t expected_root_count(const GraphShape& shape);

// ---- suite reports -------------------------------------------------------

struct SuiteCheck {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;
    std::vector<std::pair<std::string, std::int64_t>> counters;
    std::vector<std::string> witnesses; // capped
    double seconds = 0;

    bool passed() const;
    void check(std::string name, bool ok, std::string detail = {});
    void count(const std::string& key, std::int64_t delta = 1);
    std::int64_t counter(const std::string& key) const;
    void witness(std::string text);
};

std::string suite_report_text(const SuiteReport& r);
std::string suite_report_json(const SuiteReport& r, int indent = 2);

// ---- suites --------------------------------------------------------------

struct DynkinSuiteOptions {
    std::vector<std::string> graphs = {"A4", "D4", "D5", "E6", "E7", "E8"};
    std::optional<std::size_t> orientations; // empty: exhaustive where feasible
    bool construct = true;                   // build exceptional sets and pair tables
    ConstructionConfig construction;
};

/// Root counts, thin/hill classification and orientation independence; with
/// `construct`, exceptional sets, Ext-nontrivial couples and maximal rank.
SuiteReport run_dynkin_suite(const DynkinSuiteOptions& opt);

struct ExtendedSuiteOptions {
    std::vector<std::string> types = {"E6t", "E7t", "E8t"};
    std::size_t max_level = 1;
    bool construct = true;
    ConstructionConfig construction;
};

SuiteReport run_extended_suite(const ExtendedSuiteOptions& opt);

struct CatalogSuiteOptions {
    std::size_t max_m = 5;
    FieldSpec field;
    std::uint64_t seed = 0;
    /// Real roots up to this level are also sampled with construct_exceptional.
    std::size_t construct_levels = 3;
};

/// q1 or q2: couples, RP properties, single degree; q1 also compares
/// construction results against the catalog patterns, q2 also runs the
/// re-oriented square witness.
SuiteReport run_catalog_suite(CatalogQuiver tag, const CatalogSuiteOptions& opt);

struct FuzzOptions {
    std::size_t cases = 500;
    std::size_t max_vertices = 6;
    std::int64_t max_dim = 4;
    FieldSpec field;
    std::uint64_t seed = 0;
};

/// A random loop-free quiver on 1..max_vertices vertices (parallel arrows
/// allowed) and two random representations of dims <= max_dim.
std::pair<Representation, Representation> random_pair(const FuzzOptions& opt, Rng& rng);

/// hom - ext1 == <a, b>, with ext1 taken from the cokernel of F.
SuiteReport run_euler_fuzz_suite(const FuzzOptions& opt);

/// hom and ext1 of (r, s) against (dual s, dual r), and equal max_rank.
SuiteReport run_duality_suite(const FuzzOptions& opt);

struct HillSuiteOptions {
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    std::vector<std::int64_t> center_values = {3, 6};
};

/// Stars with three rays of length 2 or 3.
SuiteReport run_hill_suite(const HillSuiteOptions& opt);

} // namespace quiverhom

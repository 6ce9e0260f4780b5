#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quiverhom/exceptional.hpp"
#include "quiverhom/roots.hpp"

namespace quiverhom {

// Representation JSON:
//
//   {"quiver": {"vertices": [...], "arrows": [{"id": 0, "source": "a", "target": "b"}, ...]},
//    "field": "fp:2147483647",
//    "dims": {"a": 1, ...},
//    "maps": {"0": [[1, 0]], ...}}
//
// Matrix entries are integers, or "p/q" strings for non-integral rationals.
// Output is deterministic, so read -> write reproduces the same bytes.
std::string representation_to_json(const Representation& r, int indent = 2);
Representation representation_from_json(std::string_view text); // throws format_error

std::string hom_report_json(const HomReport& h, int indent = 2);

/// Header row of labels, then one row per representation with `hom/ext1` cells.
std::string pair_table_csv(const PairTable& t);
/// {"labels": [...], "cells": [[{hom, ext1, euler, f_rank, f_rows, f_cols, max_rank}, ...], ...]}
std::string pair_table_json(const PairTable& t, int indent = 2);

struct RootListing {
    DimVector root;
    RootClassification cls;
};

std::vector<RootListing> classify_all(const Quiver& q, const std::vector<DimVector>& roots);

/// "1,0,2 thin" lines followed by "total <n>".
std::string roots_text(const std::vector<RootListing>& roots);
std::string roots_csv(const Quiver& q, const std::vector<RootListing>& roots);
std::string roots_json(const Quiver& q, const std::vector<RootListing>& roots, int indent = 2);

} // namespace quiverhom

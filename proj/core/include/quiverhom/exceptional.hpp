#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "quiverhom/representation.hpp"

namespace quiverhom {

struct ConstructionConfig {
    FieldSpec field;
    std::uint64_t seed = 0x5eed;
    std::size_t max_retries = 8;
};

struct ConstructionFailure {
    DimVector root;
    std::size_t attempts = 0;
};

/// Seed used for attempt `attempt` (0-based) at `root`.
std::uint64_t attempt_seed(std::uint64_t seed, const DimVector& root, std::size_t attempt);

/// Samples uniformly random arrow matrices of shape `a` until the sample is
/// exceptional or max_retries attempts are used up. Throws precondition_error
/// unless `a` is a real root.
std::variant<Representation, ConstructionFailure>
construct_exceptional(const Quiver& q, const DimVector& a, const ConstructionConfig& cfg);

struct ExceptionalSet {
    std::vector<Representation> reps;
    std::vector<std::string> labels;
    std::vector<ConstructionFailure> failures;
};

/// One construction per root, in the given order; failures are collected, not thrown.
ExceptionalSet construct_all(const Quiver& q, const std::vector<DimVector>& roots,
                             const ConstructionConfig& cfg);

struct PairTable {
    std::vector<std::string> labels;
    std::vector<std::vector<HomReport>> cells; // cells[i][j] = hom_report(rep i, rep j)

    std::size_t size() const { return labels.size(); }
    const HomReport& at(std::size_t i, std::size_t j) const { return cells.at(i).at(j); }
};

/// Labels default to the dimension vectors. Throws precondition_error for a
/// non-exceptional entry and mismatch_error for mixed quivers or fields.
PairTable pair_table(const std::vector<Representation>& reps, std::vector<std::string> labels = {});

/// Unordered pairs {i, j}, i < j, with ext1 nonzero in both directions.
std::vector<std::pair<std::size_t, std::size_t>> ext_nontrivial_couples(const PairTable& table);

struct MaxRankViolation {
    std::size_t row;
    std::size_t col;
    std::string row_label;
    std::string col_label;
    HomReport report;
};

struct MaxRankReport {
    std::size_t pairs_checked = 0;
    std::vector<MaxRankViolation> violations;
};

/// Every ordered pair, diagonal included.
MaxRankReport scan_max_rank(const Quiver& q, const std::vector<Representation>& reps);
MaxRankReport scan_max_rank(const PairTable& table);

/// Every arrow matrix has maximal rank.
bool arrow_ranks_max(const Representation& r);

} // namespace quiverhom

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quiverhom/matrix.hpp"
#include "quiverhom/quiver.hpp"

namespace quiverhom {

enum class Reality { real, imaginary, not_root };
enum class RootShape { thin, hill, other };

std::string to_string(Reality r);
std::string to_string(RootShape s);

/// Thin wins over hill when a vector is both; hill_compatible records the
/// hill inequalities separately.
struct RootClassification {
    Reality reality = Reality::not_root;
    RootShape shape = RootShape::other;
    bool hill_compatible = false;

    bool operator==(const RootClassification&) const = default;
};

/// <a, a> == 1. Throws precondition_error for the zero vector.
bool is_real_root(const Quiver& q, const DimVector& a);

/// Every nonzero entry equals 1. Throws precondition_error for the zero vector.
bool is_thin(const DimVector& a);

/// Along every ray of the star: nondecreasing towards the splitting vertex,
/// with the entry next to the center strictly positive. Throws
/// unsupported_shape_error when the shape has no star structure.
bool is_hill(const GraphShape& shape, const DimVector& a);

RootClassification classify_root(const Quiver& q, const DimVector& a);
RootClassification classify_root(const Quiver& q, const GraphShape& shape, const DimVector& a);

/// Positive roots of a Dynkin quiver: closure of the simple roots under the
/// simple reflections of the symmetrized form, sorted lexicographically.
/// Throws unsupported_shape_error for non-Dynkin quivers.
std::vector<DimVector> positive_roots(const Quiver& q);

/// The vertex removed to obtain the embedded Dynkin diagram of an extended
/// Dynkin quiver of type E6~, E7~, E8~: the free end of the longest ray.
std::size_t extending_vertex(const Quiver& q);

/// Positive generator of the radical of the symmetrized form, gcd 1.
/// Throws unsupported_shape_error for non-extended-Dynkin quivers and
/// internal_error when the radical is not one-dimensional or delta(extending
/// vertex) != 1.
DimVector minimal_imaginary_root(const Quiver& q);

/// Positive real roots a*delta +- x, 0 <= a <= max_level, x a positive root of
/// the embedded Dynkin quiver; deduplicated and sorted.
std::vector<DimVector> real_roots_extended(const Quiver& q, std::size_t max_level);

// ---- hill arithmetic -----------------------------------------------------

struct HillClauseResult {
    std::size_t tested = 0;
    std::size_t excluded = 0; // samples failing the clause hypotheses
    std::vector<std::string> counterexamples;
};

struct HillArithmeticReport {
    HillClauseResult sum;           // hill + hill is hill
    HillClauseResult delta_thin;    // delta +- thin is hill
    HillClauseResult delta_minus;   // bounded-increment hill alpha: delta - alpha is hill

    bool passed() const {
        return sum.counterexamples.empty() && delta_thin.counterexamples.empty() &&
               delta_minus.counterexamples.empty();
    }
};

/// The star-profile vector with delta(center) = center_value and
/// delta(x_i) = i / k * center_value on every ray x_1 - ... - x_{k-1} - center.
/// Returns nothing when some ray length k does not divide center_value.
std::optional<DimVector> star_profile(const GraphShape& shape, std::size_t vertex_count,
                                      std::int64_t center_value);

/// Property checks of the hill arithmetic on a star shape. Each clause runs
/// `samples` accepted cases; delta clauses run once per admissible profile
/// value in `center_values` (values below 3 or not divisible by every ray
/// length are skipped).
HillArithmeticReport hill_arithmetic_checks(const GraphShape& shape, std::size_t vertex_count,
                                            std::size_t samples, Rng& rng,
                                            const std::vector<std::int64_t>& center_values = {3, 6});

} // namespace quiverhom

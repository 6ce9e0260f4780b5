#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace quiverhom {

using Rational = mpq_class;

struct Arrow {
    std::size_t id;
    std::size_t source; // vertex index
    std::size_t target; // vertex index

    bool operator==(const Arrow&) const = default;
};

/// Finite directed multigraph. Vertex order is declaration order and is the
/// canonical order used for every vector and block layout in the library.
class Quiver {
public:
    Quiver() = default;

    /// Arrows are given as (source label, target label) and receive ids 0, 1, ...
    Quiver(std::vector<std::string> vertices,
           const std::vector<std::pair<std::string, std::string>>& arrows);

    /// Arrows with explicit ids; ids must be distinct.
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }

    const std::vector<std::string>& vertices() const { return labels_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::string& label(std::size_t vertex) const { return labels_.at(vertex); }

    std::optional<std::size_t> find_vertex(std::string_view label) const;
    std::size_t vertex_index(std::string_view label) const; // throws precondition_error

    /// Position of the arrow with the given id in arrows().
    std::optional<std::size_t> arrow_position(std::size_t id) const;

    bool has_self_loop() const;

    bool operator==(const Quiver& other) const {
        return labels_ == other.labels_ && arrows_ == other.arrows_;
    }

private:
    void index_labels();

    std::vector<std::string> labels_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Nonnegative integer vector indexed by the vertices of a quiver, in
/// canonical vertex order.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::vector<std::int64_t> entries);
    DimVector(std::initializer_list<std::int64_t> entries)
        : DimVector(std::vector<std::int64_t>(entries)) {}

    static DimVector zero(std::size_t n) { return DimVector(std::vector<std::int64_t>(n, 0)); }
    static DimVector simple(std::size_t n, std::size_t i);

    std::size_t size() const { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::int64_t>& entries() const { return entries_; }

    std::vector<std::size_t> support() const;
    bool is_zero() const;
    std::int64_t total() const;

    DimVector operator+(const DimVector& other) const;

    /// "1,0,2"
    std::string to_string() const;
    static DimVector parse(std::string_view text); // comma separated

    bool operator==(const DimVector&) const = default;
    auto operator<=>(const DimVector&) const = default;

private:
    std::vector<std::int64_t> entries_;
};

// ---- text format ---------------------------------------------------------

/// Parses the line-oriented quiver format:
///
///     vertices: a b c
///     arrows: a->b a->c c->b
///
/// `#` starts a comment; blank lines are ignored.
Quiver parse_quiver(std::string_view text);
std::string serialize_quiver(const Quiver& q);

// ---- forms ---------------------------------------------------------------

/// Euler form: sum_i a_i b_i - sum_arrows a_{s(x)} b_{t(x)}.
std::int64_t euler_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// (<a,b> + <b,a>) / 2.
Rational symmetrized_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// Same vertices and arrow ids, every arrow reversed.
Quiver dual_quiver(const Quiver& q);

/// Induced subquiver on the given vertex labels (kept in the original order).
Quiver restrict_quiver(const Quiver& q, std::span<const std::string> vertices);
Quiver restrict_quiver(const Quiver& q, std::span<const std::size_t> vertices);

/// Same underlying graph, arrows flipped where bit i of `flips` is set.
Quiver reorient(const Quiver& q, const std::vector<bool>& flips);

// ---- graph shape ---------------------------------------------------------

enum class ShapeKind { dynkin, extended_dynkin, star_shaped, tree, cyclic, other };

enum class DynkinSeries { A, D, E, A_tilde, D_tilde, E_tilde };

/// A star with one splitting vertex. Each ray is listed from its free end
/// towards the center and does not include the center; the ray length used
/// in the literature (number of vertices including the center) is ray.size() + 1.
struct StarData {
    std::size_t center;
    std::vector<std::vector<std::size_t>> rays;

    std::vector<std::size_t> ray_lengths() const;
};

struct GraphShape {
    ShapeKind kind = ShapeKind::other;
    std::optional<DynkinSeries> series; // set for dynkin / extended_dynkin
    std::size_t rank = 0;               // n in A_n, D_n, E_n, E~_n
    std::optional<StarData> star;       // set whenever the graph is a star

    bool is_dynkin() const { return kind == ShapeKind::dynkin; }
    bool is_extended_e() const {
        return kind == ShapeKind::extended_dynkin && series == DynkinSeries::E_tilde;
    }
    bool is_star() const { return star.has_value(); }

    /// "Dynkin(D4)", "ExtendedDynkin(E6~)", "StarShaped(2,3,4)", "Tree", ...
    std::string name() const;
    /// "D4", "E7~", "" when not (extended) Dynkin
    std::string type_name() const;
};

/// Classifies the underlying unoriented graph. Throws precondition_error for
/// a disconnected quiver.
GraphShape classify_graph(const Quiver& q);

} // namespace quiverhom

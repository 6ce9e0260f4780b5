#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "quiverhom/matrix.hpp"
#include "quiverhom/quiver.hpp"

namespace quiverhom {

/// A dimension vector plus one matrix per arrow, of shape
/// dim[target] x dim[source]. Maps are indexed by arrow position in
/// quiver().arrows().
class Representation {
public:
    Representation(Quiver quiver, DimVector dim, FieldSpec field, std::vector<ExactMatrix> maps);
    Representation(std::shared_ptr<const Quiver> quiver, DimVector dim, FieldSpec field,
                   std::vector<ExactMatrix> maps);

    /// All arrow maps zero.
    static Representation zero(Quiver quiver, DimVector dim, FieldSpec field);
    /// The simple representation at vertex i.
    static Representation simple(Quiver quiver, std::size_t i, FieldSpec field);

    const Quiver& quiver() const { return *quiver_; }
    const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
    const DimVector& dim() const { return dim_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<ExactMatrix>& maps() const { return maps_; }
    const ExactMatrix& map(std::size_t arrow_pos) const { return maps_.at(arrow_pos); }

    bool same_quiver(const Representation& other) const {
        return quiver_ == other.quiver_ || *quiver_ == *other.quiver_;
    }

    bool operator==(const Representation& other) const {
        return same_quiver(other) && dim_ == other.dim_ && field_ == other.field_ &&
               maps_ == other.maps_;
    }

private:
    std::shared_ptr<const Quiver> quiver_;
    DimVector dim_;
    FieldSpec field_;
    std::vector<ExactMatrix> maps_;
};

/// Direct sum, block diagonal maps.
Representation direct_sum(const Representation& a, const Representation& b);

struct HomReport {
    std::uint64_t hom = 0;
    std::uint64_t ext1 = 0;
    std::int64_t euler = 0;
    std::uint64_t f_rank = 0;
    std::uint64_t f_rows = 0;
    std::uint64_t f_cols = 0;
    bool max_rank = false;

    bool operator==(const HomReport&) const = default;
};

/// Matrix of the differential F : prod_i Hom(k^a_i, k^b_i) -> prod_x Hom(k^a_s(x), k^b_t(x)),
/// f |-> f_t(x) r_x - s_x f_s(x).
///
/// Columns are grouped by vertex and rows by arrow, both in canonical order;
/// inside a group the Hom block is flattened column-major, so entry (r, c) of
/// f_i sits at column offset_i + c * b_i + r.
ExactMatrix assemble_F(const Representation& r, const Representation& s);

/// hom = nullity of F, ext1 = hom - <dim r, dim s>.
HomReport hom_report(const Representation& r, const Representation& s);

/// Representation of the dual quiver with every map transposed.
Representation dual_rep(const Representation& r);

/// Element of GL(alpha): one invertible block per vertex.
class GlElement {
public:
    explicit GlElement(std::vector<ExactMatrix> blocks);

    static GlElement identity(const DimVector& dim, const FieldSpec& field);
    /// Random invertible blocks (resampled until invertible).
    static GlElement random(const DimVector& dim, const FieldSpec& field, Rng& rng);

    const std::vector<ExactMatrix>& blocks() const { return blocks_; }
    const ExactMatrix& block(std::size_t i) const { return blocks_.at(i); }

    GlElement operator*(const GlElement& other) const;

private:
    std::vector<ExactMatrix> blocks_;
};

/// g.r = { g_t(x) r_x g_s(x)^{-1} }.
Representation gl_act(const GlElement& g, const Representation& r);

/// hom(r, r) == 1 and ext1(r, r) == 0.
bool is_exceptional(const Representation& r);

/// Both inputs exceptional (precondition_error otherwise); true iff ext1 is
/// nonzero in both directions.
bool is_ext_nontrivial_couple(const Representation& r, const Representation& s);

} // namespace quiverhom

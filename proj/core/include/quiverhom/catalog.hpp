#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quiverhom/exceptional.hpp"

namespace quiverhom {

enum class CatalogQuiver { q1, q2 };

std::string to_string(CatalogQuiver tag);
CatalogQuiver parse_catalog_quiver(const std::string& text); // "q1" | "q2"

/// Vertices (a, b, c) = (bottom-left, top, bottom-right); arrows a->b, a->c, c->b.
Quiver q1_quiver();
/// Vertices (tl, tr, bl, br); arrows tl->tr, bl->tl, br->tr, bl->br.
Quiver q2_quiver();
/// The square with the right edge turned around: tl->tr, bl->tl, tr->br, bl->br.
Quiver square_reoriented_quiver();

struct CatalogEntry {
    std::string family; // "E1".."E8", "M", "M'", "F+", "F-", "G+", "G-"
    std::size_t level = 0;
    bool sporadic = false;
    Representation rep;

    /// "E3^2" for series members, the bare family name for sporadic ones.
    std::string label() const;
};

/// Families E1..E4, M, M'. Throws precondition_error for an unknown family
/// and internal_error if the result is not exceptional.
CatalogEntry q1_entry(const std::string& family, std::size_t m, const FieldSpec& field = {});
/// Families E1..E8, F+, F-, G+, G-.
CatalogEntry q2_entry(const std::string& family, std::size_t m, const FieldSpec& field = {});

std::vector<std::string> catalog_families(CatalogQuiver tag);
/// The Ext-nontrivial couples of the full category, by label.
std::vector<std::pair<std::string, std::string>> expected_couples(CatalogQuiver tag);

/// Every series member with level <= m_max, then the sporadic objects.
std::vector<CatalogEntry> catalog_entries(CatalogQuiver tag, std::size_t m_max, const FieldSpec& field = {});

PairTable catalog_table(const std::vector<CatalogEntry>& entries);

struct CouplesReport {
    std::vector<std::pair<std::string, std::string>> expected;
    std::vector<std::pair<std::string, std::string>> found;
    bool passed() const;
};

struct RpReport {
    std::size_t rp1_checked = 0;
    std::size_t rp1_vacuous = 0;
    std::size_t rp2_checked = 0;
    std::size_t rp2_vacuous = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

struct SingleDegreeReport {
    std::size_t pairs_checked = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

CouplesReport verify_couples(CatalogQuiver tag, std::size_t m_max, const FieldSpec& field = {});
RpReport verify_rp_properties(CatalogQuiver tag, std::size_t m_max, const FieldSpec& field = {});
SingleDegreeReport verify_single_degree(CatalogQuiver tag, std::size_t m_max, const FieldSpec& field = {});

// table-level versions, for callers that already hold a table
CouplesReport couples_in(const PairTable& table, CatalogQuiver tag);
RpReport rp_properties_in(const PairTable& table);
SingleDegreeReport single_degree_in(const PairTable& table);

/// The pair (rho, rho') on square_reoriented_quiver(): rho has dims
/// (1,0,1,1) with identities on bl->tl and bl->br, rho' has dims (0,1,1,1)
/// with identities on tr->br and bl->br.
std::pair<Representation, Representation> square_pair(const FieldSpec& field = {});

} // namespace quiverhom

#include "quiverhom/catalog.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "quiverhom/error.hpp"

namespace quiverhom {

std::string to_string(CatalogQuiver tag) { return tag == CatalogQuiver::q1 ? "q1" : "q2"; }

CatalogQuiver parse_catalog_quiver(const std::string& text) {
    if (text == "q1" || text == "Q1") return CatalogQuiver::q1;
    if (text == "q2" || text == "Q2") return CatalogQuiver::q2;
    throw precondition_error("unknown catalog quiver '" + text + "'");
}

Quiver q1_quiver() { return Quiver({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"c", "b"}}); }

Quiver q2_quiver() {
    return Quiver({"tl", "tr", "bl", "br"}, {{"tl", "tr"}, {"bl", "tl"}, {"br", "tr"}, {"bl", "br"}});
}

Quiver square_reoriented_quiver() {
    return Quiver({"tl", "tr", "bl", "br"}, {{"tl", "tr"}, {"bl", "tl"}, {"tr", "br"}, {"bl", "br"}});
}

std::string CatalogEntry::label() const {
    return sporadic ? family : family + "^" + std::to_string(level);
}

namespace {

enum class Map { zero, id, pi_plus, pi_minus, j_plus, j_minus };

// the matrix of `kind` between k^cols -> k^rows
ExactMatrix build(Map kind, const FieldSpec& f, std::size_t rows, std::size_t cols) {
    ExactMatrix out(f, rows, cols);
    switch (kind) {
    case Map::zero: break;
    case Map::id:
        for (std::size_t i = 0; i < rows; ++i) out.set(i, i, std::int64_t{1});
        break;
    case Map::pi_plus: // drop the last coordinate
    case Map::j_plus:  // append a zero
        for (std::size_t i = 0; i < std::min(rows, cols); ++i) out.set(i, i, std::int64_t{1});
        break;
    case Map::pi_minus: // drop the first coordinate
        for (std::size_t i = 0; i < rows; ++i) out.set(i, i + 1, std::int64_t{1});
        break;
    case Map::j_minus: // prepend a zero
        for (std::size_t i = 0; i < cols; ++i) out.set(i + 1, i, std::int64_t{1});
        break;
    }
    return out;
}

Representation assemble(const Quiver& q, const std::vector<std::int64_t>& dims,
                        const std::vector<Map>& kinds, const FieldSpec& f) {
    std::vector<ExactMatrix> maps;
    for (std::size_t x = 0; x < q.arrow_count(); ++x) {
        const auto& a = q.arrows()[x];
        maps.push_back(build(kinds[x], f, static_cast<std::size_t>(dims[a.target]),
                             static_cast<std::size_t>(dims[a.source])));
    }
    return Representation(q, DimVector(dims), f, std::move(maps));
}

struct Pattern {
    // dims as m + offset per vertex
    std::vector<std::int64_t> offsets;
    std::vector<Map> maps;
    bool sporadic = false;
};

const std::map<std::string, Pattern>& q1_patterns() {
    using enum Map;
    // arrow order a->b, a->c, c->b
    static const std::map<std::string, Pattern> p = {
        {"E1", {{1, 0, 0}, {pi_plus, pi_minus, id}}},
        {"E2", {{0, 1, 1}, {j_plus, j_minus, id}}},
        {"E3", {{0, 1, 0}, {j_plus, id, j_minus}}},
        {"E4", {{1, 0, 1}, {pi_plus, id, pi_minus}}},
        {"M", {{0, 0, 1}, {zero, zero, zero}, true}},
        {"M'", {{1, 1, 0}, {id, zero, zero}, true}},
    };
    return p;
}

const std::map<std::string, Pattern>& q2_patterns() {
    using enum Map;
    // arrow order top tl->tr, left bl->tl, right br->tr, bottom bl->br
    static const std::map<std::string, Pattern> p = {
        {"E1", {{0, 0, 1, 0}, {id, pi_plus, id, pi_minus}}},
        {"E2", {{1, 1, 0, 1}, {id, j_plus, id, j_minus}}},
        {"E3", {{0, 1, 0, 0}, {j_plus, id, j_minus, id}}},
        {"E4", {{1, 0, 1, 1}, {pi_plus, id, pi_minus, id}}},
        {"E5", {{0, 1, 0, 1}, {j_plus, id, id, j_minus}}},
        {"E6", {{1, 0, 1, 0}, {pi_plus, id, id, pi_minus}}},
        {"E7", {{0, 0, 1, 1}, {id, pi_plus, pi_minus, id}}},
        {"E8", {{1, 1, 0, 0}, {id, j_plus, j_minus, id}}},
        {"F+", {{1, 0, 0, 0}, {zero, zero, zero, zero}, true}},
        {"F-", {{0, 0, 0, 1}, {zero, zero, zero, zero}, true}},
        {"G+", {{1, 1, 1, 0}, {id, id, zero, zero}, true}},
        {"G-", {{0, 1, 1, 1}, {zero, zero, id, id}, true}},
    };
    return p;
}

CatalogEntry make_entry(const Quiver& q, const std::map<std::string, Pattern>& patterns,
                        const std::string& family, std::size_t m, const FieldSpec& f) {
    auto it = patterns.find(family);
    if (it == patterns.end()) throw precondition_error("unknown catalog family '" + family + "'");
    const auto& p = it->second;
    const auto level = p.sporadic ? std::int64_t{0} : static_cast<std::int64_t>(m);
    std::vector<std::int64_t> dims;
    for (auto o: p.offsets) dims.push_back(level + o);
    CatalogEntry e{family, p.sporadic ? 0 : m, p.sporadic, assemble(q, dims, p.maps, f)};
    if (!is_exceptional(e.rep)) throw internal_error("catalog entry " + e.label() + " is not exceptional");
    return e;
}

} // namespace

CatalogEntry q1_entry(const std::string& family, std::size_t m, const FieldSpec& field) {
    return make_entry(q1_quiver(), q1_patterns(), family, m, field);
}

CatalogEntry q2_entry(const std::string& family, std::size_t m, const FieldSpec& field) {
    return make_entry(q2_quiver(), q2_patterns(), family, m, field);
}

std::vector<std::string> catalog_families(CatalogQuiver tag) {
    if (tag == CatalogQuiver::q1) return {"E1", "E2", "E3", "E4", "M", "M'"};
    return {"E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8", "F+", "F-", "G+", "G-"};
}

std::vector<std::pair<std::string, std::string>> expected_couples(CatalogQuiver tag) {
    if (tag == CatalogQuiver::q1) return {{"M", "M'"}};
    return {{"F+", "G-"}, {"F-", "G+"}};
}

std::vector<CatalogEntry> catalog_entries(CatalogQuiver tag, std::size_t m_max, const FieldSpec& field) {
    const bool one = tag == CatalogQuiver::q1;
    const auto q = one ? q1_quiver() : q2_quiver();
    const auto& patterns = one ? q1_patterns() : q2_patterns();
    std::vector<CatalogEntry> series, sporadic;
    for (const auto& fam: catalog_families(tag)) {
        if (patterns.at(fam).sporadic) {
            sporadic.push_back(make_entry(q, patterns, fam, 0, field));
            continue;
        }
        for (std::size_t m = 0; m <= m_max; ++m) series.push_back(make_entry(q, patterns, fam, m, field));
    }
    for (auto& e: sporadic) series.push_back(std::move(e));
    return series;
}

PairTable catalog_table(const std::vector<CatalogEntry>& entries) {
    std::vector<Representation> reps;
    std::vector<std::string> labels;
    for (const auto& e: entries) {
        reps.push_back(e.rep);
        labels.push_back(e.label());
    }
    return pair_table(reps, std::move(labels));
}

bool CouplesReport::passed() const {
    auto norm = [](std::vector<std::pair<std::string, std::string>> v) {
        for (auto& p: v)
            if (p.second < p.first) std::swap(p.first, p.second);
        std::sort(v.begin(), v.end());
        return v;
    };
    return norm(expected) == norm(found);
}

CouplesReport couples_in(const PairTable& table, CatalogQuiver tag) {
    CouplesReport r;
    r.expected = expected_couples(tag);
    for (auto [i, j]: ext_nontrivial_couples(table)) r.found.emplace_back(table.labels[i], table.labels[j]);
    return r;
}

RpReport rp_properties_in(const PairTable& t) {
    RpReport r;
    const std::size_t n = t.size();
    auto star = [&](std::size_t i, std::size_t j) { return t.at(i, j).hom + t.at(i, j).ext1; };
    auto hom = [&](std::size_t i, std::size_t j) { return t.at(i, j).hom; };
    for (auto [a, b]: ext_nontrivial_couples(t)) {
        for (auto [g, h]: {std::pair{a, b}, std::pair{b, a}}) {
            for (std::size_t x = 0; x < n; ++x) {
                if (star(g, x) != 0) {
                    ++r.rp1_vacuous;
                    continue;
                }
                ++r.rp1_checked;
                if (star(x, h) != 0)
                    r.violations.push_back("RP1: couple (" + t.labels[g] + ", " + t.labels[h] + "), X = " +
                                           t.labels[x]);
            }
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    if (hom(g, x) == 0 || hom(x, y) == 0 || star(g, y) != 0) {
                        ++r.rp2_vacuous;
                        continue;
                    }
                    ++r.rp2_checked;
                    if (hom(h, y) == 0)
                        r.violations.push_back("RP2: couple (" + t.labels[g] + ", " + t.labels[h] +
                                               "), X = " + t.labels[x] + ", Y = " + t.labels[y]);
                }
        }
    }
    return r;
}

SingleDegreeReport single_degree_in(const PairTable& t) {
    SingleDegreeReport r;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) {
            ++r.pairs_checked;
            const auto& c = t.at(i, j);
            if (c.hom != 0 && c.ext1 != 0)
                r.violations.push_back(t.labels[i] + " -> " + t.labels[j] + ": hom=" + std::to_string(c.hom) +
                                       " ext1=" + std::to_string(c.ext1));
        }
    return r;
}

CouplesReport verify_couples(CatalogQuiver tag, std::size_t m_max, const FieldSpec& field) {
    return couples_in(catalog_table(catalog_entries(tag, m_max, field)), tag);
}

RpReport verify_rp_properties(CatalogQuiver tag, std::size_t m_max, const FieldSpec& field) {
    return rp_properties_in(catalog_table(catalog_entries(tag, m_max, field)));
}

SingleDegreeReport verify_single_degree(CatalogQuiver tag, std::size_t m_max, const FieldSpec& field) {
    return single_degree_in(catalog_table(catalog_entries(tag, m_max, field)));
}

std::pair<Representation, Representation> square_pair(const FieldSpec& field) {
    using enum Map;
    const auto q = square_reoriented_quiver();
    // arrow order tl->tr, bl->tl, tr->br, bl->br
    auto rho = assemble(q, {1, 0, 1, 1}, {zero, id, zero, id}, field);
    auto rho2 = assemble(q, {0, 1, 1, 1}, {zero, zero, id, id}, field);
    return {std::move(rho), std::move(rho2)};
}

} // namespace quiverhom

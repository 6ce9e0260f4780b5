#include "quiverhom/quiver.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "quiverhom/error.hpp"

namespace quiverhom {

parse_error::parse_error(kind k, std::size_t line_, std::size_t column_, const std::string& what)
    : quiverhom_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                      ": " + what),
      error_kind(k), line(line_), column(column_) {}

// ---- Quiver --------------------------------------------------------------

Quiver::Quiver(std::vector<std::string> vertices,
               const std::vector<std::pair<std::string, std::string>>& arrows)
    : labels_(std::move(vertices)) {
    index_labels();
    arrows_.reserve(arrows.size());
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        arrows_.push_back({i, vertex_index(arrows[i].first), vertex_index(arrows[i].second)});
    }
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : labels_(std::move(vertices)), arrows_(std::move(arrows)) {
    index_labels();
    std::set<std::size_t> ids;
    for (const auto& a: arrows_) {
        if (a.source >= labels_.size() || a.target >= labels_.size())
            throw precondition_error("arrow " + std::to_string(a.id) + " has an undeclared endpoint");
        if (!ids.insert(a.id).second)
            throw precondition_error("duplicate arrow id " + std::to_string(a.id));
    }
}

void Quiver::index_labels() {
    index_.clear();
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty())
            throw precondition_error("empty vertex label");
        if (!index_.emplace(labels_[i], i).second)
            throw precondition_error("duplicate vertex label '" + labels_[i] + "'");
    }
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Quiver::vertex_index(std::string_view label) const {
    if (auto v = find_vertex(label)) return *v;
    throw precondition_error("unknown vertex '" + std::string(label) + "'");
}

std::optional<std::size_t> Quiver::arrow_position(std::size_t id) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].id == id) return i;
    return std::nullopt;
}

bool Quiver::has_self_loop() const {
    return std::any_of(arrows_.begin(), arrows_.end(),
                       [](const Arrow& a) { return a.source == a.target; });
}

// ---- DimVector -----------------------------------------------------------

DimVector::DimVector(std::vector<std::int64_t> entries): entries_(std::move(entries)) {
    for (auto e: entries_)
        if (e < 0) throw precondition_error("dimension vectors have nonnegative entries");
}

DimVector DimVector::simple(std::size_t n, std::size_t i) {
    std::vector<std::int64_t> e(n, 0);
    e.at(i) = 1;
    return DimVector(std::move(e));
}

std::vector<std::size_t> DimVector::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != 0) s.push_back(i);
    return s;
}

bool DimVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

std::int64_t DimVector::total() const {
    return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

DimVector DimVector::operator+(const DimVector& other) const {
    if (size() != other.size()) throw mismatch_error("dimension vectors of different length");
    std::vector<std::int64_t> r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = entries_[i] + other.entries_[i];
    return DimVector(std::move(r));
}

std::string DimVector::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s;
}

DimVector DimVector::parse(std::string_view text) {
    std::vector<std::int64_t> e;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
            throw precondition_error("bad dimension vector '" + std::string(text) + "'");
        e.push_back(v);
        pos = comma + 1;
    }
    return DimVector(std::move(e));
}

// ---- text format ---------------------------------------------------------

namespace {

struct Token {
    std::string_view text;
    std::size_t column; // 1-based
};

std::vector<Token> split_ws(std::string_view line, std::size_t first_column) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), first_column + start});
    }
    return out;
}

} // namespace

Quiver parse_quiver(std::string_view text) {
    using K = parse_error::kind;
    struct Line {
        std::string_view content;
        std::size_t number;
    };
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = text.substr(pos, nl - pos);
        ++number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!split_ws(line, 1).empty()) lines.push_back({line, number});
        if (nl == text.size()) break;
        pos = nl + 1;
    }

    auto header = [&](const Line& l, std::string_view key) -> std::size_t {
        auto first = l.content.find_first_not_of(" \t");
        if (l.content.substr(first, key.size()) != key)
            throw parse_error(K::syntax, l.number, first + 1,
                              "expected '" + std::string(key) + "'");
        return first + key.size();
    };

    if (lines.empty()) throw parse_error(K::syntax, 1, 1, "expected 'vertices:'");
    const Line& vline = lines[0];
    std::size_t vstart = header(vline, "vertices:");
    std::vector<std::string> vertices;
    std::unordered_map<std::string, std::size_t> seen;
    for (const auto& tok: split_ws(vline.content.substr(vstart), vstart + 1)) {
        if (tok.text.find("->") != std::string_view::npos)
            throw parse_error(K::syntax, vline.number, tok.column,
                              "'->' is not allowed in a vertex label");
        std::string label(tok.text);
        if (seen.count(label))
            throw parse_error(K::duplicate_vertex, vline.number, tok.column,
                              "duplicate vertex '" + label + "'");
        seen.emplace(label, vertices.size());
        vertices.push_back(std::move(label));
    }
    if (vertices.empty())
        throw parse_error(K::empty_vertex_set, vline.number, vstart + 1, "empty vertex set");

    std::vector<Arrow> arrows;
    if (lines.size() < 2) throw parse_error(K::syntax, vline.number + 1, 1, "expected 'arrows:'");
    const Line& aline = lines[1];
    std::size_t astart = header(aline, "arrows:");
    for (const auto& tok: split_ws(aline.content.substr(astart), astart + 1)) {
        auto arrow = tok.text.find("->");
        if (arrow == std::string_view::npos || arrow == 0 || arrow + 2 >= tok.text.size())
            throw parse_error(K::syntax, aline.number, tok.column,
                              "expected '<source>-><target>'");
        std::string src(tok.text.substr(0, arrow));
        std::string dst(tok.text.substr(arrow + 2));
        auto s = seen.find(src);
        if (s == seen.end())
            throw parse_error(K::undeclared_vertex, aline.number, tok.column,
                              "undeclared vertex '" + src + "'");
        auto t = seen.find(dst);
        if (t == seen.end())
            throw parse_error(K::undeclared_vertex, aline.number, tok.column + arrow + 2,
                              "undeclared vertex '" + dst + "'");
        arrows.push_back({arrows.size(), s->second, t->second});
    }
    if (lines.size() > 2)
        throw parse_error(K::syntax, lines[2].number, 1, "unexpected content after 'arrows:' line");
    return Quiver(std::move(vertices), std::move(arrows));
}

std::string serialize_quiver(const Quiver& q) {
    std::string out = "vertices:";
    for (const auto& v: q.vertices()) out += " " + v;
    out += "\narrows:";
    for (const auto& a: q.arrows()) out += " " + q.label(a.source) + "->" + q.label(a.target);
    out += "\n";
    return out;
}

// ---- forms ---------------------------------------------------------------

namespace {

void check_dims(const Quiver& q, const DimVector& a) {
    if (a.size() != q.vertex_count())
        throw mismatch_error("dimension vector has " + std::to_string(a.size()) +
                             " entries, quiver has " + std::to_string(q.vertex_count()) +
                             " vertices");
}

} // namespace

std::int64_t euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    check_dims(q, a);
    check_dims(q, b);
    std::int64_t r = 0;
    for (std::size_t i = 0; i < q.vertex_count(); ++i) r += a[i] * b[i];
    for (const auto& ar: q.arrows()) r -= a[ar.source] * b[ar.target];
    return r;
}

Rational symmetrized_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    Rational r(euler_form(q, a, b) + euler_form(q, b, a), 2);
    r.canonicalize();
    return r;
}

Quiver dual_quiver(const Quiver& q) {
    std::vector<Arrow> arrows = q.arrows();
    for (auto& a: arrows) std::swap(a.source, a.target);
    return Quiver(q.vertices(), std::move(arrows));
}

Quiver restrict_quiver(const Quiver& q, std::span<const std::size_t> vertices) {
    std::vector<std::size_t> keep(vertices.begin(), vertices.end());
    for (auto v: keep)
        if (v >= q.vertex_count()) throw precondition_error("unknown vertex index");
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<std::size_t> remap(q.vertex_count(), SIZE_MAX);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        remap[keep[i]] = i;
        labels.push_back(q.label(keep[i]));
    }
    std::vector<Arrow> arrows;
    for (const auto& a: q.arrows())
        if (remap[a.source] != SIZE_MAX && remap[a.target] != SIZE_MAX)
            arrows.push_back({a.id, remap[a.source], remap[a.target]});
    return Quiver(std::move(labels), std::move(arrows));
}

Quiver restrict_quiver(const Quiver& q, std::span<const std::string> vertices) {
    std::vector<std::size_t> idx;
    for (const auto& v: vertices) idx.push_back(q.vertex_index(v));
    return restrict_quiver(q, std::span<const std::size_t>(idx));
}

Quiver reorient(const Quiver& q, const std::vector<bool>& flips) {
    std::vector<Arrow> arrows = q.arrows();
    for (std::size_t i = 0; i < arrows.size() && i < flips.size(); ++i)
        if (flips[i]) std::swap(arrows[i].source, arrows[i].target);
    return Quiver(q.vertices(), std::move(arrows));
}

// ---- graph shape ---------------------------------------------------------

std::vector<std::size_t> StarData::ray_lengths() const {
    std::vector<std::size_t> out;
    for (const auto& r: rays) out.push_back(r.size() + 1);
    return out;
}

std::string GraphShape::type_name() const {
    if (!series) return "";
    switch (*series) {
    case DynkinSeries::A: return "A" + std::to_string(rank);
    case DynkinSeries::D: return "D" + std::to_string(rank);
    case DynkinSeries::E: return "E" + std::to_string(rank);
    case DynkinSeries::A_tilde: return "A" + std::to_string(rank) + "~";
    case DynkinSeries::D_tilde: return "D" + std::to_string(rank) + "~";
    case DynkinSeries::E_tilde: return "E" + std::to_string(rank) + "~";
    }
    return "";
}

std::string GraphShape::name() const {
    auto rays = [&] {
        std::string s;
        for (auto l: star->ray_lengths()) s += (s.empty() ? "" : ",") + std::to_string(l);
        return s;
    };
    switch (kind) {
    case ShapeKind::dynkin: return "Dynkin(" + type_name() + ")";
    case ShapeKind::extended_dynkin: return "ExtendedDynkin(" + type_name() + ")";
    case ShapeKind::star_shaped: return "StarShaped(" + rays() + ")";
    case ShapeKind::tree: return "Tree";
    case ShapeKind::cyclic: return "Cyclic";
    case ShapeKind::other: return "Other";
    }
    return "Other";
}

namespace {

StarData walk_star(std::size_t center, const std::vector<std::vector<std::size_t>>& adj) {
    StarData star{center, {}};
    for (auto first: adj[center]) {
        std::vector<std::size_t> ray{first};
        std::size_t prev = center, cur = first;
        while (adj[cur].size() == 2) {
            std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ray.push_back(cur);
        }
        std::reverse(ray.begin(), ray.end()); // free end first
        star.rays.push_back(std::move(ray));
    }
    std::stable_sort(star.rays.begin(), star.rays.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.back() < b.back();
    });
    return star;
}

} // namespace

GraphShape classify_graph(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    GraphShape shape;
    if (n == 0) throw precondition_error("empty quiver");

    // connectivity on the underlying multigraph
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a: q.arrows()) parent[find(a.source)] = find(a.target);
    for (std::size_t i = 1; i < n; ++i)
        if (find(i) != find(0)) throw precondition_error("quiver is not connected");

    if (q.has_self_loop()) return shape; // Other

    std::set<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& a: q.arrows()) {
        auto e = std::minmax(a.source, a.target);
        if (!edges.insert(e).second) {
            shape.kind = ShapeKind::cyclic; // parallel edges close a cycle
            return shape;
        }
        adj[a.source].push_back(a.target);
        adj[a.target].push_back(a.source);
    }
    if (q.arrow_count() != n - 1) {
        shape.kind = ShapeKind::cyclic;
        return shape;
    }

    std::vector<std::size_t> branch;
    for (std::size_t i = 0; i < n; ++i)
        if (adj[i].size() >= 3) branch.push_back(i);

    if (branch.empty()) {
        shape.kind = ShapeKind::dynkin;
        shape.series = DynkinSeries::A;
        shape.rank = n;
        return shape;
    }

    if (branch.size() == 1) {
        shape.star = walk_star(branch[0], adj);
        auto lengths = shape.star->ray_lengths();
        std::sort(lengths.begin(), lengths.end());
        shape.kind = ShapeKind::star_shaped;
        using L = std::vector<std::size_t>;
        auto set = [&](ShapeKind k, DynkinSeries s, std::size_t r) {
            shape.kind = k;
            shape.series = s;
            shape.rank = r;
        };
        if (lengths.size() == 3 && lengths[0] == 2 && lengths[1] == 2) {
            set(ShapeKind::dynkin, DynkinSeries::D, n);
        } else if (lengths == L{2, 3, 3} || lengths == L{2, 3, 4} || lengths == L{2, 3, 5}) {
            set(ShapeKind::dynkin, DynkinSeries::E, n);
        } else if (lengths == L{3, 3, 3} || lengths == L{2, 4, 4} || lengths == L{2, 3, 6}) {
            set(ShapeKind::extended_dynkin, DynkinSeries::E_tilde, n - 1);
        } else if (lengths == L{2, 2, 2, 2}) {
            set(ShapeKind::extended_dynkin, DynkinSeries::D_tilde, n - 1);
        }
        return shape;
    }

    // D~_n: two branch vertices of degree 3, each carrying two leaves
    if (branch.size() == 2) {
        auto two_leaves = [&](std::size_t v) {
            if (adj[v].size() != 3) return false;
            return std::count_if(adj[v].begin(), adj[v].end(),
                                 [&](std::size_t w) { return adj[w].size() == 1; }) >= 2;
        };
        if (two_leaves(branch[0]) && two_leaves(branch[1]) && n >= 6) {
            shape.kind = ShapeKind::extended_dynkin;
            shape.series = DynkinSeries::D_tilde;
            shape.rank = n - 1;
            return shape;
        }
    }
    shape.kind = ShapeKind::tree;
    return shape;
}

} // namespace quiverhom

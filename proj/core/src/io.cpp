#include "quiverhom/io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "quiverhom/error.hpp"

namespace quiverhom {

using json = nlohmann::ordered_json;

namespace {

json entry_json(const ExactMatrix& m, std::size_t r, std::size_t c) {
    if (m.field().is_prime_field()) return m.residues()[r * m.cols() + c];
    const auto& q = m.rationals()[r * m.cols() + c];
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

Rational entry_value(const json& v) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Rational(mpz_class(std::to_string(v.get<std::uint64_t>())));
        return Rational(static_cast<long>(v.get<std::int64_t>()));
    }
    if (v.is_string()) {
        try {
            Rational q(v.get<std::string>());
            if (q.get_den() == 0) throw format_error("zero denominator");
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw format_error("bad matrix entry \"" + v.get<std::string>() + "\"");
        }
    }
    throw format_error("matrix entries must be integers or \"p/q\" strings");
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw format_error(std::string("missing \"") + key + "\"");
    return j.at(key);
}

json report_json(const HomReport& h) {
    return json{{"hom", h.hom},         {"ext1", h.ext1},     {"euler", h.euler},
                {"f_rank", h.f_rank},   {"f_rows", h.f_rows}, {"f_cols", h.f_cols},
                {"max_rank", h.max_rank}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c: s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string representation_to_json(const Representation& r, int indent) {
    const auto& q = r.quiver();
    json arrows = json::array();
    for (const auto& a: q.arrows())
        arrows.push_back({{"id", a.id}, {"source", q.label(a.source)}, {"target", q.label(a.target)}});
    json dims = json::object();
    for (std::size_t i = 0; i < q.vertex_count(); ++i) dims[q.label(i)] = r.dim()[i];
    json maps = json::object();
    for (std::size_t x = 0; x < q.arrow_count(); ++x) {
        const auto& m = r.map(x);
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_json(m, i, j));
            rows.push_back(std::move(row));
        }
        maps[std::to_string(q.arrows()[x].id)] = std::move(rows);
    }
    json out = {{"quiver", {{"vertices", q.vertices()}, {"arrows", std::move(arrows)}}},
                {"field", r.field().to_string()},
                {"dims", std::move(dims)},
                {"maps", std::move(maps)}};
    return out.dump(indent) + "\n";
}

Representation representation_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw format_error(std::string("invalid JSON: ") + e.what());
    }
    try {
        const auto& qj = member(j, "quiver");
        auto vertices = member(qj, "vertices").get<std::vector<std::string>>();
        Quiver labels_only(vertices, std::vector<Arrow>{});
        std::vector<Arrow> arrows;
        for (const auto& a: member(qj, "arrows")) {
            auto lookup = [&](const char* key) {
                auto v = labels_only.find_vertex(member(a, key).get<std::string>());
                if (!v) throw format_error("arrow refers to unknown vertex " + a.at(key).dump());
                return *v;
            };
            arrows.push_back({member(a, "id").get<std::size_t>(), lookup("source"), lookup("target")});
        }
        Quiver q(std::move(vertices), std::move(arrows));

        const auto field = FieldSpec::parse(member(j, "field").get<std::string>());

        const auto& dj = member(j, "dims");
        if (!dj.is_object() || dj.size() != q.vertex_count())
            throw format_error("\"dims\" needs one entry per vertex");
        std::vector<std::int64_t> dims(q.vertex_count());
        for (std::size_t i = 0; i < q.vertex_count(); ++i) {
            dims[i] = member(dj, q.label(i).c_str()).get<std::int64_t>();
            if (dims[i] < 0) throw format_error("negative dimension at " + q.label(i));
        }

        const auto& mj = member(j, "maps");
        if (!mj.is_object() || mj.size() != q.arrow_count())
            throw format_error("\"maps\" needs one matrix per arrow");
        std::vector<ExactMatrix> maps;
        for (const auto& a: q.arrows()) {
            const auto key = std::to_string(a.id);
            const auto& rows = member(mj, key.c_str());
            const auto nr = static_cast<std::size_t>(dims[a.target]);
            const auto nc = static_cast<std::size_t>(dims[a.source]);
            if (!rows.is_array() || rows.size() != nr)
                throw format_error("arrow " + key + " matrix needs " + std::to_string(nr) + " rows");
            ExactMatrix m(field, nr, nc);
            for (std::size_t r = 0; r < nr; ++r) {
                if (!rows[r].is_array() || rows[r].size() != nc)
                    throw format_error("arrow " + key + " matrix needs " + std::to_string(nc) + " columns");
                for (std::size_t c = 0; c < nc; ++c) m.set(r, c, entry_value(rows[r][c]));
            }
            maps.push_back(std::move(m));
        }
        return Representation(std::move(q), DimVector(std::move(dims)), field, std::move(maps));
    } catch (const json::exception& e) {
        throw format_error(std::string("malformed representation: ") + e.what());
    }
}

std::string hom_report_json(const HomReport& h, int indent) { return report_json(h).dump(indent) + "\n"; }

std::string pair_table_csv(const PairTable& t) {
    std::ostringstream out;
    for (const auto& l: t.labels) out << ',' << csv_field(l);
    out << '\n';
    for (std::size_t i = 0; i < t.size(); ++i) {
        out << csv_field(t.labels[i]);
        for (std::size_t j = 0; j < t.size(); ++j) out << ',' << t.at(i, j).hom << '/' << t.at(i, j).ext1;
        out << '\n';
    }
    return out.str();
}

std::string pair_table_json(const PairTable& t, int indent) {
    json cells = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < t.size(); ++j) row.push_back(report_json(t.at(i, j)));
        cells.push_back(std::move(row));
    }
    return json{{"labels", t.labels}, {"cells", std::move(cells)}}.dump(indent) + "\n";
}

std::vector<RootListing> classify_all(const Quiver& q, const std::vector<DimVector>& roots) {
    std::optional<GraphShape> shape;
    try {
        shape = classify_graph(q);
    } catch (const precondition_error&) {
    }
    std::vector<RootListing> out;
    for (const auto& r: roots) out.push_back({r, classify_root(q, shape.value_or(GraphShape{}), r)});
    return out;
}

std::string roots_text(const std::vector<RootListing>& roots) {
    std::string out;
    for (const auto& r: roots) out += r.root.to_string() + " " + to_string(r.cls.shape) + "\n";
    return out + "total " + std::to_string(roots.size()) + "\n";
}

std::string roots_csv(const Quiver& q, const std::vector<RootListing>& roots) {
    std::string out;
    for (const auto& v: q.vertices()) out += csv_field(v) + ",";
    out += "reality,shape,hill_compatible\n";
    for (const auto& r: roots) {
        for (auto x: r.root.entries()) out += std::to_string(x) + ",";
        out += to_string(r.cls.reality) + "," + to_string(r.cls.shape) + "," +
               (r.cls.hill_compatible ? "true" : "false") + "\n";
    }
    return out;
}

std::string roots_json(const Quiver& q, const std::vector<RootListing>& roots, int indent) {
    json list = json::array();
    for (const auto& r: roots)
        list.push_back({{"dims", r.root.entries()},
                        {"reality", to_string(r.cls.reality)},
                        {"shape", to_string(r.cls.shape)},
                        {"hill_compatible", r.cls.hill_compatible}});
    return json{{"vertices", q.vertices()}, {"count", roots.size()}, {"roots", std::move(list)}}.dump(indent) +
           "\n";
}

} // namespace quiverhom

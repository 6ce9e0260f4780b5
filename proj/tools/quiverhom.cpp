#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "quiverhom/catalog.hpp"
#include "quiverhom/error.hpp"
#include "quiverhom/io.hpp"
#include "quiverhom/suites.hpp"

using namespace quiverhom;
using json = nlohmann::ordered_json;

namespace {

enum exit_code { ok = 0, input = 1, unsupported = 2, violation = 3 };

struct Globals {
    std::string field = "fp:2147483647";
    std::uint64_t seed = 0;
    std::string format = "text";
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw precondition_error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Quiver load_quiver(const std::string& path) { return parse_quiver(slurp(path)); }

json quiver_json(const Quiver& q) {
    json arrows = json::array();
    for (const auto& a: q.arrows())
        arrows.push_back({{"id", a.id}, {"source", q.label(a.source)}, {"target", q.label(a.target)}});
    return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

std::string shape_name(const Quiver& q) {
    try {
        return classify_graph(q).name();
    } catch (const precondition_error&) {
        return "Disconnected";
    }
}

// Dynkin: all positive roots; E6~, E7~, E8~: real roots up to max_level
std::vector<DimVector> roots_of(const Quiver& q, std::size_t max_level) {
    const auto shape = classify_graph(q);
    if (shape.is_dynkin()) return positive_roots(q);
    if (shape.is_extended_e()) return real_roots_extended(q, max_level);
    throw unsupported_shape_error("no root enumeration for graph shape " + shape.name());
}

void print_table(const PairTable& t, const std::string& format) {
    if (format == "json") {
        std::cout << pair_table_json(t);
    } else if (format == "csv") {
        std::cout << pair_table_csv(t);
    } else {
        std::size_t w = 4;
        for (const auto& l: t.labels) w = std::max(w, l.size() + 2);
        std::cout << std::string(w, ' ');
        for (std::size_t j = 0; j < t.size(); ++j) std::cout << std::setw(6) << j;
        std::cout << '\n';
        for (std::size_t i = 0; i < t.size(); ++i) {
            std::cout << std::left << std::setw(static_cast<int>(w)) << t.labels[i] << std::right;
            for (std::size_t j = 0; j < t.size(); ++j)
                std::cout << std::setw(6) << (std::to_string(t.at(i, j).hom) + "/" + std::to_string(t.at(i, j).ext1));
            std::cout << '\n';
        }
        for (std::size_t j = 0; j < t.size(); ++j) std::cout << j << ": " << t.labels[j] << '\n';
    }
}

int report_suite(const SuiteReport& r, const std::string& format) {
    std::cout << (format == "json" ? suite_report_json(r) : suite_report_text(r));
    return r.passed() ? ok : violation;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string x; std::getline(in, x, ',');)
        if (!x.empty()) out.push_back(x);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hom/Ext computations for quiver representations"};
    app.require_subcommand(1);
    Globals g;
    if (const char* env = std::getenv("QUIVERHOM_SEED")) {
        try {
            g.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: QUIVERHOM_SEED is not an unsigned integer\n";
            return input;
        }
    }
    app.fallthrough(); // global options may also follow the subcommand
    app.add_option("--field", g.field, "q or fp:<prime>")
        ->check([](const std::string& text) {
            try {
                FieldSpec::parse(text);
            } catch (const quiverhom_error& e) {
                return std::string(e.what());
            }
            return std::string();
        })
        ->capture_default_str();
    app.add_option("--seed", g.seed, "random seed (default 0 or QUIVERHOM_SEED)")->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    int status = ok;
    std::function<int()> action;

    // parse
    auto* parse = app.add_subcommand("parse", "validate a quiver file and print it back");
    std::string quiver_file;
    parse->add_option("quiver", quiver_file, "quiver file")->required();
    parse->callback([&] {
        action = [&] {
            const auto q = load_quiver(quiver_file);
            if (g.format == "json") {
                auto j = quiver_json(q);
                j["shape"] = shape_name(q);
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << serialize_quiver(q) << "# " << shape_name(q) << '\n';
            }
            return ok;
        };
    });

    // roots
    auto* roots = app.add_subcommand("roots", "list the positive (real) roots with their shape");
    std::size_t max_level = 1;
    roots->add_option("quiver", quiver_file, "quiver file")->required();
    roots->add_option("--max-level", max_level, "level bound for extended E graphs")->capture_default_str();
    roots->callback([&] {
        action = [&] {
            const auto q = load_quiver(quiver_file);
            const auto listing = classify_all(q, roots_of(q, max_level));
            if (g.format == "json")
                std::cout << roots_json(q, listing);
            else if (g.format == "csv")
                std::cout << roots_csv(q, listing);
            else
                std::cout << roots_text(listing);
            return ok;
        };
    });

    // classify
    auto* classify = app.add_subcommand("classify", "classify a dimension vector");
    std::string dims_text;
    classify->add_option("quiver", quiver_file, "quiver file")->required();
    classify->add_option("dims", dims_text, "comma separated dimension vector")->required();
    classify->callback([&] {
        action = [&] {
            const auto q = load_quiver(quiver_file);
            const auto a = DimVector::parse(dims_text);
            if (a.size() != q.vertex_count()) throw mismatch_error("dimension vector does not match the quiver");
            const auto c = classify_all(q, {a}).front().cls;
            const auto e = euler_form(q, a, a);
            if (g.format == "json") {
                json j = {{"dims", a.entries()},        {"graph", shape_name(q)},
                          {"euler", e},                 {"reality", to_string(c.reality)},
                          {"shape", to_string(c.shape)}, {"hill_compatible", c.hill_compatible}};
                std::cout << j.dump(2) << '\n';
            } else if (g.format == "csv") {
                std::cout << "dims,graph,euler,reality,shape,hill_compatible\n\"" << a.to_string() << "\","
                          << shape_name(q) << ',' << e << ',' << to_string(c.reality) << ',' << to_string(c.shape)
                          << ',' << (c.hill_compatible ? "true" : "false") << '\n';
            } else {
                std::cout << a.to_string() << " graph=" << shape_name(q) << " euler=" << e
                          << " reality=" << to_string(c.reality) << " shape=" << to_string(c.shape)
                          << " hill_compatible=" << (c.hill_compatible ? "true" : "false") << '\n';
            }
            return ok;
        };
    });

    // hom
    auto* hom = app.add_subcommand("hom", "hom and ext1 between two serialized representations");
    std::string rep_a, rep_b;
    hom->add_option("first", rep_a, "representation JSON")->required();
    hom->add_option("second", rep_b, "representation JSON")->required();
    hom->callback([&] {
        action = [&] {
            const auto r = representation_from_json(slurp(rep_a));
            const auto s = representation_from_json(slurp(rep_b));
            const auto h = hom_report(r, s);
            if (g.format == "json") {
                std::cout << hom_report_json(h);
            } else if (g.format == "csv") {
                std::cout << "hom,ext1,euler,f_rank,f_rows,f_cols,max_rank\n"
                          << h.hom << ',' << h.ext1 << ',' << h.euler << ',' << h.f_rank << ',' << h.f_rows << ','
                          << h.f_cols << ',' << (h.max_rank ? "true" : "false") << '\n';
            } else {
                std::cout << "hom=" << h.hom << " ext1=" << h.ext1 << " euler=" << h.euler
                          << " max_rank=" << (h.max_rank ? "true" : "false") << " rank=" << h.f_rank
                          << " rows=" << h.f_rows << " cols=" << h.f_cols << '\n';
            }
            return ok;
        };
    });

    // exceptional
    auto* exc = app.add_subcommand("exceptional", "sample exceptional representations for real roots");
    std::size_t retries = 8;
    std::string out_dir;
    exc->add_option("quiver", quiver_file, "quiver file")->required();
    exc->add_option("--dims", dims_text, "a single real root; default: every enumerated root");
    exc->add_option("--max-level", max_level, "level bound for extended E graphs")->capture_default_str();
    exc->add_option("--retries", retries, "attempts per root")->check(CLI::PositiveNumber)->capture_default_str();
    exc->add_option("--out", out_dir, "write one representation JSON per root into this directory");
    exc->callback([&] {
        action = [&] {
            const auto q = load_quiver(quiver_file);
            const ConstructionConfig cfg{FieldSpec::parse(g.field), g.seed, retries};
            if (!dims_text.empty()) {
                const auto a = DimVector::parse(dims_text);
                auto res = construct_exceptional(q, a, cfg);
                if (auto* f = std::get_if<ConstructionFailure>(&res)) {
                    std::cerr << "no exceptional sample for " << f->root.to_string() << " after " << f->attempts
                              << " attempts\n";
                    return violation;
                }
                std::cout << representation_to_json(std::get<Representation>(res));
                return ok;
            }
            const auto set = construct_all(q, roots_of(q, max_level), cfg);
            if (!out_dir.empty()) {
                std::error_code ec;
                std::filesystem::create_directories(out_dir, ec);
                for (std::size_t i = 0; i < set.reps.size(); ++i) {
                    auto name = set.labels[i];
                    std::replace(name.begin(), name.end(), ',', '_');
                    std::ofstream f(out_dir + "/rep_" + name + ".json");
                    if (!f) throw precondition_error("cannot write into " + out_dir);
                    f << representation_to_json(set.reps[i]);
                }
            }
            if (g.format == "json") {
                json failures = json::array();
                for (const auto& f: set.failures) failures.push_back(f.root.entries());
                json j = {{"constructed", set.labels}, {"failures", failures}};
                std::cout << j.dump(2) << '\n';
            } else {
                for (const auto& l: set.labels) std::cout << l << " ok\n";
                for (const auto& f: set.failures) std::cout << f.root.to_string() << " failed\n";
                std::cout << "constructed " << set.reps.size() << ", failures " << set.failures.size() << '\n';
            }
            return ok;
        };
    });

    // table
    auto* table = app.add_subcommand("table", "hom/ext1 table of sampled exceptional representations");
    std::vector<std::string> rep_files;
    table->add_option("quiver", quiver_file, "quiver file")->required();
    table->add_option("--max-level", max_level, "level bound for extended E graphs")->capture_default_str();
    table->add_option("--reps", rep_files, "use these representation files instead of sampling");
    table->callback([&] {
        action = [&] {
            std::vector<Representation> reps;
            std::vector<std::string> labels;
            if (!rep_files.empty()) {
                for (const auto& f: rep_files) {
                    reps.push_back(representation_from_json(slurp(f)));
                    labels.push_back(reps.back().dim().to_string());
                }
            } else {
                const auto q = load_quiver(quiver_file);
                auto set = construct_all(q, roots_of(q, max_level), {FieldSpec::parse(g.field), g.seed, 8});
                for (const auto& f: set.failures)
                    std::cerr << "no exceptional sample for " << f.root.to_string() << '\n';
                reps = std::move(set.reps);
                labels = std::move(set.labels);
            }
            print_table(pair_table(reps, labels), g.format);
            return ok;
        };
    });

    // catalog
    auto* cat = app.add_subcommand("catalog", "hom/ext1 table of the q1 or q2 catalog");
    std::string tag;
    std::size_t max_m = 5;
    cat->add_option("quiver", tag, "q1 or q2")->required()->check(CLI::IsMember({"q1", "q2"}));
    cat->add_option("--max-m", max_m, "largest series level")->capture_default_str();
    cat->callback([&] {
        action = [&] {
            print_table(catalog_table(catalog_entries(parse_catalog_quiver(tag), max_m, FieldSpec::parse(g.field))),
                        g.format);
            return ok;
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::string graphs, types;
    std::size_t orient = 0;
    bool no_construct = false;
    std::size_t cases = 0, samples = 1000;
    verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"dynkin", "extended-e", "q1", "q2", "euler-fuzz", "hill-arith", "duality"}));
    verify->add_option("--graphs", graphs, "dynkin: comma separated graph names, e.g. A4,D4,E6");
    verify->add_option("--orientations", orient, "dynkin: random orientations per graph (default: all when at most 6 edges)");
    verify->add_flag("--no-construct", no_construct, "dynkin, extended-e: roots only");
    verify->add_option("--type", types, "extended-e: E6t, E7t, E8t (comma separated)");
    verify->add_option("--max-level", max_level, "extended-e: level bound")->capture_default_str();
    verify->add_option("--max-m", max_m, "q1, q2: largest series level")->capture_default_str();
    verify->add_option("--cases", cases, "euler-fuzz, duality: number of random pairs");
    verify->add_option("--samples", samples, "hill-arith: cases per clause")->capture_default_str();
    verify->callback([&] {
        action = [&] {
            const auto field = FieldSpec::parse(g.field);
            if (suite == "dynkin") {
                DynkinSuiteOptions o;
                if (!graphs.empty()) o.graphs = split(graphs);
                if (orient > 0) o.orientations = orient;
                o.construct = !no_construct;
                o.construction = {field, g.seed, 8};
                return report_suite(run_dynkin_suite(o), g.format);
            }
            if (suite == "extended-e") {
                ExtendedSuiteOptions o;
                if (!types.empty()) o.types = split(types);
                o.max_level = max_level;
                o.construct = !no_construct;
                o.construction = {field, g.seed, 8};
                return report_suite(run_extended_suite(o), g.format);
            }
            if (suite == "q1" || suite == "q2") {
                CatalogSuiteOptions o;
                o.max_m = max_m;
                o.field = field;
                o.seed = g.seed;
                return report_suite(run_catalog_suite(parse_catalog_quiver(suite), o), g.format);
            }
            if (suite == "hill-arith") {
                HillSuiteOptions o;
                o.samples = samples;
                o.seed = g.seed;
                return report_suite(run_hill_suite(o), g.format);
            }
            FuzzOptions o;
            o.field = field;
            o.seed = g.seed;
            if (suite == "euler-fuzz") {
                o.cases = cases ? cases : 500;
                return report_suite(run_euler_fuzz_suite(o), g.format);
            }
            o.cases = cases ? cases : 200;
            return report_suite(run_duality_suite(o), g.format);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : input;
    }

    try {
        status = action();
    } catch (const unsupported_shape_error& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return unsupported;
    } catch (const parse_error& e) {
        std::cerr << quiver_file << ": " << e.what() << '\n';
        return input;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return violation;
    } catch (const quiverhom_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input;
    }
    return status;
}

#include "quiverhom/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

#include "quiverhom/error.hpp"

namespace quiverhom {

// ---- named graphs --------------------------------------------------------

namespace {

std::string v(std::size_t i) { return "v" + std::to_string(i); }

std::vector<std::string> labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(v(i));
    return out;
}

// center v0, then each ray from the vertex next to the center outwards;
// every arrow points at the center
Quiver star_towards_center(const std::vector<std::size_t>& ray_lengths) {
    std::size_t n = 1;
    for (auto l: ray_lengths) n += l - 1;
    std::vector<std::pair<std::string, std::string>> arrows;
    std::size_t next = 1;
    for (auto l: ray_lengths) {
        std::size_t inner = 0;
        for (std::size_t j = 0; j + 1 < l; ++j) {
            arrows.emplace_back(v(next), v(inner));
            inner = next++;
        }
    }
    return Quiver(labels(n), arrows);
}

std::size_t parse_rank(const std::string& name, std::size_t from, std::size_t to) {
    const auto digits = name.substr(from, to - from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw precondition_error("unknown graph name '" + name + "'");
    return static_cast<std::size_t>(std::stoul(digits));
}

} // namespace

Quiver named_graph(const std::string& name) {
    if (name.size() < 2) throw precondition_error("unknown graph name '" + name + "'");
    const bool tilde = name.back() == 't' || name.back() == '~';
    const std::size_t n = parse_rank(name, 1, tilde ? name.size() - 1 : name.size());
    const char series = name[0];
    if (tilde) {
        if (series != 'E' || n < 6 || n > 8) throw precondition_error("unsupported graph '" + name + "'");
        if (n == 6) return star_towards_center({3, 3, 3});
        if (n == 7) return star_towards_center({2, 4, 4});
        return star_towards_center({2, 3, 6});
    }
    std::vector<std::pair<std::string, std::string>> arrows;
    switch (series) {
    case 'A':
        if (n < 1) break;
        for (std::size_t i = 0; i + 1 < n; ++i) arrows.emplace_back(v(i), v(i + 1));
        return Quiver(labels(n), arrows);
    case 'D':
        if (n < 4) break;
        for (std::size_t i = 0; i + 2 < n; ++i) arrows.emplace_back(v(i), v(i + 1));
        arrows.emplace_back(v(n - 3), v(n - 1));
        return Quiver(labels(n), arrows);
    case 'E':
        if (n < 6 || n > 8) break;
        for (std::size_t i = 0; i + 2 < n; ++i) arrows.emplace_back(v(i), v(i + 1));
        arrows.emplace_back(v(2), v(n - 1));
        return Quiver(labels(n), arrows);
    default: break;
    }
    throw precondition_error("unsupported graph '" + name + "'");
}

std::vector<Quiver> orientations(const Quiver& base, std::optional<std::size_t> count, Rng& rng) {
    const std::size_t e = base.arrow_count();
    std::vector<Quiver> out;
    if (!count && e <= 6) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
            std::vector<bool> flips(e);
            for (std::size_t i = 0; i < e; ++i) flips[i] = (mask >> i) & 1;
            out.push_back(reorient(base, flips));
        }
        return out;
    }
    std::bernoulli_distribution coin(0.5);
    for (std::size_t k = 0; k < count.value_or(5); ++k) {
        std::vector<bool> flips(e);
        for (std::size_t i = 0; i < e; ++i) flips[i] = coin(rng);
        out.push_back(reorient(base, flips));
    }
    return out;
}

std::size_t expected_root_count(const GraphShape& shape) {
    if (!shape.is_dynkin()) throw unsupported_shape_error("root counts are known for Dynkin graphs only");
    const std::size_t n = shape.rank;
    switch (*shape.series) {
    case DynkinSeries::A: return n * (n + 1) / 2;
    case DynkinSeries::D: return n * (n - 1);
    case DynkinSeries::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    default: break;
    }
    throw unsupported_shape_error("root counts are known for Dynkin graphs only");
}

// ---- reports -------------------------------------------------------------

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.ok; });
}

void SuiteReport::check(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
}

void SuiteReport::count(const std::string& key, std::int64_t delta) {
    for (auto& [k, x]: counters)
        if (k == key) {
            x += delta;
            return;
        }
    counters.emplace_back(key, delta);
}

std::int64_t SuiteReport::counter(const std::string& key) const {
    for (const auto& [k, x]: counters)
        if (k == key) return x;
    return 0;
}

void SuiteReport::witness(std::string text) {
    if (witnesses.size() < 50) witnesses.push_back(std::move(text));
}

std::string suite_report_text(const SuiteReport& r) {
    std::ostringstream out;
    out << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& c: r.checks) {
        out << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << '\n';
    }
    for (const auto& [k, x]: r.counters) out << "  " << k << " = " << x << '\n';
    for (const auto& w: r.witnesses) out << "  witness: " << w << '\n';
    out.precision(3);
    out << "  time " << std::fixed << r.seconds << " s\n";
    return out.str();
}

std::string suite_report_json(const SuiteReport& r, int indent) {
    using json = nlohmann::ordered_json;
    json checks = json::array();
    for (const auto& c: r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    json counters = json::object();
    for (const auto& [k, x]: r.counters) counters[k] = x;
    json out = {{"suite", r.suite},       {"passed", r.passed()},      {"checks", std::move(checks)},
                {"counters", counters},   {"witnesses", r.witnesses}, {"seconds", r.seconds}};
    return out.dump(indent) + "\n";
}

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
    std::string out;
    for (const auto& x: xs) out += (out.empty() ? "" : sep) + x;
    return out;
}

std::string couple_text(const PairTable& t, std::size_t i, std::size_t j) {
    return "{" + t.labels[i] + " | " + t.labels[j] + "} ext1 " + std::to_string(t.at(i, j).ext1) + "/" +
           std::to_string(t.at(j, i).ext1);
}

struct ExceptionalStats {
    std::size_t failures = 0;
    std::size_t couples = 0;
    std::size_t violations = 0;
    std::size_t arrow_rank = 0;
    std::size_t pairs = 0;
};

// pair table on the successfully constructed set; witnesses prefixed by `tag`
ExceptionalStats exceptional_stats(SuiteReport& rep, const std::string& tag, const ExceptionalSet& set) {
    ExceptionalStats s;
    s.failures = set.failures.size();
    for (const auto& f: set.failures) rep.witness(tag + ": no exceptional sample for " + f.root.to_string());
    for (std::size_t i = 0; i < set.reps.size(); ++i)
        if (!arrow_ranks_max(set.reps[i])) {
            ++s.arrow_rank;
            rep.witness(tag + ": arrow map below maximal rank in " + set.labels[i]);
        }
    const auto table = pair_table(set.reps, set.labels);
    for (auto [i, j]: ext_nontrivial_couples(table)) {
        ++s.couples;
        rep.witness(tag + ": Ext-nontrivial couple " + couple_text(table, i, j));
    }
    const auto mr = scan_max_rank(table);
    s.pairs = mr.pairs_checked;
    s.violations = mr.violations.size();
    for (const auto& x: mr.violations)
        rep.witness(tag + ": F not of maximal rank for (" + x.row_label + ") -> (" + x.col_label +
                    ") hom=" + std::to_string(x.report.hom) + " ext1=" + std::to_string(x.report.ext1));
    return s;
}

} // namespace

// ---- dynkin --------------------------------------------------------------

SuiteReport run_dynkin_suite(const DynkinSuiteOptions& opt) {
    Stopwatch clock;
    SuiteReport rep;
    rep.suite = "dynkin";
    Rng rng(opt.construction.seed);
    for (const auto& g: opt.graphs) {
        const auto base = named_graph(g);
        const auto shape = classify_graph(base);
        if (!shape.is_dynkin()) throw unsupported_shape_error(g + " is not a Dynkin graph");
        const auto expected = expected_root_count(shape);
        const auto reference = positive_roots(base);
        rep.check(g + ": root count", reference.size() == expected,
                  std::to_string(reference.size()) + " of " + std::to_string(expected));

        std::size_t other = 0, mismatched = 0, not_real = 0;
        ExceptionalStats total;
        const auto qs = orientations(base, opt.orientations, rng);
        for (std::size_t k = 0; k < qs.size(); ++k) {
            const auto& q = qs[k];
            const std::string tag = g + " orientation " + std::to_string(k);
            rep.count("orientations");
            const auto roots = positive_roots(q);
            if (roots != reference) {
                ++mismatched;
                rep.witness(tag + ": root set differs from the reference orientation");
            }
            for (const auto& a: roots) {
                const auto c = classify_root(q, shape, a);
                if (c.reality != Reality::real) ++not_real;
                if (c.shape == RootShape::other) {
                    ++other;
                    rep.witness(tag + ": root " + a.to_string() + " is neither thin nor hill");
                }
            }
            rep.count("roots", static_cast<std::int64_t>(roots.size()));
            if (!opt.construct) continue;
            const auto s = exceptional_stats(rep, tag, construct_all(q, roots, opt.construction));
            total.failures += s.failures;
            total.couples += s.couples;
            total.violations += s.violations;
            total.arrow_rank += s.arrow_rank;
            total.pairs += s.pairs;
        }
        rep.check(g + ": roots are real", not_real == 0, std::to_string(not_real) + " not real");
        rep.check(g + ": thin or hill", other == 0, std::to_string(other) + " other");
        rep.check(g + ": orientation independent roots", mismatched == 0,
                  std::to_string(qs.size()) + " orientations");
        rep.count("other_shape", static_cast<std::int64_t>(other));
        if (!opt.construct) continue;
        rep.check(g + ": exceptional representations constructed", total.failures == 0,
                  std::to_string(total.failures) + " failures");
        rep.check(g + ": arrow maps of maximal rank", total.arrow_rank == 0);
        rep.check(g + ": no Ext-nontrivial couples", total.couples == 0, std::to_string(total.couples) + " found");
        rep.check(g + ": F of maximal rank", total.violations == 0,
                  std::to_string(total.violations) + " violations in " + std::to_string(total.pairs) + " pairs");
        rep.count("construction_failures", static_cast<std::int64_t>(total.failures));
        rep.count("pairs", static_cast<std::int64_t>(total.pairs));
        rep.count("couples", static_cast<std::int64_t>(total.couples));
        rep.count("max_rank_violations", static_cast<std::int64_t>(total.violations));
    }
    rep.seconds = clock.seconds();
    return rep;
}

// ---- extended E ----------------------------------------------------------

SuiteReport run_extended_suite(const ExtendedSuiteOptions& opt) {
    Stopwatch clock;
    SuiteReport rep;
    rep.suite = "extended-e";
    for (const auto& t: opt.types) {
        const auto q = named_graph(t);
        const auto shape = classify_graph(q);
        if (!shape.is_extended_e()) throw unsupported_shape_error(t + " is not of type E6~, E7~, E8~");

        const auto delta = minimal_imaginary_root(q);
        bool radical = true;
        for (std::size_t i = 0; i < q.vertex_count(); ++i)
            if (symmetrized_form(q, delta, DimVector::simple(q.vertex_count(), i)) != 0) radical = false;
        rep.check(t + ": delta spans the radical", radical, "delta = " + delta.to_string());
        rep.check(t + ": delta is hill", is_hill(shape, delta));

        const auto roots = real_roots_extended(q, opt.max_level);
        std::size_t other = 0, not_real = 0;
        for (const auto& a: roots) {
            const auto c = classify_root(q, shape, a);
            if (c.reality != Reality::real) ++not_real;
            if (c.shape == RootShape::other) {
                ++other;
                rep.witness(t + ": root " + a.to_string() + " is neither thin nor hill");
            }
        }
        rep.count("roots", static_cast<std::int64_t>(roots.size()));
        rep.check(t + ": roots are real", not_real == 0,
                  std::to_string(roots.size()) + " roots up to level " + std::to_string(opt.max_level));
        rep.check(t + ": thin or hill", other == 0, std::to_string(other) + " other");
        if (!opt.construct) continue;

        const auto s = exceptional_stats(rep, t, construct_all(q, roots, opt.construction));
        rep.count("construction_failures", static_cast<std::int64_t>(s.failures));
        rep.count("pairs", static_cast<std::int64_t>(s.pairs));
        rep.count("couples", static_cast<std::int64_t>(s.couples));
        rep.count("max_rank_violations", static_cast<std::int64_t>(s.violations));
        rep.check(t + ": F of maximal rank", s.violations == 0,
                  std::to_string(s.violations) + " violations in " + std::to_string(s.pairs) + " pairs, " +
                      std::to_string(s.failures) + " roots without a sample");
        rep.check(t + ": arrow maps of maximal rank", s.arrow_rank == 0);
    }
    rep.seconds = clock.seconds();
    return rep;
}

// ---- catalogs ------------------------------------------------------------

SuiteReport run_catalog_suite(CatalogQuiver tag, const CatalogSuiteOptions& opt) {
    Stopwatch clock;
    SuiteReport rep;
    rep.suite = to_string(tag);
    const auto entries = catalog_entries(tag, opt.max_m, opt.field);
    const auto table = catalog_table(entries);
    rep.count("entries", static_cast<std::int64_t>(entries.size()));

    const auto couples = couples_in(table, tag);
    std::vector<std::string> found;
    for (const auto& [a, b]: couples.found) found.push_back("{" + a + ", " + b + "}");
    rep.check("Ext-nontrivial couples", couples.passed(), join(found));

    const auto q = tag == CatalogQuiver::q1 ? q1_quiver() : q2_quiver();
    bool negative = true;
    for (auto [i, j]: ext_nontrivial_couples(table)) {
        const auto sum = entries[i].rep.dim() + entries[j].rep.dim();
        if (euler_form(q, sum, sum) > 0) negative = false;
    }
    rep.check("couples have <a+b, a+b> <= 0", negative);

    const auto rp = rp_properties_in(table);
    rep.count("rp1_checked", static_cast<std::int64_t>(rp.rp1_checked));
    rep.count("rp1_vacuous", static_cast<std::int64_t>(rp.rp1_vacuous));
    rep.count("rp2_checked", static_cast<std::int64_t>(rp.rp2_checked));
    rep.count("rp2_vacuous", static_cast<std::int64_t>(rp.rp2_vacuous));
    for (const auto& w: rp.violations) rep.witness(w);
    rep.check("RP properties 1 and 2", rp.passed(), std::to_string(rp.violations.size()) + " violations");

    const auto sd = single_degree_in(table);
    rep.count("pairs", static_cast<std::int64_t>(sd.pairs_checked));
    for (const auto& w: sd.violations) rep.witness(w);
    rep.check("hom or ext1 vanishes", sd.passed(), std::to_string(sd.violations.size()) + " violations");

    if (tag == CatalogQuiver::q1) {
        // sampling agrees with the catalog: its dimension vectors are hit,
        // the two omitted series are not
        ConstructionConfig cfg{opt.field, opt.seed, 8};
        std::size_t hit = 0, unexpected = 0, missed = 0;
        for (std::size_t m = 0; m <= opt.construct_levels; ++m) {
            const auto k = static_cast<std::int64_t>(m);
            const std::vector<std::pair<DimVector, bool>> patterns = {
                {DimVector{k + 1, k, k}, true},     {DimVector{k, k + 1, k + 1}, true},
                {DimVector{k, k + 1, k}, true},     {DimVector{k + 1, k, k + 1}, true},
                {DimVector{k, k, k + 1}, m == 0},   {DimVector{k + 1, k + 1, k}, m == 0},
            };
            for (const auto& [a, listed]: patterns) {
                if (!is_real_root(q, a)) {
                    rep.witness("expected a real root: " + a.to_string());
                    ++unexpected;
                    continue;
                }
                const bool ok = std::holds_alternative<Representation>(construct_exceptional(q, a, cfg));
                if (ok && listed) ++hit;
                if (ok && !listed) {
                    ++unexpected;
                    rep.witness("exceptional sample outside the catalog at " + a.to_string());
                }
                if (!ok && listed) {
                    ++missed;
                    rep.witness("no exceptional sample at catalog dimension " + a.to_string());
                }
            }
        }
        rep.count("catalog_dims_sampled", static_cast<std::int64_t>(hit));
        rep.check("sampling matches the catalog", unexpected == 0 && missed == 0,
                  std::to_string(missed) + " missed, " + std::to_string(unexpected) + " unexpected");
    } else {
        const auto [rho, rho2] = square_pair(opt.field);
        const auto h = hom_report(rho, rho2);
        const bool ok = h.hom == 1 && h.ext1 == 1 && h.euler == 0 && !h.max_rank && is_exceptional(rho) &&
                        is_exceptional(rho2);
        rep.check("re-oriented square pair", ok,
                  "hom=" + std::to_string(h.hom) + " ext1=" + std::to_string(h.ext1) + " euler=" +
                      std::to_string(h.euler) + " max_rank=" + (h.max_rank ? "true" : "false"));
    }
    rep.seconds = clock.seconds();
    return rep;
}

// ---- random pairs --------------------------------------------------------

std::pair<Representation, Representation> random_pair(const FuzzOptions& opt, Rng& rng) {
    auto pick = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    const auto n = static_cast<std::size_t>(pick(1, static_cast<std::int64_t>(opt.max_vertices)));
    std::vector<std::pair<std::string, std::string>> arrows;
    if (n > 1) {
        const auto m = pick(0, static_cast<std::int64_t>(n + 2));
        for (std::int64_t k = 0; k < m; ++k) {
            const auto s = static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(n) - 1));
            auto t = static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(n) - 2));
            if (t >= s) ++t;
            arrows.emplace_back(v(s), v(t));
        }
    }
    auto q = std::make_shared<const Quiver>(labels(n), arrows);
    auto one = [&] {
        std::vector<std::int64_t> dims(n);
        for (auto& d: dims) d = pick(0, opt.max_dim);
        // dense generic maps, or sparse 0/1 maps so that F is often degenerate
        const bool sparse = pick(0, 1) == 1;
        std::vector<ExactMatrix> maps;
        for (const auto& a: q->arrows()) {
            const auto r = static_cast<std::size_t>(dims[a.target]);
            const auto c = static_cast<std::size_t>(dims[a.source]);
            if (!sparse) {
                RandomMatrixOptions o;
                o.rational_bound = 5;
                maps.push_back(random_matrix(r, c, opt.field, rng, o));
                continue;
            }
            ExactMatrix m(opt.field, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) m.set(i, j, pick(0, 3) == 0 ? std::int64_t{1} : 0);
            maps.push_back(std::move(m));
        }
        return Representation(q, DimVector(std::move(dims)), opt.field, std::move(maps));
    };
    auto r = one();
    auto s = one();
    return {std::move(r), std::move(s)};
}

SuiteReport run_euler_fuzz_suite(const FuzzOptions& opt) {
    Stopwatch clock;
    SuiteReport rep;
    rep.suite = "euler-fuzz";
    Rng rng(opt.seed);
    std::size_t bad = 0, degenerate = 0;
    for (std::size_t k = 0; k < opt.cases; ++k) {
        const auto [r, s] = random_pair(opt, rng);
        const auto F = assemble_F(r, s);
        const auto rk = static_cast<std::int64_t>(rank(F));
        const auto hom = static_cast<std::int64_t>(F.cols()) - rk;
        const auto ext1 = static_cast<std::int64_t>(F.rows()) - rk;
        const auto euler = euler_form(r.quiver(), r.dim(), s.dim());
        if (hom != 0 && ext1 != 0) ++degenerate;
        if (hom - ext1 != euler) {
            ++bad;
            rep.witness("case " + std::to_string(k) + ": hom=" + std::to_string(hom) + " ext1=" +
                        std::to_string(ext1) + " euler=" + std::to_string(euler));
        }
    }
    rep.count("cases", static_cast<std::int64_t>(opt.cases));
    rep.count("not_max_rank", static_cast<std::int64_t>(degenerate));
    rep.check("hom - ext1 = <a, b>", bad == 0, std::to_string(bad) + " failures");
    rep.seconds = clock.seconds();
    return rep;
}

SuiteReport run_duality_suite(const FuzzOptions& opt) {
    Stopwatch clock;
    SuiteReport rep;
    rep.suite = "duality";
    Rng rng(opt.seed);
    std::size_t bad_hom = 0, bad_rank = 0, bad_form = 0, bad_involution = 0, degenerate = 0;
    for (std::size_t k = 0; k < opt.cases; ++k) {
        const auto [r, s] = random_pair(opt, rng);
        const auto dr = dual_rep(r);
        const auto ds = dual_rep(s);
        const auto h = hom_report(r, s);
        const auto d = hom_report(ds, dr);
        if (!h.max_rank) ++degenerate;
        if (h.hom != d.hom || h.ext1 != d.ext1) {
            ++bad_hom;
            rep.witness("case " + std::to_string(k) + ": hom/ext1 " + std::to_string(h.hom) + "/" +
                        std::to_string(h.ext1) + " vs dual " + std::to_string(d.hom) + "/" + std::to_string(d.ext1));
        }
        if (h.max_rank != d.max_rank) ++bad_rank;
        if (euler_form(dr.quiver(), s.dim(), r.dim()) != euler_form(r.quiver(), r.dim(), s.dim())) ++bad_form;
        if (!(dual_rep(dr) == r)) ++bad_involution;
    }
    rep.count("cases", static_cast<std::int64_t>(opt.cases));
    rep.count("not_max_rank", static_cast<std::int64_t>(degenerate));
    rep.check("hom and ext1 transpose", bad_hom == 0, std::to_string(bad_hom) + " failures");
    rep.check("maximal rank preserved", bad_rank == 0, std::to_string(bad_rank) + " failures");
    rep.check("Euler form of the dual quiver", bad_form == 0);
    rep.check("duality is an involution", bad_involution == 0);
    rep.seconds = clock.seconds();
    return rep;
}

// ---- hill arithmetic -----------------------------------------------------

SuiteReport run_hill_suite(const HillSuiteOptions& opt) {
    Stopwatch clock;
    SuiteReport rep;
    rep.suite = "hill-arith";
    Rng rng(opt.seed);
    const std::vector<std::vector<std::size_t>> stars = {{2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3}};
    for (const auto& rays: stars) {
        const auto q = star_towards_center(rays);
        const auto shape = classify_graph(q);
        std::vector<std::string> parts;
        for (auto l: rays) parts.push_back(std::to_string(l));
        const std::string name = "(" + join(parts, ",") + ")";
        const auto r = hill_arithmetic_checks(shape, q.vertex_count(), opt.samples, rng, opt.center_values);
        auto record = [&](const std::string& clause, const HillClauseResult& c) {
            rep.count(clause + "_tested", static_cast<std::int64_t>(c.tested));
            rep.count(clause + "_excluded", static_cast<std::int64_t>(c.excluded));
            rep.count(clause + "_counterexamples", static_cast<std::int64_t>(c.counterexamples.size()));
            for (const auto& w: c.counterexamples) rep.witness(name + " " + clause + ": " + w);
            rep.check(name + " " + clause, c.counterexamples.empty(), std::to_string(c.tested) + " cases");
        };
        record("sum", r.sum);
        record("delta_thin", r.delta_thin);
        record("delta_minus", r.delta_minus);
    }
    rep.seconds = clock.seconds();
    return rep;
}

} // namespace quiverhom

#include "quiverhom/roots.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "quiverhom/error.hpp"

namespace quiverhom {

std::string to_string(Reality r) {
    switch (r) {
    case Reality::real: return "real";
    case Reality::imaginary: return "imaginary";
    case Reality::not_root: return "not-root";
    }
    return "not-root";
}

std::string to_string(RootShape s) {
    switch (s) {
    case RootShape::thin: return "thin";
    case RootShape::hill: return "hill";
    case RootShape::other: return "other";
    }
    return "other";
}

bool is_real_root(const Quiver& q, const DimVector& a) {
    if (a.is_zero()) throw precondition_error("zero vector is not a root candidate");
    return euler_form(q, a, a) == 1;
}

bool is_thin(const DimVector& a) {
    if (a.is_zero()) throw precondition_error("zero vector is neither thin nor a root");
    return std::all_of(a.entries().begin(), a.entries().end(),
                       [](std::int64_t x) { return x == 0 || x == 1; });
}

bool is_hill(const GraphShape& shape, const DimVector& a) {
    if (!shape.star) throw unsupported_shape_error("hill vectors need a star shaped graph");
    const auto& star = *shape.star;
    for (const auto& ray: star.rays) {
        for (std::size_t i = 0; i + 1 < ray.size(); ++i)
            if (a[ray[i]] > a[ray[i + 1]]) return false;
        const std::int64_t last = a[ray.back()];
        if (last > a[star.center] || last <= 0) return false;
    }
    return true;
}

RootClassification classify_root(const Quiver& q, const DimVector& a) {
    std::optional<GraphShape> shape;
    try {
        shape = classify_graph(q);
    } catch (const precondition_error&) {
    }
    return classify_root(q, shape.value_or(GraphShape{}), a);
}

RootClassification classify_root(const Quiver& q, const GraphShape& shape, const DimVector& a) {
    if (a.size() != q.vertex_count()) throw mismatch_error("dimension vector does not match the quiver");
    RootClassification c;
    if (a.is_zero()) return c;
    const auto e = euler_form(q, a, a);
    c.reality = e == 1 ? Reality::real : e <= 0 ? Reality::imaginary : Reality::not_root;
    c.hill_compatible = shape.star && is_hill(shape, a);
    if (is_thin(a))
        c.shape = RootShape::thin;
    else if (c.hill_compatible)
        c.shape = RootShape::hill;
    return c;
}

// ---- root systems --------------------------------------------------------

namespace {

using Vec = std::vector<std::int64_t>;

std::vector<std::vector<std::size_t>> neighbours(const Quiver& q) {
    std::vector<std::vector<std::size_t>> adj(q.vertex_count());
    for (const auto& a: q.arrows()) {
        adj[a.source].push_back(a.target);
        adj[a.target].push_back(a.source);
    }
    return adj;
}

// 2 (a, e_i) for the symmetrized form
std::int64_t twice_pairing(const std::vector<std::vector<std::size_t>>& adj, const Vec& a,
                           std::size_t i) {
    std::int64_t s = 2 * a[i];
    for (auto j: adj[i]) s -= a[j];
    return s;
}

std::vector<DimVector> reflection_closure(const Quiver& q) {
    const std::size_t n = q.vertex_count();
    const auto adj = neighbours(q);
    std::set<Vec> seen;
    std::vector<Vec> work;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        seen.insert(e);
        work.push_back(std::move(e));
    }
    while (!work.empty()) {
        Vec a = std::move(work.back());
        work.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = twice_pairing(adj, a, i);
            if (c == 0) continue;
            Vec b = a;
            b[i] -= c;
            if (b[i] < 0) continue; // negative roots stay out of the work set
            if (seen.insert(b).second) work.push_back(std::move(b));
        }
    }
    std::vector<DimVector> out;
    out.reserve(seen.size());
    for (const auto& v: seen) out.emplace_back(v);
    return out;
}

} // namespace

std::vector<DimVector> positive_roots(const Quiver& q) {
    if (!classify_graph(q).is_dynkin())
        throw unsupported_shape_error("positive roots are enumerated for Dynkin quivers only");
    return reflection_closure(q);
}

std::size_t extending_vertex(const Quiver& q) {
    const auto shape = classify_graph(q);
    if (shape.is_extended_e()) {
        const auto& rays = shape.star->rays;
        std::size_t longest = 0;
        for (const auto& r: rays) longest = std::max(longest, r.size());
        std::size_t best = q.vertex_count();
        for (const auto& r: rays)
            if (r.size() == longest) best = std::min(best, r.front());
        return best;
    }
    if (shape.kind == ShapeKind::extended_dynkin && shape.series == DynkinSeries::D_tilde) {
        const auto adj = neighbours(q);
        for (std::size_t i = 0; i < adj.size(); ++i)
            if (adj[i].size() == 1) return i;
    }
    throw unsupported_shape_error("extending vertex is defined for extended Dynkin quivers only");
}

DimVector minimal_imaginary_root(const Quiver& q) {
    const auto shape = classify_graph(q);
    if (shape.kind != ShapeKind::extended_dynkin)
        throw unsupported_shape_error("minimal imaginary root needs an extended Dynkin quiver");
    const std::size_t n = q.vertex_count();
    ExactMatrix cartan(FieldSpec::rationals(), n, n);
    for (std::size_t i = 0; i < n; ++i) cartan.set(i, i, std::int64_t{2});
    for (const auto& a: q.arrows()) {
        cartan.set(a.source, a.target, cartan.at(a.source, a.target) - 1);
        cartan.set(a.target, a.source, cartan.at(a.target, a.source) - 1);
    }
    auto basis = kernel_basis(cartan);
    if (basis.size() != 1) throw internal_error("radical of the symmetrized form is not a line");

    // clear denominators, divide by the gcd, fix the sign
    mpz_class den = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class d = basis[0].at(i, 0).get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> v(n);
    mpz_class g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class x = basis[0].at(i, 0) * den;
        v[i] = x.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    }
    if (v[0] < 0) g = -g;
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class x = v[i] / g;
        if (x <= 0 || !x.fits_slong_p()) throw internal_error("radical generator is not positive");
        out[i] = x.get_si();
    }
    DimVector delta(std::move(out));

    if (delta[extending_vertex(q)] != 1) throw internal_error("delta at the extending vertex is not 1");
    if (shape.is_extended_e()) {
        auto profile = star_profile(shape, n, delta[shape.star->center]);
        if (!profile || !(*profile == delta)) throw internal_error("delta does not have the star profile");
    }
    return delta;
}

std::vector<DimVector> real_roots_extended(const Quiver& q, std::size_t max_level) {
    const auto shape = classify_graph(q);
    if (!shape.is_extended_e())
        throw unsupported_shape_error("real roots are enumerated for E6~, E7~, E8~ only");
    const std::size_t n = q.vertex_count();
    const auto delta = minimal_imaginary_root(q);
    const auto ext = extending_vertex(q);

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (i != ext) keep.push_back(i);
    const auto sub = restrict_quiver(q, std::span<const std::size_t>(keep));

    std::vector<Vec> xs;
    for (const auto& r: reflection_closure(sub)) {
        Vec x(n, 0);
        for (std::size_t j = 0; j < keep.size(); ++j) x[keep[j]] = r[j];
        xs.push_back(std::move(x));
    }

    std::set<Vec> out;
    for (std::size_t a = 0; a <= max_level; ++a) {
        const auto level = static_cast<std::int64_t>(a);
        for (const auto& x: xs) {
            Vec plus(n), minus(n);
            bool nonneg = true;
            for (std::size_t i = 0; i < n; ++i) {
                plus[i] = level * delta[i] + x[i];
                minus[i] = level * delta[i] - x[i];
                if (minus[i] < 0) nonneg = false;
            }
            out.insert(std::move(plus));
            if (a > 0 && nonneg) out.insert(std::move(minus));
        }
    }
    std::vector<DimVector> roots;
    roots.reserve(out.size());
    for (const auto& v: out) roots.emplace_back(v);
    return roots;
}

// ---- hill arithmetic -----------------------------------------------------

std::optional<DimVector> star_profile(const GraphShape& shape, std::size_t vertex_count,
                                      std::int64_t center_value) {
    if (!shape.star) throw unsupported_shape_error("star profile needs a star shaped graph");
    const auto& star = *shape.star;
    Vec v(vertex_count, 0);
    v[star.center] = center_value;
    for (const auto& ray: star.rays) {
        const auto k = static_cast<std::int64_t>(ray.size() + 1);
        if (center_value % k != 0) return std::nullopt;
        for (std::size_t i = 0; i < ray.size(); ++i)
            v[ray[i]] = static_cast<std::int64_t>(i + 1) * center_value / k;
    }
    return DimVector(std::move(v));
}

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

DimVector random_hill(const StarData& star, std::size_t n, std::int64_t max_center, Rng& rng) {
    Vec v(n, 0);
    const auto c = uniform(rng, 1, max_center);
    v[star.center] = c;
    for (const auto& ray: star.rays) {
        const auto top = uniform(rng, 1, c);
        Vec vals(ray.size());
        vals.back() = top;
        for (std::size_t i = 0; i + 1 < ray.size(); ++i) vals[i] = uniform(rng, 0, top);
        std::sort(vals.begin(), vals.end());
        for (std::size_t i = 0; i < ray.size(); ++i) v[ray[i]] = vals[i];
    }
    return DimVector(std::move(v));
}

DimVector random_thin(std::size_t n, Rng& rng) {
    for (;;) {
        Vec v(n);
        for (auto& x: v) x = uniform(rng, 0, 1);
        DimVector d(std::move(v));
        if (!d.is_zero()) return d;
    }
}

Vec combine(const DimVector& a, const DimVector& b, int sign) {
    Vec v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] + sign * b[i];
    return v;
}

bool hill_vec(const GraphShape& shape, const Vec& v) {
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x < 0; })) return false;
    return is_hill(shape, DimVector(v));
}

// hypotheses of the bounded-increment clause
bool bounded_increments(const StarData& star, const DimVector& delta, const DimVector& a) {
    const auto ds = delta[star.center];
    for (const auto& ray: star.rays) {
        const auto k = static_cast<std::int64_t>(ray.size() + 1);
        const auto step = ds / k;
        std::int64_t prev = 0;
        for (auto u: ray) {
            if (a[u] - prev > step) return false;
            prev = a[u];
        }
        if (a[star.center] - prev > step) return false;
        if (k * a[ray.back()] >= (k - 1) * ds) return false;
    }
    return true;
}

void note(HillClauseResult& r, std::string text) {
    if (r.counterexamples.size() < 20) r.counterexamples.push_back(std::move(text));
    else if (r.counterexamples.size() == 20) r.counterexamples.push_back("...");
}

} // namespace

HillArithmeticReport hill_arithmetic_checks(const GraphShape& shape, std::size_t vertex_count,
                                            std::size_t samples, Rng& rng,
                                            const std::vector<std::int64_t>& center_values) {
    if (!shape.star) throw unsupported_shape_error("hill arithmetic needs a star shaped graph");
    const auto& star = *shape.star;
    HillArithmeticReport rep;

    for (std::size_t t = 0; t < samples; ++t) {
        auto a = random_hill(star, vertex_count, 12, rng);
        auto b = random_hill(star, vertex_count, 12, rng);
        ++rep.sum.tested;
        if (!hill_vec(shape, combine(a, b, 1)))
            note(rep.sum, a.to_string() + " + " + b.to_string());
    }

    for (auto cv: center_values) {
        if (cv < 3) continue;
        auto delta = star_profile(shape, vertex_count, cv);
        if (!delta) continue;

        for (std::size_t t = 0; t < samples; ++t) {
            auto a = random_thin(vertex_count, rng);
            ++rep.delta_thin.tested;
            for (int sign: {1, -1})
                if (!hill_vec(shape, combine(*delta, a, sign)))
                    note(rep.delta_thin, delta->to_string() + (sign > 0 ? " + " : " - ") + a.to_string());
        }

        std::size_t accepted = 0, attempts = 0;
        while (accepted < samples && attempts < samples * 200) {
            ++attempts;
            auto a = random_hill(star, vertex_count, cv, rng);
            if (!bounded_increments(star, *delta, a)) {
                ++rep.delta_minus.excluded;
                continue;
            }
            ++accepted;
            ++rep.delta_minus.tested;
            if (!hill_vec(shape, combine(*delta, a, -1)))
                note(rep.delta_minus, delta->to_string() + " - " + a.to_string());
        }
    }
    return rep;
}

} // namespace quiverhom

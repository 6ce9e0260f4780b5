#include "quiverhom/exceptional.hpp"

#include "quiverhom/error.hpp"
#include "quiverhom/roots.hpp"

namespace quiverhom {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t attempt_seed(std::uint64_t seed, const DimVector& root, std::size_t attempt) {
    std::uint64_t h = splitmix(root.size());
    for (auto x: root.entries()) h = splitmix(h ^ static_cast<std::uint64_t>(x));
    h = splitmix(h ^ attempt);
    return seed ^ h;
}

std::variant<Representation, ConstructionFailure>
construct_exceptional(const Quiver& q, const DimVector& a, const ConstructionConfig& cfg) {
    if (cfg.max_retries == 0) throw precondition_error("max_retries must be at least 1");
    if (a.size() != q.vertex_count()) throw mismatch_error("dimension vector does not match the quiver");
    if (a.is_zero() || !is_real_root(q, a)) throw precondition_error(a.to_string() + " is not a real root");

    auto shared = std::make_shared<const Quiver>(q);
    for (std::size_t attempt = 0; attempt < cfg.max_retries; ++attempt) {
        Rng rng(attempt_seed(cfg.seed, a, attempt));
        std::vector<ExactMatrix> maps;
        for (const auto& ar: q.arrows())
            maps.push_back(random_matrix(static_cast<std::size_t>(a[ar.target]),
                                         static_cast<std::size_t>(a[ar.source]), cfg.field, rng));
        Representation r(shared, a, cfg.field, std::move(maps));
        if (is_exceptional(r)) return r;
    }
    return ConstructionFailure{a, cfg.max_retries};
}

ExceptionalSet construct_all(const Quiver& q, const std::vector<DimVector>& roots,
                             const ConstructionConfig& cfg) {
    ExceptionalSet out;
    for (const auto& a: roots) {
        auto res = construct_exceptional(q, a, cfg);
        if (auto* r = std::get_if<Representation>(&res)) {
            out.reps.push_back(std::move(*r));
            out.labels.push_back(a.to_string());
        } else {
            out.failures.push_back(std::get<ConstructionFailure>(res));
        }
    }
    return out;
}

PairTable pair_table(const std::vector<Representation>& reps, std::vector<std::string> labels) {
    if (labels.empty())
        for (const auto& r: reps) labels.push_back(r.dim().to_string());
    if (labels.size() != reps.size()) throw mismatch_error("one label per representation expected");
    for (std::size_t i = 1; i < reps.size(); ++i) {
        if (!reps[i].same_quiver(reps[0])) throw mismatch_error("pair table over mixed quivers");
        if (!(reps[i].field() == reps[0].field())) throw mismatch_error("pair table over mixed fields");
    }
    PairTable t;
    t.labels = std::move(labels);
    t.cells.resize(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto d = hom_report(reps[i], reps[i]);
        if (d.hom != 1 || d.ext1 != 0)
            throw precondition_error("entry " + t.labels[i] + " is not exceptional");
        t.cells[i].resize(reps.size());
        t.cells[i][i] = d;
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
            if (i != j) t.cells[i][j] = hom_report(reps[i], reps[j]);
    return t;
}

std::vector<std::pair<std::size_t, std::size_t>> ext_nontrivial_couples(const PairTable& table) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = i + 1; j < table.size(); ++j)
            if (table.at(i, j).ext1 > 0 && table.at(j, i).ext1 > 0) out.emplace_back(i, j);
    return out;
}

MaxRankReport scan_max_rank(const PairTable& table) {
    MaxRankReport rep;
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table.size(); ++j) {
            ++rep.pairs_checked;
            const auto& c = table.at(i, j);
            if (!c.max_rank) rep.violations.push_back({i, j, table.labels[i], table.labels[j], c});
        }
    return rep;
}

MaxRankReport scan_max_rank(const Quiver& q, const std::vector<Representation>& reps) {
    for (const auto& r: reps)
        if (!(r.quiver() == q)) throw mismatch_error("representation over another quiver");
    return scan_max_rank(pair_table(reps));
}

bool arrow_ranks_max(const Representation& r) {
    for (const auto& m: r.maps())
        if (!is_max_rank(m)) return false;
    return true;
}

} // namespace quiverhom

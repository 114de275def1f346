#ifndef DESARR_RUN_THEOREM_HPP
#define DESARR_RUN_THEOREM_HPP

// Generalized run theorem on a weighted digraph. Each edge (i,j) carries a
// set of allowed run lengths and a weight per length; a composition is
// (i,j)-admissible when its parts can be read off a walk from i to j.
//
//   B = I + [sum_k w_k^{(i,j)} x^k],  A = B^{-1},
//   sum_{pi in S_n} w^{(i,j)}(Comp pi) x^n/n! = ((hat A)^{-1})_{i,j}
//
// provided no composition is admissible along two different walks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <desarr/errors.hpp>
#include <desarr/perm.hpp>
#include <desarr/rational.hpp>
#include <desarr/series.hpp>

namespace desarr
{

// Union of arithmetic progressions {k0, k0+step, ...} and finitely many extras.
class PartSet
{
public:
    PartSet() = default;
    PartSet(std::vector<std::pair<int, int>> progressions, std::vector<int> extras)
        : progressions_(std::move(progressions)), extras_(std::move(extras))
    {
        for (const auto &[k0, step] : progressions_) {
            if (k0 < 1 || step < 1) {
                throw invalid_input("part set progression needs start >= 1 and step >= 1");
            }
        }
        for (const int e : extras_) {
            if (e < 1) {
                throw invalid_input("part set extras must be positive");
            }
        }
        std::sort(progressions_.begin(), progressions_.end());
        progressions_.erase(std::unique(progressions_.begin(), progressions_.end()), progressions_.end());
        std::sort(extras_.begin(), extras_.end());
        extras_.erase(std::unique(extras_.begin(), extras_.end()), extras_.end());
        std::erase_if(extras_, [this](int e) { return in_progressions(e); });
    }

    static PartSet from(int k0, int step = 1)
    {
        return PartSet({{k0, step}}, {});
    }
    static PartSet single(int k)
    {
        return PartSet({}, {k});
    }

    bool contains(int k) const noexcept
    {
        return in_progressions(k) || std::binary_search(extras_.begin(), extras_.end(), k);
    }

    const std::vector<std::pair<int, int>> &progressions() const noexcept
    {
        return progressions_;
    }
    const std::vector<int> &extras() const noexcept
    {
        return extras_;
    }

    friend bool operator==(const PartSet &, const PartSet &) = default;

private:
    bool in_progressions(int k) const noexcept
    {
        for (const auto &[k0, step] : progressions_) {
            if (k >= k0 && (k - k0) % step == 0) {
                return true;
            }
        }
        return false;
    }

    std::vector<std::pair<int, int>> progressions_;
    std::vector<int> extras_;
};

// a*k + b
struct Affine {
    int a = 0;
    int b = 0;

    long long at(int k) const noexcept
    {
        return static_cast<long long>(a) * k + b;
    }
    friend bool operator==(const Affine &, const Affine &) = default;
};

struct WeightCase {
    PartSet parts;
    Affine t_exp;
    Affine s_exp;
    friend bool operator==(const WeightCase &, const WeightCase &) = default;
};

// Piecewise weight t^{t_exp(k)} s^{s_exp(k)}; the edge's part set is the
// union of the case guards.
struct WeightRule {
    std::vector<WeightCase> cases;

    const WeightCase *find(int k) const noexcept
    {
        for (const auto &c : cases) {
            if (c.parts.contains(k)) {
                return &c;
            }
        }
        return nullptr;
    }

    bool allows(int k) const noexcept
    {
        return find(k) != nullptr;
    }

    // Weight of a run of length k; 0 when k is not an allowed part.
    BigRational weight(int k, const BigRational &t, const BigRational &s) const
    {
        const auto *c = find(k);
        if (c == nullptr) {
            return 0;
        }
        return pow_int(t, c->t_exp.at(k)) * pow_int(s, c->s_exp.at(k));
    }
    friend bool operator==(const WeightRule &, const WeightRule &) = default;
};

struct Edge {
    int from = 1;
    int to = 1;
    WeightRule rule;
    friend bool operator==(const Edge &, const Edge &) = default;
};

struct RunGraphSpec {
    std::string name;
    int dim = 1;
    std::vector<Edge> edges;

    const Edge *edge(int from, int to) const noexcept
    {
        for (const auto &e : edges) {
            if (e.from == from && e.to == to) {
                return &e;
            }
        }
        return nullptr;
    }
    friend bool operator==(const RunGraphSpec &, const RunGraphSpec &) = default;
};

// Guard overlap and exponent signs are checked on part sizes up to this bound.
inline constexpr int spec_check_bound = 64;

// Structural validity: vertex range, one edge per ordered pair, disjoint case
// guards, non-negative exponents on each guard.
inline void validate_spec(const RunGraphSpec &spec)
{
    if (spec.dim < 1) {
        throw invalid_input(spec.name + ": dim must be positive");
    }
    for (std::size_t a = 0; a < spec.edges.size(); ++a) {
        const auto &e = spec.edges[a];
        if (e.from < 1 || e.from > spec.dim || e.to < 1 || e.to > spec.dim) {
            throw invalid_input(spec.name + ": edge vertex out of range");
        }
        for (std::size_t b = a + 1; b < spec.edges.size(); ++b) {
            if (spec.edges[b].from == e.from && spec.edges[b].to == e.to) {
                throw invalid_input(spec.name + ": duplicate edge " + std::to_string(e.from) + "->" +
                                    std::to_string(e.to));
            }
        }
        for (int k = 1; k <= spec_check_bound; ++k) {
            int hits = 0;
            for (const auto &c : e.rule.cases) {
                if (c.parts.contains(k)) {
                    ++hits;
                    if (c.t_exp.at(k) < 0 || c.s_exp.at(k) < 0) {
                        throw invalid_input(spec.name + ": negative exponent at part " + std::to_string(k));
                    }
                }
            }
            if (hits > 1) {
                throw invalid_input(spec.name + ": overlapping weight cases at part " + std::to_string(k));
            }
        }
    }
}

namespace detail
{

// Walks reaching each vertex, with the total weight carried. Counts saturate
// at 2, which is all uniqueness checking needs.
struct WalkState {
    std::vector<std::uint8_t> count;
    std::vector<BigRational> weight;
};

inline WalkState walk_start(const RunGraphSpec &spec, int i)
{
    WalkState st{std::vector<std::uint8_t>(static_cast<std::size_t>(spec.dim), 0),
                 std::vector<BigRational>(static_cast<std::size_t>(spec.dim))};
    st.count[static_cast<std::size_t>(i - 1)] = 1;
    st.weight[static_cast<std::size_t>(i - 1)] = 1;
    return st;
}

inline WalkState walk_step(const RunGraphSpec &spec, const WalkState &st, int k, const BigRational *t,
                           const BigRational *s)
{
    WalkState next{std::vector<std::uint8_t>(st.count.size(), 0), std::vector<BigRational>(st.count.size())};
    for (const auto &e : spec.edges) {
        const auto u = static_cast<std::size_t>(e.from - 1);
        const auto v = static_cast<std::size_t>(e.to - 1);
        if (st.count[u] == 0 || !e.rule.allows(k)) {
            continue;
        }
        next.count[v] = static_cast<std::uint8_t>(std::min(2, next.count[v] + st.count[u]));
        if (t != nullptr) {
            next.weight[v] += st.weight[u] * e.rule.weight(k, *t, *s);
        }
    }
    return next;
}

} // namespace detail

// Weight of L along its unique (i,j)-admissible walk, or 0 if none exists.
// Throws hypothesis_violation if L is admissible along two walks.
inline BigRational composition_weight(const RunGraphSpec &spec, int i, int j, const Composition &L,
                                      const BigRational &t, const BigRational &s)
{
    if (i < 1 || i > spec.dim || j < 1 || j > spec.dim) {
        throw invalid_input("vertex out of range");
    }
    auto st = detail::walk_start(spec, i);
    for (const int k : L.parts()) {
        st = detail::walk_step(spec, st, k, &t, &s);
    }
    const auto jj = static_cast<std::size_t>(j - 1);
    if (st.count[jj] > 1) {
        throw hypothesis_violation(spec.name + ": composition " + L.str() + " is (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")-admissible along more than one path");
    }
    return st.count[jj] == 0 ? BigRational(0) : st.weight[jj];
}

struct AdmissibilityReport {
    bool pass = true;
    std::size_t compositions_checked = 0;
    // First violation found, if any.
    std::optional<Composition> witness;
    int from = 0;
    int to = 0;

    std::string str() const
    {
        if (pass) {
            return "pass (" + std::to_string(compositions_checked) + " compositions)";
        }
        return "fail: " + witness->str() + " is (" + std::to_string(from) + "," + std::to_string(to) +
               ")-admissible along more than one path";
    }
};

// Checks every composition of total size <= max_size from every start vertex.
inline AdmissibilityReport validate_unique_admissibility(const RunGraphSpec &spec, std::size_t max_size)
{
    validate_spec(spec);
    AdmissibilityReport report;
    std::vector<int> parts;
    // Returns false once a violation is recorded.
    auto dfs = [&](auto &self, int start, const detail::WalkState &st, std::size_t remaining) -> bool {
        ++report.compositions_checked;
        for (std::size_t v = 0; v < st.count.size(); ++v) {
            if (st.count[v] > 1) {
                report.pass = false;
                report.witness = Composition(parts);
                report.from = start;
                report.to = static_cast<int>(v) + 1;
                return false;
            }
        }
        if (std::all_of(st.count.begin(), st.count.end(), [](auto c) { return c == 0; })) {
            return true; // no walk can be extended
        }
        for (std::size_t k = 1; k <= remaining; ++k) {
            parts.push_back(static_cast<int>(k));
            const auto next = detail::walk_step(spec, st, static_cast<int>(k), nullptr, nullptr);
            const bool ok = self(self, start, next, remaining - k);
            parts.pop_back();
            if (!ok) {
                return false;
            }
        }
        return true;
    };
    for (int i = 1; i <= spec.dim; ++i) {
        if (!dfs(dfs, i, detail::walk_start(spec, i), max_size)) {
            break;
        }
    }
    return report;
}

// B = I + [sum_{k=1}^N w_k^{(i,j)} x^k] at the given (t, s).
inline SeriesMatrix run_matrix(const RunGraphSpec &spec, const BigRational &t, const BigRational &s, std::size_t N)
{
    auto B = SeriesMatrix::identity(static_cast<std::size_t>(spec.dim), N);
    for (const auto &e : spec.edges) {
        TruncSeries entry = B(static_cast<std::size_t>(e.from - 1), static_cast<std::size_t>(e.to - 1));
        for (std::size_t k = 1; k <= N; ++k) {
            entry[k] += e.rule.weight(static_cast<int>(k), t, s);
        }
        B.set(static_cast<std::size_t>(e.from - 1), static_cast<std::size_t>(e.to - 1), entry);
    }
    return B;
}

// Entry (i,j) of (hat A)^{-1}, A = B^{-1}. Unless validate is false, the
// unique-admissibility hypothesis is first checked up to size N.
inline TruncSeries run_theorem_egf(const RunGraphSpec &spec, int i, int j, const BigRational &t,
                                   const BigRational &s, std::size_t N, bool validate = true)
{
    if (i < 1 || i > spec.dim || j < 1 || j > spec.dim) {
        throw invalid_input("vertex out of range");
    }
    if (validate) {
        const auto report = validate_unique_admissibility(spec, N);
        if (!report.pass) {
            throw hypothesis_violation(spec.name + ": " + report.str());
        }
    }
    const auto A = matrix_invert(run_matrix(spec, t, s, N));
    const auto R = matrix_invert(hat_transform(A));
    return R(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
}

// Number of permutations of S_n with each descent composition.
using CompositionTally = std::map<std::vector<int>, std::uint64_t>;

inline CompositionTally composition_tally(std::size_t n, std::size_t cap = default_enumeration_cap)
{
    return parallel_reduce_permutations(
        n, PermClass::all, CompositionTally{},
        [](CompositionTally &acc, std::span<const int> w) {
            std::vector<int> parts;
            int run = 0;
            for (std::size_t p = 0; p < w.size(); ++p) {
                ++run;
                if (p + 1 == w.size() || w[p] > w[p + 1]) {
                    parts.push_back(run);
                    run = 0;
                }
            }
            ++acc[parts];
        },
        [](CompositionTally &acc, const CompositionTally &part) {
            for (const auto &[k, v] : part) {
                acc[k] += v;
            }
        },
        cap);
}

inline BigRational weight_sum(const RunGraphSpec &spec, int i, int j, const CompositionTally &tally,
                              const BigRational &t, const BigRational &s)
{
    BigRational total{0};
    for (const auto &[parts, count] : tally) {
        total += BigRational(count) * composition_weight(spec, i, j, Composition(parts), t, s);
    }
    return total;
}

// sum over pi in S_n of w^{(i,j)}(Comp pi), by enumeration.
inline BigRational oracle_weight_sum(const RunGraphSpec &spec, int i, int j, std::size_t n, const BigRational &t,
                                     const BigRational &s, std::size_t cap = default_enumeration_cap)
{
    return weight_sum(spec, i, j, composition_tally(n, cap), t, s);
}

// JSON form:
// { "name": str, "dim": int, "edges": [ { "from": int, "to": int, "cases": [
//   { "parts": {"progressions": [[k0, step], ...], "extras": [ints]},
//     "t_exp": [a, b], "s_exp": [c, d] } ] } ] }

inline nlohmann::json to_json(const RunGraphSpec &spec)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto &e : spec.edges) {
        nlohmann::json cases = nlohmann::json::array();
        for (const auto &c : e.rule.cases) {
            nlohmann::json progs = nlohmann::json::array();
            for (const auto &[k0, step] : c.parts.progressions()) {
                progs.push_back({k0, step});
            }
            cases.push_back({{"parts", {{"progressions", progs}, {"extras", c.parts.extras()}}},
                             {"t_exp", {c.t_exp.a, c.t_exp.b}},
                             {"s_exp", {c.s_exp.a, c.s_exp.b}}});
        }
        edges.push_back({{"from", e.from}, {"to", e.to}, {"cases", cases}});
    }
    return {{"name", spec.name}, {"dim", spec.dim}, {"edges", edges}};
}

inline RunGraphSpec spec_from_json(const nlohmann::json &j)
{
    try {
        RunGraphSpec spec;
        spec.name = j.at("name").get<std::string>();
        spec.dim = j.at("dim").get<int>();
        for (const auto &je : j.at("edges")) {
            Edge e;
            e.from = je.at("from").get<int>();
            e.to = je.at("to").get<int>();
            for (const auto &jc : je.at("cases")) {
                const auto &jp = jc.at("parts");
                std::vector<std::pair<int, int>> progs;
                if (jp.contains("progressions")) {
                    for (const auto &pr : jp.at("progressions")) {
                        if (pr.size() != 2) {
                            throw invalid_input("progression must be [k0, step]");
                        }
                        progs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
                    }
                }
                std::vector<int> extras;
                if (jp.contains("extras")) {
                    extras = jp.at("extras").get<std::vector<int>>();
                }
                auto affine = [&jc](const char *key) {
                    if (!jc.contains(key)) {
                        return Affine{};
                    }
                    const auto v = jc.at(key).get<std::vector<int>>();
                    if (v.size() != 2) {
                        throw invalid_input(std::string(key) + " must be [a, b]");
                    }
                    return Affine{v[0], v[1]};
                };
                e.rule.cases.push_back({PartSet(std::move(progs), std::move(extras)), affine("t_exp"), affine("s_exp")});
            }
            spec.edges.push_back(std::move(e));
        }
        validate_spec(spec);
        return spec;
    } catch (const nlohmann::json::exception &ex) {
        throw invalid_input(std::string("graph spec: ") + ex.what());
    }
}

inline RunGraphSpec load_spec(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw invalid_input("cannot open graph spec " + path);
    }
    try {
        return spec_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error &ex) {
        throw invalid_input(path + ": " + ex.what());
    }
}

// Built-in graphs.

namespace builtin
{

inline WeightCase unit(PartSet parts)
{
    return {std::move(parts), {}, {}};
}

// t^{k-1}
inline WeightCase t_pow_k_minus_1(PartSet parts)
{
    return {std::move(parts), {1, -1}, {}};
}

// Desarrangements: 1 -> 2 {1}, 2 -> 1 {1}, 2 -> 3 {2,3,...}, 3 -> 3 {1,2,...}.
inline RunGraphSpec fig1()
{
    return {"fig1",
            3,
            {{1, 2, {{unit(PartSet::single(1))}}},
             {2, 1, {{unit(PartSet::single(1))}}},
             {2, 3, {{unit(PartSet::from(2))}}},
             {3, 3, {{unit(PartSet::from(1))}}}}};
}

// fig1 weighted by double ascents: t^{k-2} on runs of length k >= 2.
inline RunGraphSpec fig1_dasc()
{
    return {"fig1-dasc",
            3,
            {{1, 2, {{unit(PartSet::single(1))}}},
             {2, 1, {{unit(PartSet::single(1))}}},
             {2, 3, {{{PartSet::from(2), {1, -2}, {}}}}},
             {3, 3, {{unit(PartSet::single(1)), {PartSet::from(2), {1, -2}, {}}}}}}};
}

// Complements of desarrangements: 1 -> 2 {2,4,...}, 2 -> 2 {1,2,...}, with
// t^{k-1} per run.
inline RunGraphSpec fig2()
{
    return {"fig2",
            2,
            {{1, 2, {{t_pow_k_minus_1(PartSet::from(2, 2))}}}, {2, 2, {{t_pow_k_minus_1(PartSet::from(1))}}}}};
}

// fig2 weighted by double ascents of the complement.
inline RunGraphSpec fig2_ddes()
{
    return {"fig2-ddes",
            2,
            {{1, 2, {{{PartSet::from(2, 2), {1, -2}, {}}}}},
             {2, 2, {{unit(PartSet::single(1)), {PartSet::from(2), {1, -2}, {}}}}}}};
}

// fig2 with s on every non-initial long run and t^{k-1} per run: pk and des
// of the complement's preimage.
inline RunGraphSpec fig2_pk_des()
{
    return {"fig2-pk-des",
            2,
            {{1, 2, {{t_pow_k_minus_1(PartSet::from(2, 2))}}},
             {2, 2, {{unit(PartSet::single(1)), {PartSet::from(2), {1, -1}, {0, 1}}}}}}};
}

// Pixed points: 1 -> 1 {1} weight s, 1 -> 2 {2,3,...}, 2 -> 2 {1,2,...}.
inline RunGraphSpec fig3()
{
    return {"fig3",
            2,
            {{1, 1, {{{PartSet::single(1), {}, {0, 1}}}}},
             {1, 2, {{t_pow_k_minus_1(PartSet::from(2, 2)), {PartSet::from(3, 2), {1, -1}, {0, 1}}}}},
             {2, 2, {{t_pow_k_minus_1(PartSet::from(1))}}}}};
}

inline std::vector<RunGraphSpec> all()
{
    return {fig1(), fig1_dasc(), fig2(), fig2_ddes(), fig2_pk_des(), fig3()};
}

inline std::optional<RunGraphSpec> by_name(const std::string &name)
{
    for (auto &s : all()) {
        if (s.name == name) {
            return s;
        }
    }
    return std::nullopt;
}

} // namespace builtin

} // namespace desarr

#endif

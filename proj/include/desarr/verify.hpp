#ifndef DESARR_VERIFY_HPP
#define DESARR_VERIFY_HPP

// Cross-checks of formulas, the run theorem and the pattern program against
// brute force and the published tables. Failures are collected, not thrown.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <desarr/closed_forms.hpp>
#include <desarr/errors.hpp>
#include <desarr/oracle.hpp>
#include <desarr/pattern_set.hpp>
#include <desarr/patterns.hpp>
#include <desarr/perm.hpp>
#include <desarr/poly.hpp>
#include <desarr/reference.hpp>
#include <desarr/run_theorem.hpp>
#include <desarr/sequences.hpp>
#include <desarr/series.hpp>

namespace desarr
{

struct Verdict {
    std::optional<std::size_t> n; // absent for checks not tied to one size
    bool match = true;
    std::string detail;
};

struct VerificationReport {
    std::string group;
    std::string subject;
    std::size_t n_lo = 0;
    std::size_t n_hi = 0;
    std::vector<Verdict> verdicts;

    bool pass() const noexcept
    {
        return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict &v) { return v.match; });
    }
    std::size_t mismatches() const noexcept
    {
        return static_cast<std::size_t>(
            std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict &v) { return !v.match; }));
    }

    void add(std::optional<std::size_t> n, bool match, std::string detail = {})
    {
        verdicts.push_back({n, match, std::move(detail)});
    }
};

inline constexpr std::array<std::string_view, 8> check_groups{
    "table1", "tables", "run-theorem", "patterns", "bijections", "lemma", "specializations", "equidistribution"};

// From this size on, every class outside the two published lists has been
// separated from derangements (counts by n = 7, pix/fix by n = 5).
inline constexpr std::size_t equidistribution_separation_n = 7;

struct VerifyOptions {
    std::vector<std::string> only; // empty = every group
    std::size_t cap = default_enumeration_cap;
    // Replacement formulas, e.g. a deliberately corrupted one in tests.
    std::map<FormulaId, Evaluator> overrides;
};

namespace detail
{

inline Poly poly_of(const std::vector<BigInt> &cs)
{
    std::vector<BigRational> v;
    for (const auto &c : cs) {
        v.emplace_back(c);
    }
    return Poly(std::move(v));
}

inline Poly poly_of(const std::vector<long long> &cs)
{
    return Poly::from_integers(cs);
}

inline std::string mismatch(const Poly &got, const Poly &want)
{
    return "got " + got.str() + ", expected " + want.str();
}

struct Context {
    std::size_t n_max;
    const VerifyOptions &opt;

    Evaluator evaluator(FormulaId id) const
    {
        const auto it = opt.overrides.find(id);
        return it != opt.overrides.end() ? it->second : formula_evaluator(id);
    }
    TruncSeries eval(FormulaId id, const BigRational &t, const BigRational &s, std::size_t N) const
    {
        return evaluator(id)(t, s, N);
    }
};

// First n at which two series disagree, or nullopt.
inline std::optional<std::size_t> first_difference(const TruncSeries &a, const TruncSeries &b)
{
    for (std::size_t k = 0; k <= std::min(a.order(), b.order()); ++k) {
        if (a[k] != b[k]) {
            return k;
        }
    }
    return std::nullopt;
}

inline void compare_series(VerificationReport &r, const TruncSeries &got, const TruncSeries &want)
{
    const auto fact = factorial_table(got.order());
    for (std::size_t n = 0; n <= got.order(); ++n) {
        const bool ok = got[n] == want[n];
        r.add(n, ok,
              ok ? "" : "n!*coefficient " + to_display_string(got[n] * BigRational(fact[n])) + " vs " +
                            to_display_string(want[n] * BigRational(fact[n])));
    }
}

inline std::vector<VerificationReport> check_table1(const Context &cx)
{
    VerificationReport members{"table1", "D_n members vs published list", 0, std::min<std::size_t>(cx.n_max, 5), {}};
    VerificationReport counts{"table1", "|D_n| = d_n = number of derangements", 0, cx.n_max, {}};
    const auto &published = reference::desarrangements_up_to_5();
    for (std::size_t n = 0; n <= cx.n_max; ++n) {
        const auto dn = enumerate(n, PermClass::desarrangements, cx.opt.cap);
        if (n >= 1 && n <= 5) {
            std::vector<std::string> got;
            for (const auto &p : dn) {
                got.push_back(p.str());
            }
            std::vector<std::string> want(published[n - 1].begin(), published[n - 1].end());
            members.add(n, got == want, got == want ? "" : "member list differs");
        } else if (n == 0) {
            members.add(n, dn.size() == 1 && dn[0].empty(), "empty permutation is the only member");
        }
        const BigInt d = sequence(SequenceId::derangement, n);
        const BigInt der = count_class(n, PatternSet{}, PermClass::derangements, cx.opt.cap);
        bool ok = BigInt(dn.size()) == d && der == d;
        if (n < reference::derangement_numbers.size()) {
            ok = ok && d == reference::derangement_numbers[n];
        }
        counts.add(n, ok, ok ? "" : "|D_n| = " + std::to_string(dn.size()) + ", d_n = " + d.str());
    }
    return {members, counts};
}

inline const std::vector<long long> *published_row(FormulaId id, std::size_t n)
{
    const reference::Rows *rows = nullptr;
    switch (id) {
        case FormulaId::des:
            rows = &reference::des_table();
            break;
        case FormulaId::pk:
            rows = &reference::pk_table();
            break;
        case FormulaId::val:
            rows = &reference::val_table();
            break;
        case FormulaId::dasc:
            rows = &reference::dasc_table();
            break;
        case FormulaId::ddes:
            rows = &reference::ddes_table();
            break;
        default:
            return nullptr;
    }
    return n < rows->size() ? &(*rows)[n] : nullptr;
}

inline std::vector<VerificationReport> check_tables(const Context &cx)
{
    const std::array<std::pair<FormulaId, Stat>, 5> stats{{{FormulaId::des, Stat::des},
                                                           {FormulaId::pk, Stat::pk},
                                                           {FormulaId::val, Stat::val},
                                                           {FormulaId::dasc, Stat::dasc},
                                                           {FormulaId::ddes, Stat::ddes}}};
    // One enumeration of D_n per n, marginalized per statistic.
    std::vector<std::map<Stat, Poly>> oracle(cx.n_max + 1);
    std::vector<Poly> eulerian_oracle(cx.n_max + 1);
    const std::vector<Stat> joint{Stat::des, Stat::pk, Stat::val, Stat::dasc, Stat::ddes, Stat::rval};
    for (std::size_t n = 0; n <= cx.n_max; ++n) {
        const auto row = distribution(n, joint, PermClass::desarrangements, std::nullopt, cx.opt.cap);
        for (std::size_t k = 0; k < joint.size(); ++k) {
            std::vector<BigInt> cs;
            for (const auto &[key, count] : row) {
                const auto e = static_cast<std::size_t>(key[k]);
                if (cs.size() <= e) {
                    cs.resize(e + 1);
                }
                cs[e] += count;
            }
            oracle[n][joint[k]] = poly_of(cs);
        }
        eulerian_oracle[n] = poly_of(row_coefficients(distribution(n, Stat::des, PermClass::all, std::nullopt, cx.opt.cap)));
    }

    std::vector<VerificationReport> out;
    std::map<FormulaId, DistributionTable> tables;
    for (const auto &[id, stat] : stats) {
        VerificationReport r{"tables", std::string(to_string(id)) + ": formula = oracle = published", 0, cx.n_max, {}};
        try {
            tables[id] = distribution_polynomials(id, cx.n_max, cx.evaluator(id));
        } catch (const error &e) {
            r.add(std::nullopt, false, std::string("formula rows unavailable: ") + e.what());
            out.push_back(std::move(r));
            continue;
        }
        const auto &rows = tables[id].univariate;
        for (std::size_t n = 0; n <= cx.n_max; ++n) {
            const Poly &want = oracle[n][stat];
            if (rows[n] != want) {
                r.add(n, false, "formula " + mismatch(rows[n], want));
                continue;
            }
            if (const auto *pub = published_row(id, n); pub != nullptr && poly_of(*pub) != want) {
                r.add(n, false, "published " + mismatch(poly_of(*pub), want));
                continue;
            }
            r.add(n, true);
        }
        out.push_back(std::move(r));
    }

    VerificationReport rval{"tables", "rval row = t * pk row (n >= 1)", 1, cx.n_max, {}};
    const Poly t_poly(std::vector<BigRational>{BigRational(0), BigRational(1)});
    for (std::size_t n = 1; n <= cx.n_max; ++n) {
        const Poly want = t_poly * oracle[n][Stat::pk];
        const bool formula_ok = !tables.count(FormulaId::pk) || t_poly * tables[FormulaId::pk].univariate[n] == want;
        const bool ok = oracle[n][Stat::rval] == want && formula_ok;
        rval.add(n, ok, ok ? "" : mismatch(oracle[n][Stat::rval], want));
    }
    out.push_back(std::move(rval));

    VerificationReport eul{"tables", "eulerian: formula = des over S_n", 0, cx.n_max, {}};
    try {
        const auto rows = distribution_polynomials(FormulaId::eulerian, cx.n_max, cx.evaluator(FormulaId::eulerian));
        for (std::size_t n = 0; n <= cx.n_max; ++n) {
            const bool ok = rows.univariate[n] == eulerian_oracle[n];
            eul.add(n, ok, ok ? "" : mismatch(rows.univariate[n], eulerian_oracle[n]));
        }
    } catch (const error &e) {
        eul.add(std::nullopt, false, e.what());
    }
    out.push_back(std::move(eul));

    VerificationReport sums{"tables", "row sums = d_n", 0, cx.n_max, {}};
    for (std::size_t n = 0; n <= cx.n_max; ++n) {
        bool ok = true;
        for (const auto &[id, table] : tables) {
            ok = ok && table.univariate[n].sum_of_coefficients() == BigRational(sequence(SequenceId::derangement, n));
        }
        sums.add(n, ok);
    }
    out.push_back(std::move(sums));
    return out;
}

struct Sample {
    BigRational t;
    BigRational s;
};

inline std::vector<VerificationReport> check_run_theorem(const Context &cx)
{
    std::vector<VerificationReport> out;
    const std::size_t N = cx.n_max;
    const std::vector<Sample> samples{{2, 3}, {3, 5}, {BigRational(-1, 2), BigRational(2, 3)}};
    std::vector<CompositionTally> tallies;
    for (std::size_t n = 0; n <= N; ++n) {
        tallies.push_back(composition_tally(n, cx.opt.cap));
    }

    for (const auto &spec : builtin::all()) {
        VerificationReport adm{"run-theorem", spec.name + ": unique admissibility up to size 12", 0, 12, {}};
        const auto rep = validate_unique_admissibility(spec, 12);
        adm.add(std::nullopt, rep.pass, rep.str());
        out.push_back(std::move(adm));

        VerificationReport r{"run-theorem", spec.name + ": (hat A)^{-1} entries = enumeration", 0, N, {}};
        std::vector<bool> ok_n(N + 1, true);
        std::vector<std::string> why(N + 1);
        for (const auto &smp : samples) {
            const auto A = matrix_invert(run_matrix(spec, smp.t, smp.s, N));
            const auto R = matrix_invert(hat_transform(A));
            for (int i = 1; i <= spec.dim; ++i) {
                for (int j = 1; j <= spec.dim; ++j) {
                    const auto counts = egf_counts(R(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)));
                    for (std::size_t n = 0; n <= N; ++n) {
                        const auto want = weight_sum(spec, i, j, tallies[n], smp.t, smp.s);
                        if (counts[n] != want && ok_n[n]) {
                            ok_n[n] = false;
                            why[n] = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") at t=" +
                                     to_display_string(smp.t) + ", s=" + to_display_string(smp.s) + ": " +
                                     to_display_string(counts[n]) + " vs " + to_display_string(want);
                        }
                    }
                }
            }
        }
        for (std::size_t n = 0; n <= N; ++n) {
            r.add(n, ok_n[n], why[n]);
        }
        out.push_back(std::move(r));
    }

    // Worked examples with their correction terms.
    const auto one = TruncSeries::constant(1, N);
    const auto cosh_x = cosh_even(4, N);
    {
        VerificationReport r{"run-theorem", "fig1 (1,3) + cosh x = e^{-x}/(1-x)", 0, N, {}};
        compare_series(r, run_theorem_egf(builtin::fig1(), 1, 3, 1, 1, N, false) + cosh_x,
                       cx.eval(FormulaId::derangement_egf, 0, 0, N));
        out.push_back(std::move(r));
    }
    for (const long long t : {2, 3, 5}) {
        VerificationReport r{"run-theorem", "fig2 (1,2) + 1 = des formula at t=" + std::to_string(t), 0, N, {}};
        compare_series(r, run_theorem_egf(builtin::fig2(), 1, 2, t, 1, N, false) + one,
                       cx.eval(FormulaId::des, t, 1, N));
        out.push_back(std::move(r));
    }
    {
        VerificationReport r{"run-theorem", "fig1-dasc (1,3) + cosh x = dasc formula at t=3", 0, N, {}};
        compare_series(r, run_theorem_egf(builtin::fig1_dasc(), 1, 3, 3, 1, N, false) + cosh_x,
                       cx.eval(FormulaId::dasc, 3, 1, N));
        out.push_back(std::move(r));
    }
    {
        VerificationReport r{"run-theorem", "fig2-ddes (1,2) + 1 = ddes formula at t=3", 0, N, {}};
        compare_series(r, run_theorem_egf(builtin::fig2_ddes(), 1, 2, 3, 1, N, false) + one,
                       cx.eval(FormulaId::ddes, 3, 1, N));
        out.push_back(std::move(r));
    }
    {
        VerificationReport r{"run-theorem", "fig2-pk-des (1,2) + 1 = joint_pk_des at t=3, s=5", 0, N, {}};
        compare_series(r, run_theorem_egf(builtin::fig2_pk_des(), 1, 2, 3, 5, N, false) + one,
                       cx.eval(FormulaId::joint_pk_des, 3, 5, N));
        out.push_back(std::move(r));
    }
    {
        VerificationReport r{"run-theorem", "fig3 (1,1)+(1,2) = joint_pix_des at t=3, s=5", 0, N, {}};
        const auto f3 = builtin::fig3();
        compare_series(r, run_theorem_egf(f3, 1, 1, 3, 5, N, false) + run_theorem_egf(f3, 1, 2, 3, 5, N, false),
                       cx.eval(FormulaId::joint_pix_des, 3, 5, N));
        out.push_back(std::move(r));
    }
    {
        // 1 -> 1 {1}, 1 -> 2 {1}, 2 -> 2 {1}: (1,1) reaches 2 along two walks.
        const RunGraphSpec bad{"ambiguous",
                               2,
                               {{1, 1, {{builtin::unit(PartSet::single(1))}}},
                                {1, 2, {{builtin::unit(PartSet::single(1))}}},
                                {2, 2, {{builtin::unit(PartSet::single(1))}}}}};
        VerificationReport r{"run-theorem", "ambiguous spec rejected", 0, 12, {}};
        const auto rep = validate_unique_admissibility(bad, 12);
        r.add(std::nullopt, !rep.pass, rep.str());
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<VerificationReport> check_patterns(const Context &cx)
{
    std::vector<VerificationReport> out;
    VerificationReport counts{"patterns", "closed form = brute force, all 64 classes", 0, cx.n_max, {}};
    VerificationReport wilf{"patterns", "s_n(Pi) = s_n(Pi^c)", 0, cx.n_max, {}};
    std::optional<std::string> nontrivial;
    for (std::size_t n = 0; n <= cx.n_max; ++n) {
        const auto d = count_all_classes(n, PermClass::desarrangements, cx.opt.cap);
        std::string bad;
        for (const auto set : PatternSet::all_subsets()) {
            const auto want = closed_form_count(n, set);
            if (d[set.mask()] != want) {
                bad += set.str() + ": " + d[set.mask()].str() + " vs formula " + want.str() + "; ";
            }
            if (!nontrivial && d[set.mask()] != d[set.complemented().mask()]) {
                nontrivial = "d_" + std::to_string(n) + set.str() + " = " + d[set.mask()].str() + " but d_" +
                             std::to_string(n) + set.complemented().str() + " = " +
                             d[set.complemented().mask()].str();
            }
        }
        counts.add(n, bad.empty(), bad);
        const auto s = count_all_classes(n, PermClass::all, cx.opt.cap);
        bool sym = true;
        for (const auto set : PatternSet::all_subsets()) {
            sym = sym && s[set.mask()] == s[set.complemented().mask()];
        }
        wilf.add(n, sym);
    }
    out.push_back(std::move(counts));
    out.push_back(std::move(wilf));
    if (cx.n_max >= 3) {
        VerificationReport r{"patterns", "complementation is not a symmetry on desarrangements", 0, cx.n_max, {}};
        r.add(std::nullopt, nontrivial.has_value(), nontrivial.value_or("no witness"));
        out.push_back(std::move(r));
    }

    VerificationReport seq{"patterns", "sequence tables and generating functions", 0, 20, {}};
    {
        const auto C = sequence_values(SequenceId::catalan, 21);
        const auto F = sequence_values(SequenceId::fine, 22);
        for (std::size_t n = 1; n <= 20; ++n) {
            const bool ok = C[n] == 2 * F[n + 1] + F[n];
            seq.add(n, ok, ok ? "" : "C_n != 2F_{n+1} + F_n");
        }
        const auto J = sequence_values(SequenceId::jacobsthal, 11);
        const auto a = sequence_values(SequenceId::a_seq, 11);
        for (std::size_t n = 0; n <= 11; ++n) {
            seq.add(n, F[n] == reference::fine_table[n], "Fine table");
            seq.add(n, J[n] == reference::jacobsthal_table[n], "Jacobsthal table");
            if (n != reference::a_sequence_misprint_index) {
                seq.add(n, a[n] == reference::a_sequence_table[n], "a-sequence table");
            }
        }
        seq.add(11, a[11] == 13035 && a[11] != reference::a_sequence_table[11],
                "a_11 = " + a[11].str() + " by the recurrence; the published table prints 3761");
        const std::size_t N = 12;
        const auto cat = evaluate_formula(FormulaId::catalan_ogf, 0, N);
        const auto fine = evaluate_formula(FormulaId::fine_ogf, 0, N);
        const auto fine_sh = evaluate_formula(FormulaId::fine_shifted_ogf, 0, N);
        const auto jac = evaluate_formula(FormulaId::jacobsthal_shifted_ogf, 0, N);
        for (std::size_t n = 0; n <= N; ++n) {
            seq.add(n, cat[n] == BigRational(C[n]), "Catalan generating function");
            seq.add(n, fine[n] == BigRational(F[n]), "Fine generating function");
            seq.add(n, fine_sh[n] == BigRational(F[n + 1]), "shifted Fine generating function");
            seq.add(n, jac[n] == BigRational(n == 0 ? BigInt(1) : sequence(SequenceId::jacobsthal, n - 1)),
                    "shifted Jacobsthal generating function");
        }
    }
    out.push_back(std::move(seq));
    return out;
}

inline std::vector<VerificationReport> check_bijections(const Context &cx)
{
    std::vector<VerificationReport> out;
    // codomains reach size n + 1
    const std::size_t top = std::min(cx.n_max, cx.opt.cap - 1);
    for (const auto id : all_bijections) {
        VerificationReport r{"bijections", std::string(to_string(id)) + ": round trips on domain and codomain", 0, top,
                             {}};
        for (std::size_t n = detail::min_domain_size(id); n <= top; ++n) {
            const auto dom = bijection_domain(id, n, cx.opt.cap);
            const auto cod = bijection_codomain(id, n, cx.opt.cap);
            std::string why;
            std::set<Permutation> images;
            for (const auto &p : dom) {
                const auto q = bijection(id, p, Direction::forward);
                if (!in_bijection_codomain(id, q, n)) {
                    why = p.str() + " maps outside the codomain";
                    break;
                }
                if (bijection(id, q, Direction::inverse, n) != p) {
                    why = "inverse(forward(" + p.str() + ")) != " + p.str();
                    break;
                }
                images.insert(q);
            }
            if (why.empty()) {
                for (const auto &q : cod) {
                    if (bijection(id, bijection(id, q, Direction::inverse, n), Direction::forward) != q) {
                        why = "forward(inverse(" + q.str() + ")) != " + q.str();
                        break;
                    }
                }
            }
            if (why.empty() && (images.size() != dom.size() || cod.size() != dom.size())) {
                why = "domain " + std::to_string(dom.size()) + ", images " + std::to_string(images.size()) +
                      ", codomain " + std::to_string(cod.size());
            }
            r.add(n, why.empty(), why);
        }
        out.push_back(std::move(r));
    }

    VerificationReport ss{"bijections", "Simion-Schmidt: S_n(123) -> S_n(132), restricting to D_n", 0, cx.n_max, {}};
    for (std::size_t n = 0; n <= cx.n_max; ++n) {
        std::string why;
        std::set<Permutation> images;
        std::size_t domain = 0;
        std::size_t d_domain = 0;
        for_each_permutation(
            n, PermClass::all,
            [&](std::span<const int> w) {
                if (!why.empty() || !avoids(w, PatternSet::parse("123"))) {
                    return;
                }
                ++domain;
                const Permutation p{std::vector<int>(w.begin(), w.end())};
                const auto q = simion_schmidt(p);
                if (!avoids(q, PatternSet::parse("132")) || simion_schmidt(q, Direction::inverse) != p) {
                    why = "round trip fails at " + p.str();
                }
                if (is_desarrangement(p) != is_desarrangement(q)) {
                    why = p.str() + " and its image differ in being desarrangements";
                }
                d_domain += is_desarrangement(p) ? 1 : 0;
                images.insert(q);
            },
            cx.opt.cap);
        if (why.empty() && (images.size() != domain || BigInt(domain) != count_class(n, PatternSet::parse("132"),
                                                                                     PermClass::all, cx.opt.cap))) {
            why = "not a bijection onto S_n(132)";
        }
        if (why.empty() &&
            BigInt(d_domain) != count_class(n, PatternSet::parse("132"), PermClass::desarrangements, cx.opt.cap)) {
            why = "restriction is not onto D_n(132)";
        }
        ss.add(n, why.empty(), why);
    }
    out.push_back(std::move(ss));

    VerificationReport shown{"bijections", "displayed images", 0, 0, {}};
    const struct {
        BijectionId id;
        std::string_view from;
        std::string_view to;
    } examples[] = {{BijectionId::insert_321, "45123", "516234"},
                    {BijectionId::phi_312, "342561", "4352671"},
                    {BijectionId::phi_123_132_213, "645321", "4231"},
                    {BijectionId::phi_123_132_213, "645231", "53412"},
                    {BijectionId::phi_123_132_213, "645312", "53421"}};
    for (const auto &ex : examples) {
        const auto got = bijection(ex.id, Permutation::parse(ex.from), Direction::forward).str();
        shown.add(std::nullopt, got == ex.to,
                  std::string(to_string(ex.id)) + "(" + std::string(ex.from) + ") = " + got);
    }
    out.push_back(std::move(shown));
    return out;
}

inline std::vector<VerificationReport> check_lemma(const Context &cx)
{
    VerificationReport lemma{"lemma", "structure of D_n(213), D_n(231), D_n(312), D_n(321)", 0, cx.n_max, {}};
    VerificationReport core{"lemma", "statistic identities over S_n", 0, cx.n_max, {}};
    VerificationReport pixfix{"lemma", "pix and fix equidistributed over S_n", 0, cx.n_max, {}};
    const auto p213 = PatternSet::parse("213");
    const auto p231 = PatternSet::parse("231");
    const auto p312 = PatternSet::parse("312");
    const auto p321 = PatternSet::parse("321");

    struct Acc {
        std::string lemma_fail;
        std::string core_fail;
        std::vector<std::uint64_t> fix;
        std::vector<std::uint64_t> pix;
    };
    for (std::size_t n = 0; n <= cx.n_max; ++n) {
        Acc init{{}, {}, std::vector<std::uint64_t>(n + 1), std::vector<std::uint64_t>(n + 1)};
        const int ni = static_cast<int>(n);
        const auto acc = parallel_reduce_permutations(
            n, PermClass::all, init,
            [&](Acc &a, std::span<const int> w) {
                const auto rec = statistics(w);
                ++a.fix[static_cast<std::size_t>(rec.fix)];
                ++a.pix[static_cast<std::size_t>(rec.pix)];
                if (a.core_fail.empty()) {
                    const Permutation p{std::vector<int>(w.begin(), w.end())};
                    const auto split = pixed_split(w);
                    const bool prefix_increasing =
                        std::is_sorted(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split)) &&
                        std::adjacent_find(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split),
                                           std::greater_equal<>()) == w.begin() + static_cast<std::ptrdiff_t>(split);
                    const bool desarr = is_desarrangement(w);
                    const bool ok = rec.des + rec.asc == ni && rec.pk == statistics(complement(p)).val &&
                                    (!desarr || n == 0 || rec.rval == rec.pk + 1) && desarr == (rec.pix == 0) &&
                                    prefix_increasing && is_desarrangement(w.subspan(split));
                    if (!ok) {
                        a.core_fail = "fails at " + p.str();
                    }
                }
                if (!is_desarrangement(w) || !a.lemma_fail.empty() || w.empty()) {
                    return;
                }
                const auto fa = static_cast<std::size_t>(*first_ascent(w));
                bool ok = true;
                ok = ok && (!avoids(w, p213) || w[0] == ni);
                ok = ok && (!avoids(w, p231) || w[fa - 1] == 1);
                ok = ok && (!avoids(w, p312) || (n >= 2 && w[0] == w[1] + 1));
                ok = ok && (!avoids(w, p321) || (n >= 2 && w[1] == 1));
                if (!ok) {
                    a.lemma_fail = "fails at " + Permutation{std::vector<int>(w.begin(), w.end())}.str();
                }
            },
            [](Acc &a, const Acc &b) {
                if (a.lemma_fail.empty()) {
                    a.lemma_fail = b.lemma_fail;
                }
                if (a.core_fail.empty()) {
                    a.core_fail = b.core_fail;
                }
                for (std::size_t k = 0; k < a.fix.size(); ++k) {
                    a.fix[k] += b.fix[k];
                    a.pix[k] += b.pix[k];
                }
            },
            cx.opt.cap);
        lemma.add(n, acc.lemma_fail.empty(), acc.lemma_fail);
        core.add(n, acc.core_fail.empty(), acc.core_fail);
        pixfix.add(n, acc.fix == acc.pix);
    }
    return {lemma, core, pixfix};
}

inline std::vector<VerificationReport> check_specializations(const Context &cx)
{
    VerificationReport r{"specializations", "joint formulas specialize to the one-variable ones", 0, cx.n_max, {}};
    try {
        for (const auto &c : specialization_checks(cx.n_max)) {
            r.add(c.n, c.pass, c.pass ? c.name : c.name + ": " + c.detail);
        }
    } catch (const error &e) {
        r.add(std::nullopt, false, e.what());
    }
    // t -> 1 of the pix/des rows against enumerated fix distributions
    VerificationReport fix{"specializations", "joint_pix_des rows at t=1 = fix over S_n (enumerated)", 0, cx.n_max,
                           {}};
    try {
        const auto rows = distribution_polynomials(FormulaId::joint_pix_des, cx.n_max,
                                                   cx.evaluator(FormulaId::joint_pix_des));
        for (std::size_t n = 0; n <= cx.n_max; ++n) {
            const auto want =
                poly_of(row_coefficients(distribution(n, Stat::fix, PermClass::all, std::nullopt, cx.opt.cap)));
            const auto got = rows.bivariate[n].at_t(1);
            fix.add(n, got == want, got == want ? "" : mismatch(got, want));
        }
    } catch (const error &e) {
        fix.add(std::nullopt, false, e.what());
    }
    return {r, fix};
}

inline std::vector<VerificationReport> check_equidistribution(const Context &cx)
{
    VerificationReport r{"equidistribution", "d_n(Pi) vs derangements, pix vs fix over S_n(Pi)", 0, cx.n_max, {}};
    const bool separated = cx.n_max >= equidistribution_separation_n;
    for (const auto &rec : equidistribution_report(cx.n_max, cx.opt.cap)) {
        std::string what = rec.set.str() + ": counts " + (rec.counts_agree ? "agree" : "differ") + ", pix/fix " +
                           (rec.distributions_agree ? "agree" : "differ");
        bool ok = true;
        if (rec.listed_equinumerous && !rec.counts_agree) {
            ok = false;
        }
        if (rec.listed_equidistributed && !rec.distributions_agree) {
            ok = false;
        }
        if (separated && !rec.listed_equinumerous && rec.counts_agree) {
            ok = false;
        }
        if (separated && !rec.listed_equidistributed && rec.distributions_agree) {
            ok = false;
        }
        bool formulas = rec.formula_counts == rec.desarrangement_counts;
        if (!formulas) {
            what += ", closed form disagrees";
        }
        r.add(std::nullopt, ok && formulas, what);
    }
    return {r};
}

} // namespace detail

// Runs the selected check groups in a fixed order.
inline std::vector<VerificationReport> verify_all(std::size_t n_max, const VerifyOptions &opt = {})
{
    for (const auto &g : opt.only) {
        if (std::find(check_groups.begin(), check_groups.end(), g) == check_groups.end()) {
            throw invalid_input("unknown check group '" + g + "'");
        }
    }
    check_cap(n_max, opt.cap);
    const detail::Context cx{n_max, opt};
    using Runner = std::function<std::vector<VerificationReport>(const detail::Context &)>;
    const std::array<std::pair<std::string_view, Runner>, 8> runners{{
        {"table1", detail::check_table1},
        {"tables", detail::check_tables},
        {"run-theorem", detail::check_run_theorem},
        {"patterns", detail::check_patterns},
        {"bijections", detail::check_bijections},
        {"lemma", detail::check_lemma},
        {"specializations", detail::check_specializations},
        {"equidistribution", detail::check_equidistribution},
    }};
    std::vector<VerificationReport> out;
    for (const auto &[name, run] : runners) {
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), name) == opt.only.end()) {
            continue;
        }
        for (auto &r : run(cx)) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

inline bool all_pass(const std::vector<VerificationReport> &reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.pass(); });
}

} // namespace desarr

#endif

#ifndef DESARR_CLOSED_FORMS_HPP
#define DESARR_CLOSED_FORMS_HPP

// Closed-form generating functions evaluated at rational values of the
// statistic variables, and recovery of the distribution polynomials by
// interpolation.
//
// Formulas involving square roots of a polynomial in t (or s, t) are even in
// that root once numerator and denominator are divided by it. With
// C = cosh_even(p) and S = sinh_even_div(p), i.e. cosh(a x/2) and
// sinh(a x/2)/a for a^2 = p, everything stays rational.

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <desarr/errors.hpp>
#include <desarr/perm.hpp>
#include <desarr/poly.hpp>
#include <desarr/rational.hpp>
#include <desarr/series.hpp>

namespace desarr
{

// The formula has a pole at the requested specialization; pick another point.
class pole_at_specialization : public error
{
public:
    using error::error;
};

enum class FormulaId {
    eulerian,
    derangement_egf,
    des,
    pk,
    val,
    dasc,
    ddes,
    joint_pk_des,
    joint_pix_des,
    catalan_ogf,
    fine_ogf,
    fine_shifted_ogf,
    jacobsthal_shifted_ogf,
};

struct FormulaInfo {
    FormulaId id;
    std::string_view name;
    int arity;      // number of statistic variables
    bool egf;       // exponential (true) or ordinary generating function
    PermClass rows; // class whose size is the row sum of a distribution
    // Statistic marked by t, then by s (arity 2).
    std::array<std::string_view, 2> stats;
};

inline constexpr std::array<FormulaInfo, 13> formula_catalog{{
    {FormulaId::eulerian, "eulerian", 1, true, PermClass::all, {"des", ""}},
    {FormulaId::derangement_egf, "derangement_egf", 0, true, PermClass::derangements, {"", ""}},
    {FormulaId::des, "des", 1, true, PermClass::desarrangements, {"des", ""}},
    {FormulaId::pk, "pk", 1, true, PermClass::desarrangements, {"pk", ""}},
    {FormulaId::val, "val", 1, true, PermClass::desarrangements, {"val", ""}},
    {FormulaId::dasc, "dasc", 1, true, PermClass::desarrangements, {"dasc", ""}},
    {FormulaId::ddes, "ddes", 1, true, PermClass::desarrangements, {"ddes", ""}},
    {FormulaId::joint_pk_des, "joint_pk_des", 2, true, PermClass::desarrangements, {"des", "pk"}},
    {FormulaId::joint_pix_des, "joint_pix_des", 2, true, PermClass::all, {"des", "pix"}},
    {FormulaId::catalan_ogf, "catalan_ogf", 0, false, PermClass::all, {"", ""}},
    {FormulaId::fine_ogf, "fine_ogf", 0, false, PermClass::all, {"", ""}},
    {FormulaId::fine_shifted_ogf, "fine_shifted_ogf", 0, false, PermClass::all, {"", ""}},
    {FormulaId::jacobsthal_shifted_ogf, "jacobsthal_shifted_ogf", 0, false, PermClass::all, {"", ""}},
}};

inline const FormulaInfo &formula_info(FormulaId id)
{
    for (const auto &f : formula_catalog) {
        if (f.id == id) {
            return f;
        }
    }
    throw invariant_violation("unknown formula id");
}

inline std::string_view to_string(FormulaId id)
{
    return formula_info(id).name;
}

inline std::optional<FormulaId> parse_formula_id(std::string_view s)
{
    for (const auto &f : formula_catalog) {
        if (f.name == s) {
            return f.id;
        }
    }
    return std::nullopt;
}

namespace detail
{

using Q = BigRational;

inline void pole_if_zero(const Q &v, std::string_view what)
{
    if (v == 0) {
        throw pole_at_specialization(std::string(what));
    }
}

inline TruncSeries safe_div(const TruncSeries &a, const TruncSeries &b, std::string_view what)
{
    if (b[0] == 0) {
        throw pole_at_specialization(std::string(what));
    }
    return a / b;
}

// A(t,x) = (1-t)/(e^{(t-1)x} - t) = 1/(1 - (e^{(t-1)x}-1)/(t-1)), entire in t.
inline TruncSeries eulerian_gf(const Q &t, std::size_t N)
{
    return TruncSeries::constant(1, N) / (TruncSeries::constant(1, N) - expm1_div(t - 1, N));
}

inline TruncSeries des_gf(const Q &t, std::size_t N)
{
    pole_if_zero(1 - 2 * t, "des: t = 1/2");
    const auto e1 = exp_series(t - 1, N);
    const auto num = (1 - t) * ((1 - 2 * t) - exp_series(-t, N) + e1);
    return safe_div(num, (1 - 2 * t) * (e1 - t), "des: t = 1");
}

// p = 4(1-t): C = cosh(x sqrt(1-t)), 2S = sinh(x sqrt(1-t))/sqrt(1-t).
inline TruncSeries pgrave_gf(const Q &t, std::size_t N)
{
    const Q p = 4 * (1 - t);
    return safe_div(TruncSeries::constant(1, N), cosh_even(p, N) - 2 * sinh_even_div(p, N), "pgrave");
}

inline TruncSeries pk_gf(const Q &t, std::size_t N)
{
    pole_if_zero(t, "pk: t = 0");
    const auto core = exp_series(-1, N) * pgrave_gf(t, N);
    return (1 - 1 / t) + core / t;
}

inline TruncSeries peak_gf(const Q &t, std::size_t N)
{
    const Q p = 4 * (1 - t);
    const auto c = cosh_even(p, N);
    return safe_div(c, c - 2 * sinh_even_div(p, N), "P");
}

inline TruncSeries val_gf(const Q &t, std::size_t N)
{
    return exp_series(-1, N) * peak_gf(t, N);
}

// p = (t+3)(t-1)
inline TruncSeries dasc_gf(const Q &t, std::size_t N)
{
    const Q p = (t + 3) * (t - 1);
    pole_if_zero(3 - 2 * t, "dasc: t = 3/2");
    const auto c = cosh_even(p, N);
    const auto s = sinh_even_div(p, N);
    const auto num = exp_series(-1, N) * ((2 - t) * c - t * (1 - t) * s) + (1 - t) * exp_series((1 - t) / 2, N);
    return safe_div(num, (3 - 2 * t) * (c - (1 + t) * s), "dasc");
}

inline TruncSeries ddes_gf(const Q &t, std::size_t N)
{
    const Q p = (t + 3) * (t - 1);
    const Q lead = 2 * t * (1 - t) - 1;
    pole_if_zero(lead, "ddes: 2t(1-t) = 1");
    const auto c = cosh_even(p, N);
    const auto s = sinh_even_div(p, N);
    const auto num = 2 * t * (1 - t) * c + 2 * (1 - 2 * t + t * t * t) * s - exp_series((1 - 3 * t) / 2, N);
    return safe_div(num, lead * (c - (1 + t) * s), "ddes");
}

// s marks pk, t marks des; p = 1 + 2t(1-2s) + t^2.
inline TruncSeries joint_pk_des_gf(const Q &t, const Q &s, std::size_t N)
{
    const Q p = 1 + 2 * t * (1 - 2 * s) + t * t;
    const Q lead = 2 - s - 2 * t;
    pole_if_zero(lead, "joint_pk_des: s + 2t = 2");
    const auto c = cosh_even(p, N);
    const auto sh = sinh_even_div(p, N);
    const auto num = (3 - s - 2 * t) * c - (1 - s + (3 - s) * t - 2 * t * t) * sh - exp_series((1 - 3 * t) / 2, N);
    return safe_div(num, lead * (c - (1 + t) * sh), "joint_pk_des");
}

// s marks pix, t marks des.
inline TruncSeries joint_pix_des_gf(const Q &t, const Q &s, std::size_t N)
{
    const Q scalar = (1 - 2 * t) * (1 - s - t) * (s - t);
    pole_if_zero(scalar, "joint_pix_des: t = 1/2, s = 1-t or s = t");
    const auto inner = (1 - s) * (s - t) * exp_series(s + t - 1, N) - t * (1 - 2 * t);
    const auto num = (1 - t) * ((1 - s) * (1 - s - t) * t * exp_series(s - t, N) + (1 - t) * inner);
    return safe_div(num, scalar * (exp_series(t - 1, N) - t), "joint_pix_des: t = 1");
}

// sqrt(1 - 4x) to order N.
inline TruncSeries sqrt_1m4x(std::size_t N)
{
    return sqrt_series(TruncSeries(N, {Q(1), Q(-4)}));
}

inline TruncSeries catalan_gf(std::size_t N)
{
    // (1 - sqrt(1-4x)) / (2x): compute one order higher, then divide by x.
    const auto r = sqrt_1m4x(N + 1);
    return shift_down(Q(1) - r, 1) / Q(2);
}

inline TruncSeries fine_gf(std::size_t N)
{
    const auto r = sqrt_1m4x(N);
    return (Q(1) - r) / (Q(3) - r);
}

inline TruncSeries fine_shifted_gf(std::size_t N)
{
    const auto r = sqrt_1m4x(N);
    return TruncSeries::constant(2, N) / (r + TruncSeries(N, {Q(1), Q(2)}));
}

inline TruncSeries jacobsthal_shifted_gf(std::size_t N)
{
    const TruncSeries num(N, {Q(1), Q(-1), Q(-1)});
    const TruncSeries den = TruncSeries(N, {Q(1), Q(1)}) * TruncSeries(N, {Q(1), Q(-2)});
    return num / den;
}

// Fixed points over S_n: e^{(s-1)x}/(1-x).
inline TruncSeries fix_gf(const Q &s, std::size_t N)
{
    return exp_series(s - 1, N) / TruncSeries(N, {Q(1), Q(-1)});
}

} // namespace detail

// The formula's x-series at (t, s), to order N. Variables a formula does not
// use are ignored. Throws pole_at_specialization at a pole.
inline TruncSeries evaluate_formula(FormulaId id, const BigRational &t, const BigRational &s, std::size_t N)
{
    switch (id) {
        case FormulaId::eulerian:
            return detail::eulerian_gf(t, N);
        case FormulaId::derangement_egf:
            return exp_series(-1, N) / TruncSeries(N, {BigRational(1), BigRational(-1)});
        case FormulaId::des:
            return detail::des_gf(t, N);
        case FormulaId::pk:
            return detail::pk_gf(t, N);
        case FormulaId::val:
            return detail::val_gf(t, N);
        case FormulaId::dasc:
            return detail::dasc_gf(t, N);
        case FormulaId::ddes:
            return detail::ddes_gf(t, N);
        case FormulaId::joint_pk_des:
            return detail::joint_pk_des_gf(t, s, N);
        case FormulaId::joint_pix_des:
            return detail::joint_pix_des_gf(t, s, N);
        case FormulaId::catalan_ogf:
            return detail::catalan_gf(N);
        case FormulaId::fine_ogf:
            return detail::fine_gf(N);
        case FormulaId::fine_shifted_ogf:
            return detail::fine_shifted_gf(N);
        case FormulaId::jacobsthal_shifted_ogf:
            return detail::jacobsthal_shifted_gf(N);
    }
    throw invariant_violation("unknown formula id");
}

inline TruncSeries evaluate_formula(FormulaId id, const BigRational &t, std::size_t N)
{
    return evaluate_formula(id, t, BigRational(1), N);
}

// P(t,x): pk (equivalently val) over all of S_n.
inline TruncSeries peak_egf(const BigRational &t, std::size_t N)
{
    return detail::peak_gf(t, N);
}

// Joint fix distribution over S_n, s marking fixed points.
inline TruncSeries fixed_point_egf(const BigRational &s, std::size_t N)
{
    return detail::fix_gf(s, N);
}

// Interpolated rows, n = 0..n_max. For arity 1 only `univariate` is filled;
// for arity 2 only `bivariate` (coeff(i, j) multiplies t^i s^j).
struct DistributionTable {
    std::string name;
    int arity = 1;
    std::vector<Poly> univariate;
    std::vector<BivariatePoly> bivariate;

    std::size_t size() const noexcept
    {
        return arity == 2 ? bivariate.size() : univariate.size();
    }
};

// A formula replacement; used to inject deliberately wrong formulas in tests.
using Evaluator = std::function<TruncSeries(const BigRational &t, const BigRational &s, std::size_t N)>;

inline Evaluator formula_evaluator(FormulaId id)
{
    return [id](const BigRational &t, const BigRational &s, std::size_t N) { return evaluate_formula(id, t, s, N); };
}

namespace detail
{

inline void require_distribution(const Poly &p, const std::string &name, std::size_t n)
{
    if (!p.has_nonnegative_integer_coefficients()) {
        throw interpolation_error(name + ": row " + std::to_string(n) + " = " + p.str() +
                                  " is not a non-negative integer polynomial");
    }
}

// Evaluation on integers from 2 upward, skipping poles; `count` good points.
inline std::vector<std::pair<BigRational, TruncSeries>> good_points(const Evaluator &f, std::size_t count,
                                                                    std::size_t N, const BigRational &fixed_s)
{
    std::vector<std::pair<BigRational, TruncSeries>> out;
    for (long long v = 2; out.size() < count; ++v) {
        if (v > static_cast<long long>(count) + 64) {
            throw interpolation_error("no pole-free evaluation points found");
        }
        try {
            out.emplace_back(BigRational(v), f(BigRational(v), fixed_s, N));
        } catch (const pole_at_specialization &) {
        } catch (const not_invertible &) {
        }
    }
    return out;
}

} // namespace detail

// Rows of a one-variable series family: for each n, n! [x^n] is interpolated
// as a polynomial of degree <= n from n_max + 2 pole-free points.
inline DistributionTable interpolate_univariate(const std::string &name, const Evaluator &f, std::size_t n_max,
                                                const BigRational &fixed_s = BigRational(1))
{
    const std::size_t N = n_max + 1;
    const auto pts = detail::good_points(f, n_max + 2, N, fixed_s);
    DistributionTable table{name, 1, {}, {}};
    const auto fact = factorial_table(n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<Point> xy;
        for (const auto &[t, series] : pts) {
            xy.push_back({t, series[n] * BigRational(fact[n])});
        }
        auto row = interpolate(xy, n);
        detail::require_distribution(row, name, n);
        table.univariate.push_back(std::move(row));
    }
    return table;
}

// Two-variable rows on a pole-free grid. The t values are the integers from 2;
// s values are scanned upward from 2, rejecting any s that is a pole at some
// chosen t.
inline DistributionTable interpolate_bivariate(const std::string &name, const Evaluator &f, std::size_t n_max)
{
    const std::size_t N = n_max + 1;
    const std::size_t K = n_max + 2;
    std::vector<BigRational> ts;
    for (std::size_t i = 0; i < K; ++i) {
        ts.emplace_back(static_cast<long long>(i) + 2);
    }
    std::vector<BigRational> ss;
    std::vector<std::vector<TruncSeries>> columns; // columns[b][a] = f(ts[a], ss[b])
    for (long long v = 2; ss.size() < K; ++v) {
        if (v > static_cast<long long>(4 * K) + 64) {
            throw interpolation_error(name + ": no pole-free evaluation grid found");
        }
        std::vector<TruncSeries> col;
        bool ok = true;
        for (const auto &t : ts) {
            try {
                col.push_back(f(t, BigRational(v), N));
            } catch (const pole_at_specialization &) {
                ok = false;
            } catch (const not_invertible &) {
                ok = false;
            }
            if (!ok) {
                break;
            }
        }
        if (ok) {
            ss.emplace_back(v);
            columns.push_back(std::move(col));
        }
    }
    DistributionTable table{name, 2, {}, {}};
    const auto fact = factorial_table(n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<std::vector<BigRational>> values(K, std::vector<BigRational>(K));
        for (std::size_t a = 0; a < K; ++a) {
            for (std::size_t b = 0; b < K; ++b) {
                values[a][b] = columns[b][a][n] * BigRational(fact[n]);
            }
        }
        auto row = interpolate_grid(ts, ss, values, n, n);
        if (!row.has_nonnegative_integer_coefficients()) {
            throw interpolation_error(name + ": row " + std::to_string(n) +
                                      " is not a non-negative integer polynomial");
        }
        table.bivariate.push_back(std::move(row));
    }
    return table;
}

// Distribution polynomials of a formula with one or two statistic variables.
inline DistributionTable distribution_polynomials(FormulaId id, std::size_t n_max,
                                                  const Evaluator &override_eval = nullptr)
{
    const auto &info = formula_info(id);
    if (info.arity == 0) {
        throw invalid_input(std::string(info.name) + " has no statistic variable");
    }
    const Evaluator f = override_eval ? override_eval : formula_evaluator(id);
    if (info.arity == 1) {
        return interpolate_univariate(std::string(info.name), f, n_max);
    }
    return interpolate_bivariate(std::string(info.name), f, n_max);
}

struct CheckResult {
    std::string name;
    std::optional<std::size_t> n; // absent for checks not tied to one row
    bool pass = true;
    std::string detail;
};

// Identities between specializations of the joint formulas and the
// one-variable ones, compared as polynomials row by row.
inline std::vector<CheckResult> specialization_checks(std::size_t n_max)
{
    std::vector<CheckResult> out;
    const auto des = distribution_polynomials(FormulaId::des, n_max);
    const auto pk = distribution_polynomials(FormulaId::pk, n_max);
    const auto eulerian = distribution_polynomials(FormulaId::eulerian, n_max);
    const auto pk_des = distribution_polynomials(FormulaId::joint_pk_des, n_max);
    const auto pix_des = distribution_polynomials(FormulaId::joint_pix_des, n_max);
    const auto fix = interpolate_univariate(
        "fix", [](const BigRational &s, const BigRational &, std::size_t N) { return detail::fix_gf(s, N); },
        n_max);

    auto compare = [&out](const std::string &name, std::size_t n, const Poly &got, const Poly &want) {
        CheckResult r{name, n, got == want, ""};
        if (!r.pass) {
            r.detail = "got " + got.str() + ", expected " + want.str();
        }
        out.push_back(std::move(r));
    };
    for (std::size_t n = 0; n <= n_max; ++n) {
        compare("joint_pk_des at s=1 = des", n, pk_des.bivariate[n].at_s(1), des.univariate[n]);
        // t = 1 leaves a polynomial in s marking pk
        compare("joint_pk_des at t=1 = pk", n, pk_des.bivariate[n].at_t(1), pk.univariate[n]);
        compare("joint_pix_des at s=1 = eulerian", n, pix_des.bivariate[n].at_s(1), eulerian.univariate[n]);
        compare("joint_pix_des at s=0 = des", n, pix_des.bivariate[n].at_s(0), des.univariate[n]);
        compare("joint_pix_des at t=1 = fix", n, pix_des.bivariate[n].at_t(1), fix.univariate[n]);
    }
    const std::size_t N = n_max + 1;
    for (const long long t : {2, 3, 5}) {
        const BigRational tq(t);
        const bool ok = exp_series(1, N) * evaluate_formula(FormulaId::val, tq, N) == peak_egf(tq, N);
        out.push_back({"P = e^x * val series at t=" + std::to_string(t), std::nullopt, ok,
                       ok ? "" : "series differ"});
    }
    return out;
}

} // namespace desarr

#endif

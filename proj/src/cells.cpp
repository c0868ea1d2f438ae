#include "satake/cells.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace satake {

int mv_degree(const RootDatum& d, const Coweight& mu) { return d.two_rho_pairing(mu); }

std::vector<Weight> isotropy_root_set(const RootDatum& d, const Coweight& lambda)
{
    std::vector<Weight> out;
    for (const auto& r : d.positive_roots()) {
        const int p = d.root_pairing(r.root_coords, lambda);
        if (p <= 0)
            out.push_back(r.weight);
        if (-p <= 0)
            out.push_back(-r.weight);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int levi_component_degree(const RootDatum& d, const Coweight& mu, std::size_t i)
{
    if (i >= d.rank())
        throw std::out_of_range("levi_component_degree: simple index out of range");
    return d.two_rho_pairing(mu) - d.simple_pairing(i, mu);
}

std::string to_string(CellSection s) { return s == CellSection::Minuscule ? "minuscule" : "quasi-minuscule"; }

std::string to_string(CellTag t)
{
    switch (t) {
    case CellTag::A:
        return "a";
    case CellTag::B:
        return "b";
    case CellTag::C:
        return "c";
    }
    return "?";
}

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }
std::string pt(const Coweight& c) { return "e" + c.str(); }
std::string stratum(std::size_t i, const Coweight& nu) { return "S^{M_" + idx(i) + "}_" + nu.str(); }

bool in_orbit(const RootDatum& d, const Coweight& lambda, const Coweight& mu)
{
    const auto orbit = d.weyl_orbit(lambda);
    return std::binary_search(orbit.begin(), orbit.end(), mu);
}

void check_index(const RootDatum& d, std::size_t i, const char* who)
{
    if (i >= d.rank())
        throw std::out_of_range(std::string(who) + ": simple index out of range");
}

}  // namespace

CellCase minuscule_cell_case(const RootDatum& d, const Coweight& lambda, const Coweight& mu, std::size_t i)
{
    check_index(d, i, "minuscule_cell_case");
    if (classify_coweight(d, lambda) != AtomKind::Minuscule)
        throw std::invalid_argument("minuscule_cell_case: " + lambda.str() + " is not minuscule");
    if (!in_orbit(d, lambda, mu))
        throw std::invalid_argument("minuscule_cell_case: " + mu.str() + " is not in the orbit of " + lambda.str());
    const int p = d.simple_pairing(i, mu);
    const auto a = d.simple_coroot(i);
    const std::string u = "U_" + idx(i) + " ";
    CellCase c{CellSection::Minuscule, CellTag::C, p, false, mu, {}, {}};
    switch (p) {
    case 1:
        c.tag = CellTag::A;
        c.strata = {stratum(i, mu) + ": " + u + pt(mu), stratum(i, mu - a) + ": {" + pt(mu - a) + "}"};
        c.component = "Gr^{M_" + idx(i) + "}_" + mu.str() + " = " + u + pt(mu) + " + {" + pt(mu - a) + "}";
        break;
    case -1:
        c.tag = CellTag::B;
        c.strata = {stratum(i, mu + a) + ": " + u + pt(mu + a), stratum(i, mu) + ": {" + pt(mu) + "}"};
        c.component = "Gr^{M_" + idx(i) + "}_" + mu.str() + " = " + u + pt(mu + a) + " + {" + pt(mu) + "}";
        break;
    case 0:
        c.tag = CellTag::C;
        c.strata = {stratum(i, mu) + ": {" + pt(mu) + "}"};
        c.component = "Gr^{M_" + idx(i) + "}_" + mu.str() + " = {" + pt(mu) + "}";
        break;
    default:
        throw std::logic_error("minuscule_cell_case: pairing " + std::to_string(p) + " outside {0,+-1}");
    }
    return c;
}

CellCase quasiminuscule_cell_case(const RootDatum& d, const Coweight& lambda, const Coweight& mu, std::size_t i)
{
    check_index(d, i, "quasiminuscule_cell_case");
    if (classify_coweight(d, lambda) != AtomKind::QuasiMinuscule)
        throw std::invalid_argument("quasiminuscule_cell_case: " + lambda.str() + " is not quasi-minuscule");
    if (!in_orbit(d, lambda, mu))
        throw std::invalid_argument("quasiminuscule_cell_case: " + mu.str() + " is not in the orbit of " +
                                    lambda.str());
    const int p = d.simple_pairing(i, mu);
    const bool reflected = p < 0;
    const Coweight ref = reflected ? d.reflect(mu, i) : mu;
    const int q = reflected ? -p : p;
    const auto a = d.simple_coroot(i);
    const std::string u = "U_" + idx(i) + " ", m = "M_" + idx(i) + " ";
    const std::string gr = "Gr^{M_" + idx(i) + "}_" + ref.str();
    CellCase c{CellSection::QuasiMinuscule, CellTag::A, p, reflected, ref, {}, {}};
    switch (q) {
    case 0:
        c.tag = CellTag::A;
        c.strata = {stratum(i, ref) + ": " + pt(ref)};
        c.component = gr + " = " + pt(ref);
        break;
    case 2:
        if (ref != a || !d.is_short_coroot(i))
            throw std::logic_error("quasiminuscule_cell_case: pairing 2 at " + ref.str() +
                                   " which is not a short simple coroot");
        c.tag = CellTag::B;
        c.strata = {stratum(i, a) + ": L|" + u + pt(a), stratum(i, -a) + ": " + pt(-a),
                    stratum(i, d.zero()) + ": Lbar^x|" + pt(-a)};
        c.component = "closure of " + gr + " = Lbar|" + m + pt(a);
        break;
    case 1:
        c.tag = CellTag::C;
        c.strata = {stratum(i, ref) + ": " + u + pt(ref), stratum(i, ref - a) + ": " + pt(ref - a)};
        c.component = "closure of " + gr + " = " + u + pt(ref) + " + " + pt(ref - a);
        break;
    default:
        throw std::logic_error("quasiminuscule_cell_case: pairing " + std::to_string(p) + " outside {0,+-1,+-2}");
    }
    return c;
}

CellReport cell_report(const RootDatum& d, const Coweight& lambda, const Coweight& mu, std::size_t i)
{
    const auto kind = classify_coweight(d, lambda);
    CellReport r{lambda, mu, i, {}, {}};
    if (kind == AtomKind::Minuscule)
        r.cell = minuscule_cell_case(d, lambda, mu, i);
    else if (kind == AtomKind::QuasiMinuscule)
        r.cell = quasiminuscule_cell_case(d, lambda, mu, i);
    else
        throw std::invalid_argument("cell_report: " + lambda.str() + " is neither minuscule nor quasi-minuscule");
    if (omega_set(d, lambda).count(mu))
        r.nonempty_strata = r.cell.strata;
    return r;
}

BruhatOrbit bruhat_orbit(const RootDatum& d, std::size_t i, const Coweight& lambda)
{
    check_index(d, i, "bruhat_orbit");
    const int p = d.simple_pairing(i, lambda);
    const Coweight base = p < 0 ? d.reflect(lambda, i) : lambda;
    BruhatOrbit o{base, p == 0, {}};
    if (p == 0)
        o.cells = {pt(base)};
    else
        o.cells = {"U_" + idx(i) + " " + pt(base), pt(d.reflect(base, i))};
    return o;
}

std::string Letter::str() const { return (raise ? "e" : "f") + std::to_string(i + 1); }

Letter parse_letter(const std::string& s)
{
    if (s.size() < 2 || (s[0] != 'e' && s[0] != 'f'))
        throw std::invalid_argument("bad operator letter: " + s);
    std::size_t used = 0;
    int k = 0;
    try {
        k = std::stoi(s.substr(1), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad operator letter: " + s);
    }
    if (used != s.size() - 1 || k < 1)
        throw std::invalid_argument("bad operator letter: " + s);
    return Letter{s[0] == 'e', static_cast<std::size_t>(k - 1)};
}

namespace {

std::string pairing_text(std::size_t i, const std::string& what, int value)
{
    return "(alpha_" + idx(i) + "," + what + ")=" + std::to_string(value);
}

// Whether one letter can act nonzero out of the weight-nu piece. Besides the
// weights lying in Omega(lambda), the string through nu must continue in the
// letter's direction: nu is the bottom (top) of a two-step string, or part of
// the three-step string -alpha_i^v, 0, alpha_i^v.
std::string step_violation(const RootDatum& d, const Character& omega, const Coweight& nu, const Letter& x)
{
    const auto a = d.simple_coroot(x.i);
    const Coweight to = x.raise ? nu + a : nu - a;
    if (!omega.count(nu))
        return nu.str() + " is not a weight of Omega(lambda)";
    if (!omega.count(to))
        return to.str() + " is not a weight of Omega(lambda)";
    const int want = x.raise ? -1 : 1;
    const int p = d.simple_pairing(x.i, nu);
    if (p == want || nu.is_zero() || nu == (x.raise ? -a : a))
        return {};
    return pairing_text(x.i, nu.str(), p) + ", need " + std::to_string(want);
}

struct Walk {
    std::vector<Coweight> chain;
    std::string violated;
};

Walk walk(const RootDatum& d, const Character& omega, const Coweight& mu, const std::vector<Letter>& word)
{
    Walk w{{mu}, {}};
    Coweight nu = mu;
    for (const auto& x : word) {
        if (x.i >= d.rank())
            throw std::out_of_range("support_feasible: letter " + x.str() + " out of range");
        if (auto v = step_violation(d, omega, nu, x); !v.empty()) {
            w.violated = x.str() + " at " + nu.str() + ": " + v;
            return w;
        }
        nu = x.raise ? nu + d.simple_coroot(x.i) : nu - d.simple_coroot(x.i);
        w.chain.push_back(nu);
    }
    return w;
}

// The start-independent analysis: along the generic route each letter x_i
// met after a shift s forces (alpha_i, mu) = -+1 - (alpha_i, s). The other
// routes pin mu to finitely many weights, which are tested directly.
struct Generic {
    std::vector<std::string> constraints;
    std::string violated;  // set when no start in Omega(lambda) can work
};

Generic generic_analysis(const RootDatum& d, const Character& omega, const std::vector<Letter>& word)
{
    Generic g;
    std::vector<std::pair<std::size_t, int>> eqs;
    std::set<Coweight> special;
    Coweight s = d.zero();
    for (const auto& x : word) {
        const auto a = d.simple_coroot(x.i);
        const int value = (x.raise ? -1 : 1) - d.simple_pairing(x.i, s);
        eqs.emplace_back(x.i, value);
        g.constraints.push_back(pairing_text(x.i, "mu", value));
        special.insert(d.zero() - s);
        special.insert((x.raise ? -a : a) - s);
        s = x.raise ? s + a : s - a;
    }
    for (const auto& mu : special)
        if (omega.count(mu) && walk(d, omega, mu, word).violated.empty())
            return g;  // a non-generic route survives; nothing uniform to report

    for (const auto& [i, value] : eqs) {
        bool seen = false;
        for (const auto& [nu, m] : omega)
            if (d.simple_pairing(i, nu) == value) {
                seen = true;
                break;
            }
        if (!seen) {
            g.violated = pairing_text(i, "mu", value) + " impossible";
            return g;
        }
    }
    for (const auto& [nu, m] : omega) {
        bool all = true;
        for (const auto& [i, value] : eqs)
            if (d.simple_pairing(i, nu) != value) {
                all = false;
                break;
            }
        if (all)
            return g;
    }
    std::string joined;
    for (const auto& c : g.constraints)
        joined += (joined.empty() ? "" : " and ") + c;
    g.violated = joined + " have no common solution";
    return g;
}

}  // namespace

FeasibilityVerdict support_feasible(const RootDatum& d, const Coweight& lambda, const Coweight& mu,
                                    const std::vector<Letter>& word)
{
    const auto kind = classify_coweight(d, lambda);
    if (kind != AtomKind::Minuscule && kind != AtomKind::QuasiMinuscule)
        throw std::invalid_argument("support_feasible: " + lambda.str() + " is neither minuscule nor quasi-minuscule");
    if (mu.size() != d.rank())
        throw std::invalid_argument("support_feasible: start weight has the wrong rank");
    const auto omega = omega_set(d, lambda);
    auto w = walk(d, omega, mu, word);
    auto g = generic_analysis(d, omega, word);
    FeasibilityVerdict v;
    v.feasible = w.violated.empty();
    v.chain = std::move(w.chain);
    v.constraints = std::move(g.constraints);
    if (!v.feasible)
        v.violated = g.violated.empty() ? w.violated : g.violated;
    return v;
}

CellsTable cells_table(const RootDatum& d, const Coweight& lambda)
{
    CellsTable t{lambda, classify_coweight(d, lambda), {}, {}};
    if (t.kind != AtomKind::Minuscule && t.kind != AtomKind::QuasiMinuscule)
        throw std::invalid_argument("cells: " + lambda.str() + " is neither minuscule nor quasi-minuscule");
    for (const auto& mu : d.weyl_orbit(lambda))
        for (std::size_t i = 0; i < d.rank(); ++i)
            t.rows.push_back(cell_report(d, lambda, mu, i));
    const auto omega = omega_set(d, lambda);
    for (std::size_t i = 0; i < d.rank(); ++i)
        for (std::size_t j = 0; j < d.rank(); ++j) {
            if (i == j)
                continue;
            for (const auto& word : {std::vector<Letter>{{true, i}, {false, j}},
                                     std::vector<Letter>{{false, j}, {true, i}}})
                for (const auto& [mu, m] : omega)
                    t.words.push_back({word, mu, support_feasible(d, lambda, mu, word)});
        }
    return t;
}

}  // namespace satake

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits are wall-clock and fixed below.

#include "satake/cells.hpp"
#include "satake/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace satake;

namespace {

constexpr double kSmallCaseSeconds = 1.0;
constexpr double kSweepSeconds = 300.0;
constexpr long kSweepMaxDim = 300;
constexpr int kRandomPairs = 20;
constexpr unsigned kSeed = 20261015;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

std::string first_failure(const VerificationReport& r)
{
    for (const auto& c : r.checks)
        if (!c.pass)
            return c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
    return {};
}

std::vector<int> sorted_degrees(const GradedModule& m)
{
    std::vector<int> out;
    for (const auto& [mu, s] : m.spaces)
        out.insert(out.end(), s.dim, s.degree);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- criterion 1 ----------------------------------------------------------

Outcome a1xa1_case()
{
    Outcome o;
    const auto t0 = Clock::now();
    auto d = make_datum("A1xA1");
    const Coweight lam{1, 1};
    const auto m = build_ic_module(d, lam);
    if (m.dim() != 4)
        o.fail("dimension " + std::to_string(m.dim()));
    std::vector<Coweight> weights;
    for (const auto& [mu, sp] : m.spaces)
        weights.push_back(mu);
    if (weights != std::vector<Coweight>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}})
        o.fail("weights are not the four sign choices");
    if (sorted_degrees(m) != std::vector<int>{-2, 0, 0, 2})
        o.fail("degrees are not {-2,0,0,2}");
    // raise on the two-dimensional string, basis (-1), (1).
    QMatrix raise(2, 2);
    raise(1, 0) = 1;
    const auto id = QMatrix::identity(2);
    if (assemble(m, m.e[0]) != kron(raise, id))
        o.fail("e_1 is not raise (x) id");
    if (assemble(m, m.e[1]) != kron(id, raise))
        o.fail("e_2 is not id (x) raise");
    const auto r = verify_all(m, lam);
    for (const char* need : {"cross 1,2: [e_i,f_j]=0", "cross 2,1: [e_i,f_j]=0"})
        if (!r.find(need) || !r.find(need)->pass)
            o.fail(std::string("missing or failing ") + need);
    if (!r.passed())
        o.fail(first_failure(r));
    const double dt = seconds_since(t0);
    if (dt >= kSmallCaseSeconds)
        o.fail("took " + std::to_string(dt) + " s");
    if (o.pass)
        o.detail = "dim 4, degrees {-2,0,0,2}, " + std::to_string(r.checks.size()) + " checks, " +
                   std::to_string(dt) + " s";
    return o;
}

// ---- criterion 2 ----------------------------------------------------------

Outcome g2_case()
{
    Outcome o;
    const auto t0 = Clock::now();
    auto d = make_datum("G2");
    const Coweight lam{0, 1};
    const auto m = build_ic_module(d, lam);
    if (m.dim() != 7)
        o.fail("dimension " + std::to_string(m.dim()));
    const auto oracle = freudenthal_character(*d, lam);
    if (oracle.at(d->zero()) != 1 || m.dim(d->zero()) != 1)
        o.fail("zero weight multiplicity is not 1");
    if (d->weyl_orbit(lam).size() != 6)
        o.fail("orbit size " + std::to_string(d->weyl_orbit(lam).size()));
    const std::pair<const char*, WeightedOperator> products[] = {
        {"f2 e1", compose(m, m.f[1], m.e[0])},
        {"e1 f2", compose(m, m.e[0], m.f[1])},
        {"f1 e2", compose(m, m.f[0], m.e[1])},
        {"e2 f1", compose(m, m.e[1], m.f[0])},
    };
    for (const auto& [name, p] : products)
        if (!p.is_zero())
            o.fail(std::string(name) + " is not zero");
    const int exponent = 1 - d->cartan(1, 0);
    const std::string serre = "serre 2,1: (ad e_2)^" + std::to_string(exponent) + " e_1=0";
    const auto r = verify_all(m, lam);
    if (exponent != 4)
        o.fail("Serre exponent " + std::to_string(exponent));
    if (!r.find(serre) || !r.find(serre)->pass)
        o.fail("missing or failing " + serre);
    if (!r.passed())
        o.fail(first_failure(r));
    const double dt = seconds_since(t0);
    if (dt >= kSmallCaseSeconds)
        o.fail("took " + std::to_string(dt) + " s");
    if (o.pass)
        o.detail = "dim 7 (orbit 6 + zero weight 1), four mixed products vanish, " + serre + ", " +
                   std::to_string(r.checks.size()) + " checks, " + std::to_string(dt) + " s";
    return o;
}

// ---- sweep (criteria 3, 4, 5) ---------------------------------------------

struct SweepEntry {
    std::string type;
    Coweight lambda;
    GradedModule module;
    VerificationReport report;
};

std::vector<Coweight> dominant_up_to(const RootDatum& d, long max_dim)
{
    // The Weyl dimension grows strictly in every coordinate, so a coordinate
    // that overshoots at zero elsewhere bounds the search.
    std::vector<Coweight> out;
    Coweight c(d.rank());
    std::function<void(std::size_t)> walk = [&](std::size_t k) {
        if (k == d.rank()) {
            if (weyl_dimension(d, c) <= max_dim)
                out.push_back(c);
            return;
        }
        for (c[k] = 0;; ++c[k]) {
            Coweight probe = c;
            for (std::size_t j = k + 1; j < d.rank(); ++j)
                probe[j] = 0;
            if (weyl_dimension(d, probe) > max_dim)
                break;
            walk(k + 1);
        }
        c[k] = 0;
    };
    walk(0);
    return out;
}

bool is_relation(const CheckResult& c) { return c.name.rfind("lefschetz", 0) != 0; }

Outcome sweep(std::vector<SweepEntry>& entries, Outcome& lefschetz)
{
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t count = 0;
    for (const char* t : {"A1", "A1xA1", "A2", "B2", "G2"}) {
        auto d = make_datum(t);
        for (const auto& lam : dominant_up_to(*d, kSweepMaxDim)) {
            const std::string id = std::string(t) + " " + lam.str();
            try {
                auto m = build_ic_module(d, lam);
                auto r = verify_all(m, lam);
                for (const auto& c : r.checks) {
                    if (c.pass)
                        continue;
                    const std::string why = c.detail.empty() ? "" : " (" + c.detail + ")";
                    (is_relation(c) ? o : lefschetz).fail(id + ": " + c.name + why);
                }
                for (const char* need : {"oracle: character=freudenthal", "oracle: character=shapovalov",
                                         "oracle: one highest vector", "grading 1: e raises degree by 2"})
                    if (!r.find(need))
                        o.fail(id + ": check '" + need + "' missing");
                for (std::size_t i = 0; i < d->rank(); ++i)
                    if (!r.find("lefschetz " + std::to_string(i + 1) + ": completion unique"))
                        lefschetz.fail(id + ": uniqueness check missing");
                entries.push_back({t, lam, std::move(m), std::move(r)});
            } catch (const std::exception& e) {
                o.fail(id + ": " + e.what());
                lefschetz.fail(id + ": not built");
            }
            ++count;
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= kSweepSeconds)
        o.fail("took " + std::to_string(dt) + " s");
    if (o.pass)
        o.detail = std::to_string(count) + " modules of dim <= " + std::to_string(kSweepMaxDim) + " in " +
                   std::to_string(dt) + " s";
    if (lefschetz.pass)
        lefschetz.detail = "bijective with uniqueness defect 0 on " + std::to_string(count) + " modules";
    return o;
}

// ---- criterion 5 ----------------------------------------------------------

Outcome support_agreement(const std::vector<SweepEntry>& entries)
{
    Outcome o;
    std::size_t modules = 0, queries = 0;
    for (const auto& s : entries) {
        const auto& d = *s.module.datum;
        const auto kind = classify_coweight(d, s.lambda);
        if (kind != AtomKind::Minuscule && kind != AtomKind::QuasiMinuscule)
            continue;
        ++modules;
        for (const auto& [mu, sp] : s.module.spaces)
            for (std::size_t i = 0; i < d.rank(); ++i)
                for (const bool raise : {true, false}) {
                    const auto& op = raise ? s.module.e[i] : s.module.f[i];
                    const auto* b = op.block(mu);
                    const bool nonzero = b && !b->is_zero();
                    const Letter l{raise, i};
                    const bool feasible = support_feasible(d, s.lambda, mu, {l}).feasible;
                    ++queries;
                    if (nonzero != feasible)
                        o.fail(s.type + " " + s.lambda.str() + ": " + l.str() + " at " + mu.str() +
                               (nonzero ? " is nonzero but infeasible" : " vanishes but is feasible"));
                }
    }
    auto g = make_datum("G2");
    const auto table = cells_table(*g, Coweight{0, 1});
    std::size_t starts = 0;
    for (const auto& w : table.words) {
        if (w.word.size() != 2 || !w.word[0].raise || w.word[0].i != 0 || w.word[1].raise || w.word[1].i != 1)
            continue;
        ++starts;
        if (w.verdict.feasible || w.verdict.violated != "(alpha_2,mu)=4 impossible")
            o.fail("G2 [e1,f2] from " + w.start.str() + ": '" + w.verdict.violated + "'");
    }
    if (starts != omega_set(*g, Coweight{0, 1}).size())
        o.fail("G2 table has [e1,f2] at " + std::to_string(starts) + " starts");
    if (modules == 0)
        o.fail("no minuscule or quasi-minuscule module in the sweep");
    if (o.pass)
        o.detail = std::to_string(queries) + " blocks on " + std::to_string(modules) +
                   " atoms agree; G2 [e1,f2] impossible at all " + std::to_string(starts) + " starts";
    return o;
}

// ---- criterion 6 ----------------------------------------------------------

Outcome multiplicativity()
{
    Outcome o;
    std::vector<std::pair<DatumPtr, Coweight>> atoms;
    for (const char* t : {"A1", "A1xA1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
        auto d = make_datum(t);
        for (const auto& c : minuscule_coweights(*d))
            if (!c.is_zero())
                atoms.emplace_back(d, c);
        for (std::size_t f = 0; f < d->factors().size(); ++f)
            atoms.emplace_back(d, quasi_minuscule_coweight(*d, f));
    }
    std::mt19937 rng(kSeed);
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    int done = 0;
    while (done < kRandomPairs) {
        const auto& [da, a] = atoms[pick(rng)];
        const auto& [db, b] = atoms[pick(rng)];
        if (!(*da == *db))
            continue;
        const auto t = tensor_module(build_atom(da, a), build_atom(db, b));
        const auto expected = multiply(omega_set(*da, a), omega_set(*da, b));
        if (character_of(t) != expected)
            o.fail(da->type_label() + " " + a.str() + " x " + b.str() + ": character is not the product");
        ++done;
    }
    auto decompose = [](const char* type, const char* a, const char* b) {
        JobConfig c;
        c.command = "decompose";
        c.type = type;
        c.coweight = a;
        c.coweight2 = b;
        return cmd_decompose(c)["components"];
    };
    const auto a1 = decompose("A1", "1", "1");
    if (a1 != Json::parse(R"([{"coweight":[0],"multiplicity":1},{"coweight":[2],"multiplicity":1}])"))
        o.fail("A1 1 x 1 gives " + a1.dump());
    const auto a2 = decompose("A2", "1,0", "0,1");
    if (a2 != Json::parse(R"([{"coweight":[0,0],"multiplicity":1},{"coweight":[1,1],"multiplicity":1}])"))
        o.fail("A2 (1,0) x (0,1) gives " + a2.dump());
    if (o.pass)
        o.detail = std::to_string(kRandomPairs) + " random atom pairs multiply; A1: {2w:1, 0:1}; A2: {w1+w2:1, 0:1}";
    return o;
}

// ---- criterion 7 ----------------------------------------------------------

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

Outcome determinism(const std::string& cli_path)
{
    Outcome o;
    const std::vector<std::vector<std::string>> jobs = {
        {"build", "--type", "G2", "--coweight", "1,0"},
        {"build", "--type", "B2", "--coweight", "1,1"},
        {"verify", "--type", "A2", "--coweight", "1,1"},
        {"cells", "--type", "G2", "--coweight", "0,1"},
        {"decompose", "--type", "A2", "--coweight", "1,0", "--coweight2", "1,1"},
    };
    std::size_t compared = 0;
    const auto dir = std::filesystem::temp_directory_path();
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        std::string outputs[2];
        for (int run = 0; run < 2; ++run) {
            // In-process twice, and in a fresh process twice.
            std::vector<const char*> argv{"satake_cli"};
            for (const auto& a : jobs[k])
                argv.push_back(a.c_str());
            std::ostringstream out, err;
            run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            outputs[run] = out.str();
        }
        if (outputs[0].empty() || outputs[0] != outputs[1])
            o.fail("in-process runs differ for " + jobs[k][0]);
        if (!cli_path.empty()) {
            std::string files[2];
            for (int run = 0; run < 2; ++run) {
                const auto path = dir / ("satake_accept_" + std::to_string(k) + "_" + std::to_string(run) + ".json");
                std::string cmd = "\"" + cli_path + "\"";
                for (const auto& a : jobs[k])
                    cmd += " " + a;
                cmd += " --out \"" + path.string() + "\"";
                if (std::system(cmd.c_str()) != 0)
                    o.fail("subprocess failed: " + cmd);
                files[run] = slurp(path);
                std::filesystem::remove(path);
            }
            if (files[0] != files[1] || files[0] != outputs[0])
                o.fail("process runs differ for " + jobs[k][0]);
        }
        ++compared;
    }
    if (o.pass)
        o.detail = std::to_string(compared) + " documents byte-identical across runs" +
                   (cli_path.empty() ? " (in-process only)" : " and processes");
    return o;
}

void report(int n, const std::string& name, const Outcome& o, bool& all)
{
    std::cout << "criterion " << n << " [" << name << "]: " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail
              << std::endl;
    all = all && o.pass;
}

}  // namespace

int main(int argc, char** argv)
{
    ::unsetenv("SATAKE_CAP");
    std::string cli_path = argc > 1 ? argv[1] : "";
    bool all = true;
    report(1, "A1xA1 (1,1)", a1xa1_case(), all);
    report(2, "G2 (0,1)", g2_case(), all);
    std::vector<SweepEntry> entries;
    Outcome lefschetz;
    const Outcome swept = sweep(entries, lefschetz);
    report(3, "sweep dim <= 300", swept, all);
    report(4, "Lefschetz and uniqueness", lefschetz, all);
    report(5, "supports vs blocks", support_agreement(entries), all);
    report(6, "multiplicativity and decompose", multiplicativity(), all);
    report(7, "deterministic JSON", determinism(cli_path), all);
    return all ? 0 : 1;
}

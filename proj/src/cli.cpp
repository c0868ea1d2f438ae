#include "satake/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace satake {

Coweight parse_coweight(const std::string& text, std::size_t rank)
{
    std::vector<int> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ConfigError("bad coweight coordinate '" + tok + "'");
        }
        if (used != tok.size())
            throw ConfigError("bad coweight coordinate '" + tok + "'");
        v.push_back(x);
    }
    if (text.empty() || text.back() == ',' || v.size() != rank)
        throw ConfigError("coweight '" + text + "' must have " + std::to_string(rank) + " comma-separated integers");
    return Coweight(v);
}

std::size_t resolve_cap(const std::optional<std::size_t>& flag)
{
    if (flag) {
        if (*flag < 1)
            throw ConfigError("cap must be at least 1");
        return *flag;
    }
    if (const char* env = std::getenv("SATAKE_CAP"); env && *env) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(env, &used);
        } catch (const std::exception&) {
            throw ConfigError(std::string("SATAKE_CAP is not an integer: ") + env);
        }
        if (used != std::string(env).size() || v < 1)
            throw ConfigError(std::string("SATAKE_CAP must be a positive integer: ") + env);
        return static_cast<std::size_t>(v);
    }
    return kDefaultDimensionCap;
}

namespace {

DatumPtr datum_of(const JobConfig& c)
{
    if (c.type.empty())
        throw ConfigError("--type is required");
    try {
        return make_datum(c.type);
    } catch (const RootDatumError& e) {
        throw ConfigError(e.what());
    }
}

Coweight coweight_of(const RootDatum& d, const std::string& text, const char* flag)
{
    if (text.empty())
        throw ConfigError(std::string(flag) + " is required");
    return parse_coweight(text, d.rank());
}

Coweight dominant_coweight(const RootDatum& d, const std::string& text, const char* flag)
{
    auto c = coweight_of(d, text, flag);
    if (!d.is_dominant(c))
        throw ConfigError(c.str() + " is not dominant");
    return c;
}

std::string module_id(const RootDatum& d, const Coweight& lambda) { return d.type_label() + " " + lambda.str(); }

// The top weight of a module document: largest degree, then lexicographic.
Coweight infer_highest_weight(const GradedModule& m)
{
    if (m.spaces.empty())
        throw FormatError("module has no weights");
    const auto& d = *m.datum;
    auto best = m.spaces.begin()->first;
    for (const auto& [mu, s] : m.spaces)
        if (d.two_rho_pairing(mu) > d.two_rho_pairing(best) ||
            (d.two_rho_pairing(mu) == d.two_rho_pairing(best) && best < mu))
            best = mu;
    return best;
}

}  // namespace

Json cmd_build(const JobConfig& c)
{
    auto d = datum_of(c);
    const auto lambda = dominant_coweight(*d, c.coweight, "--coweight");
    IcBuildTrace trace;
    auto m = build_ic_module(d, lambda, resolve_cap(c.cap), &trace);
    Json j = module_to_json(m);
    j["highest_weight"] = coweight_to_json(lambda);
    Json atoms = Json::array(), chain = Json::array();
    for (const auto& a : trace.atoms)
        atoms.push_back(coweight_to_json(a));
    for (const auto& a : trace.chain)
        chain.push_back(coweight_to_json(a));
    j["construction"] = Json{{"atoms", std::move(atoms)}, {"chain", std::move(chain)}};
    return j;
}

Json cmd_verify(const JobConfig& c, bool& passed)
{
    const std::size_t cap = resolve_cap(c.cap);
    GradedModule m;
    Coweight lambda;
    if (!c.in.empty()) {
        std::ifstream f(c.in);
        if (!f)
            throw ConfigError("cannot read " + c.in);
        Json doc;
        try {
            doc = Json::parse(f);
        } catch (const Json::exception& e) {
            throw FormatError(std::string("not a JSON document: ") + e.what());
        }
        m = module_from_json(doc);
        if (!c.coweight.empty())
            lambda = dominant_coweight(*m.datum, c.coweight, "--coweight");
        else if (doc.contains("highest_weight"))
            lambda = coweight_from_json(doc.at("highest_weight"), m.datum->rank());
        else
            lambda = infer_highest_weight(m);
        if (!m.datum->is_dominant(lambda))
            throw FormatError("highest weight " + lambda.str() + " is not dominant");
    } else {
        auto d = datum_of(c);
        lambda = dominant_coweight(*d, c.coweight, "--coweight");
        m = build_ic_module(d, lambda, cap);
    }
    auto report = verify_all(m, lambda, cap);
    report.module_id = module_id(*m.datum, lambda);
    passed = report.passed();
    return report_to_json(report);
}

Json cmd_cells(const JobConfig& c)
{
    auto d = datum_of(c);
    const auto lambda = dominant_coweight(*d, c.coweight, "--coweight");
    const auto kind = classify_coweight(*d, lambda);
    if (kind != AtomKind::Minuscule && kind != AtomKind::QuasiMinuscule)
        throw ConfigError(lambda.str() + " is neither minuscule nor quasi-minuscule");
    return cells_to_json(*d, cells_table(*d, lambda));
}

Json cmd_decompose(const JobConfig& c)
{
    auto d = datum_of(c);
    const auto a = dominant_coweight(*d, c.coweight, "--coweight");
    const auto b = dominant_coweight(*d, c.coweight2, "--coweight2");
    const auto parts = decompose_tensor_product(d, a, b, resolve_cap(c.cap));
    long total = 0;
    for (const auto& [mu, k] : parts)
        total += k * weyl_dimension(*d, mu);
    return Json{{"datum", datum_to_json(*d)},
                {"factors", Json::array({coweight_to_json(a), coweight_to_json(b)})},
                {"dim", weyl_dimension(*d, a) * weyl_dimension(*d, b)},
                {"components", character_to_json(parts)},
                {"components_dim", total}};
}

int run_job(const JobConfig& c, std::ostream& out, std::ostream& err)
{
    try {
        if (c.format != "json")
            throw ConfigError("unsupported format '" + c.format + "'");
        Json doc;
        int code = kExitOk;
        if (c.command == "build")
            doc = cmd_build(c);
        else if (c.command == "verify") {
            bool passed = false;
            doc = cmd_verify(c, passed);
            code = passed ? kExitOk : kExitVerifyFailed;
        } else if (c.command == "cells")
            doc = cmd_cells(c);
        else if (c.command == "decompose")
            doc = cmd_decompose(c);
        else
            throw ConfigError("unknown command '" + c.command + "'");
        const std::string text = dump(doc);
        if (c.out.empty())
            out << text;
        else {
            std::ofstream f(c.out, std::ios::binary);
            if (!f)
                throw ConfigError("cannot write " + c.out);
            f << text;
        }
        return code;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Chevalley operators on Satake cohomology"};
    app.require_subcommand(1);
    JobConfig c;
    std::size_t cap = 0;
    auto add_common = [&](CLI::App* s) {
        s->add_option("--type", c.type, "root datum, e.g. G2, A1xA1, or a Cartan list");
        s->add_option("--cap", cap, "dimension cap (overrides SATAKE_CAP)");
        s->add_option("--out", c.out, "output file (default stdout)");
        s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json"}));
    };
    auto* build = app.add_subcommand("build", "build the module with the given highest weight");
    add_common(build);
    build->add_option("--coweight", c.coweight, "highest weight, fundamental-coweight coordinates")->required();
    auto* verify = app.add_subcommand("verify", "run every relation and oracle check");
    add_common(verify);
    verify->add_option("--coweight", c.coweight, "highest weight, fundamental-coweight coordinates");
    verify->add_option("--in", c.in, "module document to verify instead of building one");
    auto* cells = app.add_subcommand("cells", "case tables for a minuscule or quasi-minuscule coweight");
    add_common(cells);
    cells->add_option("--coweight", c.coweight, "minuscule or quasi-minuscule coweight")->required();
    auto* decompose = app.add_subcommand("decompose", "decompose a tensor product by highest vectors");
    add_common(decompose);
    decompose->add_option("--coweight", c.coweight, "first highest weight")->required();
    decompose->add_option("--coweight2", c.coweight2, "second highest weight")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::stringstream o, r;
        const int code = app.exit(e, o, r);
        out << o.str();
        err << r.str();
        return code == 0 ? kExitOk : kExitBadInput;
    }
    for (auto* s : app.get_subcommands())
        c.command = s->get_name();
    for (auto* s : {build, verify, cells, decompose})
        if (s->parsed() && s->count("--cap"))
            c.cap = cap;
    return run_job(c, out, err);
}

}  // namespace satake

#include "satake/io.hpp"

namespace satake {

namespace {

template <class T>
const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field '") + key + "'");
    const Json& v = j.at(key);
    bool ok = false;
    if constexpr (std::is_same_v<T, Json>)
        ok = true;
    else if constexpr (std::is_same_v<T, std::string>)
        ok = v.is_string();
    else if constexpr (std::is_integral_v<T>)
        ok = v.is_number_integer();
    else
        ok = v.is_array();
    if (!ok)
        throw FormatError(std::string("field '") + key + "' has the wrong type");
    return v;
}

Json matrix_entries(const QMatrix& b)
{
    Json entries = Json::array();
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (b(r, c) != 0)
                entries.push_back(Json::array({r, c, to_string(b(r, c))}));
    return entries;
}

Json matrix_to_json(const QMatrix& b)
{
    return Json{{"rows", b.rows()}, {"cols", b.cols()}, {"entries", matrix_entries(b)}};
}

std::size_t size_field(const Json& j, const char* key)
{
    const Json& v = field<long>(j, key);
    if (v.get<long long>() < 0)
        throw FormatError(std::string("field '") + key + "' is negative");
    return v.get<std::size_t>();
}

QMatrix matrix_from_json(const Json& j)
{
    QMatrix b(size_field(j, "rows"), size_field(j, "cols"));
    for (const auto& t : field<std::vector<Json>>(j, "entries")) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned() ||
            !t[2].is_string())
            throw FormatError("matrix entries must be [row, col, \"p/q\"] triplets");
        const auto r = t[0].get<std::size_t>(), c = t[1].get<std::size_t>();
        if (r >= b.rows() || c >= b.cols())
            throw FormatError("matrix entry out of range");
        try {
            b(r, c) = parse_rational(t[2].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    return b;
}

Json operator_to_json(const WeightedOperator& op, std::size_t i)
{
    Json blocks = Json::array();
    for (const auto& [mu, b] : op.blocks) {
        Json jb = matrix_to_json(b);
        jb["source"] = coweight_to_json(mu);
        blocks.push_back(std::move(jb));
    }
    return Json{{"index", i + 1}, {"shift", coweight_to_json(op.shift)}, {"blocks", std::move(blocks)}};
}

WeightedOperator operator_from_json(const Json& j, std::size_t rank)
{
    WeightedOperator op(coweight_from_json(field<Json>(j, "shift"), rank));
    for (const auto& jb : field<std::vector<Json>>(j, "blocks")) {
        auto mu = coweight_from_json(field<Json>(jb, "source"), rank);
        if (!op.blocks.emplace(mu, matrix_from_json(jb)).second)
            throw FormatError("duplicate block at " + mu.str());
    }
    return op;
}

}  // namespace

Json datum_to_json(const RootDatum& d)
{
    return Json{{"type", d.type_label()}, {"cartan", d.cartan()}};
}

DatumPtr datum_from_json(const Json& j)
{
    try {
        if (j.is_object() && j.contains("cartan")) {
            const auto& c = field<std::vector<Json>>(j, "cartan");
            IntMatrix m;
            for (const auto& row : c) {
                if (!row.is_array())
                    throw FormatError("cartan rows must be arrays");
                std::vector<int> r;
                for (const auto& x : row) {
                    if (!x.is_number_integer())
                        throw FormatError("cartan entries must be integers");
                    r.push_back(x.get<int>());
                }
                m.push_back(std::move(r));
            }
            return std::make_shared<const RootDatum>(RootDatum::from_cartan(m));
        }
        return make_datum(field<std::string>(j, "type").get<std::string>());
    } catch (const RootDatumError& e) {
        throw FormatError(e.what());
    }
}

Json coweight_to_json(const Coweight& c) { return c.to_vector(); }

Coweight coweight_from_json(const Json& j, std::size_t rank)
{
    if (!j.is_array() || j.size() != rank)
        throw FormatError("coweight must be an array of " + std::to_string(rank) + " integers");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw FormatError("coweight coordinates must be integers");
        v.push_back(x.get<int>());
    }
    return Coweight(v);
}

Json module_to_json(const GradedModule& m)
{
    Json weights = Json::array();
    for (const auto& [mu, s] : m.spaces)
        weights.push_back(Json{{"coords", coweight_to_json(mu)}, {"dim", s.dim}, {"degree", s.degree}});
    Json ops;
    for (const auto& [name, family] : {std::pair{"e", &m.e}, {"f", &m.f}, {"h", &m.h}}) {
        Json list = Json::array();
        for (std::size_t i = 0; i < family->size(); ++i)
            list.push_back(operator_to_json((*family)[i], i));
        ops[name] = std::move(list);
    }
    return Json{{"datum", datum_to_json(*m.datum)}, {"dim", m.dim()}, {"weights", std::move(weights)},
                {"operators", std::move(ops)}};
}

GradedModule module_from_json(const Json& j)
{
    GradedModule m;
    m.datum = datum_from_json(field<Json>(j, "datum"));
    const std::size_t rank = m.datum->rank();
    for (const auto& w : field<std::vector<Json>>(j, "weights")) {
        auto mu = coweight_from_json(field<Json>(w, "coords"), rank);
        WeightSpace s{size_field(w, "dim"), field<int>(w, "degree").get<int>()};
        if (!m.spaces.emplace(mu, s).second)
            throw FormatError("duplicate weight " + mu.str());
    }
    const Json& ops = field<Json>(j, "operators");
    for (const auto& [name, family] : {std::pair{"e", &m.e}, {"f", &m.f}, {"h", &m.h}}) {
        const auto& list = field<std::vector<Json>>(ops, name);
        if (list.size() != rank)
            throw FormatError(std::string("expected ") + std::to_string(rank) + " operators '" + name + "'");
        for (std::size_t i = 0; i < rank; ++i) {
            if (field<long>(list[i], "index").get<long>() != static_cast<long>(i + 1))
                throw FormatError(std::string("operators '") + name + "' out of order");
            family->push_back(operator_from_json(list[i], rank));
        }
    }
    // Block shapes must match the declared weight spaces.
    for (const auto* family : {&m.e, &m.f, &m.h})
        for (const auto& op : *family)
            for (const auto& [mu, b] : op.blocks) {
                if (!m.has_weight(mu))
                    throw FormatError("block at " + mu.str() + " has no source weight");
                if (b.cols() != m.dim(mu) || (m.has_weight(mu + op.shift) && b.rows() != m.dim(mu + op.shift)))
                    throw FormatError("block at " + mu.str() + " has the wrong shape");
            }
    return m;
}

Json report_to_json(const VerificationReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json jc{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty())
            jc["detail"] = c.detail;
        if (c.witness)
            jc["witness"] = Json{{"weight", coweight_to_json(c.witness->weight)},
                                 {"residual", matrix_to_json(c.witness->residual)}};
        checks.push_back(std::move(jc));
    }
    return Json{{"module", r.module_id}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

Json character_to_json(const Character& ch)
{
    Json out = Json::array();
    for (const auto& [mu, k] : ch)
        out.push_back(Json{{"coweight", coweight_to_json(mu)}, {"multiplicity", k}});
    return out;
}

Json cells_to_json(const RootDatum& d, const CellsTable& t)
{
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json c{{"section", to_string(r.cell.section)},
               {"case", to_string(r.cell.tag)},
               {"pairing", r.cell.pairing},
               {"reflected", r.cell.reflected},
               {"reference", coweight_to_json(r.cell.reference)},
               {"component", r.cell.component}};
        rows.push_back(Json{{"mu", coweight_to_json(r.mu)},
                            {"i", r.i + 1},
                            {"case", std::move(c)},
                            {"strata", r.nonempty_strata}});
    }
    Json words = Json::array();
    for (const auto& w : t.words) {
        Json letters = Json::array();
        for (const auto& l : w.word)
            letters.push_back(l.str());
        Json chain = Json::array();
        for (const auto& c : w.verdict.chain)
            chain.push_back(coweight_to_json(c));
        Json jw{{"word", std::move(letters)},
                {"start", coweight_to_json(w.start)},
                {"feasible", w.verdict.feasible},
                {"chain", std::move(chain)},
                {"constraints", w.verdict.constraints}};
        if (!w.verdict.feasible)
            jw["violated"] = w.verdict.violated;
        words.push_back(std::move(jw));
    }
    return Json{{"datum", datum_to_json(d)},
                {"lambda", coweight_to_json(t.lambda)},
                {"kind", to_string(t.kind)},
                {"reflection_convention",
                 "negative pairings are classified through s_i(mu); 'reference' is the weight the case is stated for"},
                {"rows", std::move(rows)},
                {"words", std::move(words)}};
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace satake

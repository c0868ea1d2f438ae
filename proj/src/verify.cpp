#include "satake/verify.hpp"

#include "satake/satake.hpp"

#include <algorithm>

namespace satake {

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::merge(const VerificationReport& other)
{
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

const CheckResult* VerificationReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

// Records whether two operators agree; on failure the witness is the first
// differing weight with the residual a - b there.
CheckResult compare(const std::string& name, const GradedModule& m, const WeightedOperator& a,
                    const WeightedOperator& b)
{
    CheckResult c{name, true, {}, std::nullopt};
    if (a.shift != b.shift) {
        c.pass = false;
        c.detail = "operators have different weight shifts " + a.shift.str() + " and " + b.shift.str();
        return c;
    }
    if (auto mu = first_difference(m, a, b)) {
        c.pass = false;
        c.detail = "blocks differ at source weight " + mu->str();
        c.witness = Witness{*mu, block_or_zero(m, a, *mu) - block_or_zero(m, b, *mu)};
    }
    return c;
}

CheckResult expect_zero(const std::string& name, const GradedModule& m, const WeightedOperator& a)
{
    return compare(name, m, a, WeightedOperator(a.shift));
}

// e^k = 0 checked one source weight at a time; the running products are
// rescaled, which does not change whether they vanish.
CheckResult expect_nilpotent(const std::string& name, const GradedModule& m, const WeightedOperator& a,
                             std::size_t k)
{
    CheckResult c{name, true, {}, std::nullopt};
    for (const auto& [mu, s] : m.spaces) {
        QMatrix p = QMatrix::identity(s.dim);
        Coweight cur = mu;
        bool zero = false;
        for (std::size_t step = 0; step < k && !zero; ++step) {
            const QMatrix* b = a.block(cur);
            cur += a.shift;
            if (!b || !m.has_weight(cur)) {
                zero = true;
                break;
            }
            (p = *b * p).make_primitive();
            zero = p.is_zero();
        }
        if (!zero) {
            c.pass = false;
            c.detail = "power does not vanish at source weight " + mu.str();
            c.witness = Witness{mu, block_or_zero(m, power(m, a, k), mu)};
            break;
        }
    }
    return c;
}

}  // namespace

VerificationReport verify_triples(const GradedModule& m)
{
    VerificationReport r;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        const auto& e = m.e[i];
        const auto& f = m.f[i];
        const auto& h = m.h[i];
        r.checks.push_back(compare("triple " + idx(i) + ": [e,f]=h", m, commutator(m, e, f), h));
        r.checks.push_back(compare("triple " + idx(i) + ": [h,e]=2e", m, commutator(m, h, e), scaled(e, 2)));
        r.checks.push_back(compare("triple " + idx(i) + ": [h,f]=-2f", m, commutator(m, h, f), scaled(f, -2)));
    }
    return r;
}

VerificationReport verify_cross_commutators(const GradedModule& m)
{
    VerificationReport r;
    const auto& d = *m.datum;
    const std::size_t n = m.e.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int a = d.cartan(i, j);
            const std::string pair = idx(i) + "," + idx(j);
            if (i != j)
                r.checks.push_back(expect_zero("cross " + pair + ": [e_i,f_j]=0", m, commutator(m, m.e[i], m.f[j])));
            r.checks.push_back(
                compare("cross " + pair + ": [h_i,e_j]=a_ij e_j", m, commutator(m, m.h[i], m.e[j]), scaled(m.e[j], a)));
            r.checks.push_back(compare("cross " + pair + ": [h_i,f_j]=-a_ij f_j", m, commutator(m, m.h[i], m.f[j]),
                                       scaled(m.f[j], -a)));
        }
    return r;
}

VerificationReport verify_serre(const GradedModule& m)
{
    VerificationReport r;
    const auto& d = *m.datum;
    const std::size_t n = m.e.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            // [h_i, e_j] = a_ij e_j, so ad e_i kills e_j after 1 - a_ij steps.
            const int k = 1 - d.cartan(i, j);
            WeightedOperator x = m.e[j], y = m.f[j];
            for (int s = 0; s < k; ++s) {
                x = commutator(m, m.e[i], x);
                y = commutator(m, m.f[i], y);
            }
            const std::string tag = "serre " + idx(i) + "," + idx(j) + ": (ad e_" + idx(i) + ")^" +
                                    std::to_string(k) + " e_" + idx(j) + "=0";
            r.checks.push_back(expect_zero(tag, m, x));
            const std::string ftag = "serre " + idx(i) + "," + idx(j) + ": (ad f_" + idx(i) + ")^" +
                                     std::to_string(k) + " f_" + idx(j) + "=0";
            r.checks.push_back(expect_zero(ftag, m, y));
        }
    for (std::size_t i = 0; i < n; ++i) {
        int top = 0;
        for (const auto& [mu, s] : m.spaces)
            top = std::max(top, d.simple_pairing(i, mu));
        const std::size_t big = static_cast<std::size_t>(top) + 1;
        r.checks.push_back(
            expect_nilpotent("nilpotence " + idx(i) + ": e^" + std::to_string(big) + "=0", m, m.e[i], big));
        r.checks.push_back(
            expect_nilpotent("nilpotence " + idx(i) + ": f^" + std::to_string(big) + "=0", m, m.f[i], big));
    }
    return r;
}

VerificationReport verify_weight_shifts(const GradedModule& m)
{
    VerificationReport r;
    const auto& d = *m.datum;
    auto scan = [&](const std::string& name, const WeightedOperator& op, const Coweight& expected) {
        CheckResult c{name, true, {}, std::nullopt};
        if (op.shift != expected) {
            c.pass = false;
            c.detail = "declared shift " + op.shift.str() + ", expected " + expected.str();
        }
        for (const auto& [mu, b] : op.blocks) {
            if (!c.pass)
                break;
            const auto target = mu + op.shift;
            std::string problem;
            if (!m.has_weight(mu))
                problem = "block at " + mu.str() + " has no source weight space";
            else if (!m.has_weight(target)) {
                if (!b.is_zero())
                    problem = "block at " + mu.str() + " maps into missing weight " + target.str();
            } else if (b.rows() != m.dim(target) || b.cols() != m.dim(mu))
                problem = "block at " + mu.str() + " has the wrong shape";
            if (!problem.empty()) {
                c.pass = false;
                c.detail = problem;
                c.witness = Witness{mu, b};
            }
        }
        r.checks.push_back(std::move(c));
    };
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        scan("shift " + idx(i) + ": e", m.e[i], d.simple_coroot(i));
        scan("shift " + idx(i) + ": f", m.f[i], -d.simple_coroot(i));
        scan("shift " + idx(i) + ": h", m.h[i], d.zero());
        CheckResult c{"shift " + idx(i) + ": h=(alpha_i,mu) id", true, {}, std::nullopt};
        for (const auto& [mu, s] : m.spaces) {
            QMatrix expected = QMatrix::scalar(s.dim, d.simple_pairing(i, mu));
            const QMatrix* b = m.h[i].block(mu);
            QMatrix got = b ? *b : QMatrix(s.dim, s.dim);
            if (got.rows() != s.dim || got.cols() != s.dim || !(got == expected)) {
                c.pass = false;
                c.detail = "h block at " + mu.str() + " is not (alpha_i,mu) id";
                c.witness = Witness{mu, got.rows() == s.dim && got.cols() == s.dim ? got - expected : got};
                break;
            }
        }
        r.checks.push_back(std::move(c));
    }
    return r;
}

VerificationReport verify_gradings(const GradedModule& m)
{
    VerificationReport r;
    const auto& d = *m.datum;
    CheckResult deg{"grading: degree=2(rho,mu)", true, {}, std::nullopt};
    for (const auto& [mu, s] : m.spaces)
        if (s.degree != d.two_rho_pairing(mu)) {
            deg.pass = false;
            deg.detail = "weight " + mu.str() + " has degree " + std::to_string(s.degree) + ", expected " +
                         std::to_string(d.two_rho_pairing(mu));
            deg.witness = Witness{mu, QMatrix()};
            break;
        }
    r.checks.push_back(std::move(deg));
    auto steps = [&](const std::string& name, const std::vector<WeightedOperator>& family, int delta) {
        for (std::size_t i = 0; i < family.size(); ++i) {
            CheckResult c{"grading " + idx(i) + ": " + name, true, {}, std::nullopt};
            for (const auto& [mu, b] : family[i].blocks) {
                const auto target = mu + family[i].shift;
                if (b.is_zero() || !m.has_weight(mu) || !m.has_weight(target))
                    continue;
                const int step = m.spaces.at(target).degree - m.spaces.at(mu).degree;
                if (step != delta) {
                    c.pass = false;
                    c.detail = "block at " + mu.str() + " changes degree by " + std::to_string(step);
                    c.witness = Witness{mu, b};
                    break;
                }
            }
            r.checks.push_back(std::move(c));
        }
    };
    steps("e raises degree by 2", m.e, 2);
    steps("f lowers degree by 2", m.f, -2);
    return r;
}

VerificationReport compare_characters(const GradedModule& m, const Coweight& lambda, std::size_t cap)
{
    VerificationReport r;
    const auto& d = *m.datum;
    const auto ch = character_of(m);
    auto describe = [](const Character& a, const Character& b) -> std::string {
        for (const auto& [mu, k] : a) {
            auto it = b.find(mu);
            long other = it == b.end() ? 0 : it->second;
            if (other != k)
                return "multiplicity at " + mu.str() + ": " + std::to_string(k) + " vs " + std::to_string(other);
        }
        for (const auto& [mu, k] : b)
            if (!a.count(mu))
                return "multiplicity at " + mu.str() + ": 0 vs " + std::to_string(k);
        return {};
    };
    const auto fr = freudenthal_character(d, lambda);
    CheckResult c1{"oracle: character=freudenthal", ch == fr, describe(ch, fr), std::nullopt};
    r.checks.push_back(c1);
    const auto sh = character_of(shapovalov_construct(m.datum, lambda, cap));
    CheckResult c2{"oracle: character=shapovalov", ch == sh, describe(ch, sh), std::nullopt};
    r.checks.push_back(c2);

    std::size_t count = 0;
    std::string where;
    for (const auto& [mu, s] : m.spaces) {
        auto hv = highest_vectors(m, mu).size();
        if (hv && mu != lambda)
            where = mu.str();
        count += hv;
    }
    CheckResult c3{"oracle: one highest vector", count == 1 && highest_vectors(m, lambda).size() == 1, {},
                   std::nullopt};
    if (!c3.pass)
        c3.detail = std::to_string(count) + " highest vectors" + (where.empty() ? "" : ", one at " + where);
    r.checks.push_back(c3);
    return r;
}

VerificationReport verify_lefschetz(const GradedModule& m)
{
    VerificationReport r;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        CheckResult c{"lefschetz " + idx(i) + ": e^k bijective", true, {}, std::nullopt};
        try {
            c.detail = lefschetz_failure(m.e[i], m.h[i]);
            c.pass = c.detail.empty();
        } catch (const std::invalid_argument& ex) {
            c.pass = false;
            c.detail = ex.what();
        }
        r.checks.push_back(c);
        CheckResult u{"lefschetz " + idx(i) + ": completion unique", true, {}, std::nullopt};
        try {
            auto defect = sl2_uniqueness_defect(m.e[i], m.h[i]);
            u.pass = defect == 0;
            if (!u.pass)
                u.detail = "solution space of dimension " + std::to_string(defect);
        } catch (const std::invalid_argument& ex) {
            u.pass = false;
            u.detail = ex.what();
        }
        r.checks.push_back(u);
    }
    return r;
}

VerificationReport verify_relations(const GradedModule& m)
{
    VerificationReport r;
    r.merge(verify_weight_shifts(m));
    r.merge(verify_triples(m));
    r.merge(verify_cross_commutators(m));
    r.merge(verify_serre(m));
    r.merge(verify_gradings(m));
    return r;
}

VerificationReport verify_all(const GradedModule& m, const Coweight& lambda, std::size_t cap)
{
    auto r = verify_relations(m);
    r.merge(verify_lefschetz(m));
    r.merge(compare_characters(m, lambda, cap));
    return r;
}

}  // namespace satake

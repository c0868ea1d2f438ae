#include "satake/module.hpp"

#include <stdexcept>

namespace satake {

long dimension(const Character& ch)
{
    long d = 0;
    for (const auto& [mu, m] : ch)
        d += m;
    return d;
}

const QMatrix* WeightedOperator::block(const Coweight& source) const
{
    auto it = blocks.find(source);
    return it == blocks.end() ? nullptr : &it->second;
}

bool WeightedOperator::is_zero() const
{
    for (const auto& [mu, b] : blocks)
        if (!b.is_zero())
            return false;
    return true;
}

void WeightedOperator::prune()
{
    for (auto it = blocks.begin(); it != blocks.end();) {
        if (it->second.is_zero())
            it = blocks.erase(it);
        else
            ++it;
    }
}

std::size_t GradedModule::dim() const
{
    std::size_t d = 0;
    for (const auto& [mu, s] : spaces)
        d += s.dim;
    return d;
}

std::size_t GradedModule::dim(const Coweight& mu) const
{
    auto it = spaces.find(mu);
    return it == spaces.end() ? 0 : it->second.dim;
}

void GradedModule::reset_operators()
{
    const auto n = datum->rank();
    e.clear();
    f.clear();
    h.clear();
    for (std::size_t i = 0; i < n; ++i) {
        e.emplace_back(datum->simple_coroot(i));
        f.emplace_back(-datum->simple_coroot(i));
        h.emplace_back(datum->zero());
    }
    set_scalar_h();
}

void GradedModule::set_scalar_h()
{
    for (std::size_t i = 0; i < datum->rank(); ++i) {
        h[i].blocks.clear();
        for (const auto& [mu, s] : spaces)
            h[i].blocks[mu] = QMatrix::scalar(s.dim, datum->simple_pairing(i, mu));
    }
}

GradedModule make_module(DatumPtr datum, const Character& dims)
{
    GradedModule m;
    m.datum = std::move(datum);
    for (const auto& [mu, d] : dims) {
        if (d <= 0)
            continue;
        m.spaces[mu] = WeightSpace{static_cast<std::size_t>(d), m.datum->two_rho_pairing(mu)};
    }
    m.reset_operators();
    return m;
}

GradedModule trivial_module(DatumPtr datum)
{
    auto zero = datum->zero();
    return make_module(std::move(datum), Character{{zero, 1}});
}

Character character_of(const GradedModule& m)
{
    Character ch;
    for (const auto& [mu, s] : m.spaces)
        if (s.dim > 0)
            ch[mu] = static_cast<long>(s.dim);
    return ch;
}

WeightedOperator compose(const GradedModule& m, const WeightedOperator& a, const WeightedOperator& b)
{
    WeightedOperator out(a.shift + b.shift);
    for (const auto& [mu, bb] : b.blocks) {
        auto mid = mu + b.shift;
        const QMatrix* ab = a.block(mid);
        if (!ab || !m.has_weight(mid) || !m.has_weight(mid + a.shift))
            continue;
        auto prod = *ab * bb;
        if (!prod.is_zero())
            out.blocks[mu] = std::move(prod);
    }
    return out;
}

WeightedOperator add(const GradedModule& m, const WeightedOperator& a, const WeightedOperator& b,
                     const Rational& scale_b)
{
    if (a.shift != b.shift)
        throw std::invalid_argument("adding operators with different shifts");
    WeightedOperator out = a;
    for (const auto& [mu, bb] : b.blocks) {
        if (!m.has_weight(mu + b.shift))
            continue;
        auto it = out.blocks.find(mu);
        if (it == out.blocks.end())
            out.blocks[mu] = bb * scale_b;
        else
            it->second += bb * scale_b;
    }
    out.prune();
    return out;
}

WeightedOperator commutator(const GradedModule& m, const WeightedOperator& a, const WeightedOperator& b)
{
    return add(m, compose(m, a, b), compose(m, b, a), -1);
}

WeightedOperator scaled(const WeightedOperator& a, const Rational& s)
{
    WeightedOperator out(a.shift);
    if (s == 0)
        return out;
    for (const auto& [mu, b] : a.blocks)
        out.blocks[mu] = b * s;
    return out;
}

WeightedOperator power(const GradedModule& m, const WeightedOperator& a, std::size_t k)
{
    WeightedOperator out(m.datum->zero());
    for (const auto& [mu, s] : m.spaces)
        out.blocks[mu] = QMatrix::identity(s.dim);
    for (std::size_t n = 0; n < k && !out.blocks.empty(); ++n)
        out = compose(m, a, out);
    out.shift = static_cast<int>(k) * a.shift;
    return out;
}

QMatrix block_or_zero(const GradedModule& m, const WeightedOperator& op, const Coweight& mu)
{
    if (const QMatrix* b = op.block(mu); b && m.has_weight(mu + op.shift))
        return *b;
    return QMatrix(m.dim(mu + op.shift), m.dim(mu));
}

std::optional<Coweight> first_difference(const GradedModule& m, const WeightedOperator& a,
                                         const WeightedOperator& b)
{
    if (a.shift != b.shift)
        throw std::invalid_argument("comparing operators with different shifts");
    for (const auto& [mu, s] : m.spaces)
        if (!(block_or_zero(m, a, mu) == block_or_zero(m, b, mu)))
            return mu;
    return std::nullopt;
}

QMatrix assemble(const GradedModule& m, const WeightedOperator& op)
{
    std::map<Coweight, std::size_t> offset;
    std::size_t n = 0;
    for (const auto& [mu, s] : m.spaces) {
        offset[mu] = n;
        n += s.dim;
    }
    QMatrix full(n, n);
    for (const auto& [mu, b] : op.blocks) {
        auto target = mu + op.shift;
        if (!m.has_weight(mu) || !m.has_weight(target))
            continue;
        full.place(b, offset[target], offset[mu]);
    }
    return full;
}

}  // namespace satake

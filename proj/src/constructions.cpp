#include "satake/satake.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace satake {

namespace {

// Weight spaces of a tensor product, indexed by positions in the factors'
// weight lists so that the coproduct never looks weights up by value.
struct TensorLayout {
    std::vector<Coweight> wa, wb, lambdas;
    std::vector<std::size_t> da, db;
    std::vector<std::size_t> lam;     // [ia * nb + ib] -> index into lambdas
    std::vector<std::size_t> offset;  // [ia * nb + ib] -> offset inside that space
    std::vector<std::size_t> dims;
};

TensorLayout layout(const GradedModule& a, const GradedModule& b)
{
    TensorLayout t;
    for (const auto& [mu, s] : a.spaces) {
        t.wa.push_back(mu);
        t.da.push_back(s.dim);
    }
    for (const auto& [nu, s] : b.spaces) {
        t.wb.push_back(nu);
        t.db.push_back(s.dim);
    }
    // Pairs grouped by mu + nu, mu lexicographic inside each group.
    std::map<Coweight, std::size_t> index;
    const std::size_t nb = t.wb.size();
    t.lam.resize(t.wa.size() * nb);
    t.offset.resize(t.wa.size() * nb);
    for (std::size_t ia = 0; ia < t.wa.size(); ++ia)
        for (std::size_t ib = 0; ib < nb; ++ib) {
            auto [it, fresh] = index.try_emplace(t.wa[ia] + t.wb[ib], index.size());
            if (fresh)
                t.dims.push_back(0);
            t.lam[ia * nb + ib] = it->second;
            t.offset[ia * nb + ib] = t.dims[it->second];
            t.dims[it->second] += t.da[ia] * t.db[ib];
        }
    t.lambdas.resize(index.size());
    for (const auto& [mu, k] : index)
        t.lambdas[k] = mu;
    return t;
}

// Position of mu + shift in a sorted weight list, or npos.
std::vector<std::size_t> shifted_index(const std::vector<Coweight>& w, const Coweight& shift)
{
    std::vector<std::size_t> out(w.size(), std::string::npos);
    for (std::size_t k = 0; k < w.size(); ++k) {
        auto it = std::lower_bound(w.begin(), w.end(), w[k] + shift);
        if (it != w.end() && *it == w[k] + shift)
            out[k] = static_cast<std::size_t>(it - w.begin());
    }
    return out;
}

// Coproduct of one operator family member: x (x) 1 + 1 (x) x.
WeightedOperator coproduct(const TensorLayout& t, const WeightedOperator& xa, const WeightedOperator& xb)
{
    if (xa.shift != xb.shift)
        throw std::invalid_argument("tensor_module: operator shifts differ between factors");
    const std::size_t na = t.wa.size(), nb = t.wb.size();
    const auto ta = shifted_index(t.wa, xa.shift), tb = shifted_index(t.wb, xb.shift);
    std::vector<const QMatrix*> ba(na, nullptr), bb(nb, nullptr);
    for (std::size_t k = 0; k < na; ++k)
        if (ta[k] != std::string::npos)
            ba[k] = xa.block(t.wa[k]);
    for (std::size_t k = 0; k < nb; ++k)
        if (tb[k] != std::string::npos)
            bb[k] = xb.block(t.wb[k]);

    std::vector<QMatrix> blocks(t.lambdas.size());
    std::vector<std::size_t> target(t.lambdas.size(), std::string::npos);
    auto block_for = [&](std::size_t src, std::size_t dst) -> QMatrix& {
        if (target[src] == std::string::npos) {
            target[src] = dst;
            blocks[src] = QMatrix(t.dims[dst], t.dims[src]);
        }
        return blocks[src];
    };
    // Kronecker products with identities, written in place.
    for (std::size_t ia = 0; ia < na; ++ia)
        for (std::size_t ib = 0; ib < nb; ++ib) {
            const std::size_t src = t.lam[ia * nb + ib], c0 = t.offset[ia * nb + ib];
            if (const QMatrix* m = ba[ia]) {
                const std::size_t to = ta[ia] * nb + ib, r0 = t.offset[to], n = t.db[ib];
                QMatrix& block = block_for(src, t.lam[to]);
                for (std::size_t i = 0; i < m->rows(); ++i)
                    for (std::size_t j = 0; j < m->cols(); ++j)
                        if ((*m)(i, j) != 0)
                            for (std::size_t k = 0; k < n; ++k)
                                block(r0 + i * n + k, c0 + j * n + k) += (*m)(i, j);
            }
            if (const QMatrix* m = bb[ib]) {
                const std::size_t to = ia * nb + tb[ib], r0 = t.offset[to], n = t.da[ia];
                QMatrix& block = block_for(src, t.lam[to]);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t k = 0; k < m->rows(); ++k)
                        for (std::size_t l = 0; l < m->cols(); ++l)
                            if ((*m)(k, l) != 0)
                                block(r0 + i * m->rows() + k, c0 + i * m->cols() + l) += (*m)(k, l);
            }
        }
    WeightedOperator x(xa.shift);
    for (std::size_t k = 0; k < blocks.size(); ++k)
        if (target[k] != std::string::npos && !blocks[k].is_zero())
            x.blocks.emplace_hint(x.blocks.end(), t.lambdas[k], std::move(blocks[k]));
    return x;
}

}  // namespace

GradedModule tensor_module(const GradedModule& a, const GradedModule& b)
{
    if (!a.datum || !b.datum || !(*a.datum == *b.datum))
        throw std::invalid_argument("tensor_module: modules over different root data");

    const auto t = layout(a, b);
    Character dims;
    for (std::size_t k = 0; k < t.lambdas.size(); ++k)
        dims[t.lambdas[k]] = static_cast<long>(t.dims[k]);
    GradedModule out = make_module(a.datum, dims);
    const std::size_t nb = t.wb.size();
    for (std::size_t ia = 0; ia < t.wa.size(); ++ia)
        for (std::size_t ib = 0; ib < nb; ++ib)
            if (t.offset[ia * nb + ib] == 0) {
                // Degrees add; for modules with the standard grading this equals 2(rho, lambda).
                out.spaces[t.lambdas[t.lam[ia * nb + ib]]].degree =
                    a.spaces.at(t.wa[ia]).degree + b.spaces.at(t.wb[ib]).degree;
            }
    const std::size_t n = a.datum->rank();
    for (std::size_t i = 0; i < n; ++i) {
        out.e[i] = coproduct(t, a.e[i], b.e[i]);
        out.f[i] = coproduct(t, a.f[i], b.f[i]);
        out.h[i] = coproduct(t, a.h[i], b.h[i]);
    }
    return out;
}

std::vector<QVector> highest_vectors(const GradedModule& m, const Coweight& lambda)
{
    if (!m.has_weight(lambda))
        return {};
    const std::size_t d = m.dim(lambda);
    std::vector<QMatrix> parts;
    std::size_t rows = 0;
    for (const auto& e : m.e) {
        if (!m.has_weight(lambda + e.shift))
            continue;
        if (const QMatrix* b = e.block(lambda)) {
            parts.push_back(*b);
            rows += b->rows();
        }
    }
    QMatrix stacked(rows, d);
    std::size_t r = 0;
    for (const auto& p : parts) {
        stacked.place(p, r, 0);
        r += p.rows();
    }
    return nullspace(stacked);
}

namespace {

Submodule generate(const GradedModule& m, const HomogeneousVector& v, bool lowering_only)
{
    if (!m.has_weight(v.weight))
        throw std::invalid_argument("generate_submodule: weight " + v.weight.str() + " is not a weight of the module");
    if (v.coords.size() != m.dim(v.weight))
        throw std::invalid_argument("generate_submodule: vector length does not match the weight space");

    std::map<Coweight, Subspace> span;
    std::deque<std::pair<Coweight, QVector>> queue;
    // Vectors are scaled to a leading 1 before propagating; otherwise
    // coefficients grow factorially along long strings.
    auto push = [&](const Coweight& mu, QVector x) {
        auto lead = std::find_if(x.begin(), x.end(), [](const Rational& q) { return q != 0; });
        if (lead != x.end() && *lead != 1) {
            const Rational inv = 1 / *lead;
            for (auto& q : x)
                if (q != 0)
                    q *= inv;
        }
        auto it = span.try_emplace(mu, m.dim(mu)).first;
        if (it->second.insert(x))
            queue.emplace_back(mu, std::move(x));
    };
    push(v.weight, v.coords);
    while (!queue.empty()) {
        auto [mu, x] = std::move(queue.front());
        queue.pop_front();
        for (const auto* family : {&m.f, &m.e})
            for (const auto& op : *family) {
                if (lowering_only && family == &m.e)
                    break;
                const auto target = mu + op.shift;
                if (!m.has_weight(target))
                    continue;
                const QMatrix* b = op.block(mu);
                if (!b)
                    continue;
                QVector y = b->apply(x);
                bool zero = true;
                for (const auto& q : y)
                    if (q != 0) {
                        zero = false;
                        break;
                    }
                if (!zero)
                    push(target, std::move(y));
            }
    }

    Submodule out;
    out.module.datum = m.datum;
    for (const auto& [mu, s] : span) {
        out.embedding[mu] = s.basis();
        out.module.spaces[mu] = WeightSpace{s.dim(), m.spaces.at(mu).degree};
    }
    out.module.reset_operators();

    auto induce = [&](const WeightedOperator& op, WeightedOperator& target_op) {
        target_op.blocks.clear();
        for (const auto& [mu, basis] : out.embedding) {
            const auto target = mu + op.shift;
            auto tgt = span.find(target);
            const QMatrix* b = op.block(mu);
            if (!b || tgt == span.end() || !m.has_weight(target))
                continue;
            QMatrix block(tgt->second.dim(), basis.size());
            for (std::size_t k = 0; k < basis.size(); ++k) {
                auto y = b->apply(basis[k]);
                auto c = tgt->second.coordinates(y);
                for (std::size_t r = 0; r < c.size(); ++r)
                    block(r, k) = c[r];
            }
            if (!block.is_zero())
                target_op.blocks[mu] = std::move(block);
        }
    };
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        induce(m.e[i], out.module.e[i]);
        induce(m.f[i], out.module.f[i]);
        if (lowering_only) {
            for (const auto& [mu, s] : out.module.spaces)
                out.module.h[i].blocks[mu] = QMatrix::scalar(s.dim, m.datum->simple_pairing(i, mu));
            continue;
        }
        induce(m.h[i], out.module.h[i]);
        // h is scalar on weight spaces, so the induced block keeps its shape
        // even where it vanishes.
        for (const auto& [mu, s] : out.module.spaces)
            if (!out.module.h[i].blocks.count(mu))
                out.module.h[i].blocks[mu] = QMatrix(s.dim, s.dim);
    }
    return out;
}

}  // namespace

Submodule generate_submodule_with_embedding(const GradedModule& m, const HomogeneousVector& v)
{
    return generate(m, v, false);
}

Submodule generate_highest_weight_submodule(const GradedModule& m, const HomogeneousVector& v)
{
    if (!m.has_weight(v.weight))
        throw std::invalid_argument("generate_submodule: weight " + v.weight.str() + " is not a weight of the module");
    for (const auto& e : m.e)
        if (const QMatrix* b = e.block(v.weight); b && m.has_weight(v.weight + e.shift) && v.coords.size() == b->cols())
            for (const auto& q : b->apply(v.coords))
                if (q != 0)
                    throw std::invalid_argument("generate_highest_weight_submodule: vector is not killed by e");
    return generate(m, v, true);
}

GradedModule generate_submodule(const GradedModule& m, const HomogeneousVector& v)
{
    return generate_submodule_with_embedding(m, v).module;
}

void complete_lowering_operators(GradedModule& m)
{
    for (std::size_t i = 0; i < m.e.size(); ++i)
        m.f[i] = sl2_completion(m.e[i], m.h[i]);
}

Coweight levi_class_representative(const RootDatum& d, const Coweight& mu, std::size_t i)
{
    int p = mu[i];
    int t = p >= 0 ? p / 2 : -((-p + 1) / 2);
    return mu - t * d.simple_coroot(i);
}

std::vector<StringSummand> levi_restrict(const GradedModule& m, std::size_t i)
{
    const auto& d = *m.datum;
    if (i >= d.rank())
        throw std::out_of_range("levi_restrict: simple index out of range");
    const auto alpha = d.simple_coroot(i);
    std::vector<StringSummand> out;
    for (const auto& [mu, s] : m.spaces) {
        const int n = d.simple_pairing(i, mu);
        if (n < 0 || s.dim == 0)
            continue;
        // Strings topped at mu: vectors of weight mu killed by e_i.
        std::size_t tops = s.dim;
        if (const QMatrix* b = m.e[i].block(mu); b && m.has_weight(mu + alpha))
            tops -= rank(*b);
        for (std::size_t k = 0; k < tops; ++k) {
            StringSummand str;
            str.top = mu;
            for (int j = 0; j <= n; ++j)
                str.weights.push_back(mu - j * alpha);
            str.component = levi_class_representative(d, mu, i);
            str.component_degree = d.two_rho_pairing(mu) - n;
            out.push_back(std::move(str));
        }
    }
    return out;
}

}  // namespace satake

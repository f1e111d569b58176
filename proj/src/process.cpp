#include "asepq/process.hpp"

#include <map>
#include <stdexcept>

namespace asepq {

namespace {

void check_bond(const Config& c, long x, long k, long l) {
    if (x < 1 || x >= c.sites()) throw std::out_of_range("bond index out of range");
    if (k < 1 || l <= k || l > c.classes())
        throw std::domain_error("exchange move needs classes k < l within range");
}

void check_bounded(const Config& c, long j2) {
    for (long x = 1; x <= c.sites(); ++x)
        if (cumulative(c, x, 1, c.classes()) != j2)
            throw std::domain_error("site occupations must sum to j2");
}

}  // namespace

LaurentPoly asep_rate(const Config& c, long x, Direction dir, long k, long l) {
    check_bond(c, x, k, l);
    const long n = c.classes();
    if (dir == Direction::right) {
        // the class-k particle at x jumps right, a class-l particle returns:
        // q^{-1} q^{2 xi_[1,k-1]^x} {xi_k^x} q^{2 xi_[l+1,n]^{x+1}} {xi_l^{x+1}}
        return LaurentPoly::q_power(-1 + 2 * cumulative(c, x, 1, k - 1)) * q_int2(c.at(x, k)) *
               LaurentPoly::q_power(2 * cumulative(c, x + 1, l + 1, n)) * q_int2(c.at(x + 1, l));
    }
    // the class-k particle at x+1 jumps left, a class-l particle returns:
    // q q^{2 xi_[1,l-1]^x} {xi_l^x} q^{2 xi_[k+1,n]^{x+1}} {xi_k^{x+1}}
    return LaurentPoly::q_power(1 + 2 * cumulative(c, x, 1, l - 1)) * q_int2(c.at(x, l)) *
           LaurentPoly::q_power(2 * cumulative(c, x + 1, k + 1, n)) * q_int2(c.at(x + 1, k));
}

LaurentPoly ssep_rate(const Config& c, long x, Direction dir, long k, long l) {
    check_bond(c, x, k, l);
    if (dir == Direction::right)
        return LaurentPoly::constant(c.at(x, k) * c.at(x + 1, l));
    return LaurentPoly::constant(c.at(x, l) * c.at(x + 1, k));
}

LaurentPoly tazrp_rate(const Config& c, long x, long i) {
    if (x < 1 || x > c.sites()) throw std::out_of_range("site index out of range");
    if (i < 1 || i > c.classes()) throw std::domain_error("class index out of range");
    return LaurentPoly::q_power(2 * cumulative(c, x, 1, i - 1)) * q_int2(c.at(x, i));
}

namespace {

template <class RateFn>
std::vector<Transition> exchange_transitions(const Config& c, long j2, RateFn rate_fn) {
    check_bounded(c, j2);
    const long n = c.classes();
    std::vector<Transition> out;
    for (long x = 1; x < c.sites(); ++x)
        for (long k = 1; k < n; ++k)
            for (long l = k + 1; l <= n; ++l) {
                if (c.at(x, k) > 0 && c.at(x + 1, l) > 0) {
                    LaurentPoly r = rate_fn(c, x, Direction::right, k, l);
                    if (!r.is_zero())
                        out.push_back({*swap_move(c, x, k, l), std::move(r), x, k, l,
                                       Direction::right});
                }
                if (c.at(x + 1, k) > 0 && c.at(x, l) > 0) {
                    LaurentPoly r = rate_fn(c, x, Direction::left, k, l);
                    if (!r.is_zero())
                        out.push_back({*swap_move(c, x, l, k), std::move(r), x, k, l,
                                       Direction::left});
                }
            }
    return out;
}

}  // namespace

std::vector<Transition> asep_transitions(const Config& c, long j2) {
    return exchange_transitions(c, j2, asep_rate);
}

std::vector<Transition> ssep_transitions(const Config& c, long j2) {
    return exchange_transitions(c, j2, ssep_rate);
}

std::vector<Transition> tazrp_transitions(const Config& c, Direction dir) {
    std::vector<Transition> out;
    const long L = c.sites();
    for (long x = 1; x <= L; ++x) {
        const long y = dir == Direction::right ? x + 1 : x - 1;
        if (y < 1 || y > L) continue;
        for (long i = 1; i <= c.classes(); ++i) {
            if (c.at(x, i) < 1) continue;
            out.push_back({*hop_move(c, x, y, i), tazrp_rate(c, x, i), x, i, 0, dir});
        }
    }
    return out;
}

RationalFunction clock_rate(Direction dir) {
    const LaurentPoly denom =
        (LaurentPoly::one() - LaurentPoly::q_power(2)) *
        (LaurentPoly::one() - LaurentPoly::q_power(2));
    return RationalFunction(LaurentPoly::q_power(dir == Direction::right ? -1 : 1), denom);
}

LaurentPoly tree_probability(const Config& c, long x, Direction dir, long k, long l) {
    check_bond(c, x, k, l);
    const long n = c.classes();
    auto hit = [](long count) {  // at least one of `count` independent trials succeeds
        return LaurentPoly::one() - LaurentPoly::q_power(2 * count);
    };
    if (dir == Direction::right) {
        return LaurentPoly::q_power(2 * cumulative(c, x, 1, k - 1)) * hit(c.at(x, k)) *
               LaurentPoly::q_power(2 * cumulative(c, x + 1, l + 1, n)) * hit(c.at(x + 1, l));
    }
    return LaurentPoly::q_power(2 * cumulative(c, x, 1, l - 1)) * hit(c.at(x, l)) *
           LaurentPoly::q_power(2 * cumulative(c, x + 1, k + 1, n)) * hit(c.at(x + 1, k));
}

RationalFunction inductive_rate(const Config& c, long x, Direction dir, long k, long l) {
    return clock_rate(dir) * RationalFunction(tree_probability(c, x, dir, k, l));
}

long Generator::index_of(const Config& c) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == c) return static_cast<long>(i);
    return -1;
}

std::vector<Transition> transitions_of(Model model, const Config& c, long j2, Direction dir) {
    switch (model) {
        case Model::asep:
            return asep_transitions(c, j2);
        case Model::ssep:
            return ssep_transitions(c, j2);
        case Model::tazrp:
            return tazrp_transitions(c, dir);
    }
    throw std::logic_error("unknown model");
}

Generator build_generator(Model model, long n, long j2, long L,
                          const std::optional<std::vector<long>>& sector, Direction dir) {
    Generator g;
    if (model == Model::tazrp) {
        if (!sector) throw std::domain_error("the zero-range model needs a sector");
        if (static_cast<long>(sector->size()) != n - 1)
            throw std::domain_error("sector must list totals for classes 1..n-1");
        g.basis = enumerate_zero_range_sector(L, *sector);
    } else {
        g.basis = sector ? enumerate_sector(n, j2, L, *sector) : enumerate_configs(n, j2, L);
    }
    const long N = static_cast<long>(g.basis.size());
    std::map<Config, long> index;
    for (long i = 0; i < N; ++i) index[g.basis[i]] = i;

    g.Q = DenseMatrix<RationalFunction>(N, N);
    for (long i = 0; i < N; ++i) {
        for (auto& t : transitions_of(model, g.basis[i], j2, dir)) {
            auto it = index.find(t.to);
            if (it == index.end()) throw std::logic_error("transition leaves the basis");
            const RationalFunction r{t.rate};
            g.Q(i, it->second) += r;
            g.Q(i, i) -= r;
        }
    }
    return g;
}

}  // namespace asepq

#include "asepq/process.hpp"

#include <algorithm>

#include "doctest.h"

using namespace asepq;

namespace {

Config from_str(const std::string& s) {
    auto c = Config::parse(s);
    REQUIRE(c.has_value());
    return *c;
}

LaurentPoly poly(const std::string& s) {
    auto p = LaurentPoly::parse(s);
    REQUIRE(p.has_value());
    return *p;
}

RationalFunction row_sum(const DenseMatrix<RationalFunction>& m, long i) {
    RationalFunction s;
    for (long j = 0; j < m.cols(); ++j) s += m(i, j);
    return s;
}

}  // namespace

TEST_CASE("two-species four-state generator matches the hand-computed matrix") {
    // two classes of particle plus holes, two slots per site, two sites,
    // one particle of each class; rates frozen from a hand calculation,
    // uniformly scaled by q^2 relative to the generator normalization here
    const std::vector<Config> states = {
        from_str("[[1,1,0],[0,0,2]]"), from_str("[[1,0,1],[0,1,1]]"),
        from_str("[[0,1,1],[1,0,1]]"), from_str("[[0,0,2],[1,1,0]]")};
    const std::vector<std::vector<std::string>> scaled = {
        {"-q - 2*q^3 - q^5", "q^3 + q^5", "q + q^3", "0"},
        {"q^7", "-q - q^3 - q^7", "q^3", "q"},
        {"q^7", "q^5", "-q - q^5 - q^7", "q"},
        {"0", "q^5 + q^7", "q^3 + q^5", "-q^3 - 2*q^5 - q^7"}};

    auto gen = build_generator(Model::asep, 3, 2, 2, std::vector<long>{1, 1});
    REQUIRE(gen.basis.size() == 4);
    const LaurentPoly qm2 = LaurentPoly::q_power(-2);
    for (int i = 0; i < 4; ++i) {
        const long bi = gen.index_of(states[i]);
        REQUIRE(bi >= 0);
        for (int j = 0; j < 4; ++j) {
            const long bj = gen.index_of(states[j]);
            CHECK(gen.Q(bi, bj) == RationalFunction(poly(scaled[i][j]) * qm2));
        }
    }
}

TEST_CASE("generator rows sum to zero") {
    for (auto [model, n, j2, L] :
         {std::tuple<Model, long, long, long>{Model::asep, 3, 2, 2},
          {Model::asep, 2, 2, 3},
          {Model::ssep, 3, 2, 2},
          {Model::ssep, 4, 1, 2}}) {
        auto gen = build_generator(model, n, j2, L);
        for (long i = 0; i < gen.Q.rows(); ++i) CHECK(row_sum(gen.Q, i).is_zero());
    }
    auto z = build_generator(Model::tazrp, 3, 0, 3, std::vector<long>{2, 1});
    for (long i = 0; i < z.Q.rows(); ++i) CHECK(row_sum(z.Q, i).is_zero());
}

TEST_CASE("off-diagonal rates are positive for q in (0,1)") {
    auto gen = build_generator(Model::asep, 3, 2, 2);
    for (long i = 0; i < gen.Q.rows(); ++i)
        for (long j = 0; j < gen.Q.cols(); ++j) {
            if (i == j || gen.Q(i, j).is_zero()) continue;
            CHECK(gen.Q(i, j).eval(0.5) > 0);
            CHECK(gen.Q(i, j).eval(0.9) > 0);
        }
}

TEST_CASE("the symmetric model is the q = 1 point of the asymmetric one") {
    for (const auto& c : enumerate_configs(3, 2, 2)) {
        auto a = asep_transitions(c, 2);
        auto s = ssep_transitions(c, 2);
        // same move set whenever the q = 1 rate is nonzero
        for (const auto& t : a) {
            auto match = std::find_if(s.begin(), s.end(), [&](const Transition& u) {
                return u.to == t.to && u.x == t.x && u.k == t.k && u.l == t.l && u.dir == t.dir;
            });
            REQUIRE(match != s.end());
            auto v = t.rate.eval_rational(Rational(1));
            REQUIRE(v.has_value());
            CHECK(*v == match->rate.eval_rational(Rational(1)).value());
        }
        CHECK(a.size() == s.size());
    }
}

TEST_CASE("single-occupancy sites give pure q^{-1} and q rates") {
    auto gen = build_generator(Model::asep, 3, 1, 2);
    const RationalFunction qp(LaurentPoly::q_power(1)), qm(LaurentPoly::q_power(-1));
    long right = 0, left = 0;
    for (long i = 0; i < gen.Q.rows(); ++i)
        for (long j = 0; j < gen.Q.cols(); ++j) {
            if (i == j || gen.Q(i, j).is_zero()) continue;
            const bool is_q = gen.Q(i, j) == qp;
            const bool is_qinv = gen.Q(i, j) == qm;
            CHECK((is_q || is_qinv));
            right += is_qinv;
            left += is_q;
        }
    CHECK(right > 0);
    CHECK(left > 0);
}

TEST_CASE("clock-and-cascade construction reproduces every exchange rate") {
    for (const auto& c : enumerate_configs(3, 2, 2)) {
        for (long k = 1; k < 3; ++k)
            for (long l = k + 1; l <= 3; ++l)
                for (auto dir : {Direction::right, Direction::left}) {
                    CHECK(inductive_rate(c, 1, dir, k, l) ==
                          RationalFunction(asep_rate(c, 1, dir, k, l)));
                }
    }
    for (const auto& c : enumerate_configs(2, 4, 2))
        for (auto dir : {Direction::right, Direction::left})
            CHECK(inductive_rate(c, 1, dir, 1, 2) ==
                  RationalFunction(asep_rate(c, 1, dir, 1, 2)));
}

TEST_CASE("cascade outcome probabilities stay within [0,1]") {
    for (const auto& c : enumerate_configs(3, 2, 2)) {
        for (auto dir : {Direction::right, Direction::left}) {
            Rational total(0);
            for (long k = 1; k < 3; ++k)
                for (long l = k + 1; l <= 3; ++l) {
                    auto p = tree_probability(c, 1, dir, k, l).eval_rational(Rational(1, 2));
                    REQUIRE(p.has_value());
                    CHECK(*p >= 0);
                    total += *p;
                }
            CHECK(total <= 1);
        }
    }
}

TEST_CASE("zero-range rates and moves") {
    const Config c = from_str("[[1,0],[2,3]]");
    CHECK(tazrp_rate(c, 2, 2) == LaurentPoly::q_power(4) * q_int2(3));
    CHECK(tazrp_rate(c, 2, 1) == q_int2(2));
    CHECK(tazrp_rate(c, 1, 2).is_zero());

    auto right = tazrp_transitions(c);
    REQUIRE(right.size() == 1);  // only the class-1 particle at site 1 can move right
    CHECK(right[0].to == from_str("[[0,0],[3,3]]"));
    CHECK(right[0].rate == q_int2(1));

    auto left = tazrp_transitions(c, Direction::left);
    CHECK(left.size() == 2);

    // reversing space maps left dynamics onto right dynamics
    for (const auto& z : enumerate_zero_range_sector(3, {2, 1})) {
        auto l_moves = tazrp_transitions(z, Direction::left);
        auto r_moves = tazrp_transitions(space_reverse(z), Direction::right);
        REQUIRE(l_moves.size() == r_moves.size());
        for (const auto& t : l_moves) {
            auto match = std::find_if(r_moves.begin(), r_moves.end(), [&](const Transition& u) {
                return u.to == space_reverse(t.to) && u.rate == t.rate;
            });
            CHECK(match != r_moves.end());
        }
    }
}

TEST_CASE("sector decomposition of the full generator") {
    auto full = build_generator(Model::asep, 3, 2, 2);
    for (long i = 0; i < full.Q.rows(); ++i)
        for (long j = 0; j < full.Q.cols(); ++j) {
            if (full.Q(i, j).is_zero()) continue;
            CHECK(sector_of(full.basis[i]) == sector_of(full.basis[j]));
        }
    auto sec = build_generator(Model::asep, 3, 2, 2, std::vector<long>{1, 1});
    for (long i = 0; i < sec.Q.rows(); ++i)
        for (long j = 0; j < sec.Q.cols(); ++j) {
            const long fi = full.index_of(sec.basis[i]), fj = full.index_of(sec.basis[j]);
            CHECK(sec.Q(i, j) == full.Q(fi, fj));
        }
}

TEST_CASE("rate argument validation") {
    const Config c = from_str("[[1,1,0],[0,0,2]]");
    CHECK_THROWS_AS(asep_rate(c, 2, Direction::right, 1, 2), std::out_of_range);
    CHECK_THROWS_AS(asep_rate(c, 1, Direction::right, 2, 2), std::domain_error);
    CHECK_THROWS_AS(asep_rate(c, 1, Direction::right, 0, 2), std::domain_error);
    CHECK_THROWS_AS(asep_transitions(from_str("[[1,1,0],[0,0,1]]"), 2), std::domain_error);
    CHECK_THROWS_AS(build_generator(Model::tazrp, 3, 0, 2), std::domain_error);
}

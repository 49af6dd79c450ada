#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cobord/cobordism.hpp"
#include "cobord/diffop.hpp"
#include "cobord/dks.hpp"
#include "fixtures.hpp"

using namespace cobord;
using fixtures::mono;
using fixtures::poly;

namespace {

MultiPoly random_multipoly(std::mt19937& rng, int nvars, int max_deg, int terms) {
    std::vector<std::uint64_t> out;
    for (int t = 0; t < terms; ++t) {
        std::uint64_t term = 0;
        int deg = 0;
        for (int i = 0; i < nvars; ++i) {
            const int e = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
            term |= static_cast<std::uint64_t>(e) << (8 * i);
            deg += e;
        }
        term |= static_cast<std::uint64_t>(deg) << 56;
        out.push_back(term);
    }
    return MultiPoly(nvars, std::move(out));
}

LinearForm random_form(std::mt19937& rng, int nvars) {
    return {BitVec(rng() % ((1u << nvars) - 1) + 1, nvars)};
}

}  // namespace

TEST_CASE("euler classes are the monomial factors") {
    const auto forms = euler_class(mono(Side::character, 2, {1, 2}));
    REQUIRE(forms.size() == 2);
    CHECK(forms[0].vec.encoding() == 1);
    CHECK(forms[1].vec.encoding() == 2);

    const auto skew = euler_class(mono(Side::character, 2, {1, 3}));
    CHECK(skew[0].vec.encoding() == 1);  // x1
    CHECK(skew[1].vec.encoding() == 3);  // x1+x2

    const auto mixed = euler_class(mono(Side::character, 3, {1, 4, 6}));
    CHECK(mixed[2].vec.encoding() == 6);  // x2+x3

    CHECK_THROWS_AS(euler_class(mono(Side::cocharacter, 2, {1})), SideMismatch);
}

TEST_CASE("multipoly arithmetic") {
    const MultiPoly x1 = MultiPoly::variable(1, 3);
    const MultiPoly x2 = MultiPoly::variable(2, 3);
    const MultiPoly sum = x1 + x2;
    CHECK((sum * sum).term_count() == 2);  // cross terms cancel mod 2
    CHECK((sum + sum).is_zero());
    CHECK(sum * MultiPoly::one(3) == sum);
    CHECK((sum * MultiPoly::zero(3)).is_zero());
    CHECK(sum.total_degree() == 1);
    CHECK((sum * sum).total_degree() == 2);
}

TEST_CASE("division by linear forms") {
    const MultiPoly x1 = MultiPoly::variable(1, 2);
    const MultiPoly x2 = MultiPoly::variable(2, 2);
    const LinearForm f{BitVec(0b11, 2)};  // x1+x2
    const MultiPoly p = (x1 + x2) * x1 * x1 + (x1 + x2) * x2;
    const auto q = p.divide_by(f);
    REQUIRE(q.has_value());
    CHECK(*q == x1 * x1 + x2);

    CHECK_FALSE(x1.divide_by(f).has_value());
    CHECK_FALSE((x1 * x1 + x2).divide_by({BitVec(0b01, 2)}).has_value());
    // zero divides by anything
    CHECK(MultiPoly::zero(2).divide_by(f).has_value());
}

TEST_CASE("division round trip on random polynomials") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 300; ++trial) {
        const int nvars = 2 + static_cast<int>(rng() % 3);
        const MultiPoly p = random_multipoly(rng, nvars, 4, 5);
        const LinearForm f = random_form(rng, nvars);
        const MultiPoly fp = MultiPoly::from_linear_form(f) * p;
        const auto q = fp.divide_by(f);
        REQUIRE(q.has_value());
        CHECK(*q == p);

        // f*p + q0 with q0 not divisible: verified by substituting the
        // hyperplane f = 0 (x_k := rest), which must kill exactly the
        // divisible part
        const MultiPoly q0 = random_multipoly(rng, nvars, 3, 3);
        int k = 0;
        for (int i = nvars; i >= 1; --i)
            if (f.vec.bit(i)) {
                k = i;
                break;
            }
        std::vector<std::uint64_t> rest;
        for (int i = 1; i <= nvars; ++i)
            if (i != k && f.vec.bit(i)) rest.push_back((1ull << (8 * (i - 1))) | (1ull << 56));
        const MultiPoly on_hyperplane = q0.substitute_variable(k, MultiPoly(nvars, rest));
        const bool q0_divisible = on_hyperplane.is_zero();
        CHECK((fp + q0).divide_by(f).has_value() == q0_divisible);
    }
}

TEST_CASE("symmetric function constructors") {
    const auto e2 = SymmetricFunction::elementary(2, 3);
    CHECK(e2.poly().term_count() == 3);
    const auto m21 = SymmetricFunction::monomial({2, 1}, 3);
    CHECK(m21.poly().term_count() == 6);
    const auto m111 = SymmetricFunction::monomial({1, 1, 1}, 3);
    CHECK(m111.poly() == SymmetricFunction::elementary(3, 3).poly());
    CHECK(SymmetricFunction::constant_one(3).poly() == MultiPoly::one(3));
    CHECK_THROWS_AS(SymmetricFunction::monomial({1, 2}, 3), Error);
    CHECK_THROWS_AS(SymmetricFunction::monomial({1, 1, 1, 1}, 3), Error);
}

TEST_CASE("localization sums for the n = 2 example family") {
    // g = rho1 rho2 + rho1(rho1+rho2) + rho2(rho1+rho2): the full class
    const Polynomial g = poly(Side::character, 2, {{1, 2}, {1, 3}, {2, 3}});
    const auto r1 = localization_sum(g, SymmetricFunction::constant_one(2));
    REQUIRE(r1.quotient.has_value());
    CHECK(r1.quotient->is_zero());

    const auto r2 = localization_sum(g, SymmetricFunction::elementary(1, 2));
    REQUIRE(r2.quotient.has_value());
    CHECK(r2.quotient->is_zero());

    // a single monomial cannot be a class: 1/(x1 x2) is not polynomial
    const Polynomial single = poly(Side::character, 2, {{1, 2}});
    const auto r3 = localization_sum(single, SymmetricFunction::constant_one(2));
    CHECK_FALSE(r3.quotient.has_value());
    REQUIRE(r3.blocking_form.has_value());
    CHECK(r3.blocking_form->vec.encoding() == 1);

    CHECK_THROWS_AS(localization_sum(poly(Side::character, 2, {{1, 1}}),
                                     SymmetricFunction::constant_one(2)),
                    NotFaithful);
}

TEST_CASE("check_up_to_degree") {
    const Polynomial bad = poly(Side::character, 2, {{1, 2}});
    const DksReport r = check_up_to_degree(bad, 0);
    CHECK(r.certified_nonmember);
    REQUIRE(r.results.size() == 1);
    CHECK(r.results[0].partition.empty());
    CHECK_FALSE(r.results[0].polynomial);

    const DksReport good = check_up_to_degree(fixtures::example_g(), 6);
    CHECK_FALSE(good.certified_nonmember);
    for (const auto& entry : good.results) CHECK(entry.polynomial);
}

TEST_CASE("localization agrees with the kernel criterion on random data") {
    std::mt19937 rng(31415);
    int refuted = 0, nonmembers = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial g = fixtures::random_faithful(rng, 3, 2 + static_cast<int>(rng() % 5));
        if (is_cobordism_class(g)) {
            const DksReport r = check_up_to_degree(g, 4);
            CHECK_FALSE(r.certified_nonmember);  // members pass at every degree
        } else {
            ++nonmembers;
            if (check_up_to_degree(g, 6).certified_nonmember) ++refuted;
        }
    }
    // Refutation is guaranteed at some degree, not within degree 6; log
    // the observed rate instead of asserting it.
    MESSAGE("nonmembers certified within degree 6: " << refuted << "/" << nonmembers);
    CHECK(nonmembers > 0);
}

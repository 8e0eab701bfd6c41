#include <random>

#include <gtest/gtest.h>

#include "bs3/groebner.hpp"
#include "bs3/parse.hpp"
#include "support.hpp"

using namespace bs3;

namespace {

Polynomial P(const char* s, std::size_t n = 3) { return parse_polynomial(s, n); }

Ideal I(std::initializer_list<const char*> gens, std::size_t n = 3) {
    std::vector<Polynomial> g;
    for (const char* s : gens) {
        g.push_back(P(s, n));
    }
    return Ideal(std::move(g), n);
}

const MonomialOrder kGrevlex = MonomialOrder::grevlex(3);

std::vector<Polynomial> basis_of(const Ideal& ideal) { return buchberger(ideal, kGrevlex).elements(); }

bool same_ideal(const Ideal& a, const Ideal& b) { return basis_of(a) == basis_of(b); }

void expect_reduced(const GroebnerBasis& gb) {
    const auto& el = gb.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
        const Monomial& lm = gb.leading_monomials()[i];
        EXPECT_EQ(el[i].coefficient(lm), 1);
        for (const auto& t : el[i].terms()) {
            EXPECT_FALSE(gb.order().greater(t.monomial, lm));
            for (std::size_t j = 0; j < el.size(); ++j) {
                if (j != i) {
                    EXPECT_FALSE(gb.leading_monomials()[j].divides(t.monomial));
                }
            }
        }
    }
    EXPECT_TRUE(satisfies_buchberger_criterion(gb));
}

Ideal random_homogeneous_ideal(std::mt19937& rng, std::size_t count, unsigned max_degree) {
    std::uniform_int_distribution<unsigned> deg(1, max_degree);
    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < count; ++k) {
        gens.push_back(support::random_homogeneous(rng, deg(rng)));
    }
    return Ideal(std::move(gens), 3);
}

}  // namespace

TEST(MonomialOrder, Comparisons) {
    Monomial x(3), y(3), z2(3), xz(3);
    x.set(0, 1);
    y.set(1, 1);
    z2.set(2, 2);
    xz.set(0, 1);
    xz.set(2, 1);
    EXPECT_TRUE(kGrevlex.greater(x, y));
    EXPECT_TRUE(kGrevlex.greater(xz, z2));
    EXPECT_TRUE(MonomialOrder::lex(3).greater(x, z2));
    EXPECT_FALSE(kGrevlex.greater(x, z2));
    // weights (1,1,3): z^2 has weight 6 and beats x z (weight 4)
    EXPECT_TRUE(MonomialOrder::grevlex(3, {1, 1, 3}).greater(z2, xz));
    // block(1): any power of x beats anything without x
    EXPECT_TRUE(MonomialOrder::block(3, 1).greater(x, z2));
    EXPECT_THROW(MonomialOrder::block(3, 3), PreconditionError);
}

TEST(Buchberger, Examples) {
    EXPECT_EQ(basis_of(I({"x"})), std::vector<Polynomial>{P("x")});
    EXPECT_EQ(basis_of(I({"x^2+y^2", "x^2-y^2"})), (std::vector<Polynomial>{P("y^2"), P("x^2")}));
    EXPECT_EQ(basis_of(I({"3*x^2", "3*y^2", "3*z^2"})), (std::vector<Polynomial>{P("z^2"), P("y^2"), P("x^2")}));
}

TEST(Buchberger, ZeroAndUnitIdeals) {
    EXPECT_TRUE(buchberger(Ideal(3), kGrevlex).is_zero());
    EXPECT_TRUE(buchberger(I({"x", "x+1"}), kGrevlex).is_unit());
}

TEST(Buchberger, StepCapRaises) {
    const Ideal j = I({"x^5+y^4*z+z^5", "x^2*y^3+x*z^4", "y^5+x^3*z^2+x*y*z^3"});
    EXPECT_THROW(buchberger(j, kGrevlex, Limits{3}), ResourceLimitError);
}

TEST(NormalForm, Examples) {
    const auto gb = buchberger(I({"x^2", "y^2", "z^2"}), kGrevlex);
    EXPECT_TRUE(normal_form(P("x^3"), gb).is_zero());
    EXPECT_EQ(normal_form(P("x*y*z"), gb), P("x*y*z"));
    EXPECT_EQ(normal_form(P("x^2*y+z"), gb), P("z"));
}

TEST(Eliminate, Examples) {
    // variables (t, x, y) are written as (x, y, z)
    const auto e2 = eliminate(I({"y"}, 3), 1);
    EXPECT_EQ(buchberger(e2, MonomialOrder::grevlex(2)).elements(), std::vector<Polynomial>{P("x", 2)});
    EXPECT_TRUE(eliminate(I({"x-y"}, 3), 1).is_zero());
}

TEST(Eliminate, SpecExampleWithTrueVariables) {
    // (t x - 1, t y) in k[t, x, y]: t y and y = x (t y) - y (t x - 1)
    const auto e = eliminate(I({"x*y-1", "x*z"}), 1);
    ASSERT_EQ(e.variable_count(), 2u);
    EXPECT_EQ(buchberger(e, MonomialOrder::grevlex(2)).elements(), std::vector<Polynomial>{P("y", 2)});
}

TEST(SaturateByPoly, Examples) {
    // x^2 already lies in I, so the saturation by x is the unit ideal; the single colon I : x is (x, y, z).
    EXPECT_TRUE(buchberger(saturate_by_poly(I({"x^2", "x*y", "x*z"}), P("x")), kGrevlex).is_unit());
    EXPECT_TRUE(same_ideal(saturate_by_poly(I({"x^2*y", "x*y^2", "x*y*z"}), P("x")), I({"y"})));
    EXPECT_TRUE(same_ideal(saturate_by_poly(I({"x"}), P("y")), I({"x"})));
    EXPECT_TRUE(buchberger(saturate_by_poly(I({"x^2"}), P("x")), kGrevlex).is_unit());
}

TEST(SaturateByPoly, OracleChecks) {
    // (x,y,z) * x lies in I while x itself does not.
    const auto gb = buchberger(I({"x^2", "x*y", "x*z"}), kGrevlex);
    for (const char* m : {"x^2", "x*y", "x*z"}) {
        EXPECT_TRUE(contains(gb, P(m)));
    }
    EXPECT_FALSE(contains(gb, P("x")));
}

TEST(Intersection, Examples) {
    EXPECT_TRUE(same_ideal(ideal_intersection(I({"x"}), I({"y"})), I({"x*y"})));
    EXPECT_TRUE(same_ideal(ideal_intersection(I({"x"}), I({"x"})), I({"x"})));
    const auto r = ideal_intersection(I({"x", "y"}), I({"z"}));
    EXPECT_TRUE(same_ideal(r, I({"x*z", "y*z"})));
    const auto gb = buchberger(r, kGrevlex);
    EXPECT_TRUE(contains(gb, P("x*z")) && contains(gb, P("y*z")));
    EXPECT_FALSE(contains(gb, P("z")));
    EXPECT_FALSE(contains(gb, P("x")));
}

TEST(SaturateIrrelevant, Examples) {
    EXPECT_TRUE(same_ideal(saturate_irrelevant(I({"x^2", "x*y", "x*z"})), I({"x"})));
    EXPECT_TRUE(buchberger(saturate_irrelevant(I({"x^2", "y^2", "z^2"})), kGrevlex).is_unit());
    EXPECT_TRUE(same_ideal(saturate_irrelevant(I({"x"})), I({"x"})));
}

TEST(SaturateIrrelevant, RejectsNonHomogeneous) {
    EXPECT_THROW(saturate_irrelevant(I({"x^2+y"})), PreconditionError);
    const WeightSystem w({Rational(1), Rational(2), Rational(1)});
    EXPECT_NO_THROW(saturate_irrelevant(I({"x^2+y"}), w));
}

TEST(SaturateIrrelevant, WeightedInput) {
    // (x^2 + y) * m saturates back to (x^2 + y) for weights (1,2,1).
    const WeightSystem w({Rational(1), Rational(2), Rational(1)});
    const auto order = MonomialOrder::grevlex(3, w.scaled());
    const Ideal junk = I({"x^3+x*y", "x^2*y+y^2", "x^2*z+y*z"});
    const Ideal sat = saturate_irrelevant(junk, w);
    EXPECT_EQ(buchberger(sat, order).elements(), buchberger(I({"x^2+y"}), order).elements());
}

TEST(Property, ReducedBasisInvariants) {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ideal = random_homogeneous_ideal(rng, 1 + trial % 3, 4);
        for (const auto& order : {kGrevlex, MonomialOrder::lex(3), MonomialOrder::grevlex(3, {1, 2, 3})}) {
            const auto gb = buchberger(ideal, order);
            expect_reduced(gb);
            EXPECT_TRUE(is_subideal(ideal, gb));
        }
    }
}

TEST(Property, MembershipMatchesLinearAlgebra) {
    std::mt19937 rng(32);
    std::uniform_int_distribution<int> pick(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ideal = random_homogeneous_ideal(rng, 2 + trial % 2, 3);
        const auto gb = buchberger(ideal, kGrevlex);
        for (int k = 0; k < 4; ++k) {
            Polynomial p = support::random_homogeneous(rng, 4);
            if (pick(rng)) {
                // make a likely member: combination of generator multiples in degree 4
                p = Polynomial(3);
                for (const auto& g : ideal.generators()) {
                    if (g.total_degree() <= 4) {
                        p += support::random_homogeneous(rng, 4 - g.total_degree()) * g;
                    }
                }
            }
            EXPECT_EQ(contains(gb, p), support::member_by_linear_algebra(ideal.generators(), p)) << to_string(p);
        }
    }
}

TEST(Property, SaturationByVariableMatchesRabinowitsch) {
    std::mt19937 rng(33);
    const WeightSystem w = WeightSystem::standard();
    for (int trial = 0; trial < 20; ++trial) {
        const auto ideal = random_homogeneous_ideal(rng, 2 + trial % 2, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            EXPECT_TRUE(same_ideal(saturate_by_variable(ideal, i, w), saturate_by_poly(ideal, Polynomial::variable(i))));
        }
    }
}

TEST(Property, SaturationContainsIdempotentAndScaleInvariant) {
    std::mt19937 rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        const auto ideal = random_homogeneous_ideal(rng, 3, 3);
        const auto sat = saturate_irrelevant(ideal);
        const auto gb = buchberger(sat, kGrevlex);
        EXPECT_TRUE(is_subideal(ideal, gb));
        EXPECT_TRUE(same_ideal(saturate_irrelevant(sat), sat));
        std::vector<Polynomial> scaled;
        Rational c = make_rational(-3, 2);
        for (const auto& g : ideal.generators()) {
            scaled.push_back(c * g);
            c *= 5;
        }
        EXPECT_TRUE(same_ideal(saturate_irrelevant(Ideal(scaled, 3)), sat));
    }
}

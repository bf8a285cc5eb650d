#include <memory>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pfp/algebraic.hpp"

using namespace pfp;

namespace {

Poly<Rat> P(std::initializer_list<long> ascending) {
    std::vector<Rat> c;
    for (long v : ascending) c.emplace_back(v);
    return Poly<Rat>(std::move(c));
}

AlgebraicPtr sqrt2() {
    return std::make_shared<const AlgebraicReal>(P({-2, 0, 1}), Rat(1), Rat(2));
}

AlgebraicPtr apery_lambda() {  // root of x^2 - 34x + 1 in (33, 34)
    return std::make_shared<const AlgebraicReal>(P({1, -34, 1}), Rat(33), Rat(34));
}

FieldElement fe(const AlgebraicPtr& b, std::initializer_list<Rat> coeffs) {
    return FieldElement(b, std::vector<Rat>(coeffs));
}

}  // namespace

TEST_SUITE("numbers") {

TEST_CASE("field arithmetic over Q(sqrt 2)") {
    auto b = sqrt2();
    const auto one_plus = fe(b, {Rat(1), Rat(1)});
    const auto one_minus = fe(b, {Rat(1), Rat(-1)});
    // (1 + sqrt2)(1 - sqrt2) = -1
    CHECK(one_plus * one_minus == FieldElement(Rat(-1)));
    // inv(sqrt2) = sqrt2 / 2
    const auto root = FieldElement::generator(b);
    CHECK(root.inverse() == fe(b, {Rat(0), make_rational(1, 2)}));
    CHECK(root * root.inverse() == FieldElement(Rat(1)));
}

TEST_CASE("reduction modulo the minimal polynomial") {
    auto b = apery_lambda();
    const auto root = FieldElement::generator(b);
    // oracle: dividing x^2 by x^2 - 34x + 1 leaves remainder 34x - 1
    const auto rem = divmod(Poly<Rat>(std::vector<Rat>{Rat(0), Rat(0), Rat(1)}),
                            b->minpoly()).second;
    CHECK(rem == P({-1, 34}));
    CHECK(root * root == fe(b, {Rat(-1), Rat(34)}));
}

TEST_CASE("sign determination") {
    CHECK(FieldElement().sign() == 0);
    CHECK(sign_of(FieldElement(Rat(0))) == 0);
    // 12*sqrt2 - 17 < 0 (12*sqrt2 ~ 16.97)
    auto b = sqrt2();
    CHECK(sign_of(fe(b, {Rat(-17), Rat(12)})) == -1);
    // lambda - 33 > 0 for the Apery root in (33, 34)
    auto a = apery_lambda();
    CHECK(sign_of(fe(a, {Rat(-33), Rat(1)})) == 1);
}

TEST_CASE("refine_interval") {
    const AlgebraicReal r2(P({-2, 0, 1}), Rat(1), Rat(2));
    const auto fine = refine_interval(r2, make_rational(1, 4));
    CHECK(fine.hi() - fine.lo() <= make_rational(1, 4));
    // still isolates sqrt(2): sign change across the interval
    CHECK(sgn(eval(fine.minpoly(), fine.lo())) * sgn(eval(fine.minpoly(), fine.hi())) < 0);
    CHECK(fine.compare(Rat(1)) == 1);
    CHECK(fine.compare(Rat(2)) == -1);

    // already narrow enough -> unchanged
    const auto same = refine_interval(fine, Rat(1));
    CHECK(same.lo() == fine.lo());
    CHECK(same.hi() == fine.hi());

    // rational root: interval stays the exact point
    const auto three = AlgebraicReal::from_rational(Rat(3));
    const auto r3 = refine_interval(three, make_rational(1, 100));
    CHECK(r3.lo() == Rat(3));
    CHECK(r3.hi() == Rat(3));
}

TEST_CASE("refinement never loses the root (random)") {
    std::mt19937 rng(555);
    int done = 0;
    while (done < 100) {
        auto p = oracle::random_poly(rng, 4, 30);
        if (p.degree() < 2) continue;
        auto roots = isolate_real_roots(p);
        for (const auto& [lo, hi] : roots) {
            if (lo == hi) {
                CHECK(eval(p, lo) == 0);
                continue;
            }
            const auto a = AlgebraicReal::from_root(squarefree_part(p), lo, hi);
            const auto fine = a.refined(pow2_neg(10));
            const auto& m = fine.minpoly();
            // the root is never lost: either the interval is the exact root,
            // or minpoly changes sign across it
            if (fine.is_rational())
                CHECK(eval(m, fine.lo()) == 0);
            else
                CHECK(sgn(eval(m, fine.lo())) * sgn(eval(m, fine.hi())) < 0);
        }
        ++done;
    }
}

TEST_CASE("rational_convergent") {
    const AlgebraicReal r2(P({-2, 0, 1}), Rat(1), Rat(2));
    // oracle: continued fraction of sqrt2 is [1; 2, 2, 2, ...] with
    // convergents 1, 3/2, 7/5, 17/12, ...; the first within 1/100 is 17/12
    CHECK(rational_convergent(r2, make_rational(1, 100)) == make_rational(17, 12));
    // with tol 1/2 already the first convergent works
    CHECK(rational_convergent(r2, make_rational(1, 2)) == Rat(1));
    // rational input is returned unchanged
    const auto q = AlgebraicReal::from_rational(make_rational(5, 3));
    CHECK(rational_convergent(q, Rat(1000)) == make_rational(5, 3));

    // error strictly below tol, exact comparison
    for (unsigned e : {4u, 8u, 16u, 24u}) {
        const Rat tol = pow2_neg(e);
        const Rat c = rational_convergent(r2, tol);
        auto base = sqrt2();
        const FieldElement diff = FieldElement::generator(base) - FieldElement(c);
        CHECK((diff - FieldElement(tol)).sign() < 0);
        CHECK((diff + FieldElement(tol)).sign() > 0);
    }
}

TEST_CASE("field inverse identity on random elements") {
    std::mt19937 rng(777);
    const AlgebraicPtr bases[] = {sqrt2(), apery_lambda(),
                                  std::make_shared<const AlgebraicReal>(P({-2, 0, 0, 1}), Rat(1), Rat(2))};
    int done = 0;
    while (done < 500) {
        const auto& b = bases[done % 3];
        std::vector<Rat> c(static_cast<std::size_t>(b->degree()));
        for (auto& q : c) q = oracle::random_rat(rng, 20);
        FieldElement x(b, std::move(c));
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == FieldElement(Rat(1)));
        ++done;
    }
}

TEST_CASE("sign agrees with floating evaluation on random elements") {
    std::mt19937 rng(13131);
    const AlgebraicPtr bases[] = {sqrt2(), apery_lambda(),
                                  std::make_shared<const AlgebraicReal>(P({-3, 1, 0, 1}), Rat(1), Rat(2))};
    int done = 0;
    while (done < 1000) {
        const auto& b = bases[done % 3];
        std::vector<Rat> c(static_cast<std::size_t>(b->degree()));
        for (auto& q : c) q = oracle::random_rat(rng, 50);
        FieldElement x(b, std::move(c));
        // independent floating check at a tightly refined midpoint
        const auto fine = b->refined(pow2_neg(80));
        const double mid = Rat((fine.lo() + fine.hi()) / 2).get_d();
        double acc = 0.0;
        for (auto it = x.coeffs().rbegin(); it != x.coeffs().rend(); ++it)
            acc = acc * mid + it->get_d();
        if (std::abs(acc) < 1e-9) continue;  // too close to zero to trust doubles
        CHECK(x.sign() == (acc > 0 ? 1 : -1));
        ++done;
    }
}

TEST_CASE("algebraic comparisons") {
    const AlgebraicReal r2(P({-2, 0, 1}), Rat(1), Rat(2));
    const AlgebraicReal r2b(P({-2, 0, 1}), Rat(0), make_rational(3, 2));
    CHECK(r2 == r2b);
    CHECK(r2.negated().sign() == -1);
    CHECK(AlgebraicReal::compare_abs(r2, r2.negated()) == 0);
    CHECK(AlgebraicReal::compare_abs(r2, AlgebraicReal::from_rational(Rat(2))) == -1);
    CHECK(AlgebraicReal::compare_abs(r2, AlgebraicReal::from_rational(Rat(-1))) == 1);
    CHECK(r2.sign() == 1);
    CHECK(r2.compare(make_rational(3, 2)) == -1);
    CHECK(r2.compare(Rat(1)) == 1);
}

TEST_CASE("floor of field elements") {
    auto a = apery_lambda();
    const auto root = FieldElement::generator(a);
    CHECK(root.floor() == 33);
    CHECK((root * make_rational(1, 2)).floor() == 16);  // lambda/2 ~ 16.98
    CHECK(FieldElement(make_rational(-7, 2)).floor() == -4);
}

TEST_CASE("zero division guarded") {
    CHECK_THROWS_AS(FieldElement(Rat(0)).inverse(), ZeroDivision);
    auto b = sqrt2();
    CHECK_THROWS_AS(FieldElement(b, std::vector<Rat>{}).inverse(), ZeroDivision);
}

}  // TEST_SUITE
